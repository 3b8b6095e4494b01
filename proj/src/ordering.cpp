#include "opm/ordering.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "opm/rng.hpp"

namespace opm {

const char* search_method_name(SearchMethod m) {
  return m == SearchMethod::exhaustive ? "exhaustive" : "local_search";
}

int compare_sequences(const ValueSequence& a, const ValueSequence& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("compare_sequences: length mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) {
    const int c = Scalar::cmp(a[i].scalar(), b[i].scalar());
    if (c != 0) return c;
  }
  return 0;
}

ValueSequence canonical_rotation(const ValueSequence& seq) {
  const std::size_t n = seq.size();
  std::size_t best = 0;
  for (std::size_t s = 1; s < n; ++s) {
    // lex compare rotation s against rotation best; strict improvement only,
    // so the earliest start wins among identical tuples
    int c = 0;
    for (std::size_t i = 0; i < n && c == 0; ++i)
      c = Scalar::cmp(seq[(i + s) % n].scalar(), seq[(i + best) % n].scalar());
    if (c < 0) best = s;
  }
  return seq.rotated_left(best);
}

namespace {

// Order-isomorphic integer codes for the multiset, ascending. Equal values
// share a code, so permuting codes is permuting values.
struct CodedMultiset {
  std::vector<int> codes;                    // sorted ascending
  std::vector<PositiveValue> value_of_code;  // code -> value
};

CodedMultiset code_multiset(const ValueSequence& values) {
  std::vector<PositiveValue> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  CodedMultiset out;
  out.codes.reserve(sorted.size());
  for (const auto& v : sorted) {
    if (out.value_of_code.empty() || v != out.value_of_code.back())
      out.value_of_code.push_back(v);
    out.codes.push_back(static_cast<int>(out.value_of_code.size()) - 1);
  }
  return out;
}

bool is_canonical(const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  for (std::size_t s = 1; s < n; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      const int c = perm[(i + s) % n] - perm[i];
      if (c < 0) return false;
      if (c > 0) break;
    }
  }
  return true;
}

// Number of distinct rotations = smallest period d with perm[(i+d)%n]==perm[i].
std::uint64_t primitive_period(const std::vector<int>& perm) {
  const std::size_t n = perm.size();
  for (std::size_t d = 1; d < n; ++d) {
    bool periodic = true;
    for (std::size_t i = 0; i < n && periodic; ++i)
      periodic = perm[(i + d) % n] == perm[i];
    if (periodic) return d;
  }
  return n;
}

ValueSequence realize(const std::vector<int>& perm,
                      const std::vector<PositiveValue>& value_of_code) {
  std::vector<PositiveValue> items;
  items.reserve(perm.size());
  for (int c : perm) items.push_back(value_of_code[static_cast<std::size_t>(c)]);
  return ValueSequence(std::move(items));
}

void require_unit_product_for_search(const ValueSequence& values,
                                     double tol_prod) {
  const PositiveValue p = product(values);
  if (values.mode() == Mode::exact) {
    if (p.scalar().rational() == Rational(1)) return;
  } else if (std::fabs(p.to_double() - 1.0) <= tol_prod) {
    return;
  }
  throw std::domain_error(
      "min_variance_ordering: multiset product must be 1 (normalize first), "
      "measured product = " +
      p.str());
}

struct Candidate {
  ValueSequence ordering;
  Distribution distribution;
  Scalar variance_value;
};

Candidate evaluate(ValueSequence ordering, double tol_prod) {
  Distribution d = opm(ordering, tol_prod);
  Scalar v = variance(d);
  return {std::move(ordering), std::move(d), std::move(v)};
}

// (variance, representative) lexicographic order; the tie-break that makes
// outcomes deterministic.
bool better(const Candidate& a, const Candidate& b) {
  const int c = Scalar::cmp(a.variance_value, b.variance_value);
  if (c != 0) return c < 0;
  return compare_sequences(a.ordering, b.ordering) < 0;
}

SearchOutcome exhaustive_search(const ValueSequence& values,
                                const SearchConfig& config) {
  const auto classes =
      enumerate_cyclic_classes(values, config.max_exhaustive);
  std::optional<Candidate> best;
  for (const auto& cls : classes) {
    Candidate cand = evaluate(cls.representative, config.tol_prod);
    if (!best || better(cand, *best)) best = std::move(cand);
  }
  return {std::move(best->ordering),
          std::move(best->distribution),
          std::move(best->variance_value),
          SearchMethod::exhaustive,
          static_cast<std::uint64_t>(classes.size()),
          std::nullopt};
}

SearchOutcome local_search(const ValueSequence& values,
                           const SearchConfig& config) {
  const std::size_t n = values.size();
  std::vector<PositiveValue> pool(values.begin(), values.end());
  std::sort(pool.begin(), pool.end());

  std::optional<Candidate> best;
  std::uint64_t evaluations = 0;
  const int restarts = std::max(config.restarts, 1);
  for (int r = 0; r < restarts; ++r) {
    std::mt19937_64 rng(splitmix64(config.seed + static_cast<std::uint64_t>(r)));
    std::vector<PositiveValue> arrangement = pool;
    deterministic_shuffle(arrangement, rng);
    Candidate current = evaluate(
        canonical_rotation(ValueSequence(std::move(arrangement))),
        config.tol_prod);
    ++evaluations;

    // steepest descent over the n-1 adjacent transpositions
    for (;;) {
      std::optional<Candidate> step;
      for (std::size_t pos = 0; pos + 1 < n; ++pos) {
        std::vector<PositiveValue> items = current.ordering.items();
        if (items[pos] == items[pos + 1]) continue;  // identical neighbor
        std::swap(items[pos], items[pos + 1]);
        Candidate neighbor = evaluate(
            canonical_rotation(ValueSequence(std::move(items))),
            config.tol_prod);
        ++evaluations;
        if (!step || better(neighbor, *step)) step = std::move(neighbor);
      }
      if (step && better(*step, current))
        current = std::move(*step);
      else
        break;
    }

    if (!best || better(current, *best)) best = std::move(current);
  }
  return {std::move(best->ordering),
          std::move(best->distribution),
          std::move(best->variance_value),
          SearchMethod::local_search,
          evaluations,
          config.seed};
}

}  // namespace

std::vector<OrderingClass> enumerate_cyclic_classes(const ValueSequence& values,
                                                    int max_exhaustive) {
  if (max_exhaustive < 1)
    throw std::invalid_argument("enumerate_cyclic_classes: max_exhaustive < 1");
  if (values.size() > static_cast<std::size_t>(max_exhaustive))
    throw std::length_error(
        "enumerate_cyclic_classes: n = " + std::to_string(values.size()) +
        " exceeds max_exhaustive = " + std::to_string(max_exhaustive) +
        "; use the local search mode instead");

  CodedMultiset coded = code_multiset(values);
  std::vector<int> perm = coded.codes;  // sorted: the lex-smallest permutation
  std::vector<OrderingClass> classes;
  do {
    if (!is_canonical(perm)) continue;
    classes.push_back(
        {realize(perm, coded.value_of_code), primitive_period(perm)});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return classes;  // next_permutation order keeps representatives sorted
}

SearchOutcome min_variance_ordering(const ValueSequence& values,
                                    const SearchConfig& config) {
  require_unit_product_for_search(values, config.tol_prod);
  const bool fits =
      values.size() <= static_cast<std::size_t>(std::max(config.max_exhaustive, 1));
  switch (config.mode) {
    case SearchMode::exhaustive:
      return exhaustive_search(values, config);  // oversize throws inside
    case SearchMode::local:
      return local_search(values, config);
    case SearchMode::automatic:
      return fits ? exhaustive_search(values, config)
                  : local_search(values, config);
  }
  throw std::logic_error("min_variance_ordering: bad mode");
}

}  // namespace opm
