#include "opm/distribution.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace opm {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::APM:
      return "APM";
    case Kind::GPM:
      return "GPM";
    case Kind::OPM:
      return "OPM";
  }
  return "?";
}

Distribution::Distribution(Kind kind, ValueSequence support,
                           std::vector<PositiveValue> probs)
    : kind_(kind), support_(std::move(support)), probs_(std::move(probs)) {
  if (probs_.size() != support_.size())
    throw std::logic_error("Distribution: support/probs length mismatch");
  const Mode m = support_.mode();
  Scalar sum = Scalar::zero(m);
  for (const auto& p : probs_) {
    if (p.mode() != m)
      throw std::logic_error("Distribution: probability mode mismatch");
    if (p.scalar() > Scalar::one(m))
      throw std::logic_error("Distribution: probability above 1: " + p.str());
    sum = sum + p.scalar();
  }
  if (m == Mode::exact) {
    if (sum.rational() != Rational(1))
      throw std::logic_error(
          "Distribution: exact probabilities sum to " + sum.str() +
          ", not 1 (normalize the support first)");
  } else if (std::fabs(sum.to_double() - 1.0) > kProbSumTol) {
    throw std::logic_error(
        "Distribution: probabilities sum to " + sum.str() +
        ", outside tolerance (normalize the support first)");
  }
}

Distribution apm(const ValueSequence& seq) {
  const std::size_t n = seq.size();
  const PositiveValue p =
      seq.mode() == Mode::exact
          ? PositiveValue::exact(1, static_cast<long>(n))
          : PositiveValue::approx(1.0 / static_cast<double>(n));
  std::vector<PositiveValue> probs(n, p);
  return Distribution(Kind::APM, seq, std::move(probs));
}

Distribution gpm(const ValueSequence& seq) {
  const PositiveValue total = [&] {
    PositiveValue acc = seq[0];
    for (std::size_t i = 1; i < seq.size(); ++i) acc = acc + seq[i];
    return acc;
  }();
  std::vector<PositiveValue> probs;
  probs.reserve(seq.size());
  for (const auto& v : seq) probs.push_back(v / total);
  return Distribution(Kind::GPM, seq, std::move(probs));
}

namespace {

// p_i = x_i / D_i with D_i = Σ_{k=0}^{n-1} Π_{j<k} x_{(i+j) mod n}.
// One cyclic pass of partial products per index; n is small, so the O(n^2)
// cost is not worth a recurrence.
std::vector<PositiveValue> opm_terms(const ValueSequence& seq) {
  const std::size_t n = seq.size();
  const Mode m = seq.mode();
  std::vector<PositiveValue> terms;
  terms.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Scalar denom = Scalar::zero(m);
    Scalar partial = Scalar::one(m);
    for (std::size_t k = 0; k < n; ++k) {
      denom = denom + partial;
      partial = partial * seq[(i + k) % n].scalar();
    }
    terms.emplace_back(seq[i].scalar() / denom);
  }
  return terms;
}

void require_unit_product(const ValueSequence& seq, double tol_prod,
                          const char* who) {
  const PositiveValue p = product(seq);
  if (seq.mode() == Mode::exact) {
    if (p.scalar().rational() == Rational(1)) return;
  } else if (std::fabs(p.to_double() - 1.0) <= tol_prod) {
    return;
  }
  throw std::domain_error(std::string(who) +
                          ": sequence product must be 1, measured product = " +
                          p.str());
}

}  // namespace

Distribution opm(const ValueSequence& seq, double tol_prod) {
  require_unit_product(seq, tol_prod, "opm");
  return Distribution(Kind::OPM, seq, opm_terms(seq));
}

Scalar expectation(const Distribution& dist) {
  const Mode m = dist.mode();
  Scalar acc = Scalar::zero(m);
  for (std::size_t i = 0; i < dist.size(); ++i)
    acc = acc + dist.support()[i].scalar() * dist.probs()[i].scalar();
  return acc;
}

Scalar variance(const Distribution& dist) {
  const Mode m = dist.mode();
  const Scalar e = expectation(dist);
  Scalar acc = Scalar::zero(m);
  for (std::size_t i = 0; i < dist.size(); ++i) {
    const Scalar d = dist.support()[i].scalar() - e;
    acc = acc + dist.probs()[i].scalar() * d * d;
  }
  return acc;
}

Moments moments(const Distribution& dist) {
  return {expectation(dist), variance(dist)};
}

Scalar verify_partition_identity(const ValueSequence& seq, double tol_prod) {
  require_unit_product(seq, tol_prod, "verify_partition_identity");
  const Mode m = seq.mode();
  Scalar sum = Scalar::zero(m);
  for (const auto& t : opm_terms(seq)) sum = sum + t.scalar();
  return sum - Scalar::one(m);
}

}  // namespace opm
