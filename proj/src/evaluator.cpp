#include "opm/evaluator.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace opm {

SequenceEvaluation evaluate_sequence(std::string name,
                                     const ValueSequence& scores) {
  NormalizationResult norm = geometric_normalize(scores);
  Distribution dist = opm(norm.normalized);
  Moments m = moments(dist);
  return {std::move(name), scores, std::move(norm), std::move(dist), m};
}

namespace {

bool variances_tie(const Scalar& a, const Scalar& b, double tol_tie) {
  if (a.is_exact() && b.is_exact()) return a == b;
  return std::fabs(a.to_double() - b.to_double()) <= tol_tie;
}

std::vector<Scalar> sorted_multiset(const ValueSequence& seq) {
  std::vector<Scalar> vals;
  vals.reserve(seq.size());
  for (const auto& v : seq) vals.push_back(v.scalar());
  std::sort(vals.begin(), vals.end());
  return vals;
}

bool same_multiset(const ValueSequence& a, const ValueSequence& b) {
  if (a.size() != b.size()) return false;
  const auto ma = sorted_multiset(a);
  const auto mb = sorted_multiset(b);
  for (std::size_t i = 0; i < ma.size(); ++i)
    if (Scalar::cmp(ma[i], mb[i]) != 0) return false;
  return true;
}

}  // namespace

ComparisonReport compare(
    const std::vector<std::pair<std::string, ValueSequence>>& entries,
    double tol_tie, bool include_extras) {
  if (entries.empty()) throw std::invalid_argument("compare: no entries");
  if (tol_tie < 0) throw std::invalid_argument("compare: negative tol_tie");
  {
    std::set<std::string> seen;
    for (const auto& [name, seq] : entries)
      if (!seen.insert(name).second)
        throw std::invalid_argument("compare: duplicate label '" + name + "'");
  }

  ComparisonReport report;
  report.evaluations.reserve(entries.size());
  for (const auto& [name, seq] : entries)
    report.evaluations.push_back(evaluate_sequence(name, seq));

  // stable sort keeps input order among exactly equal variances
  std::vector<std::size_t> order(entries.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     return Scalar::cmp(
                                report.evaluations[a].distribution_moments
                                    .variance,
                                report.evaluations[b].distribution_moments
                                    .variance) < 0;
                   });
  for (std::size_t i : order)
    report.ranking.push_back(report.evaluations[i].name);

  const Scalar& best = report.evaluations[order[0]].distribution_moments.variance;
  for (std::size_t i : order) {
    const Scalar& v = report.evaluations[i].distribution_moments.variance;
    if (variances_tie(best, v, tol_tie))
      report.winners.push_back(report.evaluations[i].name);
  }
  report.tie = report.winners.size() > 1;

  report.shared_multiset = true;
  for (std::size_t i = 1; i < report.evaluations.size(); ++i)
    if (!same_multiset(report.evaluations[0].raw, report.evaluations[i].raw))
      report.shared_multiset = false;

  if (include_extras) {
    for (const auto& ev : report.evaluations) {
      Distribution a = apm(ev.normalization.normalized);
      Moments am = moments(a);
      report.table_extras.push_back({ev.name, std::move(a), am});
      Distribution g = gpm(ev.normalization.normalized);
      Moments gm = moments(g);
      report.table_extras.push_back({ev.name, std::move(g), gm});
    }
  }
  return report;
}

}  // namespace opm
