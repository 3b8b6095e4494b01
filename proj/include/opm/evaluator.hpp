#pragma once

#include <string>
#include <utility>
#include <vector>

#include "opm/distribution.hpp"

namespace opm {

/// Default tolerance for declaring two leading variances a tie when any of
/// them is in approx mode; exact-mode ties require literal equality.
inline constexpr double kDefaultTolTie = 1e-12;

/// One competitor's evaluation: the raw scores, their geometric-mean
/// standardization, the OPM taken in the order given (order is the point,
/// scores are never sorted), and its moments.
struct SequenceEvaluation {
  std::string name;
  ValueSequence raw;
  NormalizationResult normalization;
  Distribution distribution;
  Moments distribution_moments;
};

/// APM/GPM context row computed on an entry's standardized sequence.
struct ExtraRow {
  std::string name;
  Distribution distribution;
  Moments distribution_moments;
};

struct ComparisonReport {
  std::vector<SequenceEvaluation> evaluations;  // input order
  std::vector<std::string> ranking;             // ascending OPM variance
  std::vector<std::string> winners;             // singleton unless tied
  bool tie;
  /// True when every entry carries the same value multiset; when false the
  /// per-sequence standardizations use different scales, which deserves a
  /// warning in rendered output.
  bool shared_multiset;
  std::vector<ExtraRow> table_extras;  // filled when requested
};

/// Standardizes the scores by their geometric mean and attaches the OPM (in
/// the given order) with its expectation and variance.
SequenceEvaluation evaluate_sequence(std::string name,
                                     const ValueSequence& scores);

/// Evaluates each entry independently and ranks by ascending OPM variance;
/// the smallest variance wins. Leading variances that are equal (exact mode)
/// or within tol_tie (approx mode) are reported as a tie, never broken
/// silently. Labels must be unique. With include_extras, APM and GPM rows of
/// each standardized sequence are attached for table context.
ComparisonReport compare(
    const std::vector<std::pair<std::string, ValueSequence>>& entries,
    double tol_tie = kDefaultTolTie, bool include_extras = false);

}  // namespace opm
