#pragma once

#include <cstddef>
#include <vector>

#include "opm/sequence.hpp"

namespace opm {

/// Family of a probability mass function over a value sequence.
enum class Kind { APM, GPM, OPM };

const char* kind_name(Kind k);

/// Allowed deviation of an approx-mode probability vector from unit sum.
inline constexpr double kProbSumTol = 1e-12;

/// A discrete distribution: support values in sequence order, paired with
/// strictly positive probabilities that sum to one (exactly in exact mode,
/// within kProbSumTol in approx mode). Duplicate support values stay
/// separate outcomes with their own probabilities.
class Distribution {
 public:
  Distribution(Kind kind, ValueSequence support,
               std::vector<PositiveValue> probs);

  Kind kind() const { return kind_; }
  const ValueSequence& support() const { return support_; }
  const std::vector<PositiveValue>& probs() const { return probs_; }
  std::size_t size() const { return support_.size(); }
  Mode mode() const { return support_.mode(); }

 private:
  Kind kind_;
  ValueSequence support_;
  std::vector<PositiveValue> probs_;
};

struct Moments {
  Scalar expectation;
  Scalar variance;
};

/// Uniform mass 1/n on every outcome.
Distribution apm(const ValueSequence& seq);

/// Mass proportional to each value: p_i = x_i / Σ_j x_j.
Distribution gpm(const ValueSequence& seq);

/// Ordered probability mass function: p_i = x_i / D_i where D_i sums the
/// cyclic partial products starting at x_i (the k = 0 term is 1, the longest
/// runs from x_i through x_{i-2} cyclically). Defined only for sequences
/// with unit product; violations raise a domain error naming the measured
/// product.
Distribution opm(const ValueSequence& seq, double tol_prod = kDefaultTolProd);

Scalar expectation(const Distribution& dist);

/// Two-pass centered variance Σ_i p_i (x_i - E)^2; agrees with
/// E[X^2] - E[X]^2 exactly in rational mode.
Scalar variance(const Distribution& dist);

Moments moments(const Distribution& dist);

/// Residual (Σ_i x_i / D_i) - 1 of the cyclic partition identity. Exact
/// mode returns a literal zero for every unit-product sequence.
Scalar verify_partition_identity(const ValueSequence& seq,
                                 double tol_prod = kDefaultTolProd);

}  // namespace opm
