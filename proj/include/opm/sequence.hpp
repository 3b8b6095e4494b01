#pragma once

#include <cstddef>
#include <vector>

#include "opm/scalar.hpp"

namespace opm {

/// Default product tolerance for approx-mode unit-product checks. Exact mode
/// always requires the product to equal 1 exactly.
inline constexpr double kDefaultTolProd = 1e-9;

/// Ordered, nonempty list of strictly positive values sharing one numeric
/// mode. Mixing exact and approx items is rejected at construction.
class ValueSequence {
 public:
  explicit ValueSequence(std::vector<PositiveValue> items);

  /// Builds a sequence from raw scalars; a non-positive entry raises a
  /// domain error naming the offending index.
  static ValueSequence from_scalars(const std::vector<Scalar>& values);

  std::size_t size() const { return items_.size(); }
  const PositiveValue& operator[](std::size_t i) const { return items_[i]; }
  const std::vector<PositiveValue>& items() const { return items_; }
  Mode mode() const { return mode_; }

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  /// Left rotation by k: result[i] = (*this)[(i + k) mod n].
  ValueSequence rotated_left(std::size_t k) const;

  ValueSequence to_approx() const;

  friend bool operator==(const ValueSequence& a, const ValueSequence& b);
  friend bool operator!=(const ValueSequence& a, const ValueSequence& b) {
    return !(a == b);
  }

 private:
  std::vector<PositiveValue> items_;
  Mode mode_;
};

/// Result of dividing a sequence by its geometric mean. The normalized
/// sequence has unit product; normalized[i] * scale reproduces the input.
/// exact_root is true when the n-th root was extracted exactly and the
/// result stayed in exact mode.
struct NormalizationResult {
  ValueSequence normalized;
  PositiveValue scale;
  bool exact_root;
};

/// Product of all items, in the sequence's mode.
PositiveValue product(const ValueSequence& seq);

/// True iff |product - 1| <= tol_prod. Exact mode demands tol_prod == 0 and
/// an exactly unit product.
bool has_unit_product(const ValueSequence& seq, double tol_prod);

/// Divides every item by the geometric mean (Π items)^(1/n). Stays exact
/// when the product's numerator and denominator both have exact integer
/// n-th roots; otherwise degrades to approx mode with the root computed in
/// double precision plus one Newton correction against the exact product.
NormalizationResult geometric_normalize(const ValueSequence& seq);

}  // namespace opm
