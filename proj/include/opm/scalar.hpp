#pragma once

#include <string>
#include <variant>

#include "opm/rational.hpp"

namespace opm {

/// Numeric mode of a value or sequence. Exact values are arbitrary-precision
/// rationals; approx values are 64-bit binary floating point.
enum class Mode { exact, approx };

const char* mode_name(Mode m);

/// Dual-mode signed scalar. Arithmetic stays within one mode; mixing modes
/// in a binary operation is a logic error. Comparisons work across modes and
/// are exact (the double operand is lifted to a rational losslessly), which
/// gives a deterministic total order with no epsilon.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(Rational r) : v_(std::move(r)) {}  // NOLINT: exact is the default
  static Scalar approx(double d);
  static Scalar zero(Mode m);
  static Scalar one(Mode m);

  Mode mode() const {
    return std::holds_alternative<Rational>(v_) ? Mode::exact : Mode::approx;
  }
  bool is_exact() const { return mode() == Mode::exact; }

  /// Exact-mode payload; throws std::logic_error in approx mode.
  const Rational& rational() const;
  /// Approx-mode payload; throws std::logic_error in exact mode.
  double approx_value() const;

  double to_double() const;
  Scalar to_approx() const { return approx(to_double()); }

  /// Full-precision rendering: "p/q" in exact mode, round-trippable decimal
  /// in approx mode.
  std::string str() const;

  bool is_zero() const;
  bool is_positive() const;

  Scalar operator-() const;
  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend Scalar operator/(const Scalar& a, const Scalar& b);

  /// Three-way exact comparison, valid across modes.
  static int cmp(const Scalar& a, const Scalar& b);

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return cmp(a, b) == 0;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) {
    return cmp(a, b) != 0;
  }
  friend bool operator<(const Scalar& a, const Scalar& b) {
    return cmp(a, b) < 0;
  }
  friend bool operator>(const Scalar& a, const Scalar& b) {
    return cmp(a, b) > 0;
  }
  friend bool operator<=(const Scalar& a, const Scalar& b) {
    return cmp(a, b) <= 0;
  }
  friend bool operator>=(const Scalar& a, const Scalar& b) {
    return cmp(a, b) >= 0;
  }

 private:
  std::variant<Rational, double> v_;
};

Scalar abs(const Scalar& s);

/// Strictly positive scalar. The invariant is checked at construction and
/// preserved by the closed operations below.
class PositiveValue {
 public:
  explicit PositiveValue(Scalar s);
  static PositiveValue exact(long num, long den = 1);
  static PositiveValue exact(Rational r);
  static PositiveValue approx(double d);

  const Scalar& scalar() const { return s_; }
  Mode mode() const { return s_.mode(); }
  double to_double() const { return s_.to_double(); }
  PositiveValue to_approx() const { return PositiveValue(s_.to_approx()); }
  std::string str() const { return s_.str(); }

  friend PositiveValue operator+(const PositiveValue& a,
                                 const PositiveValue& b) {
    return PositiveValue(a.s_ + b.s_);
  }
  friend PositiveValue operator*(const PositiveValue& a,
                                 const PositiveValue& b) {
    return PositiveValue(a.s_ * b.s_);
  }
  friend PositiveValue operator/(const PositiveValue& a,
                                 const PositiveValue& b) {
    return PositiveValue(a.s_ / b.s_);
  }

  friend bool operator==(const PositiveValue& a, const PositiveValue& b) {
    return a.s_ == b.s_;
  }
  friend bool operator!=(const PositiveValue& a, const PositiveValue& b) {
    return a.s_ != b.s_;
  }
  friend bool operator<(const PositiveValue& a, const PositiveValue& b) {
    return a.s_ < b.s_;
  }
  friend bool operator>(const PositiveValue& a, const PositiveValue& b) {
    return a.s_ > b.s_;
  }
  friend bool operator<=(const PositiveValue& a, const PositiveValue& b) {
    return a.s_ <= b.s_;
  }
  friend bool operator>=(const PositiveValue& a, const PositiveValue& b) {
    return a.s_ >= b.s_;
  }

 private:
  Scalar s_;
};

}  // namespace opm
