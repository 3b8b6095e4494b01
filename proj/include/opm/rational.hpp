#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace opm {

/// Arbitrary-precision rational number, kept in canonical form
/// (gcd(num, den) = 1, den > 0). Thin value wrapper over GMP.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long num) : q_(num) {}  // NOLINT: integers convert implicitly
  Rational(long num, long den);

  /// Builds num/den from decimal digit strings, e.g. ("65407500", "1").
  static Rational from_integer_strings(const std::string& num,
                                       const std::string& den);

  /// Exact binary expansion of a finite double.
  static Rational from_double(double d);

  /// "p/q", or just "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  /// Natural log of a positive rational, robust to values whose numerator
  /// or denominator overflows double.
  double log_to_double() const;

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_positive() const { return sgn(q_) > 0; }
  bool is_integer() const;

  /// Exact n-th root when numerator and denominator are both perfect n-th
  /// powers; nullopt otherwise. Requires a positive value and n >= 1.
  std::optional<Rational> nth_root(unsigned long n) const;

  Rational operator-() const;
  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  int cmp(const Rational& o) const { return ::cmp(q_, o.q_); }
  friend bool operator==(const Rational& a, const Rational& b) {
    return a.cmp(b) == 0;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return a.cmp(b) != 0;
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.cmp(b) < 0;
  }
  friend bool operator>(const Rational& a, const Rational& b) {
    return a.cmp(b) > 0;
  }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return a.cmp(b) <= 0;
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return a.cmp(b) >= 0;
  }

  const mpq_class& raw() const { return q_; }

 private:
  explicit Rational(mpq_class q) : q_(std::move(q)) {}
  mpq_class q_;
};

Rational abs(const Rational& r);

}  // namespace opm
