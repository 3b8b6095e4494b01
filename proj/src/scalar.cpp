#include "opm/scalar.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace opm {

const char* mode_name(Mode m) {
  return m == Mode::exact ? "exact" : "approx";
}

namespace {

[[noreturn]] void throw_mode_mix(const char* op) {
  throw std::logic_error(std::string("Scalar: mixed-mode ") + op);
}

}  // namespace

Scalar Scalar::approx(double d) {
  if (!std::isfinite(d))
    throw std::domain_error("Scalar: non-finite approx value");
  Scalar s;
  s.v_ = d;
  return s;
}

Scalar Scalar::zero(Mode m) {
  return m == Mode::exact ? Scalar(Rational(0)) : approx(0.0);
}

Scalar Scalar::one(Mode m) {
  return m == Mode::exact ? Scalar(Rational(1)) : approx(1.0);
}

const Rational& Scalar::rational() const {
  if (!is_exact()) throw std::logic_error("Scalar: not in exact mode");
  return std::get<Rational>(v_);
}

double Scalar::approx_value() const {
  if (is_exact()) throw std::logic_error("Scalar: not in approx mode");
  return std::get<double>(v_);
}

double Scalar::to_double() const {
  return is_exact() ? std::get<Rational>(v_).to_double()
                    : std::get<double>(v_);
}

std::string Scalar::str() const {
  if (is_exact()) return std::get<Rational>(v_).str();
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", std::get<double>(v_));
  return buf;
}

bool Scalar::is_zero() const {
  return is_exact() ? std::get<Rational>(v_).is_zero()
                    : std::get<double>(v_) == 0.0;
}

bool Scalar::is_positive() const {
  return is_exact() ? std::get<Rational>(v_).is_positive()
                    : std::get<double>(v_) > 0.0;
}

Scalar Scalar::operator-() const {
  return is_exact() ? Scalar(-std::get<Rational>(v_))
                    : approx(-std::get<double>(v_));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw_mode_mix("addition");
  if (a.is_exact()) return Scalar(a.rational() + b.rational());
  return Scalar::approx(a.approx_value() + b.approx_value());
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw_mode_mix("subtraction");
  if (a.is_exact()) return Scalar(a.rational() - b.rational());
  return Scalar::approx(a.approx_value() - b.approx_value());
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw_mode_mix("multiplication");
  if (a.is_exact()) return Scalar(a.rational() * b.rational());
  return Scalar::approx(a.approx_value() * b.approx_value());
}

Scalar operator/(const Scalar& a, const Scalar& b) {
  if (a.mode() != b.mode()) throw_mode_mix("division");
  if (a.is_exact()) return Scalar(a.rational() / b.rational());
  if (b.approx_value() == 0.0)
    throw std::domain_error("Scalar: division by zero");
  return Scalar::approx(a.approx_value() / b.approx_value());
}

int Scalar::cmp(const Scalar& a, const Scalar& b) {
  if (a.is_exact() && b.is_exact()) return a.rational().cmp(b.rational());
  if (!a.is_exact() && !b.is_exact()) {
    const double x = a.approx_value();
    const double y = b.approx_value();
    return x < y ? -1 : (x > y ? 1 : 0);
  }
  // Lift the double losslessly and compare as rationals.
  if (a.is_exact())
    return a.rational().cmp(Rational::from_double(b.approx_value()));
  return Rational::from_double(a.approx_value()).cmp(b.rational());
}

Scalar abs(const Scalar& s) {
  return s.is_positive() || s.is_zero() ? s : -s;
}

PositiveValue::PositiveValue(Scalar s) : s_(std::move(s)) {
  if (!s_.is_positive())
    throw std::domain_error("PositiveValue: value must be > 0, got " +
                            s_.str());
}

PositiveValue PositiveValue::exact(long num, long den) {
  return PositiveValue(Scalar(Rational(num, den)));
}

PositiveValue PositiveValue::exact(Rational r) {
  return PositiveValue(Scalar(std::move(r)));
}

PositiveValue PositiveValue::approx(double d) {
  return PositiveValue(Scalar::approx(d));
}

}  // namespace opm
