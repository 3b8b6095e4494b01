#include "opm/rational.hpp"

#include <cmath>
#include <stdexcept>

namespace opm {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::from_integer_strings(const std::string& num,
                                        const std::string& den) {
  mpz_class n, d;
  if (n.set_str(num, 10) != 0)
    throw std::domain_error("Rational: bad integer literal '" + num + "'");
  if (d.set_str(den, 10) != 0)
    throw std::domain_error("Rational: bad integer literal '" + den + "'");
  if (d == 0) throw std::domain_error("Rational: zero denominator");
  mpq_class q(n);
  q /= mpq_class(d);
  return Rational(std::move(q));
}

Rational Rational::from_double(double d) {
  if (!std::isfinite(d))
    throw std::domain_error("Rational: non-finite double");
  return Rational(mpq_class(d));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

double Rational::log_to_double() const {
  if (!is_positive())
    throw std::domain_error("Rational: log of non-positive value");
  signed long en = 0;
  signed long ed = 0;
  const double mn = mpz_get_d_2exp(&en, q_.get_num().get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, q_.get_den().get_mpz_t());
  return std::log(mn) - std::log(md) +
         static_cast<double>(en - ed) * M_LN2;
}

bool Rational::is_integer() const { return q_.get_den() == 1; }

std::optional<Rational> Rational::nth_root(unsigned long n) const {
  if (n == 0) throw std::invalid_argument("Rational: 0th root");
  if (!is_positive()) return std::nullopt;
  if (n == 1) return *this;
  mpz_class rn, rd;
  const int num_exact =
      mpz_root(rn.get_mpz_t(), q_.get_num().get_mpz_t(), n);
  if (num_exact == 0) return std::nullopt;
  const int den_exact =
      mpz_root(rd.get_mpz_t(), q_.get_den().get_mpz_t(), n);
  if (den_exact == 0) return std::nullopt;
  mpq_class root(rn, rd);
  root.canonicalize();  // already coprime, but keep the invariant explicit
  return Rational(std::move(root));
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.q_ + b.q_));
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.q_ - b.q_));
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(mpq_class(a.q_ * b.q_));
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(mpq_class(a.q_ / b.q_));
}

Rational abs(const Rational& r) {
  return r.is_positive() || r.is_zero() ? r : -r;
}

}  // namespace opm
