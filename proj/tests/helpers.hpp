#pragma once

#include <cmath>
#include <initializer_list>
#include <utility>
#include <vector>

#include "opm/sequence.hpp"

namespace opmtest {

inline opm::Rational rat(long num, long den = 1) {
  return opm::Rational(num, den);
}

inline opm::PositiveValue pv(long num, long den = 1) {
  return opm::PositiveValue::exact(num, den);
}

inline opm::ValueSequence seq_exact(
    std::initializer_list<std::pair<long, long>> items) {
  std::vector<opm::PositiveValue> vals;
  for (const auto& [num, den] : items)
    vals.push_back(opm::PositiveValue::exact(num, den));
  return opm::ValueSequence(std::move(vals));
}

inline opm::ValueSequence seq_approx(std::initializer_list<double> items) {
  std::vector<opm::PositiveValue> vals;
  for (double d : items) vals.push_back(opm::PositiveValue::approx(d));
  return opm::ValueSequence(std::move(vals));
}

inline bool near(double a, double b, double tol) {
  return std::fabs(a - b) <= tol;
}

inline opm::Rational pow_rat(const opm::Rational& base, unsigned n) {
  opm::Rational acc(1);
  for (unsigned i = 0; i < n; ++i) acc *= base;
  return acc;
}

// Independent n-th root oracle: plain bisection on exact rationals. Used to
// cross-check the kernel's floating-point geometric mean.
inline opm::Rational nth_root_bisect(const opm::Rational& target, unsigned n,
                                     int iterations = 120) {
  opm::Rational lo(0);
  opm::Rational hi = target < rat(1) ? rat(1) : target;
  for (int i = 0; i < iterations; ++i) {
    const opm::Rational mid = (lo + hi) / rat(2);
    if (pow_rat(mid, n) < target)
      lo = mid;
    else
      hi = mid;
  }
  return (lo + hi) / rat(2);
}

}  // namespace opmtest
