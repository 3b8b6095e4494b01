#include "opm/sequence.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace opm {

ValueSequence::ValueSequence(std::vector<PositiveValue> items)
    : items_(std::move(items)) {
  if (items_.empty())
    throw std::domain_error("ValueSequence: empty sequence");
  mode_ = items_.front().mode();
  for (const auto& v : items_) {
    if (v.mode() != mode_)
      throw std::invalid_argument(
          "ValueSequence: items mix exact and approx modes");
  }
}

ValueSequence ValueSequence::from_scalars(const std::vector<Scalar>& values) {
  std::vector<PositiveValue> items;
  items.reserve(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!values[i].is_positive())
      throw std::domain_error("ValueSequence: non-positive value " +
                              values[i].str() + " at index " +
                              std::to_string(i));
    items.emplace_back(values[i]);
  }
  return ValueSequence(std::move(items));
}

ValueSequence ValueSequence::rotated_left(std::size_t k) const {
  const std::size_t n = size();
  std::vector<PositiveValue> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(items_[(i + k) % n]);
  return ValueSequence(std::move(out));
}

ValueSequence ValueSequence::to_approx() const {
  std::vector<PositiveValue> out;
  out.reserve(size());
  for (const auto& v : items_) out.push_back(v.to_approx());
  return ValueSequence(std::move(out));
}

bool operator==(const ValueSequence& a, const ValueSequence& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

PositiveValue product(const ValueSequence& seq) {
  PositiveValue acc = seq[0];
  for (std::size_t i = 1; i < seq.size(); ++i) acc = acc * seq[i];
  return acc;
}

bool has_unit_product(const ValueSequence& seq, double tol_prod) {
  if (tol_prod < 0)
    throw std::invalid_argument("has_unit_product: negative tolerance");
  const PositiveValue p = product(seq);
  if (seq.mode() == Mode::exact) {
    if (tol_prod != 0)
      throw std::invalid_argument(
          "has_unit_product: exact mode requires tol_prod == 0");
    return p.scalar().rational() == Rational(1);
  }
  return std::fabs(p.to_double() - 1.0) <= tol_prod;
}

namespace {

// Geometric mean in double precision: seed from the exact log of the
// product, then a single Newton step v <- v * ((n-1) + P/v^n) / n. The log
// of the product rather than the sum of item logs keeps the result
// independent of item order, so equal multisets share one scale bit for bit.
double approx_root(double log_product, std::size_t n) {
  const double nd = static_cast<double>(n);
  const double v0 = std::exp(log_product / nd);
  const double ratio = std::exp(log_product - nd * std::log(v0));  // P/v0^n
  return v0 * ((nd - 1.0) + ratio) / nd;
}

double log_product_of(const ValueSequence& seq) {
  if (seq.mode() == Mode::exact)
    return product(seq).scalar().rational().log_to_double();
  double acc = 0;
  for (const auto& v : seq) acc += std::log(v.to_double());
  return acc;
}

}  // namespace

NormalizationResult geometric_normalize(const ValueSequence& seq) {
  const std::size_t n = seq.size();
  if (n == 1) {
    const PositiveValue scale = seq[0];
    const bool exact = seq.mode() == Mode::exact;
    std::vector<PositiveValue> unit{
        exact ? PositiveValue::exact(1) : PositiveValue::approx(1.0)};
    return {ValueSequence(std::move(unit)), scale, exact};
  }

  if (seq.mode() == Mode::exact) {
    const Rational prod = product(seq).scalar().rational();
    if (auto root = prod.nth_root(n)) {
      const PositiveValue scale = PositiveValue::exact(*root);
      std::vector<PositiveValue> out;
      out.reserve(n);
      for (const auto& v : seq) out.push_back(v / scale);
      return {ValueSequence(std::move(out)), scale, true};
    }
  }

  const double root = approx_root(log_product_of(seq), n);
  const PositiveValue scale = PositiveValue::approx(root);
  std::vector<PositiveValue> out;
  out.reserve(n);
  for (const auto& v : seq)
    out.push_back(PositiveValue::approx(v.to_double() / root));
  return {ValueSequence(std::move(out)), scale, false};
}

}  // namespace opm
