#include "opm/generate.hpp"

#include <stdexcept>

#include "opm/rng.hpp"

namespace opm {

ValueSequence random_unit_product_sequence(std::size_t n,
                                           std::mt19937_64& rng) {
  if (n == 0)
    throw std::invalid_argument("random_unit_product_sequence: n must be >= 1");
  std::vector<PositiveValue> items;
  items.reserve(n);
  Rational partial(1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const long num = static_cast<long>(1 + bounded_u64(rng, 100));
    const long den = static_cast<long>(1 + bounded_u64(rng, 100));
    const Rational r(num, den);
    partial *= r;
    items.push_back(PositiveValue::exact(r));
  }
  items.push_back(PositiveValue::exact(Rational(1) / partial));
  return ValueSequence(std::move(items));
}

}  // namespace opm
