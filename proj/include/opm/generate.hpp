#pragma once

#include <random>

#include "opm/sequence.hpp"

namespace opm {

/// Random exact-rational sequence of length n with product exactly 1: the
/// first n-1 entries have numerator and denominator uniform in [1, 100],
/// the last entry is the reciprocal of their partial product. n = 1 yields
/// the sequence (1).
ValueSequence random_unit_product_sequence(std::size_t n,
                                           std::mt19937_64& rng);

}  // namespace opm
