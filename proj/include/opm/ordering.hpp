#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "opm/distribution.hpp"

namespace opm {

/// One rotation class of orderings. The representative is the
/// lexicographically minimal rotation; class_size counts the distinct raw
/// orderings (rotations) the class stands for.
struct OrderingClass {
  ValueSequence representative;
  std::uint64_t class_size;
};

enum class SearchMethod { exhaustive, local_search };
enum class SearchMode { automatic, exhaustive, local };

const char* search_method_name(SearchMethod m);

struct SearchConfig {
  int max_exhaustive = 9;
  int restarts = 16;
  std::uint64_t seed = 0;
  SearchMode mode = SearchMode::automatic;
  double tol_prod = kDefaultTolProd;
};

struct SearchOutcome {
  ValueSequence best_ordering;
  Distribution best_distribution;
  Scalar best_variance;
  SearchMethod method;
  std::uint64_t classes_examined;
  std::optional<std::uint64_t> seed;
};

/// Lexicographic three-way comparison of equal-length sequences by value.
int compare_sequences(const ValueSequence& a, const ValueSequence& b);

/// The lexicographically minimal rotation. Among rotations with identical
/// value tuples the earliest starting index wins, so an all-equal sequence
/// comes back unchanged.
ValueSequence canonical_rotation(const ValueSequence& seq);

/// Enumerates one class per rotation-distinct arrangement of the value
/// multiset (order of `values` is irrelevant). For n distinct values this
/// yields (n-1)! classes; duplicated values reduce the count as necklace
/// counting dictates. Classes come back sorted by representative.
/// Throws std::length_error when values.size() > max_exhaustive.
std::vector<OrderingClass> enumerate_cyclic_classes(const ValueSequence& values,
                                                    int max_exhaustive = 9);

/// Finds the ordering of the multiset whose OPM has minimum variance.
/// Exhaustive enumeration proves the optimum for n <= max_exhaustive; larger
/// instances fall back to a seeded steepest-descent local search over
/// adjacent transpositions with restarts (method = local_search marks the
/// result as best-found, not proven). Variance ties break toward the
/// lexicographically smallest representative.
SearchOutcome min_variance_ordering(const ValueSequence& values,
                                    const SearchConfig& config = {});

}  // namespace opm
