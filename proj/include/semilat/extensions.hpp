#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "semilat/poset.hpp"

namespace semilat {

/// Enumerates total orderings of the subset `g` in which every element
/// precedes everything strictly below it (so each position is maximal among
/// the elements not yet placed). Orderings are produced in lexicographic id
/// order; the visitor returns false to stop early.
void for_each_decreasing_extension(
    const Poset& p, const std::vector<int>& g,
    const std::function<bool(const std::vector<int>&)>& visit);

/// Number of decreasing extensions, counting at most `cap`.
long count_decreasing_extensions(const Poset& p, const std::vector<int>& g,
                                 long cap);

/// All decreasing extensions, at most `limit` of them.
std::vector<std::vector<int>> decreasing_extensions(const Poset& p,
                                                    const std::vector<int>& g,
                                                    long limit);

/// One decreasing extension chosen by seeded random maximal picks;
/// deterministic for a given seed.
std::vector<int> sample_decreasing_extension(const Poset& p,
                                             const std::vector<int>& g,
                                             uint64_t seed);

/// True iff `ordering` is a permutation of `g` with larger elements first
/// (no element is strictly below a later one).
bool is_decreasing_extension(const Poset& p, const std::vector<int>& g,
                             const std::vector<int>& ordering);

}  // namespace semilat
