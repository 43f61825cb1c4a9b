#pragma once

#include <cstdint>
#include <vector>

#include "semilat/semilattice.hpp"

namespace semilat {

/// Semilattice with a codimension attached to every element, as arises for
/// intersection lattices of coordinate subspace arrangements. codim(bottom)
/// is 0 and codim strictly increases along strict order relations.
struct RankedSemiLattice {
  SemiLattice lattice;
  std::vector<int> codim;
};

/// Validates the codimension function; throws InvalidCodim.
RankedSemiLattice make_ranked(SemiLattice l, std::vector<int> codim);

/// Subsets of {1..n} ordered by inclusion. 1 <= n <= 10.
SemiLattice boolean_lattice(int n);

/// Set partitions of {1..n} under refinement, discrete partition at the
/// bottom, meet = common refinement. 2 <= n <= 6. A partition is labeled by
/// its non-singleton blocks, e.g. "(12)(34)"; the discrete partition is "0".
SemiLattice partition_lattice(int n);

/// Positive divisors of n ordered by divisibility; meet = gcd.
SemiLattice divisor_lattice(long n);

/// Intersection lattice of an arrangement of coordinate subspaces, each
/// subspace given by the set of vanishing coordinates. Elements are the
/// unions of input sets (closure) plus the empty set as bottom; order is
/// inclusion of coordinate sets and codim(S) = |S|.
RankedSemiLattice coordinate_arrangement_lattice(
    const std::vector<std::vector<int>>& coordinate_sets);

/// Union-closed family generated by `family_size` random nonempty subsets of
/// {1..ground_size}, with the total union sometimes removed so that some
/// joins are absent. Deterministic per seed; ground_size <= 6.
SemiLattice random_semilattice(int ground_size, int family_size,
                               uint64_t seed);

}  // namespace semilat
