#pragma once

#include <string>
#include <vector>

#include "semilat/factor.hpp"
#include "semilat/generators.hpp"
#include "semilat/semilattice.hpp"

namespace semilat {

/// A validated building set: a subset of L minus the bottom such that every
/// lower interval factors as the product of the intervals below the maximal
/// members under it.
struct BuildingSet {
  std::vector<int> members;   // sorted ids, bottom excluded
  std::string validated_by;   // which criterion verified it
};

/// Maximal building-set elements weakly below x.
struct FactorSet {
  int element = -1;
  std::vector<int> factors;  // pairwise incomparable, sorted
};

FactorSet factors(const SemiLattice& l, const std::vector<int>& g, int x);

/// Witness data for a failed check: the element x where the criterion broke,
/// and where applicable the y, z and factor subset involved.
struct BuildingCertificate {
  int x = -1, y = -1, z = -1;
  std::vector<int> subset;
  std::string reason;
};

struct BuildingCheck {
  bool ok = true;
  BuildingCertificate cert;
};

/// The defining condition: for every x != bottom the map sending a tuple in
/// the product of intervals below the factors of x to the join of its
/// coordinates is an order isomorphism onto [bottom, x]. The most expensive
/// checker; used as the oracle in tests and enumeration cross-validation.
BuildingCheck check_building_products(const SemiLattice& l,
                                      const std::vector<int>& g);

/// Equivalent condition via elementary divisors: g contains all irreducible
/// elements except the bottom, and the factors of every x are joins of
/// disjoint blocks of the elementary divisors of x, the blocks covering all
/// of them. Pass a precomputed table when checking many subsets of one
/// semilattice.
BuildingCheck check_building_divisor_partition(
    const SemiLattice& l, const std::vector<int>& g,
    const FactorizationTable* table = nullptr);

/// Equivalent condition via restriction identities: g join-generates, and
/// for factors {y, y_1..y_t} of any x and any z < y the building-set
/// elements below both y and z v y_1 v ... v y_t are exactly those below z.
BuildingCheck check_building_restriction(const SemiLattice& l,
                                         const std::vector<int>& g);

/// Equivalent condition via disjointness and necessity: g join-generates,
/// no building-set element lies below both y and the join of the other
/// factors, and replacing y by any z < y strictly drops the join.
/// The cheapest checker; the production default.
BuildingCheck check_building_disjoint_necessity(const SemiLattice& l,
                                                const std::vector<int>& g);

enum class BuildingCriterion { Products, DivisorPartition, Restriction, DisjointNecessity };

BuildingCheck check_building(const SemiLattice& l, const std::vector<int>& g,
                             BuildingCriterion criterion,
                             const FactorizationTable* table = nullptr);

/// The irreducible elements minus the bottom, verified; contained in every
/// building set. Throws InternalInconsistency if verification fails.
BuildingSet minimal_building_set(const SemiLattice& l);

/// All building sets, as the supersets of the minimal one that pass the
/// disjointness/necessity check. Guarded to |L| <= 16; throws TooLarge.
std::vector<BuildingSet> enumerate_building_sets(const SemiLattice& l);

/// Geometric criterion on a ranked semilattice: for every x != bottom the
/// codimensions of the factors of x must sum to the codimension of x.
/// Requires g to be a combinatorial building set; throws NotABuildingSet.
BuildingCheck check_geometric(const RankedSemiLattice& rl,
                              const std::vector<int>& g);

/// Structural properties of factor sets of a building set: unique factor
/// assignment, necessity of every factor, and recovery of factor sets from
/// families with empty gap intervals. Throws TooLarge above |g| = 20.
bool verify_factor_properties(const SemiLattice& l, const std::vector<int>& g);

}  // namespace semilat
