#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "semilat/iso.hpp"
#include "semilat/semilattice.hpp"

namespace semilat {

/// Looks for a nontrivial direct-product decomposition of the interval
/// [bottom, x]: a pair (a, b) of elements strictly between bottom and x with
/// meet(a,b) = bottom, join(a,b) = x, and (u,v) -> join(u,v) an order
/// isomorphism from [bottom,a] x [bottom,b] onto [bottom,x]. Every direct
/// decomposition of the interval (a finite lattice) arises this way, so the
/// search is complete. Candidates are scanned in id order; first hit wins.
std::optional<std::pair<int, int>> complementary_split(const SemiLattice& l,
                                                       int x);

/// True iff [bottom, x] is not a direct product of two posets with at least
/// two elements each.
bool is_irreducible(const SemiLattice& l, int x);

/// All x with [bottom, x] irreducible; always contains the bottom and every
/// atom. Sorted by id.
std::vector<int> irreducibles(const SemiLattice& l);

/// Factor tops of the finest direct-product decomposition of [bottom, x];
/// computed by splitting recursively. Sorted by id. For x = bottom or x
/// irreducible the result is {x}.
std::vector<int> elementary_divisors(const SemiLattice& l, int x);

/// Finest decomposition with an explicit witness: `product` is the direct
/// product of the intervals below the divisors, and `image[t]` is the host
/// element the t-th product element maps to (the join of its coordinates).
/// The unit vector at divisor y maps to y.
struct Factorization {
  std::vector<int> divisors;
  Poset product;
  std::vector<int> image;
};

Factorization finest_factorization(const SemiLattice& l, int x);

/// Elementary divisors of every element, computed once per semilattice.
struct FactorizationTable {
  std::vector<std::vector<int>> divisors;
  std::vector<char> irreducible;
};

FactorizationTable factorization_table(const SemiLattice& l);

}  // namespace semilat
