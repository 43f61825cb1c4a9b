#pragma once

#include <optional>
#include <vector>

#include "semilat/poset.hpp"

namespace semilat {

/// Order isomorphism between two posets, as the image of each element of the
/// first; mapping and its inverse are order-preserving.
struct IsoWitness {
  std::vector<int> map;  // map[x in P] = image in Q
};

/// Checks that w is a bijection P -> Q with x <= y iff w(x) <= w(y).
bool is_order_isomorphism(const Poset& p, const Poset& q, const IsoWitness& w);

IsoWitness invert_witness(const IsoWitness& w);
/// Witness of P ~ R from witnesses of P ~ Q and Q ~ R.
IsoWitness compose_witness(const IsoWitness& pq, const IsoWitness& qr);

/// Backtracking isomorphism search with invariant pruning (height, down-set
/// and up-set sizes, cover degrees). Deterministic: elements are assigned in
/// id order and candidate images tried in id order, so the first witness
/// found is canonical. Intended for desk-scale posets.
std::optional<IsoWitness> is_isomorphic(const Poset& p, const Poset& q);

}  // namespace semilat
