#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semilat/iso.hpp"
#include "semilat/semilattice.hpp"

namespace semilat {

/// Polyhedral fan presented combinatorially: cones are sets of ray indices
/// closed under the face relation, ordered by inclusion in the face poset
/// with the zero cone at the bottom. Ray coordinates are optional; when
/// present they enable geometric validation and simpliciality by rank.
/// Subdivisions may retire ray indices; stale entries stay in `rays` so that
/// indices remain stable, and the writer compacts them.
struct FacePosetFan {
  int dim = 0;
  bool has_rays = false;
  std::vector<std::vector<long long>> rays;
  int ray_count = 0;                    // index universe, >= rays.size() users
  std::vector<std::vector<int>> cones;  // all cones incl. {}, (size, lex) order
  SemiLattice face_poset;               // element ids == cone indices

  std::optional<int> cone_index(const std::vector<int>& cone) const;
  std::vector<int> maximal_cone_indices() const;
  /// Simplicial by integer rank when rays are present, otherwise by the
  /// lower interval being boolean (all subsets present).
  bool is_simplicial_cone(int cone_idx) const;
  bool is_simplicial() const;
};

std::string cone_label(const std::vector<int>& cone);

/// Assembles a fan from maximal cones (plus explicitly listed faces of
/// non-simplicial cones) and computes the face closure: pairwise
/// intersections always, full subset closure for simplicial cones.
/// Throws InconsistentFaces / NonConeIntersection.
FacePosetFan fan_from_cones(int dim,
                            const std::vector<std::vector<long long>>& rays,
                            const std::vector<std::vector<int>>& maximal_cones,
                            const std::vector<std::vector<int>>& explicit_faces = {});

/// Stellar subdivision at the cone tau: the star of tau is replaced by the
/// joins of the new ray with the star's faces not containing tau. The new
/// ray defaults to the sum of tau's primitive generators; an explicit point
/// must lie in the relative interior of tau (checked as a positive
/// combination of tau's rays). Throws TauNotInFan /
/// PointNotInRelativeInterior.
FacePosetFan stellar_subdivision(const FacePosetFan& fan,
                                 const std::vector<int>& tau,
                                 const std::vector<long long>* point = nullptr);

struct StellarBlowupCheck {
  bool ok = false;
  IsoWitness witness;  // combinatorial blowup -> subdivided face poset
  std::string detail;
};

/// Computes the face poset of the stellar subdivision and the combinatorial
/// blowup of the original face poset independently, then validates the
/// label-matching bijection (surviving cone to itself, marked [tau,rho] to
/// the cone joining rho with the new ray).
StellarBlowupCheck verify_stellar_is_blowup(const FacePosetFan& fan,
                                            const std::vector<int>& tau);

struct SimplicializeResult {
  FacePosetFan fan;
  /// New ray created for each building-set cone, in subdivision order.
  std::vector<std::pair<std::vector<int>, int>> ray_of_cone;
};

/// Stellar subdivision in every building-set cone in non-increasing order;
/// g lists face-poset element ids and must be a building set of the face
/// poset. The result is simplicial and its face poset is isomorphic to the
/// face poset of the nested complex; both are verified. Throws
/// NotABuildingSet / NotNonIncreasing.
SimplicializeResult simplicialize(const FacePosetFan& fan,
                                  const std::vector<int>& g,
                                  const std::vector<int>& ordering = {});

}  // namespace semilat
