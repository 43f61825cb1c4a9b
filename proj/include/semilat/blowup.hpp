#pragma once

#include <memory>
#include <string>
#include <vector>

#include "semilat/building.hpp"
#include "semilat/iso.hpp"
#include "semilat/nested.hpp"
#include "semilat/semilattice.hpp"

namespace semilat {

/// Provenance label of a blowup element: either an element surviving from
/// the prior semilattice, or a marked pair [alpha, y] created by blowing up
/// alpha. Labels nest across iterated blowups; equality is structural on
/// the label tree, and the rendering "[alpha,y]" is what the result
/// semilattice carries as its text labels.
class BlowupLabel {
 public:
  static BlowupLabel original(std::string text);
  static BlowupLabel marked(const BlowupLabel& alpha, const BlowupLabel& base);

  const std::string& text() const { return node_->text; }
  bool is_marked() const { return node_->alpha != nullptr; }
  BlowupLabel alpha_part() const;
  BlowupLabel base_part() const;

  friend bool operator==(const BlowupLabel& a, const BlowupLabel& b);

 private:
  struct Node {
    std::string text;
    std::shared_ptr<const Node> alpha, base;  // both null for originals
  };
  explicit BlowupLabel(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Result of blowing up one element: the new semilattice together with the
/// provenance of each element. Surviving elements keep their id in `old_of`;
/// marked elements [alpha,y] record y in `marked_of`.
struct BlowupResult {
  SemiLattice lattice;
  std::vector<BlowupLabel> labels;
  std::vector<int> old_of;     // id in result -> id in input, or -1
  std::vector<int> marked_of;  // id in result -> y in input, or -1
  int alpha = -1;
  int new_atom = -1;           // id of [alpha, bottom]
};

/// Combinatorial blowup at alpha: elements y not above alpha survive, and a
/// marked copy [alpha,y] is added whenever the join of y and alpha exists.
/// The result is validated as a meet-semilattice. Throws AlphaIsBottom.
BlowupResult combinatorial_blowup(const SemiLattice& l, int alpha,
                                  const std::vector<BlowupLabel>* prior = nullptr);

/// Checks every pairwise join of the blowup against the case formulas
/// ([a,y] v [a,z] = [a, y v z] and so on, each applicable only when the
/// named element exists in the blowup), including the non-existence cases.
bool verify_blowup_joins(const SemiLattice& l, int alpha,
                         std::string* why = nullptr);

/// Building set carried across one blowup at a maximal member alpha:
/// alpha is replaced by [alpha, bottom], everything else survives.
struct BuildingTransfer {
  BlowupResult blowup;
  BuildingSet transferred;                     // ids in blowup.lattice
  std::vector<std::pair<int, int>> member_map; // (id in input, id in blowup)
};

/// Throws AlphaNotMaximalInG; the transferred set is re-validated and an
/// InternalInconsistency is raised if that fails (it cannot, short of a bug).
BuildingTransfer transfer_building_set(const SemiLattice& l,
                                       const std::vector<int>& g, int alpha);

struct BlowupSequence {
  SemiLattice lattice;
  std::vector<BlowupLabel> labels;
  std::vector<std::string> atom_texts;  // per step: rendered [g, bottom]
};

/// Folds combinatorial blowups over a decreasing linear extension of g.
/// Throws NotDecreasingLinearExtension; ElementVanished signals a bug.
BlowupSequence blowup_sequence(const SemiLattice& l, const std::vector<int>& g,
                               const std::vector<int>& ordering);

struct MainTheoremCheck {
  bool ok = false;
  IsoWitness witness;    // face poset of the nested complex -> final blowup
  ComplexFacePoset rhs;
  SemiLattice lhs;
  std::string detail;
};

/// Blows up g along the given ordering and matches the result against the
/// face poset of the nested complex of g, via the canonical map sending the
/// face {g_1..g_k} to the join of the atoms [g_i, bottom]. The witness is a
/// validated label-respecting isomorphism.
MainTheoremCheck verify_main_theorem(const SemiLattice& l,
                                     const std::vector<int>& g,
                                     const std::vector<int>& ordering);

}  // namespace semilat
