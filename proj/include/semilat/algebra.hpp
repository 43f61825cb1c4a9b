#pragma once

#include <string>
#include <vector>

#include "semilat/semilattice.hpp"

namespace semilat {

/// Generators-and-relations presentation of the graded algebra attached to a
/// finite lattice with a building set: one generator per building-set
/// element, squarefree monomial relations for the non-nested generator sets
/// (reduced to the inclusion-minimal ones unless `reduced` is false), and
/// one linear relation per atom summing the generators above it.
struct AlgebraPresentation {
  struct Generator {
    int element = -1;
    std::string label;
    std::string symbol;
  };
  struct LinearRelation {
    int atom = -1;
    std::string atom_label;
    std::vector<int> generators;  // indices into `generators`
  };

  std::vector<Generator> generators;
  std::vector<std::vector<int>> monomial_relations;  // generator index sets
  std::vector<LinearRelation> linear_relations;
  bool reduced = true;
};

/// Requires a lattice (unique top) and a building set g.
/// Throws NotALattice / NotABuildingSet / TooLarge.
AlgebraPresentation d_algebra(const SemiLattice& l, const std::vector<int>& g,
                              bool all_relations = false);

enum class PresentationFormat { Generic, CasScript };
PresentationFormat parse_format(const std::string& name);  // UnknownFormat

/// Deterministic text export; the generic format round-trips through
/// parse_presentation.
std::string export_presentation(const AlgebraPresentation& p,
                                PresentationFormat format);

AlgebraPresentation parse_presentation(const std::string& text);

}  // namespace semilat
