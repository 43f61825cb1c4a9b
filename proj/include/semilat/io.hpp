#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semilat/fan.hpp"
#include "semilat/nested.hpp"
#include "semilat/semilattice.hpp"

namespace semilat {

/// Poset file payload: {"labels": [...], "covers": [[lo,hi],...]} with an
/// optional "codim" array for ranked semilattices.
struct PosetFile {
  SemiLattice lattice;
  std::optional<std::vector<int>> codim;
};

PosetFile read_poset_json(const std::string& text);
PosetFile load_poset_file(const std::string& path);
/// Canonical form: labels sorted, covers lexicographic.
std::string write_poset_json(const SemiLattice& l,
                             const std::vector<int>* codim = nullptr);

/// Fan file: {"dim": d, "rays": [[int,...],...] (optional),
/// "cones": [[rayIndex,...],...], "faces": [[rayIndex,...],...] (optional)}.
/// The writer compacts ray indices to those used by cones, lists maximal
/// cones under "cones" and every other nonzero face under "faces".
FacePosetFan read_fan_json(const std::string& text);
FacePosetFan load_fan_file(const std::string& path);
std::string write_fan_json(const FacePosetFan& fan);

/// Hasse diagram in DOT, nodes labeled, edges = covers, deterministic.
std::string export_dot(const Poset& p);

/// One nonempty face per line, vertex labels sorted within a line and lines
/// sorted lexicographically.
std::string export_face_list(const NestedComplex& c);

/// Equality up to element renumbering: same labels, same order, same codim.
bool same_semilattice(const SemiLattice& a, const SemiLattice& b);
/// Equality of canonical serializations.
bool same_fan(const FacePosetFan& a, const FacePosetFan& b);

std::string read_text_file(const std::string& path);

}  // namespace semilat
