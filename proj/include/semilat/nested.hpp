#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "semilat/semilattice.hpp"

namespace semilat {

/// Shared context for the four nested-set tests over one (semilattice,
/// building set) pair: factor sets, comparability masks and the factor
/// unions of all chains are computed once. Subsets of the building set are
/// handled as bitmasks over its sorted member list (at most 64 members).
class NestedTester {
 public:
  NestedTester(const SemiLattice& l, std::vector<int> g);

  int vertex_count() const { return int(g_.size()); }
  const std::vector<int>& vertices() const { return g_; }
  uint64_t mask_of(const std::vector<int>& subset) const;
  std::vector<int> ids_of(uint64_t mask) const;

  /// Definition: every contained antichain of size >= 2 has a join that
  /// exists and lies outside the building set.
  bool nested_def(uint64_t n) const;
  /// Every contained antichain of size >= 2 is exactly the factor set of
  /// its join.
  bool nested_factors(uint64_t n) const;
  /// Some chain of the semilattice has factor sets whose union is n;
  /// the representative chain is reported on success.
  bool nested_chain(uint64_t n, std::vector<int>* chain = nullptr) const;
  /// Recursive characterization: the maximal elements are the factor set of
  /// their join, and each strict down-restriction again qualifies. Memoized.
  bool nested_lambda(uint64_t n) const;

  const SemiLattice& host() const { return *l_; }

 private:
  std::optional<int> join_mask(uint64_t mask) const;

  const SemiLattice* l_;
  std::vector<int> g_;
  std::vector<char> in_g_;
  std::vector<uint64_t> comparable_;   // per vertex: comparable vertices incl. self
  std::vector<uint64_t> above_, below_;  // per vertex: strictly above / below
  std::vector<uint64_t> factor_mask_;  // per element id
  std::unordered_map<uint64_t, std::vector<int>> chain_unions_;
  mutable std::unordered_map<uint64_t, char> lambda_memo_;
};

bool is_nested(const SemiLattice& l, const std::vector<int>& g,
               const std::vector<int>& n);
bool is_nested_by_factors(const SemiLattice& l, const std::vector<int>& g,
                          const std::vector<int>& n);
bool is_nested_by_chain(const SemiLattice& l, const std::vector<int>& g,
                        const std::vector<int>& n,
                        std::vector<int>* chain = nullptr);
bool is_nested_by_recursion(const SemiLattice& l, const std::vector<int>& g,
                            const std::vector<int>& n);

/// Abstract simplicial complex of all nested subsets of a building set.
/// Faces are sorted element-id lists including the empty face, listed by
/// size then lexicographically.
struct NestedComplex {
  std::vector<int> vertices;
  std::vector<std::string> vertex_labels;
  std::vector<std::vector<int>> faces;

  std::vector<std::vector<int>> facets() const;
  /// Face counts by cardinality; index 0 counts the empty face.
  std::vector<long> f_vector() const;
  std::string label_of(int element_id) const;
};

/// Enumerates the complex by extending faces one vertex at a time.
/// Throws NotABuildingSet if g fails validation.
NestedComplex nested_complex(const SemiLattice& l, const std::vector<int>& g);

/// Faces ordered by inclusion with the empty face at the bottom; element ids
/// equal face indices of the complex.
struct ComplexFacePoset {
  SemiLattice lattice;
  std::vector<std::vector<int>> faces;
};

ComplexFacePoset face_poset(const NestedComplex& complex);

}  // namespace semilat
