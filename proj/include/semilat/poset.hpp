#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semilat/bits.hpp"

namespace semilat {

/// Finite poset over dense integer ids 0..n-1 with unique text labels.
/// The full relation is kept as bitset rows in both directions, plus the
/// cover (Hasse) lists recomputed from the closed relation. Immutable after
/// construction; all operations on it are pure.
class Poset {
 public:
  Poset() = default;  // empty; assign from a factory before use

  /// Builds from a covers-below relation (pairs (lower, upper) of indices
  /// into labels). The transitive closure is computed and the poset axioms
  /// verified. Throws CycleDetected / NotAPoset.
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<int, int>>& covers);

  /// Builds from a full relation; leq[x][y] true means x <= y.
  /// Verifies reflexivity, antisymmetry, transitivity. Throws NotAPoset.
  static Poset from_relation(std::vector<std::string> labels,
                             const std::vector<std::vector<bool>>& leq);

  int size() const { return n_; }
  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(const std::string& label) const;

  bool leq(int x, int y) const { return up_[x].test(y); }
  bool less(int x, int y) const { return x != y && leq(x, y); }

  /// Bitset of all y with x <= y.
  const Bits& up(int x) const { return up_[x]; }
  /// Bitset of all y with y <= x.
  const Bits& down(int x) const { return down_[x]; }

  const std::vector<int>& covers_above(int x) const { return cov_up_[x]; }
  const std::vector<int>& covers_below(int x) const { return cov_dn_[x]; }
  /// All cover pairs (lower, upper), lexicographically sorted.
  std::vector<std::pair<int, int>> cover_pairs() const;

  /// Length of a longest chain from a minimal element up to x.
  int height(int x) const { return height_[x]; }

  std::vector<int> minimal_elements() const;
  std::vector<int> maximal_elements() const;

  /// Induced subposet on the given ids (which become 0..k-1 in order).
  Poset induced(const std::vector<int>& ids) const;

 private:
  void finish();  // covers + heights from the closed relation

  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<Bits> up_, down_;
  std::vector<std::vector<int>> cov_up_, cov_dn_;
  std::vector<int> height_;
  std::unordered_map<std::string, int> index_;
};

/// Direct product with componentwise order; labels "(p,q)".
Poset direct_product(const Poset& p, const Poset& q);

/// A chain 0 < 1 < ... < n-1 (n elements), labeled "c0".."c<n-1>".
Poset chain_poset(int n);

}  // namespace semilat
