#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "semilat/poset.hpp"

namespace semilat {

/// Finite meet-semilattice: a poset with a unique bottom in which every pair
/// of elements has a greatest lower bound. Meet and join tables are
/// precomputed at construction (join entries may be absent). Immutable.
class SemiLattice {
 public:
  SemiLattice() = default;  // empty; assign from a factory before use

  /// Validates the poset as a meet-semilattice.
  /// Throws NoUniqueBottom / MeetMissing.
  static SemiLattice from_poset(Poset p);

  /// Covers-below input, as in the poset file format.
  static SemiLattice build(std::vector<std::string> labels,
                           const std::vector<std::pair<int, int>>& covers);

  const Poset& poset() const { return poset_; }
  int size() const { return poset_.size(); }
  const std::string& label(int x) const { return poset_.label(x); }
  bool leq(int x, int y) const { return poset_.leq(x, y); }

  int bottom() const { return bottom_; }
  /// The unique maximum, if one exists (then the semilattice is a lattice).
  std::optional<int> top() const;

  int meet(int x, int y) const { return meet_[size_t(x) * size() + y]; }
  /// Meet of a nonempty set; throws EmptyMeet on an empty input
  /// (no top element is guaranteed to exist).
  int meet_of(std::span<const int> xs) const;

  std::optional<int> join(int x, int y) const {
    int j = join_[size_t(x) * size() + y];
    return j < 0 ? std::nullopt : std::optional<int>(j);
  }
  /// Least upper bound of a set; join of the empty set is the bottom.
  std::optional<int> join_of(std::span<const int> xs) const;

  /// Minimal elements of L minus the bottom.
  std::vector<int> atoms() const { return poset_.covers_above(bottom_); }

 private:
  Poset poset_;
  int bottom_ = -1;
  std::vector<int32_t> meet_;
  std::vector<int32_t> join_;  // -1 where the join does not exist
};

/// Closed interval [lo, hi] in a semilattice; members sorted by id.
/// An interval with lo = bottom is itself a meet-semilattice.
struct Interval {
  int lo = -1, hi = -1;
  std::vector<int> members;

  Poset as_poset(const SemiLattice& host) const {
    return host.poset().induced(members);
  }
};

Interval interval(const SemiLattice& l, int lo, int hi);

}  // namespace semilat
