#include "semilat/semilattice.hpp"

#include <algorithm>

#include "semilat/error.hpp"

namespace semilat {

SemiLattice SemiLattice::from_poset(Poset p) {
  SemiLattice l;
  const int n = p.size();
  if (n == 0) throw Error("NoUniqueBottom", "empty poset");

  auto mins = p.minimal_elements();
  if (mins.size() != 1)
    throw Error("NoUniqueBottom",
                "poset has " + std::to_string(mins.size()) + " minimal elements");
  l.bottom_ = mins[0];

  // elements by descending height, so the first member of a lower-bound set
  // we meet below is maximal in it
  std::vector<int> by_height_desc(n);
  for (int i = 0; i < n; ++i) by_height_desc[i] = i;
  std::sort(by_height_desc.begin(), by_height_desc.end(), [&](int a, int b) {
    if (p.height(a) != p.height(b)) return p.height(a) > p.height(b);
    return a < b;
  });

  l.meet_.assign(size_t(n) * n, -1);
  l.join_.assign(size_t(n) * n, -1);
  for (int x = 0; x < n; ++x) {
    for (int y = x; y < n; ++y) {
      Bits common = p.down(x) & p.down(y);
      // a greatest element exists iff some maximal member dominates the set;
      // the first hit in descending height order is maximal in `common`
      int m = -1;
      for (int z : by_height_desc) {
        if (!common.test(z)) continue;
        if (common.subset_of(p.down(z))) m = z;
        break;
      }
      if (m < 0)
        throw Error("MeetMissing", "elements \"" + p.label(x) + "\" and \"" +
                                       p.label(y) +
                                       "\" have no greatest lower bound");
      l.meet_[size_t(x) * n + y] = l.meet_[size_t(y) * n + x] = m;

      Bits ub = p.up(x) & p.up(y);
      if (ub.any()) {
        int j = -1;
        for (auto it = by_height_desc.rbegin(); it != by_height_desc.rend(); ++it) {
          int z = *it;
          if (!ub.test(z)) continue;
          if (ub.subset_of(p.up(z))) j = z;
          break;
        }
        // in a meet-semilattice a nonempty upper-bound set has a minimum
        if (j < 0)
          throw Error("MeetMissing",
                      "upper bounds of \"" + p.label(x) + "\" and \"" +
                          p.label(y) + "\" have no minimum");
        l.join_[size_t(x) * n + y] = l.join_[size_t(y) * n + x] = j;
      }
    }
  }
  l.poset_ = std::move(p);
  return l;
}

SemiLattice SemiLattice::build(std::vector<std::string> labels,
                               const std::vector<std::pair<int, int>>& covers) {
  return from_poset(Poset::from_covers(std::move(labels), covers));
}

std::optional<int> SemiLattice::top() const {
  auto maxs = poset_.maximal_elements();
  if (maxs.size() == 1) return maxs[0];
  return std::nullopt;
}

int SemiLattice::meet_of(std::span<const int> xs) const {
  if (xs.empty()) throw Error("EmptyMeet", "meet of the empty set is undefined");
  int m = xs[0];
  for (size_t i = 1; i < xs.size(); ++i) m = meet(m, xs[i]);
  return m;
}

std::optional<int> SemiLattice::join_of(std::span<const int> xs) const {
  int j = bottom_;
  for (int x : xs) {
    auto next = join(j, x);
    if (!next) return std::nullopt;
    j = *next;
  }
  return j;
}

Interval interval(const SemiLattice& l, int lo, int hi) {
  Interval iv;
  iv.lo = lo;
  iv.hi = hi;
  (l.poset().up(lo) & l.poset().down(hi)).for_each([&](int z) {
    iv.members.push_back(z);
  });
  return iv;
}

}  // namespace semilat
