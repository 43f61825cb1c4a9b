#include "semilat/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "semilat/error.hpp"

namespace semilat {

namespace {

std::string subset_label(const std::vector<int>& coords) {
  if (coords.empty()) return "0";
  bool wide = false;
  for (int c : coords)
    if (c > 9) wide = true;
  std::string out;
  for (size_t i = 0; i < coords.size(); ++i) {
    if (wide && i) out += ".";
    out += std::to_string(coords[i]);
  }
  return out;
}

std::vector<int> mask_to_coords(uint32_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i + 1);
  return out;
}

uint64_t splitmix(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

SemiLattice lattice_of_union_closed_masks(const std::set<uint32_t>& family) {
  std::vector<uint32_t> masks(family.begin(), family.end());
  std::vector<std::string> labels;
  labels.reserve(masks.size());
  for (uint32_t m : masks) labels.push_back(subset_label(mask_to_coords(m)));
  std::vector<std::vector<bool>> leq(masks.size(),
                                     std::vector<bool>(masks.size()));
  for (size_t i = 0; i < masks.size(); ++i)
    for (size_t j = 0; j < masks.size(); ++j)
      leq[i][j] = (masks[i] & ~masks[j]) == 0;
  return SemiLattice::from_poset(Poset::from_relation(std::move(labels), leq));
}

}  // namespace

RankedSemiLattice make_ranked(SemiLattice l, std::vector<int> codim) {
  if (int(codim.size()) != l.size())
    throw Error("InvalidCodim", "codim array size mismatch");
  if (codim[l.bottom()] != 0)
    throw Error("InvalidCodim", "codim of the bottom element must be 0");
  for (int x = 0; x < l.size(); ++x)
    for (int y = 0; y < l.size(); ++y)
      if (l.poset().less(x, y) && codim[x] >= codim[y])
        throw Error("InvalidCodim", "codim not strictly increasing from \"" +
                                        l.label(x) + "\" to \"" + l.label(y) +
                                        "\"");
  return RankedSemiLattice{std::move(l), std::move(codim)};
}

SemiLattice boolean_lattice(int n) {
  if (n < 1 || n > 10)
    throw Error("OutOfRange", "boolean lattice rank must be in 1..10");
  const uint32_t count = uint32_t(1) << n;
  std::vector<std::string> labels(count);
  std::vector<std::pair<int, int>> covers;
  for (uint32_t m = 0; m < count; ++m) {
    labels[m] = subset_label(mask_to_coords(m));
    for (int i = 0; i < n; ++i)
      if (!(m >> i & 1)) covers.emplace_back(int(m), int(m | (uint32_t(1) << i)));
  }
  return SemiLattice::build(std::move(labels), covers);
}

SemiLattice partition_lattice(int n) {
  if (n < 2 || n > 6)
    throw Error("OutOfRange", "partition lattice size must be in 2..6");

  // partitions as restricted growth strings
  std::vector<std::vector<int>> parts;
  std::vector<int> rgs(n, 0);
  while (true) {
    parts.push_back(rgs);
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = *std::max_element(rgs.begin(), rgs.begin() + i) + 1;
      if (rgs[i] < cap) {
        ++rgs[i];
        std::fill(rgs.begin() + i + 1, rgs.end(), 0);
        break;
      }
    }
    if (i == 0) break;
  }

  auto blocks_of = [&](const std::vector<int>& r) {
    std::vector<std::vector<int>> blocks(1 + *std::max_element(r.begin(), r.end()));
    for (int e = 0; e < n; ++e) blocks[r[e]].push_back(e + 1);
    std::sort(blocks.begin(), blocks.end());
    return blocks;
  };

  std::vector<std::string> labels;
  for (auto& r : parts) {
    std::string lbl;
    for (auto& b : blocks_of(r)) {
      if (b.size() < 2) continue;
      lbl += "(";
      for (int e : b) lbl += std::to_string(e);
      lbl += ")";
    }
    labels.push_back(lbl.empty() ? "0" : lbl);
  }

  // x <= y iff x refines y: same block in x implies same block in y
  auto refines = [&](const std::vector<int>& x, const std::vector<int>& y) {
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (x[a] == x[b] && y[a] != y[b]) return false;
    return true;
  };
  std::vector<std::vector<bool>> leq(parts.size(),
                                     std::vector<bool>(parts.size()));
  for (size_t i = 0; i < parts.size(); ++i)
    for (size_t j = 0; j < parts.size(); ++j)
      leq[i][j] = refines(parts[i], parts[j]);
  return SemiLattice::from_poset(Poset::from_relation(std::move(labels), leq));
}

SemiLattice divisor_lattice(long n) {
  if (n < 1) throw Error("OutOfRange", "divisor lattice needs n >= 1");
  std::vector<long> divs;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0) divs.push_back(d);
  std::vector<std::string> labels;
  for (long d : divs) labels.push_back(std::to_string(d));
  std::vector<std::vector<bool>> leq(divs.size(), std::vector<bool>(divs.size()));
  for (size_t i = 0; i < divs.size(); ++i)
    for (size_t j = 0; j < divs.size(); ++j)
      leq[i][j] = divs[j] % divs[i] == 0;
  return SemiLattice::from_poset(Poset::from_relation(std::move(labels), leq));
}

RankedSemiLattice coordinate_arrangement_lattice(
    const std::vector<std::vector<int>>& coordinate_sets) {
  if (coordinate_sets.empty())
    throw Error("InvalidInput", "no coordinate sets given");
  std::set<uint32_t> input;
  for (const auto& s : coordinate_sets) {
    if (s.empty()) throw Error("InvalidInput", "empty coordinate set");
    uint32_t mask = 0;
    for (int c : s) {
      if (c < 1 || c > 31) throw Error("InvalidInput", "coordinate out of range");
      mask |= uint32_t(1) << (c - 1);
    }
    if (!input.insert(mask).second)
      throw Error("InvalidInput", "duplicate coordinate set");
  }

  std::set<uint32_t> family{0};
  std::vector<uint32_t> work(input.begin(), input.end());
  for (size_t i = 0; i < work.size(); ++i) {
    if (!family.insert(work[i]).second) continue;
    for (uint32_t m : std::vector<uint32_t>(family.begin(), family.end())) {
      uint32_t u = m | work[i];
      if (!family.count(u)) work.push_back(u);
    }
  }

  SemiLattice l = lattice_of_union_closed_masks(family);
  std::vector<uint32_t> masks(family.begin(), family.end());
  std::vector<int> codim(masks.size());
  for (size_t i = 0; i < masks.size(); ++i)
    codim[i] = int(mask_to_coords(masks[i]).size());
  return make_ranked(std::move(l), std::move(codim));
}

SemiLattice random_semilattice(int ground_size, int family_size,
                               uint64_t seed) {
  if (ground_size < 1 || ground_size > 6)
    throw Error("OutOfRange", "ground set size must be in 1..6");
  uint64_t state = seed * 0x100000001b3ULL + 0xcbf29ce484222325ULL;
  const uint32_t full = (uint32_t(1) << ground_size) - 1;

  std::set<uint32_t> family{0};
  std::vector<uint32_t> gens;
  for (int i = 0; i < family_size; ++i)
    gens.push_back(uint32_t(splitmix(state) % full) + 1);
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!family.insert(gens[i]).second) continue;
    for (uint32_t m : std::vector<uint32_t>(family.begin(), family.end())) {
      uint32_t u = m | gens[i];
      if (!family.count(u)) gens.push_back(u);
    }
  }

  // sometimes drop the total union; meets survive, some joins become absent
  if (family.size() > 2 && (splitmix(state) & 1)) {
    uint32_t total = 0;
    for (uint32_t m : family) total |= m;
    family.erase(total);
  }
  return lattice_of_union_closed_masks(family);
}

}  // namespace semilat
