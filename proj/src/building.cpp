#include "semilat/building.hpp"

#include <algorithm>
#include <bit>

#include "semilat/error.hpp"

namespace semilat {

namespace {

// per-element bitset of building-set members weakly below it
std::vector<Bits> g_below(const SemiLattice& l, const std::vector<int>& g) {
  std::vector<Bits> out(l.size(), Bits(l.size()));
  for (int e = 0; e < l.size(); ++e)
    for (int m : g)
      if (l.leq(m, e)) out[e].set(m);
  return out;
}

BuildingCheck fail(int x, std::string reason, int y = -1, int z = -1,
                   std::vector<int> subset = {}) {
  BuildingCheck c;
  c.ok = false;
  c.cert = BuildingCertificate{x, y, z, std::move(subset), std::move(reason)};
  return c;
}

// every x != bottom must be the join of the building-set elements below it
bool join_generates(const SemiLattice& l, const std::vector<Bits>& gdown,
                    int* witness) {
  for (int x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    auto below = gdown[x].to_vector();
    auto jn = l.join_of(below);
    if (below.empty() || !jn || *jn != x) {
      *witness = x;
      return false;
    }
  }
  return true;
}

}  // namespace

FactorSet factors(const SemiLattice& l, const std::vector<int>& g, int x) {
  if (x == l.bottom())
    throw Error("BottomHasNoFactors", "factors are defined for x != bottom");
  FactorSet f;
  f.element = x;
  for (int m : g) {
    if (!l.leq(m, x)) continue;
    bool maximal = true;
    for (int h : g)
      if (h != m && l.leq(h, x) && l.poset().less(m, h)) maximal = false;
    if (maximal) f.factors.push_back(m);
  }
  std::sort(f.factors.begin(), f.factors.end());
  return f;
}

namespace {

std::vector<int> factors_of(const SemiLattice& l, const std::vector<int>& g,
                            int x) {
  return factors(l, g, x).factors;
}

}  // namespace

BuildingCheck check_building_products(const SemiLattice& l,
                                      const std::vector<int>& g) {
  const Poset& p = l.poset();
  for (int x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    std::vector<int> f = factors_of(l, g, x);
    if (f.empty()) return fail(x, "no building-set element below x");

    const size_t target = size_t(p.down(x).count());
    std::vector<std::vector<int>> axes;
    size_t cells = 1;
    for (int xj : f) {
      axes.push_back(p.down(xj).to_vector());
      cells *= axes.back().size();
      if (cells > target) break;
    }
    if (cells != target)
      return fail(x, "product of factor intervals has the wrong size", -1, -1, f);

    std::vector<int> image(cells);
    std::vector<std::vector<int>> coords(cells, std::vector<int>(f.size()));
    std::vector<char> seen(l.size(), 0);
    for (size_t t = 0; t < cells; ++t) {
      size_t rest = t;
      for (size_t k = axes.size(); k-- > 0;) {
        coords[t][k] = axes[k][rest % axes[k].size()];
        rest /= axes[k].size();
      }
      auto jn = l.join_of(coords[t]);
      if (!jn) return fail(x, "join of a coordinate tuple does not exist", -1, -1, f);
      if (seen[*jn])
        return fail(x, "tuple-to-join map is not injective", -1, -1, f);
      seen[*jn] = 1;
      image[t] = *jn;
    }
    for (size_t s = 0; s < cells; ++s)
      for (size_t t = 0; t < cells; ++t) {
        bool cell_leq = true;
        for (size_t k = 0; k < axes.size() && cell_leq; ++k)
          cell_leq = p.leq(coords[s][k], coords[t][k]);
        if (cell_leq != p.leq(image[s], image[t]))
          return fail(x, "tuple-to-join map is not an order isomorphism", -1,
                      -1, f);
      }
  }
  return BuildingCheck{};
}

BuildingCheck check_building_divisor_partition(const SemiLattice& l,
                                               const std::vector<int>& g,
                                               const FactorizationTable* table) {
  FactorizationTable local;
  if (!table) {
    local = factorization_table(l);
    table = &local;
  }
  std::vector<char> in_g(l.size(), 0);
  for (int m : g) in_g[m] = 1;
  for (int x = 0; x < l.size(); ++x)
    if (x != l.bottom() && table->irreducible[x] && !in_g[x])
      return fail(x, "irreducible element missing from the set");

  for (int x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    const std::vector<int>& div = table->divisors[x];
    std::vector<int> f = factors_of(l, g, x);
    if (f.empty()) return fail(x, "no building-set element below x");

    std::vector<int> owner(div.size(), -1);
    for (size_t d = 0; d < div.size(); ++d) {
      for (size_t t = 0; t < f.size(); ++t) {
        if (!l.leq(div[d], f[t])) continue;
        if (owner[d] >= 0)
          return fail(x, "elementary divisor below two factors", div[d], -1, f);
        owner[d] = int(t);
      }
      if (owner[d] < 0)
        return fail(x, "elementary divisor not below any factor", div[d], -1, f);
    }
    for (size_t t = 0; t < f.size(); ++t) {
      std::vector<int> block;
      for (size_t d = 0; d < div.size(); ++d)
        if (owner[d] == int(t)) block.push_back(div[d]);
      auto jn = l.join_of(block);
      if (!jn || *jn != f[t])
        return fail(x, "factor is not the join of its divisor block", f[t], -1, f);
    }
  }
  return BuildingCheck{};
}

BuildingCheck check_building_restriction(const SemiLattice& l,
                                         const std::vector<int>& g) {
  std::vector<Bits> gdown = g_below(l, g);
  int w = -1;
  if (!join_generates(l, gdown, &w))
    return fail(w, "set does not join-generate the semilattice");

  for (int x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    std::vector<int> f = factors_of(l, g, x);
    const size_t k = f.size();
    for (uint32_t mask = 1; mask < (uint32_t(1) << k); ++mask) {
      for (size_t yi = 0; yi < k; ++yi) {
        if (!(mask >> yi & 1)) continue;
        int y = f[yi];
        std::vector<int> rest;
        for (size_t j = 0; j < k; ++j)
          if (j != yi && (mask >> j & 1)) rest.push_back(f[j]);
        for (int z = 0; z < l.size(); ++z) {
          if (!l.poset().less(z, y)) continue;
          std::vector<int> join_args(rest);
          join_args.push_back(z);
          auto u = l.join_of(join_args);  // all args below x
          if (!u) return fail(x, "join missing inside an interval", y, z, rest);
          if (!((gdown[y] & gdown[*u]) == gdown[z]))
            return fail(x, "restriction identity fails", y, z, rest);
        }
      }
    }
  }
  return BuildingCheck{};
}

BuildingCheck check_building_disjoint_necessity(const SemiLattice& l,
                                                const std::vector<int>& g) {
  std::vector<Bits> gdown = g_below(l, g);
  int w = -1;
  if (!join_generates(l, gdown, &w))
    return fail(w, "set does not join-generate the semilattice");

  for (int x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    std::vector<int> f = factors_of(l, g, x);
    const size_t k = f.size();
    if (k < 2) continue;  // both conditions need at least one other factor
    for (uint32_t mask = 1; mask < (uint32_t(1) << k); ++mask) {
      if (std::popcount(mask) < 2) continue;
      for (size_t yi = 0; yi < k; ++yi) {
        if (!(mask >> yi & 1)) continue;
        int y = f[yi];
        std::vector<int> rest;
        for (size_t j = 0; j < k; ++j)
          if (j != yi && (mask >> j & 1)) rest.push_back(f[j]);

        auto rest_join = l.join_of(rest);
        if (!rest_join)
          return fail(x, "join missing inside an interval", y, -1, rest);
        if ((gdown[y] & gdown[*rest_join]).any())
          return fail(x, "disjointness fails", y, -1, rest);

        std::vector<int> with_y(rest);
        with_y.push_back(y);
        auto jy = l.join_of(with_y);
        if (!jy) return fail(x, "join missing inside an interval", y, -1, rest);
        for (int z = 0; z < l.size(); ++z) {
          if (!l.poset().less(z, y)) continue;
          std::vector<int> with_z(rest);
          with_z.push_back(z);
          auto jz = l.join_of(with_z);
          if (!jz) return fail(x, "join missing inside an interval", y, z, rest);
          if (!l.poset().less(*jz, *jy))
            return fail(x, "necessity fails", y, z, rest);
        }
      }
    }
  }
  return BuildingCheck{};
}

BuildingCheck check_building(const SemiLattice& l, const std::vector<int>& g,
                             BuildingCriterion criterion,
                             const FactorizationTable* table) {
  switch (criterion) {
    case BuildingCriterion::Products:
      return check_building_products(l, g);
    case BuildingCriterion::DivisorPartition:
      return check_building_divisor_partition(l, g, table);
    case BuildingCriterion::Restriction:
      return check_building_restriction(l, g);
    case BuildingCriterion::DisjointNecessity:
      return check_building_disjoint_necessity(l, g);
  }
  throw Error("UnknownCriterion", "bad building criterion");
}

BuildingSet minimal_building_set(const SemiLattice& l) {
  std::vector<int> members;
  for (int x : irreducibles(l))
    if (x != l.bottom()) members.push_back(x);
  if (!check_building_disjoint_necessity(l, members).ok)
    throw Error("InternalInconsistency",
                "irreducibles failed building-set verification");
  return BuildingSet{std::move(members), "disjoint-necessity"};
}

std::vector<BuildingSet> enumerate_building_sets(const SemiLattice& l) {
  if (l.size() > 16)
    throw Error("TooLarge", "building-set enumeration is limited to 16 elements");
  BuildingSet minimal = minimal_building_set(l);
  std::vector<int> free;
  for (int x = 0; x < l.size(); ++x)
    if (x != l.bottom() &&
        !std::binary_search(minimal.members.begin(), minimal.members.end(), x))
      free.push_back(x);

  std::vector<BuildingSet> out;
  for (uint32_t mask = 0; mask < (uint32_t(1) << free.size()); ++mask) {
    std::vector<int> g(minimal.members);
    for (size_t i = 0; i < free.size(); ++i)
      if (mask >> i & 1) g.push_back(free[i]);
    std::sort(g.begin(), g.end());
    if (check_building_disjoint_necessity(l, g).ok)
      out.push_back(BuildingSet{std::move(g), "disjoint-necessity"});
  }
  std::sort(out.begin(), out.end(), [](const BuildingSet& a, const BuildingSet& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return out;
}

BuildingCheck check_geometric(const RankedSemiLattice& rl,
                              const std::vector<int>& g) {
  const SemiLattice& l = rl.lattice;
  if (!check_building_disjoint_necessity(l, g).ok)
    throw Error("NotABuildingSet",
                "geometric criterion requires a combinatorial building set");
  for (int x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    std::vector<int> f = factors_of(l, g, x);
    int sum = 0;
    for (int xj : f) sum += rl.codim[xj];
    if (sum != rl.codim[x])
      return fail(x, "factor codimensions sum to " + std::to_string(sum) +
                         ", element has codimension " +
                         std::to_string(rl.codim[x]),
                  -1, -1, f);
  }
  return BuildingCheck{};
}

bool verify_factor_properties(const SemiLattice& l, const std::vector<int>& g) {
  if (g.size() > 20)
    throw Error("TooLarge", "factor-property verification is limited to 20 members");

  for (int x = 0; x < l.size(); ++x) {
    if (x == l.bottom()) continue;
    std::vector<int> f = factors_of(l, g, x);

    // each building-set element below x lies below exactly one factor
    for (int m : g) {
      if (!l.leq(m, x)) continue;
      int owners = 0;
      for (int xj : f)
        if (l.leq(m, xj)) ++owners;
      if (owners != 1) return false;
    }

    // dropping any factor strictly drops the join
    auto all = l.join_of(f);
    if (!all || *all != x) return false;
    for (size_t i = 0; i < f.size(); ++i) {
      std::vector<int> rest;
      for (size_t j = 0; j < f.size(); ++j)
        if (j != i) rest.push_back(f[j]);
      auto jn = l.join_of(rest);
      if (!jn || !l.poset().less(*jn, x)) return false;
    }
  }

  // factor recovery: families whose members see no building-set element in
  // the gap up to the join are exactly the factor set of their join
  for (uint32_t mask = 1; mask < (uint32_t(1) << g.size()); ++mask) {
    std::vector<int> h;
    for (size_t i = 0; i < g.size(); ++i)
      if (mask >> i & 1) h.push_back(g[i]);
    auto jn = l.join_of(h);
    if (!jn) continue;
    bool gap_empty = true;
    for (int hi : h)
      for (int m : g)
        if (l.poset().less(hi, m) && l.leq(m, *jn)) gap_empty = false;
    if (!gap_empty) continue;
    if (factors_of(l, g, *jn) != h) return false;
  }
  return true;
}

}  // namespace semilat
