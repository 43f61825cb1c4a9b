#include "semilat/factor.hpp"

#include <algorithm>
#include <functional>

#include "semilat/error.hpp"

namespace semilat {

namespace {

// (u,v) -> join(u,v) must be a bijection [0,a] x [0,b] -> [0,x] preserving
// order both ways
bool product_join_iso(const SemiLattice& l, int x, int a, int b) {
  const Poset& p = l.poset();
  std::vector<int> av = p.down(a).to_vector();
  std::vector<int> bv = p.down(b).to_vector();
  const size_t cells = av.size() * bv.size();
  if (int(cells) != p.down(x).count()) return false;

  std::vector<int> img(cells);
  std::vector<char> seen(l.size(), 0);
  for (size_t i = 0; i < av.size(); ++i)
    for (size_t j = 0; j < bv.size(); ++j) {
      auto jn = l.join(av[i], bv[j]);  // exists: both below x
      if (!jn || seen[*jn]) return false;
      seen[*jn] = 1;
      img[i * bv.size() + j] = *jn;
    }
  for (size_t s = 0; s < cells; ++s)
    for (size_t t = 0; t < cells; ++t) {
      bool cell_leq = p.leq(int(av[s / bv.size()]), int(av[t / bv.size()])) &&
                      p.leq(int(bv[s % bv.size()]), int(bv[t % bv.size()]));
      if (cell_leq != p.leq(img[s], img[t])) return false;
    }
  return true;
}

}  // namespace

std::optional<std::pair<int, int>> complementary_split(const SemiLattice& l,
                                                       int x) {
  const Poset& p = l.poset();
  std::vector<int> below;
  p.down(x).for_each([&](int z) {
    if (z != l.bottom() && z != x) below.push_back(z);
  });
  for (size_t i = 0; i < below.size(); ++i)
    for (size_t j = i + 1; j < below.size(); ++j) {
      int a = below[i], b = below[j];
      if (l.meet(a, b) != l.bottom()) continue;
      auto jn = l.join(a, b);
      if (!jn || *jn != x) continue;
      if (product_join_iso(l, x, a, b)) return std::make_pair(a, b);
    }
  return std::nullopt;
}

bool is_irreducible(const SemiLattice& l, int x) {
  return !complementary_split(l, x).has_value();
}

std::vector<int> irreducibles(const SemiLattice& l) {
  std::vector<int> out;
  for (int x = 0; x < l.size(); ++x)
    if (is_irreducible(l, x)) out.push_back(x);
  return out;
}

std::vector<int> elementary_divisors(const SemiLattice& l, int x) {
  std::vector<int> out;
  std::function<void(int)> rec = [&](int y) {
    auto split = complementary_split(l, y);
    if (!split) {
      out.push_back(y);
      return;
    }
    rec(split->first);
    rec(split->second);
  };
  rec(x);
  std::sort(out.begin(), out.end());
  return out;
}

Factorization finest_factorization(const SemiLattice& l, int x) {
  Factorization f;
  f.divisors = elementary_divisors(l, x);
  const Poset& p = l.poset();

  std::vector<std::vector<int>> axes;
  size_t cells = 1;
  for (int y : f.divisors) {
    axes.push_back(p.down(y).to_vector());
    cells *= axes.back().size();
  }

  std::vector<std::string> labels(cells);
  std::vector<std::vector<int>> coords(cells, std::vector<int>(axes.size()));
  for (size_t t = 0; t < cells; ++t) {
    size_t rest = t;
    std::string lbl = "(";
    for (size_t k = axes.size(); k-- > 0;) {
      coords[t][k] = axes[k][rest % axes[k].size()];
      rest /= axes[k].size();
    }
    for (size_t k = 0; k < axes.size(); ++k) {
      if (k) lbl += ",";
      lbl += p.label(coords[t][k]);
    }
    lbl += ")";
    labels[t] = lbl;
  }

  std::vector<std::vector<bool>> leq(cells, std::vector<bool>(cells, false));
  for (size_t s = 0; s < cells; ++s)
    for (size_t t = 0; t < cells; ++t) {
      bool le = true;
      for (size_t k = 0; k < axes.size() && le; ++k)
        le = p.leq(coords[s][k], coords[t][k]);
      leq[s][t] = le;
    }
  f.product = Poset::from_relation(std::move(labels), leq);

  f.image.resize(cells);
  for (size_t t = 0; t < cells; ++t) {
    auto jn = l.join_of(coords[t]);
    if (!jn)
      throw Error("InternalInconsistency",
                  "factor decomposition join missing at \"" + p.label(x) + "\"");
    f.image[t] = *jn;
  }

  // cross-check the witness really is an isomorphism onto [bottom, x]
  Interval iv = interval(l, l.bottom(), x);
  if (f.image.size() != iv.members.size())
    throw Error("InternalInconsistency",
                "factor decomposition size mismatch at \"" + p.label(x) + "\"");
  std::vector<int> pos(l.size(), -1);
  for (size_t i = 0; i < iv.members.size(); ++i) pos[iv.members[i]] = int(i);
  IsoWitness w;
  w.map.resize(cells);
  for (size_t t = 0; t < cells; ++t) {
    if (pos[f.image[t]] < 0)
      throw Error("InternalInconsistency", "factor image escapes the interval");
    w.map[t] = pos[f.image[t]];
  }
  if (!is_order_isomorphism(f.product, iv.as_poset(l), w))
    throw Error("InternalInconsistency",
                "factor decomposition is not an isomorphism at \"" +
                    p.label(x) + "\"");
  return f;
}

FactorizationTable factorization_table(const SemiLattice& l) {
  FactorizationTable t;
  t.divisors.resize(l.size());
  t.irreducible.assign(l.size(), 0);
  for (int x = 0; x < l.size(); ++x) {
    t.divisors[x] = elementary_divisors(l, x);
    t.irreducible[x] = t.divisors[x].size() == 1 && t.divisors[x][0] == x;
  }
  return t;
}

}  // namespace semilat
