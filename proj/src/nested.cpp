#include "semilat/nested.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>

#include "semilat/building.hpp"
#include "semilat/error.hpp"

namespace semilat {

NestedTester::NestedTester(const SemiLattice& l, std::vector<int> g)
    : l_(&l), g_(std::move(g)) {
  std::sort(g_.begin(), g_.end());
  if (g_.size() > 64)
    throw Error("TooLarge", "nested-set testing is limited to 64 vertices");

  const int n = l.size();
  const int t = int(g_.size());
  in_g_.assign(n, 0);
  std::vector<int> gindex(n, -1);
  for (int i = 0; i < t; ++i) {
    in_g_[g_[i]] = 1;
    gindex[g_[i]] = i;
  }

  comparable_.assign(t, 0);
  above_.assign(t, 0);
  below_.assign(t, 0);
  for (int i = 0; i < t; ++i)
    for (int j = 0; j < t; ++j) {
      if (l.poset().less(g_[i], g_[j])) above_[i] |= uint64_t(1) << j;
      if (l.poset().less(g_[j], g_[i])) below_[i] |= uint64_t(1) << j;
      if (i == j || l.leq(g_[i], g_[j]) || l.leq(g_[j], g_[i]))
        comparable_[i] |= uint64_t(1) << j;
    }

  factor_mask_.assign(n, 0);
  for (int x = 0; x < n; ++x) {
    if (x == l.bottom()) continue;
    for (int i = 0; i < t; ++i) {
      if (!l.leq(g_[i], x)) continue;
      bool maximal = true;
      for (int j = 0; j < t; ++j)
        if (j != i && l.leq(g_[j], x) && l.poset().less(g_[i], g_[j]))
          maximal = false;
      if (maximal) factor_mask_[x] |= uint64_t(1) << i;
    }
  }

  // factor unions over all chains of the semilattice; chains are enumerated
  // as increasing sequences so each chain set is visited once
  chain_unions_[0] = {};
  std::vector<int> chain;
  std::function<void(int, uint64_t)> extend = [&](int last, uint64_t unions) {
    chain_unions_.emplace(unions, chain);  // keeps the first representative
    for (int next = 0; next < n; ++next) {
      if (!l.poset().less(last, next)) continue;
      chain.push_back(next);
      extend(next, unions | factor_mask_[next]);
      chain.pop_back();
    }
  };
  for (int start = 0; start < n; ++start) {
    chain.assign(1, start);
    extend(start, factor_mask_[start]);
  }
}

uint64_t NestedTester::mask_of(const std::vector<int>& subset) const {
  uint64_t mask = 0;
  for (int id : subset) {
    auto it = std::lower_bound(g_.begin(), g_.end(), id);
    if (it == g_.end() || *it != id)
      throw Error("NotASubset", "element \"" + l_->label(id) +
                                    "\" is not in the building set");
    mask |= uint64_t(1) << (it - g_.begin());
  }
  return mask;
}

std::vector<int> NestedTester::ids_of(uint64_t mask) const {
  std::vector<int> out;
  for (int i = 0; i < vertex_count(); ++i)
    if (mask >> i & 1) out.push_back(g_[i]);
  return out;
}

std::optional<int> NestedTester::join_mask(uint64_t mask) const {
  int j = l_->bottom();
  for (int i = 0; i < vertex_count(); ++i) {
    if (!(mask >> i & 1)) continue;
    auto next = l_->join(j, g_[i]);
    if (!next) return std::nullopt;
    j = *next;
  }
  return j;
}

bool NestedTester::nested_def(uint64_t n) const {
  for (uint64_t a = n; a; a = (a - 1) & n) {
    if (std::popcount(a) < 2) continue;
    bool antichain = true;
    for (int i = 0; i < vertex_count() && antichain; ++i)
      if (a >> i & 1)
        if ((a & comparable_[i]) != (uint64_t(1) << i)) antichain = false;
    if (!antichain) continue;
    auto jn = join_mask(a);
    if (!jn || in_g_[*jn]) return false;
  }
  return true;
}

bool NestedTester::nested_factors(uint64_t n) const {
  for (uint64_t a = n; a; a = (a - 1) & n) {
    if (std::popcount(a) < 2) continue;
    bool antichain = true;
    for (int i = 0; i < vertex_count() && antichain; ++i)
      if (a >> i & 1)
        if ((a & comparable_[i]) != (uint64_t(1) << i)) antichain = false;
    if (!antichain) continue;
    auto jn = join_mask(a);
    if (!jn || factor_mask_[*jn] != a) return false;
  }
  return true;
}

bool NestedTester::nested_chain(uint64_t n, std::vector<int>* chain) const {
  auto it = chain_unions_.find(n);
  if (it == chain_unions_.end()) return false;
  if (chain) *chain = it->second;
  return true;
}

bool NestedTester::nested_lambda(uint64_t n) const {
  if (std::popcount(n) <= 1) return true;
  auto memo = lambda_memo_.find(n);
  if (memo != lambda_memo_.end()) return memo->second;

  bool ok = true;
  uint64_t maxima = 0;
  for (int i = 0; i < vertex_count(); ++i)
    if ((n >> i & 1) && !(above_[i] & n)) maxima |= uint64_t(1) << i;
  auto jn = join_mask(maxima);
  if (!jn || factor_mask_[*jn] != maxima) ok = false;
  if (ok)
    for (int i = 0; i < vertex_count() && ok; ++i)
      if (maxima >> i & 1) ok = nested_lambda(n & below_[i]);

  lambda_memo_[n] = ok;
  return ok;
}

bool is_nested(const SemiLattice& l, const std::vector<int>& g,
               const std::vector<int>& n) {
  NestedTester t(l, g);
  return t.nested_def(t.mask_of(n));
}

bool is_nested_by_factors(const SemiLattice& l, const std::vector<int>& g,
                          const std::vector<int>& n) {
  NestedTester t(l, g);
  return t.nested_factors(t.mask_of(n));
}

bool is_nested_by_chain(const SemiLattice& l, const std::vector<int>& g,
                        const std::vector<int>& n, std::vector<int>* chain) {
  NestedTester t(l, g);
  return t.nested_chain(t.mask_of(n), chain);
}

bool is_nested_by_recursion(const SemiLattice& l, const std::vector<int>& g,
                            const std::vector<int>& n) {
  NestedTester t(l, g);
  return t.nested_lambda(t.mask_of(n));
}

std::vector<std::vector<int>> NestedComplex::facets() const {
  std::vector<std::vector<int>> out;
  for (const auto& f : faces) {
    bool maximal = true;
    for (const auto& h : faces) {
      if (h.size() != f.size() + 1) continue;
      if (std::includes(h.begin(), h.end(), f.begin(), f.end())) maximal = false;
    }
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<long> NestedComplex::f_vector() const {
  size_t dim = 0;
  for (const auto& f : faces) dim = std::max(dim, f.size());
  std::vector<long> fv(dim + 1, 0);
  for (const auto& f : faces) ++fv[f.size()];
  return fv;
}

std::string NestedComplex::label_of(int element_id) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == element_id) return vertex_labels[i];
  throw Error("NotASubset", "unknown complex vertex id");
}

NestedComplex nested_complex(const SemiLattice& l, const std::vector<int>& g) {
  auto check = check_building_disjoint_necessity(l, g);
  if (!check.ok)
    throw Error("NotABuildingSet",
                "nested complexes are defined over building sets (" +
                    check.cert.reason + ")");
  NestedTester tester(l, g);
  const int t = tester.vertex_count();

  NestedComplex c;
  c.vertices = tester.vertices();
  for (int id : c.vertices) c.vertex_labels.push_back(l.label(id));

  std::vector<uint64_t> found{0};
  // depth-first extension; a face can only be nested if its subsets are,
  // so extending by one vertex at a time reaches every face
  std::function<void(uint64_t, int)> grow = [&](uint64_t face, int next) {
    for (int i = next; i < t; ++i) {
      uint64_t bigger = face | (uint64_t(1) << i);
      if (bigger == face) continue;
      if (!tester.nested_def(bigger)) continue;
      found.push_back(bigger);
      grow(bigger, i + 1);
    }
  };
  grow(0, 0);

  for (uint64_t mask : found) c.faces.push_back(tester.ids_of(mask));
  std::sort(c.faces.begin(), c.faces.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });
  return c;
}

ComplexFacePoset face_poset(const NestedComplex& complex) {
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < complex.faces.size(); ++i)
    index[complex.faces[i]] = int(i);

  std::vector<std::string> labels;
  for (const auto& f : complex.faces) {
    std::string lbl = "{";
    for (size_t k = 0; k < f.size(); ++k) {
      if (k) lbl += ",";
      lbl += complex.label_of(f[k]);
    }
    lbl += "}";
    labels.push_back(lbl);
  }

  std::vector<std::pair<int, int>> covers;
  for (size_t i = 0; i < complex.faces.size(); ++i) {
    const auto& f = complex.faces[i];
    for (size_t drop = 0; drop < f.size(); ++drop) {
      std::vector<int> sub;
      for (size_t k = 0; k < f.size(); ++k)
        if (k != drop) sub.push_back(f[k]);
      covers.emplace_back(index.at(sub), int(i));
    }
  }

  ComplexFacePoset out{SemiLattice::build(std::move(labels), covers),
                       complex.faces};
  return out;
}

}  // namespace semilat
