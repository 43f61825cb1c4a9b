#include "semilat/iso.hpp"

#include <algorithm>
#include <array>

namespace semilat {

bool is_order_isomorphism(const Poset& p, const Poset& q, const IsoWitness& w) {
  const int n = p.size();
  if (q.size() != n || int(w.map.size()) != n) return false;
  std::vector<char> hit(n, 0);
  for (int x = 0; x < n; ++x) {
    int u = w.map[x];
    if (u < 0 || u >= n || hit[u]) return false;
    hit[u] = 1;
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (p.leq(x, y) != q.leq(w.map[x], w.map[y])) return false;
  return true;
}

IsoWitness invert_witness(const IsoWitness& w) {
  IsoWitness inv;
  inv.map.assign(w.map.size(), -1);
  for (int x = 0; x < int(w.map.size()); ++x) inv.map[w.map[x]] = x;
  return inv;
}

IsoWitness compose_witness(const IsoWitness& pq, const IsoWitness& qr) {
  IsoWitness out;
  out.map.resize(pq.map.size());
  for (size_t x = 0; x < pq.map.size(); ++x) out.map[x] = qr.map[pq.map[x]];
  return out;
}

namespace {

std::array<int, 5> signature(const Poset& p, int x) {
  return {p.height(x), p.down(x).count(), p.up(x).count(),
          int(p.covers_below(x).size()), int(p.covers_above(x).size())};
}

struct Search {
  const Poset& p;
  const Poset& q;
  std::vector<std::array<int, 5>> sig_p, sig_q;
  std::vector<int> map;      // p id -> q id or -1
  std::vector<char> used;    // q side
  std::vector<int> order;    // p ids, most constrained first

  bool consistent(int x, int u) const {
    if (sig_p[x] != sig_q[u]) return false;
    for (int y = 0; y < p.size(); ++y) {
      int v = map[y];
      if (v < 0) continue;
      if (p.leq(x, y) != q.leq(u, v)) return false;
      if (p.leq(y, x) != q.leq(v, u)) return false;
    }
    return true;
  }

  bool extend(size_t k) {
    if (k == order.size()) return true;
    int x = order[k];
    for (int u = 0; u < q.size(); ++u) {
      if (used[u] || !consistent(x, u)) continue;
      map[x] = u;
      used[u] = 1;
      if (extend(k + 1)) return true;
      map[x] = -1;
      used[u] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<IsoWitness> is_isomorphic(const Poset& p, const Poset& q) {
  const int n = p.size();
  if (q.size() != n) return std::nullopt;

  Search s{p, q, {}, {}, {}, {}, {}};
  s.sig_p.resize(n);
  s.sig_q.resize(n);
  for (int x = 0; x < n; ++x) {
    s.sig_p[x] = signature(p, x);
    s.sig_q[x] = signature(q, x);
  }
  {
    auto a = s.sig_p;
    auto b = s.sig_q;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  s.map.assign(n, -1);
  s.used.assign(n, 0);
  s.order.resize(n);
  for (int i = 0; i < n; ++i) s.order[i] = i;
  // rarer signatures first cuts the search; ties stay in id order
  std::vector<int> freq(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (s.sig_p[i] == s.sig_p[j]) ++freq[i];
  std::stable_sort(s.order.begin(), s.order.end(),
                   [&](int a, int b) { return freq[a] < freq[b]; });

  if (!s.extend(0)) return std::nullopt;
  return IsoWitness{std::move(s.map)};
}

}  // namespace semilat
