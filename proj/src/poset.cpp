#include "semilat/poset.hpp"

#include <algorithm>
#include <queue>

#include "semilat/error.hpp"

namespace semilat {

namespace {

void check_labels_unique(const std::vector<std::string>& labels) {
  std::vector<std::string> sorted(labels);
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw Error("NotAPoset", "duplicate label \"" + *dup + "\"");
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<int, int>>& covers) {
  const int n = int(labels.size());
  check_labels_unique(labels);

  std::vector<std::vector<int>> succ(n);
  std::vector<int> indeg(n, 0);
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n)
      throw Error("NotAPoset", "cover index out of range");
    if (lo == hi) throw Error("CycleDetected", "self-cover at \"" + labels[lo] + "\"");
    succ[lo].push_back(hi);
    ++indeg[hi];
  }

  // Kahn's algorithm; a leftover node means a cycle.
  std::vector<int> order;
  order.reserve(n);
  std::queue<int> q;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) q.push(i);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    order.push_back(v);
    for (int w : succ[v])
      if (--indeg[w] == 0) q.push(w);
  }
  if (int(order.size()) != n)
    throw Error("CycleDetected", "cover relation contains a cycle");

  Poset p;
  p.n_ = n;
  p.labels_ = std::move(labels);
  p.up_.assign(n, Bits(n));
  p.down_.assign(n, Bits(n));
  // closure: up(x) = {x} union up(successors), in reverse topological order
  for (int k = n - 1; k >= 0; --k) {
    int v = order[k];
    p.up_[v].set(v);
    for (int w : succ[v]) p.up_[v] |= p.up_[w];
  }
  for (int x = 0; x < n; ++x)
    p.up_[x].for_each([&](int y) { p.down_[y].set(x); });

  p.finish();
  return p;
}

Poset Poset::from_relation(std::vector<std::string> labels,
                           const std::vector<std::vector<bool>>& leq) {
  const int n = int(labels.size());
  check_labels_unique(labels);

  Poset p;
  p.n_ = n;
  p.labels_ = std::move(labels);
  p.up_.assign(n, Bits(n));
  p.down_.assign(n, Bits(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (leq[x][y]) {
        p.up_[x].set(y);
        p.down_[y].set(x);
      }

  for (int x = 0; x < n; ++x) {
    if (!p.up_[x].test(x))
      throw Error("NotAPoset", "relation not reflexive at \"" + p.labels_[x] + "\"");
    for (int y = x + 1; y < n; ++y)
      if (p.up_[x].test(y) && p.up_[y].test(x))
        throw Error("NotAPoset", "antisymmetry fails between \"" + p.labels_[x] +
                                     "\" and \"" + p.labels_[y] + "\"");
  }
  for (int x = 0; x < n; ++x) {
    bool ok = true;
    p.up_[x].for_each([&](int y) {
      if (!p.up_[y].subset_of(p.up_[x])) ok = false;
    });
    if (!ok)
      throw Error("NotAPoset", "relation not transitive at \"" + p.labels_[x] + "\"");
  }

  p.finish();
  return p;
}

void Poset::finish() {
  cov_up_.assign(n_, {});
  cov_dn_.assign(n_, {});
  // y covers x iff x < y and no z with x < z < y
  for (int x = 0; x < n_; ++x) {
    up_[x].for_each([&](int y) {
      if (y == x) return;
      bool covered = true;
      up_[x].for_each([&](int z) {
        if (z != x && z != y && up_[z].test(y)) covered = false;
      });
      if (covered) {
        cov_up_[x].push_back(y);
        cov_dn_[y].push_back(x);
      }
    });
  }
  for (auto& v : cov_up_) std::sort(v.begin(), v.end());
  for (auto& v : cov_dn_) std::sort(v.begin(), v.end());

  height_.assign(n_, 0);
  // heights by repeated relaxation over covers, in down-set size order
  std::vector<int> order(n_);
  for (int i = 0; i < n_; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return down_[a].count() < down_[b].count(); });
  for (int v : order)
    for (int w : cov_dn_[v]) height_[v] = std::max(height_[v], height_[w] + 1);

  index_.clear();
  for (int i = 0; i < n_; ++i) index_[labels_[i]] = i;
}

std::optional<int> Poset::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<std::pair<int, int>> Poset::cover_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 0; x < n_; ++x)
    for (int y : cov_up_[x]) out.emplace_back(x, y);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> Poset::minimal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (down_[x].count() == 1) out.push_back(x);
  return out;
}

std::vector<int> Poset::maximal_elements() const {
  std::vector<int> out;
  for (int x = 0; x < n_; ++x)
    if (up_[x].count() == 1) out.push_back(x);
  return out;
}

Poset Poset::induced(const std::vector<int>& ids) const {
  const int k = int(ids.size());
  std::vector<std::string> labels(k);
  std::vector<std::vector<bool>> leq(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) {
    labels[i] = labels_[ids[i]];
    for (int j = 0; j < k; ++j) leq[i][j] = this->leq(ids[i], ids[j]);
  }
  return from_relation(std::move(labels), leq);
}

Poset direct_product(const Poset& p, const Poset& q) {
  const int np = p.size(), nq = q.size();
  std::vector<std::string> labels;
  labels.reserve(size_t(np) * nq);
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      labels.push_back("(" + p.label(i) + "," + q.label(j) + ")");
  std::vector<std::vector<bool>> leq(labels.size(),
                                     std::vector<bool>(labels.size(), false));
  for (int i = 0; i < np; ++i)
    for (int j = 0; j < nq; ++j)
      for (int i2 = 0; i2 < np; ++i2)
        for (int j2 = 0; j2 < nq; ++j2)
          leq[i * nq + j][i2 * nq + j2] = p.leq(i, i2) && q.leq(j, j2);
  return Poset::from_relation(std::move(labels), leq);
}

Poset chain_poset(int n) {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) {
    labels.push_back("c" + std::to_string(i));
    if (i > 0) covers.emplace_back(i - 1, i);
  }
  return Poset::from_covers(std::move(labels), covers);
}

}  // namespace semilat
