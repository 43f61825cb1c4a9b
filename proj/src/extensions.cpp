#include "semilat/extensions.hpp"

#include <algorithm>

namespace semilat {

namespace {

struct Enumerator {
  const Poset& p;
  std::vector<int> g;        // sorted ids
  std::vector<char> placed;  // parallel to g
  std::vector<int> prefix;
  const std::function<bool(const std::vector<int>&)>& visit;
  bool stopped = false;

  bool maximal_among_remaining(size_t i) const {
    for (size_t j = 0; j < g.size(); ++j)
      if (!placed[j] && j != i && p.less(g[i], g[j])) return false;
    return true;
  }

  void rec() {
    if (stopped) return;
    if (prefix.size() == g.size()) {
      if (!visit(prefix)) stopped = true;
      return;
    }
    for (size_t i = 0; i < g.size() && !stopped; ++i) {
      if (placed[i] || !maximal_among_remaining(i)) continue;
      placed[i] = 1;
      prefix.push_back(g[i]);
      rec();
      prefix.pop_back();
      placed[i] = 0;
    }
  }
};

uint64_t splitmix(uint64_t& s) {
  s += 0x9e3779b97f4a7c15ULL;
  uint64_t z = s;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

void for_each_decreasing_extension(
    const Poset& p, const std::vector<int>& g,
    const std::function<bool(const std::vector<int>&)>& visit) {
  std::vector<int> sorted(g);
  std::sort(sorted.begin(), sorted.end());
  Enumerator e{p, std::move(sorted), {}, {}, visit};
  e.placed.assign(e.g.size(), 0);
  e.rec();
}

long count_decreasing_extensions(const Poset& p, const std::vector<int>& g,
                                 long cap) {
  long n = 0;
  for_each_decreasing_extension(p, g, [&](const std::vector<int>&) {
    return ++n < cap;
  });
  return n;
}

std::vector<std::vector<int>> decreasing_extensions(const Poset& p,
                                                    const std::vector<int>& g,
                                                    long limit) {
  std::vector<std::vector<int>> out;
  for_each_decreasing_extension(p, g, [&](const std::vector<int>& ext) {
    out.push_back(ext);
    return long(out.size()) < limit;
  });
  return out;
}

std::vector<int> sample_decreasing_extension(const Poset& p,
                                             const std::vector<int>& g,
                                             uint64_t seed) {
  std::vector<int> remaining(g);
  std::sort(remaining.begin(), remaining.end());
  std::vector<int> out;
  uint64_t state = seed;
  while (!remaining.empty()) {
    std::vector<int> maxima;
    for (int x : remaining) {
      bool is_max = true;
      for (int y : remaining)
        if (p.less(x, y)) is_max = false;
      if (is_max) maxima.push_back(x);
    }
    int pick = maxima[splitmix(state) % maxima.size()];
    out.push_back(pick);
    remaining.erase(std::find(remaining.begin(), remaining.end(), pick));
  }
  return out;
}

bool is_decreasing_extension(const Poset& p, const std::vector<int>& g,
                             const std::vector<int>& ordering) {
  if (ordering.size() != g.size()) return false;
  std::vector<int> a(g), b(ordering);
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  for (size_t i = 0; i < ordering.size(); ++i)
    for (size_t j = i + 1; j < ordering.size(); ++j)
      if (p.less(ordering[i], ordering[j])) return false;
  return true;
}

}  // namespace semilat
