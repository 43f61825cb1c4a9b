#include "semilat/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "semilat/blowup.hpp"
#include "semilat/building.hpp"
#include "semilat/error.hpp"
#include "semilat/extensions.hpp"
#include "semilat/nested.hpp"

namespace semilat {

namespace {

// ---- exact rational helpers (desk-scale linear algebra) -------------------

long long checked_ll(__int128 v) {
  if (v > __int128(9223372036854775807LL) || v < -__int128(9223372036854775807LL))
    throw Error("Overflow", "rational arithmetic overflow");
  return (long long)v;
}

struct Rat {
  long long n = 0, d = 1;
};

Rat rat(__int128 n, __int128 d = 1) {
  if (d == 0) throw Error("Overflow", "division by zero");
  if (d < 0) {
    n = -n;
    d = -d;
  }
  __int128 a = n < 0 ? -n : n, b = d;
  while (b) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0) a = 1;
  return Rat{checked_ll(n / a), checked_ll(d / a)};
}

Rat add(Rat a, Rat b) {
  return rat(__int128(a.n) * b.d + __int128(b.n) * a.d, __int128(a.d) * b.d);
}
Rat sub(Rat a, Rat b) {
  return rat(__int128(a.n) * b.d - __int128(b.n) * a.d, __int128(a.d) * b.d);
}
Rat mul(Rat a, Rat b) { return rat(__int128(a.n) * b.n, __int128(a.d) * b.d); }
Rat divide(Rat a, Rat b) {
  return rat(__int128(a.n) * b.d, __int128(a.d) * b.n);
}
int sign(Rat a) { return a.n > 0 ? 1 : a.n < 0 ? -1 : 0; }

int int_rank(std::vector<std::vector<long long>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  std::vector<std::vector<Rat>> a(rows, std::vector<Rat>(cols));
  for (size_t i = 0; i < rows; ++i)
    for (size_t j = 0; j < cols; ++j) a[i][j] = rat(m[i][j]);
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && sign(a[pivot][col]) == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || sign(a[i][col]) == 0) continue;
      Rat f = divide(a[i][col], a[rank][col]);
      for (size_t j = col; j < cols; ++j)
        a[i][j] = sub(a[i][j], mul(f, a[rank][j]));
    }
    ++rank;
  }
  return int(rank);
}

// unique exact solution of (columns) * lambda = b for independent columns;
// nullopt if inconsistent
std::optional<std::vector<Rat>> solve_columns(
    const std::vector<std::vector<long long>>& columns,
    const std::vector<long long>& b) {
  const size_t k = columns.size(), d = b.size();
  std::vector<std::vector<Rat>> a(d, std::vector<Rat>(k + 1));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < k; ++j) a[i][j] = rat(columns[j][i]);
    a[i][k] = rat(b[i]);
  }
  std::vector<int> pivot_col_of_row(d, -1);
  size_t row = 0;
  for (size_t col = 0; col < k && row < d; ++col) {
    size_t p = row;
    while (p < d && sign(a[p][col]) == 0) ++p;
    if (p == d) continue;
    std::swap(a[row], a[p]);
    for (size_t i = 0; i < d; ++i) {
      if (i == row || sign(a[i][col]) == 0) continue;
      Rat f = divide(a[i][col], a[row][col]);
      for (size_t j = col; j <= k; ++j) a[i][j] = sub(a[i][j], mul(f, a[row][j]));
    }
    pivot_col_of_row[row] = int(col);
    ++row;
  }
  for (size_t i = row; i < d; ++i)
    if (sign(a[i][k]) != 0) return std::nullopt;
  std::vector<Rat> x(k, Rat{0, 1});
  bool solved_col[64] = {};
  for (size_t i = 0; i < row; ++i) {
    int c = pivot_col_of_row[i];
    x[c] = divide(a[i][k], a[i][c]);
    solved_col[c] = true;
  }
  for (size_t c = 0; c < k; ++c)
    if (!solved_col[c]) return std::nullopt;  // dependent columns; caller avoids
  return x;
}

// feasibility of { sum lambda_i * col_i = b, lambda_i > 0 } by eliminating
// the equations, then Fourier-Motzkin on the strict inequalities
bool positive_combination_exists(const std::vector<std::vector<long long>>& columns,
                                 const std::vector<long long>& b) {
  const size_t k = columns.size(), d = b.size();
  std::vector<std::vector<Rat>> a(d, std::vector<Rat>(k + 1));
  for (size_t i = 0; i < d; ++i) {
    for (size_t j = 0; j < k; ++j) a[i][j] = rat(columns[j][i]);
    a[i][k] = rat(b[i]);
  }
  // row-reduce; pivots become bound variables expressed in the free ones
  std::vector<int> pivot_of_col(k, -1);
  size_t row = 0;
  for (size_t col = 0; col < k && row < d; ++col) {
    size_t p = row;
    while (p < d && sign(a[p][col]) == 0) ++p;
    if (p == d) continue;
    std::swap(a[row], a[p]);
    for (size_t i = 0; i < d; ++i) {
      if (i == row || sign(a[i][col]) == 0) continue;
      Rat f = divide(a[i][col], a[row][col]);
      for (size_t j = 0; j <= k; ++j) a[i][j] = sub(a[i][j], mul(f, a[row][j]));
    }
    pivot_of_col[col] = int(row);
    ++row;
  }
  for (size_t i = row; i < d; ++i)
    if (sign(a[i][k]) != 0) return false;  // inconsistent equations

  std::vector<int> free_cols;
  for (size_t c = 0; c < k; ++c)
    if (pivot_of_col[c] < 0) free_cols.push_back(int(c));

  // each lambda_c > 0 becomes: expr over free vars > 0
  // expr = coeffs . free + constant
  struct Ineq {
    std::vector<Rat> coef;
    Rat cst;
  };
  std::vector<Ineq> sys;
  for (size_t c = 0; c < k; ++c) {
    Ineq q;
    q.coef.assign(free_cols.size(), Rat{0, 1});
    if (pivot_of_col[c] < 0) {
      for (size_t f = 0; f < free_cols.size(); ++f)
        if (free_cols[f] == int(c)) q.coef[f] = rat(1);
      q.cst = Rat{0, 1};
    } else {
      int r = pivot_of_col[c];
      Rat piv = a[r][c];
      q.cst = divide(a[r][k], piv);
      for (size_t f = 0; f < free_cols.size(); ++f)
        q.coef[f] = divide(sub(Rat{0, 1}, a[r][free_cols[f]]), piv);
    }
    sys.push_back(std::move(q));
  }

  for (size_t v = 0; v < free_cols.size(); ++v) {
    std::vector<Ineq> pos, neg, rest;
    for (auto& q : sys) {
      int s = sign(q.coef[v]);
      if (s > 0)
        pos.push_back(q);
      else if (s < 0)
        neg.push_back(q);
      else
        rest.push_back(q);
    }
    for (const auto& p : pos)
      for (const auto& m : neg) {
        Ineq q;
        q.coef.assign(free_cols.size(), Rat{0, 1});
        Rat cp = p.coef[v], cm = Rat{-m.coef[v].n, m.coef[v].d};
        for (size_t j = 0; j < free_cols.size(); ++j)
          q.coef[j] = add(mul(cm, p.coef[j]), mul(cp, m.coef[j]));
        q.cst = add(mul(cm, p.cst), mul(cp, m.cst));
        rest.push_back(std::move(q));
      }
    sys = std::move(rest);
  }
  for (const auto& q : sys)
    if (sign(q.cst) <= 0) return false;  // requires cst > 0 with no variables
  return true;
}

std::vector<long long> primitive(std::vector<long long> v) {
  long long g = 0;
  for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
  if (g > 1)
    for (auto& x : v) x /= g;
  return v;
}

// ---- cone family plumbing --------------------------------------------------

std::vector<int> normalized(std::vector<int> cone) {
  std::sort(cone.begin(), cone.end());
  cone.erase(std::unique(cone.begin(), cone.end()), cone.end());
  return cone;
}

std::vector<int> intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::vector<std::vector<long long>> ray_columns(
    const std::vector<std::vector<long long>>& rays,
    const std::vector<int>& cone) {
  std::vector<std::vector<long long>> cols;
  for (int i : cone) cols.push_back(rays[i]);
  return cols;
}

// face poset over an inclusion-closed cone family
FacePosetFan assemble(int dim, bool has_rays,
                      std::vector<std::vector<long long>> rays, int ray_count,
                      std::set<std::vector<int>> family) {
  family.insert({});
  FacePosetFan fan;
  fan.dim = dim;
  fan.has_rays = has_rays;
  fan.rays = std::move(rays);
  fan.ray_count = ray_count;
  fan.cones.assign(family.begin(), family.end());
  std::sort(fan.cones.begin(), fan.cones.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  std::vector<std::string> labels;
  for (const auto& c : fan.cones) labels.push_back(cone_label(c));
  std::vector<std::vector<bool>> leq(fan.cones.size(),
                                     std::vector<bool>(fan.cones.size()));
  for (size_t i = 0; i < fan.cones.size(); ++i)
    for (size_t j = 0; j < fan.cones.size(); ++j)
      leq[i][j] = subset(fan.cones[i], fan.cones[j]);
  fan.face_poset =
      SemiLattice::from_poset(Poset::from_relation(std::move(labels), leq));
  return fan;
}

}  // namespace

std::string cone_label(const std::vector<int>& cone) {
  if (cone.empty()) return "o";
  std::string out;
  for (size_t i = 0; i < cone.size(); ++i) {
    if (i) out += ".";
    out += std::to_string(cone[i]);
  }
  return out;
}

std::optional<int> FacePosetFan::cone_index(const std::vector<int>& cone) const {
  auto norm = normalized(cone);
  auto it = std::lower_bound(
      cones.begin(), cones.end(), norm,
      [](const std::vector<int>& a, const std::vector<int>& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
      });
  if (it == cones.end() || *it != norm) return std::nullopt;
  return int(it - cones.begin());
}

std::vector<int> FacePosetFan::maximal_cone_indices() const {
  std::vector<int> out;
  for (size_t i = 0; i < cones.size(); ++i) {
    bool maximal = true;
    for (size_t j = 0; j < cones.size(); ++j)
      if (i != j && subset(cones[i], cones[j])) maximal = false;
    if (maximal) out.push_back(int(i));
  }
  return out;
}

bool FacePosetFan::is_simplicial_cone(int cone_idx) const {
  const auto& c = cones[cone_idx];
  if (has_rays) return int_rank(ray_columns(rays, c)) == int(c.size());
  if (c.size() >= 31) return false;
  int below = 0;
  for (const auto& other : cones)
    if (subset(other, c)) ++below;
  return below == (1 << c.size());
}

bool FacePosetFan::is_simplicial() const {
  for (size_t i = 0; i < cones.size(); ++i)
    if (!is_simplicial_cone(int(i))) return false;
  return true;
}

FacePosetFan fan_from_cones(int dim,
                            const std::vector<std::vector<long long>>& rays,
                            const std::vector<std::vector<int>>& maximal_cones,
                            const std::vector<std::vector<int>>& explicit_faces) {
  const bool has_rays = !rays.empty();
  int ray_count = int(rays.size());
  for (const auto& c : maximal_cones)
    for (int i : c) ray_count = std::max(ray_count, i + 1);
  for (const auto& c : explicit_faces)
    for (int i : c) ray_count = std::max(ray_count, i + 1);

  if (has_rays) {
    if (ray_count > int(rays.size()))
      throw Error("InconsistentFaces", "cone uses an undefined ray index");
    for (const auto& r : rays) {
      if (int(r.size()) != dim)
        throw Error("InconsistentFaces", "ray dimension mismatch");
      if (std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; }))
        throw Error("InconsistentFaces", "zero ray");
    }
    for (size_t i = 0; i < rays.size(); ++i)
      for (size_t j = i + 1; j < rays.size(); ++j)
        if (primitive(rays[i]) == primitive(rays[j]))
          throw Error("InconsistentFaces", "rays " + std::to_string(i) + " and " +
                                               std::to_string(j) + " coincide");
  }

  std::set<std::vector<int>> family;
  std::vector<std::vector<int>> maximal_norm;
  for (const auto& c : maximal_cones) {
    maximal_norm.push_back(normalized(c));
    family.insert(maximal_norm.back());
  }
  for (const auto& f : explicit_faces) {
    auto norm = normalized(f);
    bool inside_some = false;
    for (const auto& m : maximal_norm)
      if (subset(norm, m)) inside_some = true;
    if (!inside_some)
      throw Error("InconsistentFaces",
                  "listed face " + cone_label(norm) + " is not inside any cone");
    family.insert(norm);
  }
  family.insert({});

  // closure: intersections always; subset closure for simplicial cones
  // (by rank when rays are present, for every cone otherwise unless explicit
  // faces were given)
  const bool auto_subsets_everywhere = !has_rays && explicit_faces.empty();
  auto cone_is_simplicial = [&](const std::vector<int>& c) {
    if (auto_subsets_everywhere) return true;
    if (!has_rays) return false;
    return int_rank(ray_columns(rays, c)) == int(c.size());
  };

  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::vector<int>> current(family.begin(), family.end());
    for (const auto& c : current) {
      if (!cone_is_simplicial(c)) continue;
      for (uint32_t mask = 0; mask < (uint32_t(1) << c.size()); ++mask) {
        std::vector<int> f;
        for (size_t i = 0; i < c.size(); ++i)
          if (mask >> i & 1) f.push_back(c[i]);
        if (family.insert(f).second) changed = true;
      }
    }
    current.assign(family.begin(), family.end());
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t j = i + 1; j < current.size(); ++j)
        if (family.insert(intersect(current[i], current[j])).second)
          changed = true;
  }

  if (has_rays) {
    // every used ray must be a cone of the fan
    for (const auto& m : maximal_norm)
      for (int i : m)
        if (!family.count({i}))
          throw Error("InconsistentFaces",
                      "ray " + std::to_string(i) + " of cone " + cone_label(m) +
                          " is not a face of the fan");
    // non-simplicial maximal cones need user-listed proper faces
    for (const auto& m : maximal_norm) {
      if (cone_is_simplicial(m)) continue;
      bool listed = false;
      for (const auto& f : explicit_faces) {
        auto norm = normalized(f);
        if (!norm.empty() && norm != m && subset(norm, m)) listed = true;
      }
      if (!listed)
        throw Error("InconsistentFaces", "non-simplicial cone " + cone_label(m) +
                                             " requires an explicit face list");
    }
    // a ray inside a simplicial cone it does not generate breaks the
    // cones-intersect-in-faces axiom
    for (const auto& c : family) {
      if (c.empty() || !cone_is_simplicial(c)) continue;
      for (int i = 0; i < int(rays.size()); ++i) {
        if (std::binary_search(c.begin(), c.end(), i)) continue;
        auto sol = solve_columns(ray_columns(rays, c), rays[i]);
        if (!sol) continue;
        bool nonneg = true;
        for (const auto& lam : *sol)
          if (sign(lam) < 0) nonneg = false;
        if (nonneg)
          throw Error("NonConeIntersection",
                      "ray " + std::to_string(i) + " lies inside cone " +
                          cone_label(c));
      }
    }
  }

  return assemble(dim, has_rays,
                  std::vector<std::vector<long long>>(rays), ray_count,
                  std::move(family));
}

FacePosetFan stellar_subdivision(const FacePosetFan& fan,
                                 const std::vector<int>& tau,
                                 const std::vector<long long>* point) {
  auto tau_norm = normalized(tau);
  auto tau_idx = fan.cone_index(tau_norm);
  if (!tau_idx || tau_norm.empty())
    throw Error("TauNotInFan", "cone " + cone_label(tau_norm) + " is not in the fan");

  std::vector<std::vector<long long>> rays = fan.rays;
  if (fan.has_rays) {
    std::vector<long long> x;
    if (point) {
      if (!positive_combination_exists(ray_columns(fan.rays, tau_norm), *point))
        throw Error("PointNotInRelativeInterior",
                    "point is not a positive combination of the rays of " +
                        cone_label(tau_norm));
      x = primitive(*point);
    } else {
      x.assign(fan.dim, 0);
      for (int i : tau_norm) {
        auto p = primitive(fan.rays[i]);
        for (int k = 0; k < fan.dim; ++k) x[k] += p[k];
      }
      x = primitive(x);
    }
    rays.push_back(std::move(x));
  } else if (point) {
    throw Error("PointNotInRelativeInterior",
                "fan has no ray coordinates to check the point against");
  }
  const int m = fan.ray_count;

  std::set<std::vector<int>> family;
  for (const auto& rho : fan.cones) {
    if (subset(tau_norm, rho)) continue;  // the star vanishes
    family.insert(rho);
    // join with the new ray whenever rho and tau share a cone
    bool common = false;
    for (const auto& sigma : fan.cones)
      if (subset(tau_norm, sigma) && subset(rho, sigma)) common = true;
    if (common) {
      std::vector<int> joined = rho;
      joined.push_back(m);
      family.insert(normalized(joined));
    }
  }

  return assemble(fan.dim, fan.has_rays, std::move(rays), m + 1,
                  std::move(family));
}

StellarBlowupCheck verify_stellar_is_blowup(const FacePosetFan& fan,
                                            const std::vector<int>& tau) {
  StellarBlowupCheck out;
  auto tau_norm = normalized(tau);
  auto tau_idx = fan.cone_index(tau_norm);
  if (!tau_idx) {
    out.detail = "cone not in fan";
    return out;
  }

  FacePosetFan sd = stellar_subdivision(fan, tau_norm);
  BlowupResult bl = combinatorial_blowup(fan.face_poset, *tau_idx);
  const int new_ray = fan.ray_count;

  if (bl.lattice.size() != sd.face_poset.size()) {
    out.detail = "blowup and subdivision have different sizes";
    return out;
  }
  out.witness.map.assign(bl.lattice.size(), -1);
  for (int p = 0; p < bl.lattice.size(); ++p) {
    std::vector<int> cone;
    if (bl.old_of[p] >= 0) {
      cone = fan.cones[bl.old_of[p]];
    } else {
      cone = fan.cones[bl.marked_of[p]];
      cone.push_back(new_ray);
      cone = normalized(cone);
    }
    auto idx = sd.cone_index(cone);
    if (!idx) {
      out.detail = "expected cone " + cone_label(cone) + " missing from subdivision";
      return out;
    }
    out.witness.map[p] = *idx;
  }
  if (!is_order_isomorphism(bl.lattice.poset(), sd.face_poset.poset(),
                            out.witness)) {
    out.detail = "cone correspondence is not an order isomorphism";
    return out;
  }
  out.ok = true;
  return out;
}

SimplicializeResult simplicialize(const FacePosetFan& fan,
                                  const std::vector<int>& g,
                                  const std::vector<int>& ordering) {
  auto check = check_building_disjoint_necessity(fan.face_poset, g);
  if (!check.ok)
    throw Error("NotABuildingSet",
                "simplicialization needs a building set of the face poset (" +
                    check.cert.reason + ")");

  std::vector<int> order = ordering;
  if (order.empty()) {
    auto all = decreasing_extensions(fan.face_poset.poset(), g, 1);
    order = all.at(0);
  } else if (!is_decreasing_extension(fan.face_poset.poset(), g, order)) {
    throw Error("NotNonIncreasing",
                "ordering must subdivide larger cones first");
  }

  // the face poset of the nested complex the result must match
  ComplexFacePoset target = face_poset(nested_complex(fan.face_poset, g));

  SimplicializeResult out;
  out.fan = fan;
  for (int id : order) {
    std::vector<int> cone = fan.cones[id];
    auto idx = out.fan.cone_index(cone);
    if (!idx)
      throw Error("InternalInconsistency",
                  "building-set cone " + cone_label(cone) + " vanished");
    int new_ray = out.fan.ray_count;
    out.fan = stellar_subdivision(out.fan, cone);
    out.ray_of_cone.emplace_back(cone, new_ray);
  }

  if (!out.fan.is_simplicial())
    throw Error("InternalInconsistency", "subdivided fan is not simplicial");

  // vertex map: building-set cone -> its new ray; faces map to cone sets
  std::map<int, int> ray_of_id;
  for (size_t k = 0; k < order.size(); ++k) {
    auto original = fan.cones[order[k]];
    for (const auto& [cone, ray] : out.ray_of_cone)
      if (cone == original) ray_of_id[order[k]] = ray;
  }
  IsoWitness witness;
  witness.map.assign(target.faces.size(), -1);
  for (size_t i = 0; i < target.faces.size(); ++i) {
    std::vector<int> cone;
    for (int member : target.faces[i]) cone.push_back(ray_of_id.at(member));
    auto idx = out.fan.cone_index(cone);
    if (!idx)
      throw Error("InternalInconsistency",
                  "nested face has no matching cone in the subdivision");
    witness.map[i] = *idx;
  }
  if (!is_order_isomorphism(target.lattice.poset(), out.fan.face_poset.poset(),
                            witness))
    throw Error("InternalInconsistency",
                "subdivided face poset does not match the nested complex");
  return out;
}

}  // namespace semilat
