#include "semilat/io.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "semilat/error.hpp"

namespace semilat {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("FileNotFound", "cannot open \"" + path + "\"");
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

PosetFile read_poset_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("InvalidFormat", e.what());
  }
  if (!doc.is_object() || !doc.contains("labels") || !doc.contains("covers"))
    throw Error("InvalidFormat", "poset file needs \"labels\" and \"covers\"");

  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw Error("InvalidFormat", "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : doc["covers"]) {
    if (!c.is_array() || c.size() != 2)
      throw Error("InvalidFormat", "covers must be [lower, upper] pairs");
    covers.emplace_back(c[0].get<int>(), c[1].get<int>());
  }

  PosetFile out;
  out.lattice = SemiLattice::build(std::move(labels), covers);
  if (doc.contains("codim")) {
    std::vector<int> codim;
    for (const auto& c : doc["codim"]) codim.push_back(c.get<int>());
    if (codim.size() != size_t(out.lattice.size()))
      throw Error("InvalidFormat", "codim array size mismatch");
    out.codim = std::move(codim);
  }
  return out;
}

PosetFile load_poset_file(const std::string& path) {
  return read_poset_json(read_text_file(path));
}

namespace {

template <class T>
std::string joined_rows(const std::vector<T>& rows) {
  std::string out = "[";
  for (size_t i = 0; i < rows.size(); ++i) {
    if (i) out += ", ";
    out += json(rows[i]).dump();
  }
  return out + "]";
}

}  // namespace

std::string write_poset_json(const SemiLattice& l,
                             const std::vector<int>* codim) {
  const int n = l.size();
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return l.label(a) < l.label(b); });
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;

  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(l.label(order[i]));
  std::vector<std::vector<int>> covers;
  for (auto [lo, hi] : l.poset().cover_pairs())
    covers.push_back({pos[lo], pos[hi]});
  std::sort(covers.begin(), covers.end());

  std::string out = "{\n";
  out += "  \"labels\": " + json(labels).dump() + ",\n";
  out += "  \"covers\": " + joined_rows(covers);
  if (codim) {
    std::vector<int> mapped;
    for (int i = 0; i < n; ++i) mapped.push_back((*codim)[order[i]]);
    out += ",\n  \"codim\": " + json(mapped).dump();
  }
  out += "\n}\n";
  return out;
}

FacePosetFan read_fan_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error("InvalidFormat", e.what());
  }
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("cones"))
    throw Error("InvalidFormat", "fan file needs \"dim\" and \"cones\"");

  int dim = doc["dim"].get<int>();
  std::vector<std::vector<long long>> rays;
  if (doc.contains("rays"))
    for (const auto& r : doc["rays"])
      rays.push_back(r.get<std::vector<long long>>());
  std::vector<std::vector<int>> cones;
  for (const auto& c : doc["cones"]) cones.push_back(c.get<std::vector<int>>());
  std::vector<std::vector<int>> faces;
  if (doc.contains("faces"))
    for (const auto& f : doc["faces"]) faces.push_back(f.get<std::vector<int>>());

  return fan_from_cones(dim, rays, cones, faces);
}

FacePosetFan load_fan_file(const std::string& path) {
  return read_fan_json(read_text_file(path));
}

std::string write_fan_json(const FacePosetFan& fan) {
  // compact to live ray indices
  std::vector<int> live;
  for (const auto& c : fan.cones)
    for (int i : c) live.push_back(i);
  std::sort(live.begin(), live.end());
  live.erase(std::unique(live.begin(), live.end()), live.end());
  std::vector<int> remap(fan.ray_count, -1);
  for (size_t i = 0; i < live.size(); ++i) remap[live[i]] = int(i);

  auto maximal = fan.maximal_cone_indices();
  std::vector<std::vector<int>> max_cones, other_faces;
  for (size_t i = 0; i < fan.cones.size(); ++i) {
    if (fan.cones[i].empty()) continue;
    std::vector<int> mapped;
    for (int r : fan.cones[i]) mapped.push_back(remap[r]);
    std::sort(mapped.begin(), mapped.end());
    if (std::find(maximal.begin(), maximal.end(), int(i)) != maximal.end())
      max_cones.push_back(std::move(mapped));
    else
      other_faces.push_back(std::move(mapped));
  }
  std::sort(max_cones.begin(), max_cones.end());
  std::sort(other_faces.begin(), other_faces.end());

  std::string out = "{\n";
  out += "  \"dim\": " + std::to_string(fan.dim) + ",\n";
  if (fan.has_rays) {
    std::vector<std::vector<long long>> live_rays;
    for (int i : live) live_rays.push_back(fan.rays[i]);
    out += "  \"rays\": " + joined_rows(live_rays) + ",\n";
  }
  out += "  \"cones\": " + joined_rows(max_cones);
  if (!other_faces.empty()) out += ",\n  \"faces\": " + joined_rows(other_faces);
  out += "\n}\n";
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string export_dot(const Poset& p) {
  std::ostringstream out;
  out << "digraph poset {\n  rankdir=BT;\n";
  for (int x = 0; x < p.size(); ++x)
    out << "  n" << x << " [label=\"" << dot_escape(p.label(x)) << "\"];\n";
  for (auto [lo, hi] : p.cover_pairs())
    out << "  n" << lo << " -> n" << hi << ";\n";
  out << "}\n";
  return out.str();
}

std::string export_face_list(const NestedComplex& c) {
  std::vector<std::string> lines;
  for (const auto& face : c.faces) {
    if (face.empty()) continue;
    std::vector<std::string> labels;
    for (int id : face) labels.push_back(c.label_of(id));
    std::sort(labels.begin(), labels.end());
    std::string line;
    for (size_t i = 0; i < labels.size(); ++i) {
      if (i) line += " ";
      line += labels[i];
    }
    lines.push_back(std::move(line));
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const auto& line : lines) out += line + "\n";
  return out;
}

bool same_semilattice(const SemiLattice& a, const SemiLattice& b) {
  if (a.size() != b.size()) return false;
  std::vector<int> to_b(a.size());
  for (int x = 0; x < a.size(); ++x) {
    auto id = b.poset().index_of(a.label(x));
    if (!id) return false;
    to_b[x] = *id;
  }
  for (int x = 0; x < a.size(); ++x)
    for (int y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(to_b[x], to_b[y])) return false;
  return true;
}

bool same_fan(const FacePosetFan& a, const FacePosetFan& b) {
  return write_fan_json(a) == write_fan_json(b);
}

}  // namespace semilat
