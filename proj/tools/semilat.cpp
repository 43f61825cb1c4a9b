// Command-line front end for the semilattice toolkit: generators, building
// set checks, nested complexes, combinatorial blowups, fan subdivisions and
// the algebra presentation, over the JSON file formats defined in io.hpp.

#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "semilat/algebra.hpp"
#include "semilat/blowup.hpp"
#include "semilat/building.hpp"
#include "semilat/error.hpp"
#include "semilat/extensions.hpp"
#include "semilat/fan.hpp"
#include "semilat/generators.hpp"
#include "semilat/io.hpp"
#include "semilat/nested.hpp"

namespace {

using namespace semilat;

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(csv);
  while (std::getline(in, item, ',')) out.push_back(item);
  return out;
}

std::vector<int> parse_set(const SemiLattice& l, const std::string& csv) {
  std::vector<int> ids;
  for (const auto& label : split_csv(csv)) {
    auto id = l.poset().index_of(label);
    if (!id) throw Error("UnknownLabel", "no element labeled \"" + label + "\"");
    ids.push_back(*id);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::string label_list(const SemiLattice& l, const std::vector<int>& ids) {
  std::string out;
  for (size_t i = 0; i < ids.size(); ++i) {
    if (i) out += ",";
    out += l.label(ids[i]);
  }
  return out;
}

std::string describe(const SemiLattice& l, const BuildingCertificate& cert) {
  std::string out = cert.reason;
  if (cert.x >= 0) out += " at x=" + l.label(cert.x);
  if (cert.y >= 0) out += ", y=" + l.label(cert.y);
  if (cert.z >= 0) out += ", z=" + l.label(cert.z);
  if (!cert.subset.empty()) out += ", subset={" + label_list(l, cert.subset) + "}";
  return out;
}

std::vector<int> parse_cone(const std::string& text) {
  if (text == "o") return {};
  std::vector<int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, '.')) out.push_back(std::stoi(item));
  return out;
}

std::vector<int> parse_cone_set(const FacePosetFan& fan, const std::string& csv) {
  std::vector<int> ids;
  for (const auto& label : split_csv(csv)) {
    auto idx = fan.cone_index(parse_cone(label));
    if (!idx) throw Error("UnknownLabel", "no cone labeled \"" + label + "\"");
    ids.push_back(*idx);
  }
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

struct GenOptions {
  int boolean_n = 0;
  int partition_n = 0;
  long divisor_n = 0;
  std::string coords_file;
  std::string random_spec;
};

int run_gen(const GenOptions& opt) {
  int given = (opt.boolean_n > 0) + (opt.partition_n > 0) + (opt.divisor_n > 0) +
              !opt.coords_file.empty() + !opt.random_spec.empty();
  if (given != 1) throw CLI::ValidationError("gen", "choose exactly one family");

  if (opt.boolean_n > 0) {
    std::cout << write_poset_json(boolean_lattice(opt.boolean_n));
  } else if (opt.partition_n > 0) {
    std::cout << write_poset_json(partition_lattice(opt.partition_n));
  } else if (opt.divisor_n > 0) {
    std::cout << write_poset_json(divisor_lattice(opt.divisor_n));
  } else if (!opt.coords_file.empty()) {
    nlohmann::json doc;
    try {
      doc = nlohmann::json::parse(read_text_file(opt.coords_file));
    } catch (const nlohmann::json::exception& e) {
      throw Error("InvalidFormat", e.what());
    }
    std::vector<std::vector<int>> sets;
    for (const auto& s : doc) sets.push_back(s.get<std::vector<int>>());
    RankedSemiLattice rl = coordinate_arrangement_lattice(sets);
    std::cout << write_poset_json(rl.lattice, &rl.codim);
  } else {
    auto parts = split_csv(opt.random_spec);
    if (parts.size() != 3)
      throw Error("InvalidFormat", "--random expects g,f,seed");
    std::cout << write_poset_json(random_semilattice(
        std::stoi(parts[0]), std::stoi(parts[1]), std::stoull(parts[2])));
  }
  return 0;
}

int run_check_building(const std::string& file, const std::string& set_csv,
                       const std::string& criterion) {
  SemiLattice l = load_poset_file(file).lattice;
  std::vector<int> g = parse_set(l, set_csv);

  std::vector<std::pair<std::string, BuildingCriterion>> todo;
  if (criterion == "def" || criterion == "all")
    todo.emplace_back("def", BuildingCriterion::Products);
  if (criterion == "c2" || criterion == "all")
    todo.emplace_back("c2", BuildingCriterion::DivisorPartition);
  if (criterion == "c3" || criterion == "all")
    todo.emplace_back("c3", BuildingCriterion::Restriction);
  if (criterion == "c4" || criterion == "all")
    todo.emplace_back("c4", BuildingCriterion::DisjointNecessity);
  if (todo.empty())
    throw Error("UnknownCriterion", "criterion must be def, c2, c3, c4 or all");

  for (const auto& [name, crit] : todo) {
    BuildingCheck check = check_building(l, g, crit);
    if (!check.ok) {
      std::cout << "not a building set (criterion " << name
                << "): " << describe(l, check.cert) << "\n";
      return 1;
    }
  }
  std::cout << "building set (criterion " << criterion << ")\n";
  return 0;
}

int run_fan(const std::string& action, const std::string& file,
            const std::string& at, const std::string& set_csv,
            const std::string& order_csv) {
  FacePosetFan fan = load_fan_file(file);
  if (action == "subdivide") {
    std::cout << write_fan_json(stellar_subdivision(fan, parse_cone(at)));
    return 0;
  }
  if (action == "verify") {
    auto check = verify_stellar_is_blowup(fan, parse_cone(at));
    if (!check.ok) {
      std::cout << "FAIL: " << check.detail << "\n";
      return 1;
    }
    std::cout << "OK (face posets match)\n";
    return 0;
  }
  if (action == "simplicialize") {
    std::vector<int> g = parse_cone_set(fan, set_csv);
    // the order keeps the user's sequence, unlike the sorted --set
    std::vector<int> order;
    for (const auto& label : split_csv(order_csv)) {
      auto idx = fan.cone_index(parse_cone(label));
      if (!idx) throw Error("UnknownLabel", "no cone labeled \"" + label + "\"");
      order.push_back(*idx);
    }
    std::cout << write_fan_json(simplicialize(fan, g, order).fan);
    return 0;
  }
  throw CLI::ValidationError("fan", "unknown fan action");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite meet-semilattice toolkit: building sets, nested set "
               "complexes, combinatorial blowups, stellar subdivisions"};
  app.require_subcommand(1);

  GenOptions gen_opt;
  auto* gen = app.add_subcommand("gen", "generate a semilattice family");
  gen->add_option("--boolean", gen_opt.boolean_n, "boolean lattice of rank n");
  gen->add_option("--partition", gen_opt.partition_n, "partition lattice of [n]");
  gen->add_option("--divisor", gen_opt.divisor_n, "divisor lattice of n");
  gen->add_option("--coords", gen_opt.coords_file,
                  "coordinate subspace arrangement (JSON list of index sets)");
  gen->add_option("--random", gen_opt.random_spec,
                  "random union-closed family: g,f,seed");

  std::string file, set_csv, criterion = "c4", order_csv, at_label, format = "generic";
  bool any_order = false, all_orders = false, all_relations = false;
  bool show_facets = false, show_fvector = false, show_faces = false;

  auto* cb = app.add_subcommand("check-building", "run building-set criteria");
  cb->add_option("file", file)->required();
  cb->add_option("--set", set_csv, "element labels, comma separated")->required();
  cb->add_option("--criterion", criterion, "def|c2|c3|c4|all");

  auto* mb = app.add_subcommand("min-building", "minimal building set");
  mb->add_option("file", file)->required();

  auto* eb = app.add_subcommand("enum-building", "enumerate all building sets");
  eb->add_option("file", file)->required();

  auto* cg = app.add_subcommand("check-geometric",
                                "codimension-sum criterion on a ranked file");
  cg->add_option("file", file)->required();
  cg->add_option("--set", set_csv)->required();

  auto* ns = app.add_subcommand("nested", "nested complex of a building set");
  ns->add_option("file", file)->required();
  ns->add_option("--set", set_csv)->required();
  ns->add_flag("--faces", show_faces, "list all faces (default)");
  ns->add_flag("--facets", show_facets, "list facets only");
  ns->add_flag("--fvector", show_fvector, "print the f-vector");

  auto* bl = app.add_subcommand("blowup", "combinatorial blowup at one element");
  bl->add_option("file", file)->required();
  bl->add_option("--at", at_label)->required();

  auto* bs = app.add_subcommand("blowup-seq", "iterated blowup of a building set");
  bs->add_option("file", file)->required();
  bs->add_option("--set", set_csv)->required();
  bs->add_option("--order", order_csv, "decreasing order, comma separated");
  bs->add_flag("--any-order", any_order, "use the canonical decreasing order");

  auto* vm = app.add_subcommand("verify-main",
                                "blowup sequence result vs nested complex");
  vm->add_option("file", file)->required();
  vm->add_option("--set", set_csv)->required();
  vm->add_option("--order", order_csv, "decreasing order, comma separated");
  vm->add_flag("--all-orders", all_orders, "check every decreasing order");

  auto* fan_cmd = app.add_subcommand("fan", "polyhedral fan operations");
  std::string fan_action;
  fan_cmd->add_option("action", fan_action, "subdivide|simplicialize|verify")
      ->required();
  fan_cmd->add_option("file", file)->required();
  fan_cmd->add_option("--at", at_label, "cone label, ray indices joined by '.'");
  fan_cmd->add_option("--set", set_csv, "cone labels, comma separated");
  fan_cmd->add_option("--order", order_csv, "cone labels, comma separated");

  auto* alg = app.add_subcommand("algebra", "presentation of the graded algebra");
  alg->add_option("file", file)->required();
  alg->add_option("--set", set_csv)->required();
  alg->add_option("--format", format, "generic|cas-script");
  alg->add_flag("--all-relations", all_relations,
                "emit every non-nested set, not only the minimal ones");

  auto* dot = app.add_subcommand("export-dot", "Hasse diagram in DOT");
  dot->add_option("file", file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) return run_gen(gen_opt);

    if (cb->parsed()) return run_check_building(file, set_csv, criterion);

    if (mb->parsed()) {
      SemiLattice l = load_poset_file(file).lattice;
      BuildingSet b = minimal_building_set(l);
      std::cout << label_list(l, b.members) << "\n";
      return 0;
    }

    if (eb->parsed()) {
      SemiLattice l = load_poset_file(file).lattice;
      for (const auto& b : enumerate_building_sets(l))
        std::cout << label_list(l, b.members) << "\n";
      return 0;
    }

    if (cg->parsed()) {
      PosetFile pf = load_poset_file(file);
      if (!pf.codim)
        throw Error("InvalidFormat", "check-geometric needs a \"codim\" array");
      RankedSemiLattice rl = make_ranked(pf.lattice, *pf.codim);
      std::vector<int> g = parse_set(rl.lattice, set_csv);
      BuildingCheck check = check_geometric(rl, g);
      if (!check.ok) {
        std::cout << "not geometric: " << describe(rl.lattice, check.cert) << "\n";
        return 1;
      }
      std::cout << "geometric building set\n";
      return 0;
    }

    if (ns->parsed()) {
      SemiLattice l = load_poset_file(file).lattice;
      NestedComplex c = nested_complex(l, parse_set(l, set_csv));
      if (show_fvector) {
        auto fv = c.f_vector();
        std::cout << "f-vector:";
        for (long v : fv) std::cout << " " << v;
        std::cout << "\n";
      } else if (show_facets) {
        NestedComplex facets_only = c;
        facets_only.faces = c.facets();
        std::cout << export_face_list(facets_only);
      } else {
        std::cout << export_face_list(c);
      }
      return 0;
    }

    if (bl->parsed()) {
      SemiLattice l = load_poset_file(file).lattice;
      auto id = l.poset().index_of(at_label);
      if (!id) throw Error("UnknownLabel", "no element labeled \"" + at_label + "\"");
      std::cout << write_poset_json(combinatorial_blowup(l, *id).lattice);
      return 0;
    }

    if (bs->parsed() || vm->parsed()) {
      SemiLattice l = load_poset_file(file).lattice;
      std::vector<int> g = parse_set(l, set_csv);
      std::vector<std::vector<int>> orders;
      if (!order_csv.empty()) {
        std::vector<int> order;
        for (const auto& label : split_csv(order_csv)) {
          auto id = l.poset().index_of(label);
          if (!id)
            throw Error("UnknownLabel", "no element labeled \"" + label + "\"");
          order.push_back(*id);
        }
        orders.push_back(std::move(order));
      } else if (all_orders && vm->parsed()) {
        for_each_decreasing_extension(l.poset(), g,
                                      [&](const std::vector<int>& ext) {
                                        orders.push_back(ext);
                                        return true;
                                      });
      } else {
        orders = decreasing_extensions(l.poset(), g, 1);
      }

      if (bs->parsed()) {
        std::cout << write_poset_json(blowup_sequence(l, g, orders.at(0)).lattice);
        return 0;
      }
      for (const auto& order : orders) {
        MainTheoremCheck check = verify_main_theorem(l, g, order);
        if (!check.ok) {
          std::cout << "FAIL (" << check.detail << ") for order "
                    << label_list(l, order) << "\n";
          return 1;
        }
      }
      std::cout << "OK (isomorphism found)";
      if (orders.size() > 1) std::cout << " for all " << orders.size() << " orders";
      std::cout << "\n";
      return 0;
    }

    if (fan_cmd->parsed())
      return run_fan(fan_action, file, at_label, set_csv, order_csv);

    if (alg->parsed()) {
      SemiLattice l = load_poset_file(file).lattice;
      AlgebraPresentation p =
          d_algebra(l, parse_set(l, set_csv), all_relations);
      std::cout << export_presentation(p, parse_format(format));
      return 0;
    }

    if (dot->parsed()) {
      std::cout << export_dot(load_poset_file(file).lattice.poset());
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
