#include "semilat/algebra.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "semilat/building.hpp"
#include "semilat/error.hpp"
#include "semilat/nested.hpp"

namespace semilat {

namespace {

std::string sanitize_symbol(const std::string& label, int element) {
  std::string body;
  for (char c : label)
    if (std::isalnum(static_cast<unsigned char>(c))) body += c;
  if (body.empty()) body = "g" + std::to_string(element);
  return "x_" + body;
}

}  // namespace

AlgebraPresentation d_algebra(const SemiLattice& l, const std::vector<int>& g,
                              bool all_relations) {
  if (!l.top())
    throw Error("NotALattice",
                "the algebra is defined for lattices; no top element");
  auto check = check_building_disjoint_necessity(l, g);
  if (!check.ok)
    throw Error("NotABuildingSet", check.cert.reason);
  if (g.size() > 20)
    throw Error("TooLarge", "presentation is limited to 20 generators");

  NestedTester tester(l, g);
  const int t = tester.vertex_count();

  AlgebraPresentation p;
  p.reduced = !all_relations;
  for (int id : tester.vertices()) {
    AlgebraPresentation::Generator gen;
    gen.element = id;
    gen.label = l.label(id);
    gen.symbol = sanitize_symbol(gen.label, id);
    p.generators.push_back(std::move(gen));
  }
  // fall back to id-indexed symbols if sanitizing collided
  {
    std::vector<std::string> syms;
    for (auto& gen : p.generators) syms.push_back(gen.symbol);
    std::sort(syms.begin(), syms.end());
    if (std::adjacent_find(syms.begin(), syms.end()) != syms.end())
      for (auto& gen : p.generators)
        gen.symbol = "x_g" + std::to_string(gen.element);
  }

  std::vector<char> nested(uint64_t(1) << t, 0);
  for (uint64_t mask = 0; mask < (uint64_t(1) << t); ++mask)
    nested[mask] = tester.nested_lambda(mask);

  for (uint64_t mask = 1; mask < (uint64_t(1) << t); ++mask) {
    if (nested[mask]) continue;
    if (p.reduced) {
      bool minimal = true;
      for (int i = 0; i < t && minimal; ++i)
        if ((mask >> i & 1) && !nested[mask & ~(uint64_t(1) << i)])
          minimal = false;
      if (!minimal) continue;
    }
    std::vector<int> rel;
    for (int i = 0; i < t; ++i)
      if (mask >> i & 1) rel.push_back(i);
    p.monomial_relations.push_back(std::move(rel));
  }
  std::sort(p.monomial_relations.begin(), p.monomial_relations.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              if (a.size() != b.size()) return a.size() < b.size();
              return a < b;
            });

  for (int atom : l.atoms()) {
    AlgebraPresentation::LinearRelation rel;
    rel.atom = atom;
    rel.atom_label = l.label(atom);
    for (int i = 0; i < t; ++i)
      if (l.leq(atom, tester.vertices()[i])) rel.generators.push_back(i);
    p.linear_relations.push_back(std::move(rel));
  }
  return p;
}

PresentationFormat parse_format(const std::string& name) {
  if (name == "generic") return PresentationFormat::Generic;
  if (name == "cas-script") return PresentationFormat::CasScript;
  throw Error("UnknownFormat", "unknown presentation format \"" + name + "\"");
}

std::string export_presentation(const AlgebraPresentation& p,
                                PresentationFormat format) {
  std::ostringstream out;
  if (format == PresentationFormat::Generic) {
    out << "GENERATORS\n";
    for (const auto& gen : p.generators)
      out << gen.symbol << " = " << gen.label << "\n";
    out << "MONOMIAL_RELATIONS\n";
    for (const auto& rel : p.monomial_relations) {
      for (size_t i = 0; i < rel.size(); ++i)
        out << (i ? "*" : "") << p.generators[rel[i]].symbol;
      out << "\n";
    }
    out << "LINEAR_RELATIONS\n";
    for (const auto& rel : p.linear_relations) {
      out << rel.atom_label << ": ";
      for (size_t i = 0; i < rel.generators.size(); ++i)
        out << (i ? " + " : "") << p.generators[rel.generators[i]].symbol;
      out << "\n";
    }
    return out.str();
  }

  // cas-script: a polynomial ring over the integers with the ideal listed
  out << "R = PolynomialRing(ZZ, [";
  for (size_t i = 0; i < p.generators.size(); ++i)
    out << (i ? ", " : "") << p.generators[i].symbol;
  out << "]);\n";
  out << "I = Ideal([\n";
  bool first = true;
  for (const auto& rel : p.monomial_relations) {
    out << (first ? "  " : ",\n  ");
    first = false;
    for (size_t i = 0; i < rel.size(); ++i)
      out << (i ? "*" : "") << p.generators[rel[i]].symbol;
  }
  for (const auto& rel : p.linear_relations) {
    out << (first ? "  " : ",\n  ");
    first = false;
    for (size_t i = 0; i < rel.generators.size(); ++i)
      out << (i ? " + " : "") << p.generators[rel.generators[i]].symbol;
  }
  out << "\n]);\n";
  return out.str();
}

AlgebraPresentation parse_presentation(const std::string& text) {
  AlgebraPresentation p;
  std::istringstream in(text);
  std::string line;
  int section = 0;
  auto index_of_symbol = [&](const std::string& sym) {
    for (size_t i = 0; i < p.generators.size(); ++i)
      if (p.generators[i].symbol == sym) return int(i);
    throw Error("InvalidFormat", "unknown generator symbol \"" + sym + "\"");
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line == "GENERATORS") {
      section = 1;
      continue;
    }
    if (line == "MONOMIAL_RELATIONS") {
      section = 2;
      continue;
    }
    if (line == "LINEAR_RELATIONS") {
      section = 3;
      continue;
    }
    if (section == 1) {
      auto eq = line.find(" = ");
      if (eq == std::string::npos)
        throw Error("InvalidFormat", "bad generator line \"" + line + "\"");
      AlgebraPresentation::Generator gen;
      gen.symbol = line.substr(0, eq);
      gen.label = line.substr(eq + 3);
      gen.element = int(p.generators.size());
      p.generators.push_back(std::move(gen));
    } else if (section == 2) {
      std::vector<int> rel;
      std::string sym;
      std::istringstream ls(line);
      while (std::getline(ls, sym, '*')) rel.push_back(index_of_symbol(sym));
      p.monomial_relations.push_back(std::move(rel));
    } else if (section == 3) {
      auto colon = line.find(": ");
      if (colon == std::string::npos)
        throw Error("InvalidFormat", "bad linear relation \"" + line + "\"");
      AlgebraPresentation::LinearRelation rel;
      rel.atom_label = line.substr(0, colon);
      std::string rest = line.substr(colon + 2);
      size_t pos = 0;
      while (pos < rest.size()) {
        size_t plus = rest.find(" + ", pos);
        std::string sym = rest.substr(pos, plus == std::string::npos
                                               ? std::string::npos
                                               : plus - pos);
        rel.generators.push_back(index_of_symbol(sym));
        if (plus == std::string::npos) break;
        pos = plus + 3;
      }
      p.linear_relations.push_back(std::move(rel));
    } else {
      throw Error("InvalidFormat", "text before the GENERATORS section");
    }
  }
  return p;
}

}  // namespace semilat
