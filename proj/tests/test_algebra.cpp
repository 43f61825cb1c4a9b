#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cctype>
#include <set>

#include "corpus.hpp"
#include "semilat/algebra.hpp"
#include "semilat/error.hpp"
#include "semilat/nested.hpp"

using namespace semilat;

namespace {

std::vector<std::string> symbols(const AlgebraPresentation& p,
                                 const std::vector<int>& rel) {
  std::vector<std::string> out;
  for (int i : rel) out.push_back(p.generators[i].symbol);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("presentation for B_2 with the full building set") {
  SemiLattice b2 =
      SemiLattice::build({"0", "a", "b", "ab"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  AlgebraPresentation p = d_algebra(b2, corpus::set_of(b2, {"a", "b", "ab"}));

  REQUIRE(p.generators.size() == 3);
  CHECK(p.generators[0].symbol == "x_a");
  CHECK(p.generators[1].symbol == "x_b");
  CHECK(p.generators[2].symbol == "x_ab");

  REQUIRE(p.monomial_relations.size() == 1);
  CHECK(symbols(p, p.monomial_relations[0]) ==
        std::vector<std::string>{"x_a", "x_b"});

  REQUIRE(p.linear_relations.size() == 2);
  CHECK(p.linear_relations[0].atom_label == "a");
  CHECK(symbols(p, p.linear_relations[0].generators) ==
        std::vector<std::string>{"x_a", "x_ab"});
  CHECK(symbols(p, p.linear_relations[1].generators) ==
        std::vector<std::string>{"x_ab", "x_b"});
}

TEST_CASE("presentation for B_3 with the atoms has no monomial relations") {
  SemiLattice b3 = boolean_lattice(3);
  AlgebraPresentation p = d_algebra(b3, b3.atoms());
  CHECK(p.generators.size() == 3);
  CHECK(p.monomial_relations.empty());
  for (const auto& rel : p.linear_relations)
    CHECK(rel.generators.size() == 1);
}

TEST_CASE("presentation for B_3 with the maximal building set") {
  SemiLattice b3 = boolean_lattice(3);
  AlgebraPresentation p = d_algebra(b3, corpus::nonbottom(b3));
  CHECK(p.generators.size() == 7);

  // minimal non-nested sets are exactly the incomparable pairs
  CHECK(p.monomial_relations.size() == 9);
  for (const auto& rel : p.monomial_relations) CHECK(rel.size() == 2);

  bool found_atom1 = false;
  for (const auto& rel : p.linear_relations)
    if (rel.atom_label == "1") {
      found_atom1 = true;
      CHECK(symbols(p, rel.generators) ==
            std::vector<std::string>{"x_1", "x_12", "x_123", "x_13"});
    }
  CHECK(found_atom1);
  CHECK(p.linear_relations.size() == b3.atoms().size());
}

TEST_CASE("monomial relations divide exactly the non-nested sets") {
  SemiLattice b3 = boolean_lattice(3);
  std::vector<int> g = corpus::set_of(b3, {"1", "2", "3", "23"});
  AlgebraPresentation p = d_algebra(b3, g);
  NestedTester t(b3, g);

  // minimal relations are pairwise inclusion-incomparable
  for (size_t i = 0; i < p.monomial_relations.size(); ++i)
    for (size_t j = 0; j < p.monomial_relations.size(); ++j) {
      if (i == j) continue;
      const auto &a = p.monomial_relations[i], &b = p.monomial_relations[j];
      CHECK_FALSE(std::includes(b.begin(), b.end(), a.begin(), a.end()));
    }

  // a generator set has a relation dividing it iff it is not nested
  for (uint64_t mask = 0; mask < (uint64_t(1) << g.size()); ++mask) {
    bool divided = false;
    for (const auto& rel : p.monomial_relations) {
      uint64_t rel_mask = 0;
      for (int i : rel) rel_mask |= uint64_t(1) << i;
      if ((rel_mask & mask) == rel_mask) divided = true;
    }
    CHECK(divided == !t.nested_def(mask));
  }
}

TEST_CASE("the all-relations flag lists every non-nested set") {
  SemiLattice b3 = boolean_lattice(3);
  std::vector<int> g = corpus::nonbottom(b3);
  AlgebraPresentation all = d_algebra(b3, g, true);
  NestedTester t(b3, g);
  size_t non_nested = 0;
  for (uint64_t mask = 0; mask < (uint64_t(1) << g.size()); ++mask)
    if (!t.nested_def(mask)) ++non_nested;
  CHECK(all.monomial_relations.size() == non_nested);
  CHECK_FALSE(all.reduced);
}

TEST_CASE("export is deterministic and round-trips through its parser") {
  SemiLattice b2 =
      SemiLattice::build({"0", "a", "b", "ab"}, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
  AlgebraPresentation p = d_algebra(b2, corpus::set_of(b2, {"a", "b", "ab"}));

  std::string text = export_presentation(p, PresentationFormat::Generic);
  CHECK(text == export_presentation(p, PresentationFormat::Generic));

  AlgebraPresentation parsed = parse_presentation(text);
  CHECK(export_presentation(parsed, PresentationFormat::Generic) == text);

  SemiLattice b3 = boolean_lattice(3);
  AlgebraPresentation simplex = d_algebra(b3, b3.atoms());
  std::string simplex_text =
      export_presentation(simplex, PresentationFormat::Generic);
  CHECK(simplex_text.find("MONOMIAL_RELATIONS\nLINEAR_RELATIONS") !=
        std::string::npos);  // empty monomial section
  AlgebraPresentation reparsed = parse_presentation(simplex_text);
  CHECK(export_presentation(reparsed, PresentationFormat::Generic) ==
        simplex_text);
}

TEST_CASE("cas script is syntactically well formed") {
  SemiLattice b3 = boolean_lattice(3);
  AlgebraPresentation p = d_algebra(b3, corpus::nonbottom(b3));
  std::string script = export_presentation(p, PresentationFormat::CasScript);

  // balanced brackets, declared symbols only, statements end with ';'
  int round = 0, square = 0;
  for (char c : script) {
    if (c == '(') ++round;
    if (c == ')') --round;
    if (c == '[') ++square;
    if (c == ']') --square;
    CHECK(round >= 0);
    CHECK(square >= 0);
  }
  CHECK(round == 0);
  CHECK(square == 0);

  std::set<std::string> declared;
  for (const auto& gen : p.generators) declared.insert(gen.symbol);
  size_t pos = 0;
  while ((pos = script.find("x_", pos)) != std::string::npos) {
    size_t end = pos;
    while (end < script.size() &&
           (std::isalnum(static_cast<unsigned char>(script[end])) ||
            script[end] == '_'))
      ++end;
    CHECK(declared.count(script.substr(pos, end - pos)) == 1);
    pos = end;
  }
  CHECK(script.find(";\n") != std::string::npos);

  CHECK_THROWS_WITH_AS(parse_format("latex"), doctest::Contains("UnknownFormat"),
                       Error);
}

TEST_CASE("the algebra requires a lattice and a building set") {
  SemiLattice v = corpus::v_poset();
  CHECK_THROWS_WITH_AS(d_algebra(v, corpus::set_of(v, {"a", "b"})),
                       doctest::Contains("NotALattice"), Error);

  SemiLattice b3 = boolean_lattice(3);
  CHECK_THROWS_WITH_AS(d_algebra(b3, corpus::set_of(b3, {"1", "23"})),
                       doctest::Contains("NotABuildingSet"), Error);
}
