#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "semilat/blowup.hpp"
#include "semilat/error.hpp"
#include "semilat/io.hpp"

using namespace semilat;

TEST_CASE("poset files round-trip for the whole corpus") {
  std::vector<SemiLattice> all = corpus::named_corpus();
  for (SemiLattice& l : corpus::random_corpus(20)) all.push_back(std::move(l));
  for (const SemiLattice& l : all) {
    std::string text = write_poset_json(l);
    PosetFile reload = read_poset_json(text);
    CHECK(same_semilattice(l, reload.lattice));
    // canonical form: writing again is byte-identical
    CHECK(write_poset_json(reload.lattice) == text);
  }
}

TEST_CASE("ranked poset files carry codim through") {
  RankedSemiLattice rl = corpus::example_arrangement();
  std::string text = write_poset_json(rl.lattice, &rl.codim);
  PosetFile reload = read_poset_json(text);
  REQUIRE(reload.codim.has_value());
  RankedSemiLattice back = make_ranked(reload.lattice, *reload.codim);
  for (int x = 0; x < back.lattice.size(); ++x) {
    auto orig = rl.lattice.poset().index_of(back.lattice.label(x));
    REQUIRE(orig.has_value());
    CHECK(back.codim[x] == rl.codim[*orig]);
  }
}

TEST_CASE("poset file errors") {
  CHECK_THROWS_WITH_AS(read_poset_json("not json"),
                       doctest::Contains("InvalidFormat"), Error);
  CHECK_THROWS_WITH_AS(read_poset_json("{\"labels\": [\"a\"]}"),
                       doctest::Contains("InvalidFormat"), Error);
  // semantic validation comes from the core
  CHECK_THROWS_WITH_AS(
      read_poset_json(
          "{\"labels\": [\"a\",\"b\",\"c\"], \"covers\": [[0,1],[1,2],[2,0]]}"),
      doctest::Contains("CycleDetected"), Error);
  CHECK_THROWS_WITH_AS(load_poset_file("/nonexistent/path.json"),
                       doctest::Contains("FileNotFound"), Error);
}

TEST_CASE("dot export is deterministic and shows blowup labels") {
  SemiLattice b2 = boolean_lattice(2);
  std::string dot = export_dot(b2.poset());
  CHECK(dot == export_dot(b2.poset()));
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 4 + 4 + 3);  // nodes+edges+frame

  SemiLattice b3 = boolean_lattice(3);
  BlowupResult bl = combinatorial_blowup(b3, corpus::id_of(b3, "123"));
  std::string blown = export_dot(bl.lattice.poset());
  CHECK(blown.find("[123,0]") != std::string::npos);

  NestedComplex empty;
  empty.faces = {{}};
  CHECK(export_dot(face_poset(empty).lattice.poset())
            .find("n0") != std::string::npos);
}

TEST_CASE("face lists are sorted and stable") {
  SemiLattice b3 = boolean_lattice(3);
  NestedComplex c = nested_complex(b3, corpus::set_of(b3, {"1", "2", "3", "23"}));
  std::string text = export_face_list(c);
  CHECK(text == export_face_list(c));
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  CHECK(lines.size() == c.faces.size() - 1);  // empty face not listed
  CHECK(std::is_sorted(lines.begin(), lines.end()));
}
