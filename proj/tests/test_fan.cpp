#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "corpus.hpp"
#include "semilat/error.hpp"
#include "semilat/io.hpp"
#include "semilat/iso.hpp"
#include "semilat/nested.hpp"

using namespace semilat;

namespace {

std::vector<int> cone_ids(const FacePosetFan& fan,
                          const std::vector<std::vector<int>>& cones) {
  std::vector<int> out;
  for (const auto& c : cones) {
    auto idx = fan.cone_index(c);
    REQUIRE(idx.has_value());
    out.push_back(*idx);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("a simplicial cone has a boolean face poset") {
  FacePosetFan fan = corpus::simplex_cone_fan();
  CHECK(fan.cones.size() == 8);
  CHECK(is_isomorphic(fan.face_poset.poset(), boolean_lattice(3).poset())
            .has_value());
  CHECK(fan.is_simplicial());
}

TEST_CASE("the cone over the square has a 10-element face poset") {
  FacePosetFan fan = corpus::square_cone_fan();
  CHECK(fan.cones.size() == 10);  // zero cone, 4 rays, 4 facets, top
  CHECK_FALSE(fan.is_simplicial());
  auto top = fan.cone_index({0, 1, 2, 3});
  REQUIRE(top.has_value());
  CHECK_FALSE(fan.is_simplicial_cone(*top));
  // the diagonals are not faces
  CHECK_FALSE(fan.cone_index({0, 2}).has_value());
  CHECK_FALSE(fan.cone_index({1, 3}).has_value());
}

TEST_CASE("two cones sharing a ray share exactly one atom") {
  FacePosetFan fan = corpus::shared_ray_fan();
  CHECK(fan.cones.size() == 6);  // {}, three rays, two 2-cones
  std::vector<int> shared;
  std::set_intersection(fan.cones.back().begin(), fan.cones.back().end(),
                        fan.cones[fan.cones.size() - 2].begin(),
                        fan.cones[fan.cones.size() - 2].end(),
                        std::back_inserter(shared));
  CHECK(shared.size() == 1);
}

TEST_CASE("fan validation errors") {
  // non-simplicial cone without explicit faces
  CHECK_THROWS_WITH_AS(
      fan_from_cones(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}},
                     {{0, 1, 2, 3}}),
      doctest::Contains("InconsistentFaces"), Error);

  // listed face outside every cone
  CHECK_THROWS_WITH_AS(
      fan_from_cones(2, {{1, 0}, {0, 1}, {-1, 0}}, {{0, 1}}, {{1, 2}}),
      doctest::Contains("InconsistentFaces"), Error);

  // a ray interior to another cone: cone(e1, e2) with the diagonal listed too
  CHECK_THROWS_WITH_AS(
      fan_from_cones(2, {{1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {2}}),
      doctest::Contains("NonConeIntersection"), Error);

  // duplicate rays
  CHECK_THROWS_WITH_AS(fan_from_cones(2, {{1, 0}, {2, 0}}, {{0}, {1}}),
                       doctest::Contains("InconsistentFaces"), Error);
}

TEST_CASE("stellar subdivision of the square cone at the top") {
  FacePosetFan fan = corpus::square_cone_fan();
  FacePosetFan sd = stellar_subdivision(fan, {0, 1, 2, 3});

  auto maximal = sd.maximal_cone_indices();
  CHECK(maximal.size() == 4);
  for (int idx : maximal) {
    CHECK(sd.cones[idx].size() == 3);
    CHECK(sd.is_simplicial_cone(idx));
  }
  CHECK(sd.is_simplicial());
  // the new ray is the sum of the primitive generators
  CHECK(sd.rays.back() == std::vector<long long>{0, 0, 1});
}

TEST_CASE("stellar subdivision at a ray of a simplicial fan is a relabeling") {
  for (const FacePosetFan& fan :
       {corpus::simplex_cone_fan(), corpus::shared_ray_fan()}) {
    FacePosetFan sd = stellar_subdivision(fan, {0});
    CHECK(is_isomorphic(sd.face_poset.poset(), fan.face_poset.poset())
              .has_value());
  }
}

TEST_CASE("stellar subdivision of the simplex cone at the top") {
  FacePosetFan sd = stellar_subdivision(corpus::simplex_cone_fan(), {0, 1, 2});
  CHECK(sd.maximal_cone_indices().size() == 3);
  CHECK(sd.is_simplicial());
}

TEST_CASE("explicit subdivision points are checked against the interior") {
  FacePosetFan fan = corpus::square_cone_fan();
  std::vector<long long> inside{0, 0, 2};
  CHECK_NOTHROW(stellar_subdivision(fan, {0, 1, 2, 3}, &inside));
  std::vector<long long> on_boundary{1, 0, 1};
  CHECK_THROWS_WITH_AS(stellar_subdivision(fan, {0, 1, 2, 3}, &on_boundary),
                       doctest::Contains("PointNotInRelativeInterior"), Error);
  std::vector<long long> outside{5, 0, 1};
  CHECK_THROWS_WITH_AS(stellar_subdivision(fan, {0, 1, 2, 3}, &outside),
                       doctest::Contains("PointNotInRelativeInterior"), Error);

  CHECK_THROWS_WITH_AS(stellar_subdivision(fan, {0, 2}),
                       doctest::Contains("TauNotInFan"), Error);
}

TEST_CASE("stellar subdivision matches the combinatorial blowup everywhere") {
  for (const FacePosetFan& fan : corpus::fan_corpus())
    for (size_t i = 0; i < fan.cones.size(); ++i) {
      if (fan.cones[i].empty()) continue;
      StellarBlowupCheck check = verify_stellar_is_blowup(fan, fan.cones[i]);
      CHECK_MESSAGE(check.ok, "cone " << cone_label(fan.cones[i]) << ": "
                                      << check.detail);
    }
}

TEST_CASE("simplicializing the square cone with rays plus the top") {
  FacePosetFan fan = corpus::square_cone_fan();
  std::vector<int> g =
      cone_ids(fan, {{0}, {1}, {2}, {3}, {0, 1, 2, 3}});
  SimplicializeResult result = simplicialize(fan, g);
  CHECK(result.fan.is_simplicial());
  CHECK(result.fan.maximal_cone_indices().size() == 4);
}

TEST_CASE("simplicializing with all faces gives the barycentric subdivision") {
  FacePosetFan fan = corpus::square_cone_fan();
  std::vector<int> g;
  for (size_t i = 0; i < fan.cones.size(); ++i)
    if (!fan.cones[i].empty()) g.push_back(int(i));
  SimplicializeResult result = simplicialize(fan, g);
  CHECK(result.fan.is_simplicial());
  // one maximal cone per maximal chain of cones: 4 facets x 2 rays each
  CHECK(result.fan.maximal_cone_indices().size() == 8);

  // matches the face poset of the order complex
  ComplexFacePoset target = face_poset(nested_complex(fan.face_poset, g));
  CHECK(is_isomorphic(result.fan.face_poset.poset(), target.lattice.poset())
            .has_value());
}

TEST_CASE("the irreducible cones of the square cone are the rays and the top") {
  FacePosetFan fan = corpus::square_cone_fan();
  std::vector<int> irr = minimal_building_set(fan.face_poset).members;
  CHECK(irr == cone_ids(fan, {{0}, {1}, {2}, {3}, {0, 1, 2, 3}}));
  SimplicializeResult result = simplicialize(fan, irr);
  CHECK(result.fan.is_simplicial());
}

TEST_CASE("simplicialize rejects bad inputs") {
  FacePosetFan fan = corpus::square_cone_fan();
  CHECK_THROWS_WITH_AS(simplicialize(fan, cone_ids(fan, {{0}, {1}})),
                       doctest::Contains("NotABuildingSet"), Error);

  std::vector<int> g = cone_ids(fan, {{0}, {1}, {2}, {3}, {0, 1, 2, 3}});
  std::vector<int> increasing = g;  // rays before the top violates the order
  CHECK_THROWS_WITH_AS(simplicialize(fan, g, increasing),
                       doctest::Contains("NotNonIncreasing"), Error);
}

TEST_CASE("combinatorial fans without rays") {
  FacePosetFan fan = fan_from_cones(0, {}, {{0, 1}, {1, 2}});
  CHECK_FALSE(fan.has_rays);
  CHECK(fan.cones.size() == 6);
  CHECK(fan.is_simplicial());

  // no-rays fan with explicit faces: the top is treated as non-simplicial
  FacePosetFan square =
      fan_from_cones(0, {}, {{0, 1, 2, 3}}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(square.cones.size() == 10);
  CHECK_FALSE(square.is_simplicial());
  StellarBlowupCheck check = verify_stellar_is_blowup(square, {0, 1, 2, 3});
  CHECK_MESSAGE(check.ok, check.detail);
}

TEST_CASE("fan files round-trip") {
  for (const FacePosetFan& fan : corpus::fan_corpus()) {
    FacePosetFan reloaded = read_fan_json(write_fan_json(fan));
    CHECK(same_fan(fan, reloaded));
  }
  // subdivision results round-trip through the compacting writer
  FacePosetFan sd = stellar_subdivision(corpus::square_cone_fan(), {0, 1, 2, 3});
  FacePosetFan reloaded = read_fan_json(write_fan_json(sd));
  CHECK(same_fan(sd, reloaded));
  CHECK(is_isomorphic(sd.face_poset.poset(), reloaded.face_poset.poset())
            .has_value());
}
