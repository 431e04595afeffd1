#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "complexes/complexes.hpp"

using namespace valkit;

static Fan plane_three_cones() {
  // rays (1,0),(0,1),(-1,-1); three maximal cones covering the plane
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}, {-1, -1}};
  f.facets = {{0, 1}, {1, 2}, {0, 2}};
  return f;
}

TEST_CASE("fan validation accepts the standard complete examples") {
  CHECK_NOTHROW(plane_three_cones().validate());
  Fan line;
  line.dim = 1;
  line.rays = {{1}, {-1}};
  line.facets = {{0}, {1}};
  CHECK_NOTHROW(line.validate());
  Fan quad;  // product of two lines
  quad.dim = 2;
  quad.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  quad.facets = {{0, 1}, {1, 2}, {2, 3}, {0, 3}};
  CHECK_NOTHROW(quad.validate());
}

TEST_CASE("fan validation rejects broken inputs") {
  Fan f = plane_three_cones();
  f.facets.pop_back();  // missing cone: wall in only one facet
  CHECK_THROWS_AS(f.validate(), Error);

  Fan g = plane_three_cones();
  g.rays[2] = {-2, -2};  // not primitive
  CHECK_THROWS_AS(g.validate(), Error);

  Fan h;
  h.dim = 2;
  h.rays = {{1, 0}, {0, 1}, {1, 2}};
  h.facets = {{0, 1}, {0, 2}, {1, 2}};  // (1,2) interior to cone(e1,e2): overlap
  CHECK_THROWS_AS(h.validate(), Error);

  Fan nu;
  nu.dim = 2;
  nu.rays = {{1, 0}, {1, 2}, {-1, 0}, {0, -1}, {-1, 2}};
  nu.facets = {{0, 1}, {1, 4}, {2, 4}, {2, 3}, {0, 3}};  // det 2 cones
  CHECK_THROWS_AS(nu.validate(), Error);
}

TEST_CASE("orthant fans: boundary walls are allowed, support is checked") {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {1, 1}, {0, 1}};
  f.facets = {{0, 1}, {1, 2}};
  CHECK_NOTHROW(f.validate(FanSupport::orthant));
  CHECK_THROWS_AS(f.validate(FanSupport::complete), Error);
  Fan half;  // subdividing cone does not stay inside the orthant
  half.dim = 2;
  half.rays = {{1, 0}, {0, 1}, {-1, 0}};
  half.facets = {{0, 1}, {1, 2}};
  CHECK_THROWS_AS(half.validate(FanSupport::orthant), Error);
}

TEST_CASE("dual basis of a maximal cone pairs to the identity") {
  Fan f = plane_three_cones();
  CHECK(f.facet_dual(0) == std::vector<Expo>{{1, 0}, {0, 1}});
  CHECK(f.facet_dual(1) == std::vector<Expo>{{-1, 1}, {-1, 0}});
  CHECK(f.facet_dual(2) == std::vector<Expo>{{1, -1}, {0, -1}});
}

TEST_CASE("complex from a fan lists every face once") {
  auto c = ConeComplex::from_fan(plane_three_cones());
  CHECK(c.faces().size() == 7);  // origin, 3 rays, 3 two-dimensional cones
  CHECK(c.has_face("O"));
  CHECK(c.has_face("r0+r1"));
  CHECK(c.is_subface("r1", "r1+r2"));
  CHECK(c.is_subface("O", "r0+r2"));
  CHECK_FALSE(c.is_subface("r0+r1", "r1"));
  CHECK(c.facet_face_id(0) == "r0+r1");
  // origin under all 6 other faces, each of the 3 rays under 2 cones
  CHECK(c.proper_pairs().size() == 12);
}

TEST_CASE("orthant complex has one face per coordinate subset") {
  auto c = ConeComplex::orthant({"x", "y", "z"});
  CHECK(c.faces().size() == 8);
  CHECK(c.has_face("x+z"));
  CHECK(c.face("x+y+z").rays == std::vector<std::string>{"x", "y", "z"});
  CHECK(c.is_subface("x", "x+z"));
  CHECK_FALSE(c.is_subface("y", "x+z"));
}

TEST_CASE("dual complex with no declared strata is rays plus origin") {
  auto c = ConeComplex::dual_complex({"a", "b", "c"}, {});
  CHECK(c.faces().size() == 4);
  CHECK(c.has_face("a"));
  CHECK(c.face("a").rays == std::vector<std::string>{"a"});
}

TEST_CASE("dual complex with one pairwise intersection") {
  auto c = ConeComplex::dual_complex({"a", "b"}, {{{"a", "b"}, "p", {}}});
  CHECK(c.faces().size() == 4);  // origin, two rays, one two-dimensional face
  CHECK(c.has_face("p|a+b"));
  CHECK(c.is_subface("a", "p|a+b"));
}

TEST_CASE("parallel faces coexist and must be disambiguated above") {
  // two components meeting in two disjoint strata p and q
  std::vector<Stratum> strata = {{{"a", "b"}, "p", {}}, {{"a", "b"}, "q", {}}};
  auto c = ConeComplex::dual_complex({"a", "b"}, strata);
  CHECK(c.faces().size() == 5);
  CHECK(c.has_face("p|a+b"));
  CHECK(c.has_face("q|a+b"));

  // a triple stratum above them cannot attach without naming its boundary
  std::vector<Stratum> bad = strata;
  bad.push_back({{"a", "b", "c"}, "t", {}});
  CHECK_THROWS_AS(ConeComplex::dual_complex({"a", "b", "c"}, bad), Error);

  std::vector<Stratum> good = strata;
  good.push_back({{"a", "c"}, "u", {}});
  good.push_back({{"b", "c"}, "v", {}});
  good.push_back({{"a", "b", "c"}, "t", {{"a+b", "q"}}});
  auto d = ConeComplex::dual_complex({"a", "b", "c"}, good);
  CHECK(d.is_subface("q|a+b", "t|a+b+c"));
  CHECK_FALSE(d.is_subface("p|a+b", "t|a+b+c"));
}

TEST_CASE("dual complex rejects undeclared boundary strata") {
  // the triple stratum needs all three pairwise strata declared
  std::vector<Stratum> strata = {{{"a", "b"}, "p", {}},
                                 {{"a", "b", "c"}, "t", {}}};
  CHECK_THROWS_AS(ConeComplex::dual_complex({"a", "b", "c"}, strata), Error);
}

TEST_CASE("starring a two-dimensional cone at an interior ray") {
  auto c = ConeComplex::from_fan(plane_three_cones());
  auto d = stellar_subdivide(c, {1, 1});
  REQUIRE(d.fan());
  CHECK(d.fan()->facets.size() == 4);
  CHECK(d.fan()->rays.size() == 4);
  CHECK(d.has_face("r0+r3"));  // new ray r3 = (1,1)
  CHECK(d.has_face("r1+r3"));
  CHECK_FALSE(d.has_face("r0+r1"));  // the starred cone is gone

  // starring at an existing ray is the identity
  auto e = stellar_subdivide(c, {0, 1});
  CHECK(e.faces().size() == c.faces().size());

  CHECK_THROWS_AS(stellar_subdivide(c, {2, 2}), Error);  // not primitive
  // (2,1) = 2*(1,0) + (0,1) inside cone(r0,r1): starring it is not unimodular
  CHECK_THROWS_AS(stellar_subdivide(c, {2, 1}), Error);
}

TEST_CASE("subdividing the positive quadrant") {
  Fan f;
  f.dim = 2;
  f.rays = {{1, 0}, {0, 1}};
  f.facets = {{0, 1}};
  auto c = ConeComplex::from_fan(f, FanSupport::orthant);
  auto d = stellar_subdivide(c, {1, 1});
  CHECK(d.fan()->facets == std::vector<std::vector<int>>{{0, 2}, {1, 2}});
  CHECK(d.fan_support() == FanSupport::orthant);
}
