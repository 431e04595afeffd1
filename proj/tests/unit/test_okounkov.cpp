#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "okounkov/okounkov.hpp"

using namespace valkit;

static std::vector<Rat> P(long long x, long long y) { return {Rat(x), Rat(y)}; }

static ConvexBody unit_square() {
  return make_body(2, {P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
}

static ConvexBody unit_simplex() {
  return make_body(2, {P(0, 0), P(1, 0), P(0, 1)});
}

static WeightMatrix flag2() {
  WeightMatrix w;
  w.face = "r0+r1";
  w.cols = {LexTuple({Rat(1), Rat(0)}), LexTuple({Rat(0), Rat(1)})};
  return w;
}

TEST_CASE("hulls come out in canonical counterclockwise order") {
  ConvexBody sq = unit_square();
  CHECK(sq.hull == std::vector<std::vector<Rat>>{P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
  CHECK(sq.full_dim);

  ConvexBody tri = unit_simplex();
  CHECK(tri.hull == std::vector<std::vector<Rat>>{P(0, 0), P(1, 0), P(0, 1)});

  // interior and duplicate points do not disturb the hull
  ConvexBody sq2 = make_body(
      2, {P(0, 0), P(1, 0), P(1, 1), P(0, 1), {Rat(1, 2), Rat(1, 2)}, P(1, 1)});
  CHECK(same_hull(sq, sq2));
  CHECK_FALSE(same_hull(sq, tri));

  ConvexBody flat = make_body(2, {P(0, 0), P(1, 1), P(2, 2)});
  CHECK(flat.hull == std::vector<std::vector<Rat>>{P(0, 0), P(2, 2)});
  CHECK_FALSE(flat.full_dim);

  ConvexBody dot = make_body(2, {P(3, 4)});
  CHECK(dot.hull.size() == 1);

  ConvexBody seg = make_body(1, {{Rat(5)}, {Rat(-1)}, {Rat(2)}});
  CHECK(seg.hull == std::vector<std::vector<Rat>>{{Rat(-1)}, {Rat(5)}});
  CHECK(seg.full_dim);

  CHECK_THROWS_AS(make_body(3, {{Rat(0), Rat(0), Rat(0)}}), Error);
  CHECK_THROWS_AS(make_body(2, {}), Error);
}

TEST_CASE("point-to-body and Hausdorff distances are exact") {
  ConvexBody sq = unit_square();
  CHECK(squared_dist_point_body(P(0, 0), sq) == Rat(0));
  CHECK(squared_dist_point_body({Rat(1, 2), Rat(1, 2)}, sq) == Rat(0));
  CHECK(squared_dist_point_body(P(2, 2), sq) == Rat(2));
  CHECK(squared_dist_point_body(P(-3, 0), sq) == Rat(9));

  // distance to a segment body: (2,2) against the segment (1,0)-(0,1)
  ConvexBody seg = make_body(2, {P(1, 0), P(0, 1)});
  CHECK(squared_dist_point_body(P(2, 2), seg) == Rat(9, 2));

  ConvexBody big = make_body(2, {P(0, 0), P(2, 0), P(2, 2), P(0, 2)});
  CHECK(squared_hausdorff(sq, big) == Rat(2));
  CHECK(squared_hausdorff(big, sq) == Rat(2));
  CHECK(squared_hausdorff(sq, sq) == Rat(0));
  CHECK(squared_hausdorff(sq, unit_simplex()) == Rat(1, 2));
}

TEST_CASE("square-root brackets are tight and correctly ordered") {
  DistanceBracket b = sqrt_bracket(Rat(2), Rat(1, 10000000));
  CHECK(b.sq == Rat(2));
  CHECK(b.lo * b.lo <= Rat(2));
  CHECK(b.hi * b.hi >= Rat(2));
  CHECK(b.hi - b.lo <= Rat(1, 10000000));
  CHECK(b.lo >= Rat(14142135, 10000000));
  CHECK(b.hi <= Rat(14142136, 10000000));

  DistanceBracket z = sqrt_bracket(Rat(0), Rat(1, 1000));
  CHECK(z.lo == Rat(0));
  CHECK(z.hi == Rat(0));

  // metric sanity on a triple, within bracket widths
  ConvexBody a = unit_square(), c = unit_simplex();
  ConvexBody m = make_body(2, {P(0, 0), P(1, 0), P(1, 1)});
  DistanceBracket ac = hausdorff_distance(a, c);
  DistanceBracket am = hausdorff_distance(a, m);
  DistanceBracket mc = hausdorff_distance(m, c);
  CHECK(ac.lo <= am.hi + mc.hi);
  CHECK(hausdorff_distance(c, a).sq == ac.sq);
}

TEST_CASE("polytope levels enumerate dilated lattice points") {
  GradedSections sq = GradedSections::from_polytope(
      2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(sq.level(1).size() == 4);
  CHECK(sq.level(2).size() == 9);
  CHECK(sq.level(3).size() == 16);

  GradedSections tri = GradedSections::from_polytope(2, {{0, 0}, {1, 0}, {0, 1}});
  CHECK(tri.level(1).size() == 3);
  CHECK(tri.level(2).size() == 6);
  std::vector<Expo> l2 = tri.level(2);
  CHECK(std::find(l2.begin(), l2.end(), Expo{1, 1}) != l2.end());
  CHECK(std::find(l2.begin(), l2.end(), Expo{2, 1}) == l2.end());

  GradedSections seg = GradedSections::from_polytope(1, {{0}, {2}});
  CHECK(seg.level(3).size() == 7);

  GradedSections expl = GradedSections::from_graded(
      2, {{1, {{0, 0}, {2, 1}}}, {2, {{1, 1}}}});
  CHECK(expl.level(2) == std::vector<Expo>{{1, 1}});
  CHECK_THROWS_AS(expl.level(3), Error);

  CHECK_THROWS_AS(GradedSections::from_polytope(3, {{0, 0, 0}}), Error);
  CHECK_THROWS_AS(GradedSections::from_graded(2, {{0, {{0, 0}}}}), Error);
}

TEST_CASE("toric baseline: the sampled body is the polytope at every level") {
  GradedSections sq = GradedSections::from_polytope(
      2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  GradedSections tri =
      GradedSections::from_polytope(2, {{0, 0}, {1, 0}, {0, 1}});
  ConvexBody square = unit_square(), simplex = unit_simplex();
  for (long long n = 1; n <= 8; ++n) {
    CHECK(same_hull(okounkov_sample(flag2(), sq, n), square));
    CHECK(same_hull(okounkov_sample(flag2(), tri, n), simplex));
  }

  // a single monomial in degree one gives a point body
  GradedSections one = GradedSections::from_graded(2, {{1, {{3, 5}}}});
  ConvexBody dot = okounkov_sample(flag2(), one, 1);
  CHECK(dot.hull == std::vector<std::vector<Rat>>{P(3, 5)});

  // positive diagonal weights rescale the body coordinatewise
  WeightMatrix scaled;
  scaled.face = "r0+r1";
  scaled.cols = {LexTuple({Rat(2), Rat(0)}), LexTuple({Rat(0), Rat(3)})};
  ConvexBody st = okounkov_sample(scaled, sq, 4);
  CHECK(st.hull ==
        std::vector<std::vector<Rat>>{P(0, 0), P(2, 0), P(2, 3), P(0, 3)});

  // rank and column-count mismatches are rejected
  WeightMatrix low;
  low.face = "r0+r1";
  low.cols = {LexTuple({Rat(1)}), LexTuple({Rat(1)})};
  CHECK_THROWS_AS(okounkov_sample(low, sq, 2), Error);
  WeightMatrix wide = flag2();
  wide.cols.push_back(LexTuple({Rat(1), Rat(1)}));
  CHECK_THROWS_AS(okounkov_sample(wide, sq, 2), Error);
  CHECK_THROWS_AS(okounkov_sample(flag2(), sq, 0), Error);
}

TEST_CASE("weak distance: paired sampling, exact zero on equal bodies") {
  ConvexBody sq = unit_square();
  std::vector<Bump> bumps = {{{Rat(1, 2), Rat(1, 2)}, Rat(1, 2)},
                             {{Rat(2), Rat(2)}, Rat(1)}};
  WeakDistanceReport same = weak_distance(sq, unit_square(), bumps, 5000, 99);
  REQUIRE(same.stats.size() == 2);
  CHECK(same.stats[0].estimate == 0.0);
  CHECK(same.stats[1].estimate == 0.0);
  CHECK(same.seed == 99);

  // a far translate with a bump sitting on it: clearly nonzero statistic
  ConvexBody far = make_body(2, {P(2, 2), P(3, 2), P(3, 3), P(2, 3)});
  std::vector<Bump> onfar = {{{Rat(5, 2), Rat(5, 2)}, Rat(1, 2)}};
  WeakDistanceReport apart = weak_distance(sq, far, onfar, 20000, 7);
  CHECK(apart.stats[0].estimate > 3 * apart.stats[0].std_error);
  CHECK(apart.stats[0].estimate > 0.05);

  // deterministic under the seed
  WeakDistanceReport again = weak_distance(sq, far, onfar, 20000, 7);
  CHECK(again.stats[0].estimate == apart.stats[0].estimate);
  CHECK(again.stats[0].std_error == apart.stats[0].std_error);

  // flat in a shared coordinate: no box to sample
  ConvexBody flat1 = make_body(2, {P(0, 0), P(1, 0)});
  ConvexBody flat2 = make_body(2, {P(2, 0), P(3, 0)});
  CHECK_THROWS_AS(weak_distance(flat1, flat2, bumps, 100, 1), Error);
}

TEST_CASE("variation along a constant path is identically zero") {
  ConeComplex c = ConeComplex::orthant({"a", "b"});
  TangentPoint p;
  p.face = "a+b";
  p.x = {Rat(1), Rat(2)};
  p.w = {{Rat(0), Rat(1)}};
  GradedSections sq = GradedSections::from_polytope(
      2, {{0, 0}, {1, 0}, {1, 1}, {0, 1}});

  VariationTable t = variation_experiment({p, p, p}, c, sq, 3);
  REQUIRE(t.rows.size() == 3);
  for (const auto& row : t.rows) {
    CHECK(row.to_prev.sq == Rat(0));
    CHECK(row.to_limit.sq == Rat(0));
  }

  TangentPoint higher = p;
  higher.w.push_back({Rat(1), Rat(0)});
  CHECK_THROWS_AS(variation_experiment({p, higher}, c, sq, 2), Error);
}

TEST_CASE("planar figures render deterministically") {
  ConvexBody sq = unit_square();
  std::string svg = render_svg(sq);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("polygon") != std::string::npos);
  CHECK(svg == render_svg(sq));
  CHECK_THROWS_AS(render_svg(make_body(1, {{Rat(0)}, {Rat(1)}})), Error);
}