#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "complexes/tangent.hpp"

namespace valkit {

// Graded monomial section data: either the dilations of a lattice polytope
// (degree n carries nP intersected with the lattice) or an explicit finite
// exponent set per degree. Degrees start at 1 and every level is non-empty.
struct GradedSections {
  int dim = 0;
  std::vector<Expo> polytope;  // generating lattice points (polytope mode)
  std::map<long long, std::vector<Expo>> graded;  // explicit mode

  // polytope mode needs hull arithmetic, which is implemented up to
  // dimension 2; generating points must be non-empty lattice points
  static GradedSections from_polytope(int dim, std::vector<Expo> points);
  static GradedSections from_graded(int dim,
                                    std::map<long long, std::vector<Expo>> h);

  // the exponent set of degree n (n >= 1); exact lattice enumeration in
  // polytope mode, lookup in explicit mode
  std::vector<Expo> level(long long n) const;
};

// A bounded convex body given by finitely many rational points. The hull
// is derived on construction: dimension 1 keeps the interval endpoints,
// dimension 2 runs the monotone chain and stores the vertices
// counterclockwise starting at the lexicographically least one, so equal
// bodies have identical hull vectors.
struct ConvexBody {
  int dim = 0;
  std::vector<std::vector<Rat>> points;  // generating set, deduplicated
  std::vector<std::vector<Rat>> hull;    // extreme points, canonical order
  bool full_dim = false;  // affine span has the ambient dimension
};

ConvexBody make_body(int dim, std::vector<std::vector<Rat>> points);
bool same_hull(const ConvexBody& a, const ConvexBody& b);

// 0 when the point lies in the body, else the squared Euclidean distance
// to the nearest boundary point; exact.
Rat squared_dist_point_body(const std::vector<Rat>& p, const ConvexBody& b);

// Exact squared Hausdorff distance between two bodies of equal dimension.
Rat squared_hausdorff(const ConvexBody& a, const ConvexBody& b);

// sq is exact; [lo, hi] encloses its square root with hi - lo <= the
// requested width, found by rational bisection.
struct DistanceBracket {
  Rat sq;
  Rat lo, hi;
};

DistanceBracket sqrt_bracket(const Rat& sq, const Rat& width);
DistanceBracket hausdorff_distance(const ConvexBody& a, const ConvexBody& b,
                                   const Rat& width = Rat(1, 10000000));

// Normalized value points of the graded levels under the weight system:
// hull of { (sum_i m_i col_i) / n : m in level n, 1 <= n <= n_max }. The
// weight rank and the number of columns must both equal the section
// dimension, so the body lives in R^dim.
ConvexBody okounkov_sample(const WeightMatrix& w,
                           const GradedSections& sections, long long n_max);
// same through the tangent-point side of the duality
ConvexBody okounkov_sample(const TangentPoint& p, const ConeComplex& c,
                           const GradedSections& sections, long long n_max);

// A smooth bump supported on the open ball of the given radius: the
// classical mollifier profile, value 1 at the center, 0 outside.
struct Bump {
  std::vector<Rat> center;
  Rat radius;
};

struct BumpStat {
  double estimate = 0;   // Monte Carlo |integral over A - integral over B|
  double std_error = 0;  // standard error of the paired estimator
};

struct WeakDistanceReport {
  std::uint64_t seed = 0;
  long long samples = 0;
  std::vector<BumpStat> stats;  // aligned with the bump family
};

// Paired Monte Carlo comparison of the two bodies against a family of test
// functions: every sample point is drawn once from the common bounding box
// and evaluated under both indicators, so identical bodies report exact
// zeros. Deterministic under a fixed seed. Throws Error{domain} when the
// joint bounding box has no volume.
WeakDistanceReport weak_distance(const ConvexBody& a, const ConvexBody& b,
                                 const std::vector<Bump>& bumps,
                                 long long samples, std::uint64_t seed);

// One path step compared against its predecessor and against the final
// body; both distances carry their exact square and a sqrt bracket.
struct VariationRow {
  std::size_t step = 0;
  DistanceBracket to_prev;   // zero at step 0
  DistanceBracket to_limit;  // zero at the last step
};

struct VariationTable {
  std::vector<VariationRow> rows;
};

// Sample a body at every tangent point of the path and tabulate the
// consecutive and to-the-end Hausdorff distances: a continuity probe for
// the body as a function of the point. All points must have one order.
VariationTable variation_experiment(const std::vector<TangentPoint>& path,
                                    const ConeComplex& c,
                                    const GradedSections& sections,
                                    long long n_max,
                                    const Rat& width = Rat(1, 10000000));

// Static figure of a planar body: axes plus the hull polygon.
std::string render_svg(const ConvexBody& body);

}  // namespace valkit
