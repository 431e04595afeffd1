#pragma once

#include <map>
#include <string>
#include <vector>

#include "complexes/complexes.hpp"
#include "core/lex.hpp"

namespace valkit {

// Weight data of a rank-k valuation on a face: one value column per ray.
// Admissible (all columns lex-nonnegative) is what makes the induced
// valuation nonnegative on regular functions.
struct WeightMatrix {
  std::string face;
  std::vector<LexTuple> cols;

  std::size_t rank() const { return cols.empty() ? 1 : cols[0].rank(); }
  void validate(const ConeComplex& c) const;
  bool admissible() const;
};

// An iterated tangent vector on a face: base point x plus k-1 higher
// direction rows, all in the face's ray coordinates. Order k means values
// in R^k.
struct TangentPoint {
  std::string face;
  std::vector<Rat> x;
  std::vector<std::vector<Rat>> w;

  std::size_t order() const { return 1 + w.size(); }
  void validate(const ConeComplex& c) const;
  // column over ray position i: (x_i, w_1_i, ..., w_{k-1}_i)
  LexTuple column(std::size_t i) const;
};

// Membership in the iterated tangent cone of the face's orthant: every
// coordinate column is lex-nonnegative.
bool tangent_membership(const TangentPoint& p, const ConeComplex& c);

// The two sides of the weight/tangent correspondence are transposes of one
// another.
WeightMatrix duality_to_weights(const TangentPoint& p, const ConeComplex& c);
TangentPoint duality_to_tangent(const WeightMatrix& w, const ConeComplex& c);

// Result of locating the germ of the curve x + t w_1 + t^2 w_2 + ... inside
// a subdivision: the unique face whose relative interior the curve enters,
// plus the curve's coordinate columns in that face's chart.
struct SupportingCone {
  std::string face;
  std::vector<LexTuple> coords;  // one per ray of the face, all nonzero
};

// x and w are ambient coordinates of the subdivision's embedded fan.
// Throws Error{domain} when the curve leaves the support.
SupportingCone find_supporting_cone(const ConeComplex& subdivision,
                                    const std::vector<Rat>& x,
                                    const std::vector<std::vector<Rat>>& w);

// An open box in the stacked coordinates of a face: x over the rays, then
// each higher row. Bounds are strict on both sides.
struct CoordBox {
  std::vector<Rat> lo, hi;
};

// Does the curve land in one of the declared boxes? A box on face f counts
// when the curve lies in f's cone (off-f coordinates vanish identically)
// and its stacked coordinates are strictly inside the box.
bool sigma_open_contains(const ConeComplex& subdivision,
                         const std::map<std::string, std::vector<CoordBox>>& opens,
                         const std::vector<Rat>& x,
                         const std::vector<std::vector<Rat>>& w);

}  // namespace valkit
