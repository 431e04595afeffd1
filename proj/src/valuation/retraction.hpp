#pragma once

#include <map>

#include "complexes/tangent.hpp"
#include "series/series.hpp"

namespace valkit {

// Reconstruct the unique weight system on `target` whose value on each
// component matches the given map. The face is determined by the strictly
// lex-positive components; every component needs a lex-nonnegative value of
// the same rank. Throws Error{no_face} when no face sits on exactly that
// component set, and Error{validation} when parallel faces make the choice
// ambiguous.
WeightMatrix retract(const std::map<std::string, LexTuple>& values,
                     const ConeComplex& target);

// Push a weight system on a face of a subdivision down to the subdivided
// complex: evaluate it on the local equation of every coarse ray (zero off
// the chart) and retract. The chart is the first coarse maximal cone
// containing the fine face.
WeightMatrix retract_toric(const WeightMatrix& fine,
                           const ConeComplex& fine_complex,
                           const ConeComplex& coarse);

// Rewrite a polynomial in the ambient orthant coordinates as a series in
// the chart of a face of a subdivision of that orthant: the monomial
// exponent m becomes (<m, n_j>)_j over the face's ray vectors n_j. Distinct
// monomials may collide on lower faces; coefficients add exactly.
MonomialSeries pullback_to_face(const MonomialSeries& f,
                                const ConeComplex& fine,
                                const std::string& face_id);

}  // namespace valkit
