#pragma once

#include <cassert>
#include <optional>

#include "complexes/tangent.hpp"
#include "series/series.hpp"

namespace valkit {

// Value of the weight system W on a nonzero series: the lex-least weighted
// exponent sum over the support. The series variables must be exactly the
// rays of W's face, in order.
LexTuple qm_eval_series(const WeightMatrix& w, const ConeComplex& c,
                        const MonomialSeries& f);

// Extension to quotients: value(num) - value(den). A zero numerator means
// the function is 0 and its value is +infinity, reported as nullopt so no
// caller can accidentally do arithmetic with it.
std::optional<LexTuple> qm_eval_rational(const WeightMatrix& w,
                                         const ConeComplex& c,
                                         const RationalFunctionRep& f);

// Conewise description of min(<., e> : e in support): one antichain per
// face. A quotient contributes a second family to subtract.
struct TropicalFunction {
  AntichainFamily pos;
  std::optional<AntichainFamily> neg;
};

// Restrict the support of f to every face of the complex. The variables of
// f must be the components of the complex, in order. The resulting family
// is coherent by construction.
TropicalFunction tropicalize(const MonomialSeries& f, const ConeComplex& c);
TropicalFunction tropicalize(const RationalFunctionRep& f,
                             const ConeComplex& c);

// Value of the tropical function at a point of a face's cone (nonnegative
// coordinates over the face's rays).
Rat trop_eval(const TropicalFunction& t, const ConeComplex& c,
              const std::string& face_id, const std::vector<Rat>& x);

// Iterated one-sided directional derivative of the tropical function along
// the tangent point P = (x; w_1, ..., w_{k-1}): the lex-least vector of
// linear forms (<x,e>, <w_1,e>, ...) over the face's antichain. P must lie
// in the iterated tangent cone.
LexTuple directional_derivative(const TropicalFunction& t,
                                const ConeComplex& c, const TangentPoint& p);

// Value of the valuation attached to the tangent point P on a quotient,
// computed through the tropical side (derivative of the tropicalization).
// The combinatorial route is qm_eval_rational over duality_to_weights(P);
// both routes agree and tests hold them to that.
std::optional<LexTuple> analytic_eval(const TangentPoint& p,
                                      const ConeComplex& c,
                                      const RationalFunctionRep& f);

// A full flag of coordinate subspaces, given by the order in which the
// variables are eliminated.
struct FlagSpec {
  std::vector<std::string> order;
};

// Iterated order of vanishing along the flag: take the least exponent of
// the first variable, keep only terms achieving it, divide it out, drop
// the variable, recurse. Integer entries, rank = number of variables.
LexTuple flag_eval(const FlagSpec& spec, const MonomialSeries& f);

// The weight system whose evaluation reproduces the flag valuation: the
// j-th variable of the order gets the j-th standard basis column.
WeightMatrix flag_weights(const FlagSpec& spec, const ConeComplex& c);

// Does flag_eval agree with evaluating those weights combinatorially?
// (It must; the acceptance suite also checks that perturbed weights break
// the agreement, so the test has teeth.)
bool flag_matches_duality(const FlagSpec& spec, const MonomialSeries& f);

}  // namespace valkit
