#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>

#include "complexes/complexes.hpp"
#include "core/rng.hpp"
#include "series/series.hpp"

namespace valkit {

// A global candidate realizing a coherent antichain family on a complete
// unimodular fan: a sum over the maximal cones of
//   lambda_sigma * num_sigma / Q_sigma^ell,
// where num_sigma is the sum of the characters at the family's exponents
// written in sigma's chart basis and Q_sigma is a sum of characters with
// unit coefficients whose exponent set contains 0. All characters are
// stored in the common lattice, so the candidate can be expanded anywhere.
struct ToricCandidate {
  Fan fan;
  long long ell = 1;
  std::map<std::string, Rat> lambda;  // facet face id -> coefficient

  struct FacetData {
    std::string id;
    std::vector<Expo> dual;      // chart basis m_j of the cone's chart
    std::vector<Expo> num_exps;  // lattice exponents of the numerator terms
    std::vector<Expo> den_exps;  // lattice exponents of Q_sigma (0 included)
  };
  std::vector<FacetData> data;  // aligned with fan.facets
};

// Denominator shape. `simplex` is the textbook choice Q = 1 + sum of the
// chart coordinates; it only yields a function regular on every stratum
// when each pair of maximal cones is close enough (the shifted denominator
// must keep a constant term in every chart). `adapted` builds Q from the
// lattice points of the nef polytope cut out by G - <u_sigma^G, .> for a
// strictly convex G (value 1 on every ray), which is regular on every
// stratum on any fan carrying such a G. `automatic` prechecks the simplex
// shape at every cone pair and falls back to adapted only when needed.
enum class DenStyle { automatic, simplex, adapted };

// Build the candidate. The complex must carry a complete fan; the family
// must be coherent on it and cover every face; lambda needs one nonzero
// entry per maximal cone; ell >= 1.
ToricCandidate toric_construct(const ConeComplex& complex,
                               const AntichainFamily& family, long long ell,
                               std::map<std::string, Rat> lambda,
                               DenStyle style = DenStyle::automatic);

// Reuse of the expensive truncated inverse powers of the shifted
// denominators. Entries are independent of the family and the coefficients,
// so one cache serves every candidate on the same fan; the denominator
// support is part of the key, so mixed denominator styles cannot alias.
struct ExpansionCache {
  std::map<std::tuple<std::size_t, std::size_t, long long, Expo,
                      std::vector<Expo>>,
           MonomialSeries>
      inv_pows;
};

// Power-series expansion of the candidate in the chart of maximal cone
// `facet_idx`, truncated to [0, box]. Throws Error{not_a_unit} when a
// shifted denominator has vanishing constant term in this chart (the
// factorization obstruction, reported with both cone ids) and
// Error{non_regular} when a numerator term needs a negative shift (ell too
// small).
MonomialSeries local_expand(const ToricCandidate& cand, std::size_t facet_idx,
                            const Expo& box, ExpansionCache* cache = nullptr);

struct FaceCheck {
  std::string face;
  std::vector<Expo> computed;  // empty when the expansion failed
  std::vector<Expo> target;
  bool parents_agree = true;  // all enclosing charts project to the same set
  bool equal = false;
};

struct CrossSample {
  std::string face;
  std::vector<std::vector<Rat>> cols;  // drawn weight columns
  std::vector<Rat> predicted;          // family value
  std::vector<Rat> symbolic;           // value of the candidate
  bool ok = false;
};

struct VerificationReport {
  bool pass = false;
  long long ell = 0;
  std::map<std::string, Rat> lambda;
  std::int64_t box_side = 0;
  std::vector<FaceCheck> faces;
  int samples_per_face = 0;
  // with positive coefficients no cancellation can occur anywhere, so the
  // sampled values are exact; otherwise they only bound the value below
  bool cross_exact = false;
  std::vector<CrossSample> cross_failures;  // capped
  std::uint64_t seed = 0;
  std::string note;
};

// Check the candidate against the family: expand every chart and compare
// minimal supports, project facet results onto every lower face from every
// enclosing chart, and cross-check values on random lex-nonnegative weight
// systems per face against the family's prediction.
VerificationReport verify(const ToricCandidate& cand,
                          const ConeComplex& complex,
                          const AntichainFamily& family, std::uint64_t seed,
                          int samples_per_face = 32,
                          ExpansionCache* cache = nullptr);

struct ApproxOutcome {
  bool pass = false;
  bool inconclusive = false;  // every escalation attempt failed
  int attempts = 0;
  ToricCandidate candidate;  // last attempt
  VerificationReport report;
};

// Construct-and-verify with parameter escalation: start at
// ell0 = (#maximal cones) * (1 + largest family coordinate) with the first
// primes as coefficients, then double ell and redraw coefficients from
// wider ranges. Overrides pin ell and/or lambda; the remaining knob still
// escalates. Gives up after the fixed schedule and reports inconclusive.
ApproxOutcome toric_approximate(
    const ConeComplex& complex, const AntichainFamily& family,
    std::optional<long long> ell_override,
    std::optional<std::map<std::string, Rat>> lambda_override,
    std::uint64_t seed, int samples_per_face = 32,
    ExpansionCache* cache = nullptr);

// A conewise integral linear function on a complete simplicial fan, one
// functional per maximal cone, agreeing on shared rays.
struct PiecewiseLinear {
  std::vector<Expo> facet_functionals;
};

// u = 1 on every ray; strictly convex for the built-in fans.
PiecewiseLinear ones_functional(const Fan& fan);

// True when h bends strictly upward across every wall of the complete fan.
bool is_strictly_convex(const Fan& fan, const PiecewiseLinear& h);

struct ConvexSplit {
  long long ell = 1;
  PiecewiseLinear shifted;    // F + ell * G, convex and nonnegative on rays
  PiecewiseLinear scaled;     // ell * G
  AntichainFamily shifted_family;  // singleton antichains of the shifted part
  AntichainFamily scaled_family;
};

// Write an arbitrary conewise integral linear F as a difference of two
// convex nonnegative ones using a strictly convex G: F = (F + ell G) - ell G
// with the least ell >= 1 that makes every wall slack and every ray value
// nonnegative. Throws when G is not strictly convex or cannot dominate F.
ConvexSplit convex_split(const ConeComplex& complex, const PiecewiseLinear& f,
                         const PiecewiseLinear& g);

// The bundled complete unimodular fans: "p1" (the line), "p2" (the plane in
// three cones), "p1p1" (the four quadrants), "blp2" (the plane in four
// cones after one star). Throws Error{unsupported} for other names.
Fan builtin_fan(const std::string& name);
std::vector<std::string> builtin_fan_names();

}  // namespace valkit
