#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "complexes/complexes.hpp"
#include "complexes/tangent.hpp"
#include "okounkov/okounkov.hpp"
#include "series/series.hpp"
#include "toric/toric.hpp"
#include "valuation/valuation.hpp"

namespace valkit::io {

using Json = nlohmann::json;

// Every document carries {"schema": "v1", "type": ...}. Readers reject any
// other version or type, naming the offending field in the error path.
inline constexpr const char* kSchemaVersion = "v1";

// Parsing and file plumbing. parse_text wraps syntax errors in
// Error{parse}; write_* are atomic (temp file in the same directory, then
// rename). dump_canonical is the one rendering used everywhere: two-space
// indent, keys sorted, trailing newline, rationals as "p" or "p/q" strings.
Json parse_text(const std::string& text, const std::string& source = "input");
Json load_file(const std::string& path);
std::string dump_canonical(const Json& j);
void write_json_file(const std::string& path, const Json& j);
void write_text_file(const std::string& path, const std::string& text);

Json make_doc(const std::string& type);
void expect_doc(const Json& j, const std::string& type,
                const std::string& where);

// Field access with path-carrying errors ("family.entries[2].face").
const Json& field(const Json& j, const std::string& key,
                  const std::string& where);
std::string str_field(const Json& j, const std::string& key,
                      const std::string& where);

// Scalars and flat containers.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& where);
Json lex_to_json(const LexTuple& t);
LexTuple lex_from_json(const Json& j, const std::string& where);
Json expo_to_json(const Expo& e);
Expo expo_from_json(const Json& j, const std::string& where);
Json ratvec_to_json(const std::vector<Rat>& v);
std::vector<Rat> ratvec_from_json(const Json& j, const std::string& where);

// Embedded fans. The document records the intended support ("complete" or
// "orthant") and must declare "unimodular": true; the builder revalidates
// both claims instead of trusting them.
Json fan_to_json(const Fan& fan, FanSupport support);
std::pair<Fan, FanSupport> fan_from_json(const Json& j,
                                         const std::string& where);

// Recipe for a cone complex: an embedded fan, the positive orthant on
// named coordinates, or the dual complex of a component configuration.
// Complexes always persist as their recipe, never as the face poset.
struct ComplexSpec {
  std::string kind;  // "fan" | "orthant" | "dual"
  std::optional<Fan> fan;
  FanSupport support = FanSupport::complete;
  std::vector<std::string> components;
  std::vector<Stratum> strata;

  ConeComplex build() const;
};
Json complex_spec_to_json(const ComplexSpec& s);
ComplexSpec complex_spec_from_json(const Json& j, const std::string& where);

// Series and rational function representatives.
Json series_to_json(const MonomialSeries& f);
MonomialSeries series_from_json(const Json& j, const std::string& where);
Json poly_doc(const MonomialSeries& f);
Json rational_doc(const RationalFunctionRep& f);
// accepts a "poly" document (denominator 1) or a "rational_function" one
RationalFunctionRep rational_from_doc(const Json& j, const std::string& where);

// Antichains, families, tropical forms.
Json antichain_to_json(const Antichain& a);
Antichain antichain_from_json(const Json& j, const std::string& where);
Json family_to_json(const AntichainFamily& fam);
AntichainFamily family_from_json(const Json& j, const std::string& where);
Json family_doc(const AntichainFamily& fam);
Json tropical_doc(const TropicalFunction& t);
TropicalFunction tropical_from_doc(const Json& j, const std::string& where);

// Weight matrices and tangent points. A weights document may carry an
// inline "complex" recipe so evaluation commands are self-contained.
struct WeightsDoc {
  WeightMatrix weights;
  std::optional<ComplexSpec> complex;
};
Json weights_to_json(const WeightMatrix& w);
WeightMatrix weights_from_json(const Json& j, const std::string& where);
Json weights_doc(const WeightMatrix& w,
                 const std::optional<ComplexSpec>& complex = std::nullopt);
WeightsDoc weights_from_custom_doc(const Json& j, const std::string& where);

Json tangent_point_to_json(const TangentPoint& p);
TangentPoint tangent_point_from_json(const Json& j, const std::string& where);
Json tangent_point_doc(const TangentPoint& p);

// Graded sections, convex bodies, bump families, tangent paths.
Json sections_to_json(const GradedSections& s);
GradedSections sections_from_json(const Json& j, const std::string& where);
Json sections_doc(const GradedSections& s);
Json body_doc(const ConvexBody& b);
ConvexBody body_from_doc(const Json& j, const std::string& where);
Json bumps_to_json(const std::vector<Bump>& bumps);
std::vector<Bump> bumps_from_json(const Json& j, const std::string& where);

struct PathDoc {
  ComplexSpec complex;
  GradedSections sections;
  std::vector<TangentPoint> points;
  long long n_max = 1;
};
Json path_to_json(const PathDoc& p);
PathDoc path_from_doc(const Json& j, const std::string& where);

// Result documents.
Json value_doc(const std::optional<LexTuple>& v);  // infinite when empty
Json bracket_to_json(const DistanceBracket& b);
Json verification_to_json(const VerificationReport& r);
Json approx_doc(const ApproxOutcome& o);
Json weak_report_to_json(const WeakDistanceReport& r);
// CSV with header step,to_prev_lo,to_prev_hi,to_limit_lo,to_limit_hi;
// bracket endpoints are the one place floats appear, labelled as such.
std::string variation_csv(const VariationTable& t);

}  // namespace valkit::io
