#include "io/jsonio.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "core/error.hpp"

namespace valkit::io {

namespace {

std::string at(const std::string& where, const std::string& key) {
  return where.empty() ? key : where + "." + key;
}

std::string idx(const std::string& where, std::size_t i) {
  return where + "[" + std::to_string(i) + "]";
}

const Json& expect_array(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(ErrCode::parse, "expected an array", where);
  return j;
}

long long int_from_json(const Json& j, const std::string& where) {
  if (!j.is_number_integer())
    fail(ErrCode::parse, "expected an integer", where);
  return j.get<long long>();
}

std::vector<std::string> strings_from_json(const Json& j,
                                           const std::string& where) {
  expect_array(j, where);
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) fail(ErrCode::parse, "expected a string", idx(where, i));
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

bool bool_field(const Json& j, const std::string& key,
                const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_boolean()) fail(ErrCode::parse, "expected a boolean", at(where, key));
  return v.get<bool>();
}

}  // namespace

Json parse_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrCode::parse, e.what(), source);
  }
}

Json load_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrCode::parse, "cannot read file", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_text(buf.str(), path);
}

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

void write_text_file(const std::string& path, const std::string& text) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << text;
    if (!out.good()) fail(ErrCode::domain, "cannot write file", tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    fail(ErrCode::domain, "cannot replace file", path);
  }
}

void write_json_file(const std::string& path, const Json& j) {
  write_text_file(path, dump_canonical(j));
}

Json make_doc(const std::string& type) {
  Json j;
  j["schema"] = kSchemaVersion;
  j["type"] = type;
  return j;
}

void expect_doc(const Json& j, const std::string& type,
                const std::string& where) {
  if (!j.is_object()) fail(ErrCode::parse, "expected a document object", where);
  std::string v = str_field(j, "schema", where);
  if (v != kSchemaVersion)
    fail(ErrCode::parse,
         "unsupported schema version '" + v + "' (this build reads '" +
             kSchemaVersion + "')",
         at(where, "schema"));
  std::string t = str_field(j, "type", where);
  if (t != type)
    fail(ErrCode::parse, "expected a '" + type + "' document, found '" + t + "'",
         at(where, "type"));
}

const Json& field(const Json& j, const std::string& key,
                  const std::string& where) {
  if (!j.is_object()) fail(ErrCode::parse, "expected an object", where);
  auto it = j.find(key);
  if (it == j.end())
    fail(ErrCode::parse, "missing field '" + key + "'", where);
  return *it;
}

std::string str_field(const Json& j, const std::string& key,
                      const std::string& where) {
  const Json& v = field(j, key, where);
  if (!v.is_string()) fail(ErrCode::parse, "expected a string", at(where, key));
  return v.get<std::string>();
}

Json rat_to_json(const Rat& r) { return rat_str(r); }

Rat rat_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rat(j.get<long long>());
  if (!j.is_string())
    fail(ErrCode::parse, "expected a rational as 'p' or 'p/q'", where);
  return parse_rat(j.get<std::string>(), where);
}

Json lex_to_json(const LexTuple& t) { return ratvec_to_json(t.v); }

LexTuple lex_from_json(const Json& j, const std::string& where) {
  return LexTuple(ratvec_from_json(j, where));
}

Json expo_to_json(const Expo& e) { return Json(e); }

Expo expo_from_json(const Json& j, const std::string& where) {
  expect_array(j, where);
  Expo e;
  for (std::size_t i = 0; i < j.size(); ++i)
    e.push_back(int_from_json(j[i], idx(where, i)));
  return e;
}

Json ratvec_to_json(const std::vector<Rat>& v) {
  Json out = Json::array();
  for (const Rat& r : v) out.push_back(rat_to_json(r));
  return out;
}

std::vector<Rat> ratvec_from_json(const Json& j, const std::string& where) {
  expect_array(j, where);
  std::vector<Rat> out;
  for (std::size_t i = 0; i < j.size(); ++i)
    out.push_back(rat_from_json(j[i], idx(where, i)));
  return out;
}

namespace {

std::string support_name(FanSupport s) {
  return s == FanSupport::complete ? "complete" : "orthant";
}

FanSupport support_from(const std::string& name, const std::string& where) {
  if (name == "complete") return FanSupport::complete;
  if (name == "orthant") return FanSupport::orthant;
  fail(ErrCode::parse, "support must be 'complete' or 'orthant', found '" +
                           name + "'",
       where);
}

}  // namespace

Json fan_to_json(const Fan& fan, FanSupport support) {
  Json j = make_doc("fan");
  j["dim"] = fan.dim;
  Json rays = Json::array();
  for (const Expo& r : fan.rays) rays.push_back(expo_to_json(r));
  j["rays"] = rays;
  j["facets"] = fan.facets;
  j["support"] = support_name(support);
  j["unimodular"] = true;
  return j;
}

std::pair<Fan, FanSupport> fan_from_json(const Json& j,
                                         const std::string& where) {
  expect_doc(j, "fan", where);
  Fan fan;
  fan.dim = static_cast<int>(
      int_from_json(field(j, "dim", where), at(where, "dim")));
  const Json& rays = expect_array(field(j, "rays", where), at(where, "rays"));
  for (std::size_t i = 0; i < rays.size(); ++i)
    fan.rays.push_back(expo_from_json(rays[i], idx(at(where, "rays"), i)));
  const Json& facets =
      expect_array(field(j, "facets", where), at(where, "facets"));
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const std::string fw = idx(at(where, "facets"), i);
    expect_array(facets[i], fw);
    std::vector<int> facet;
    for (std::size_t k = 0; k < facets[i].size(); ++k)
      facet.push_back(static_cast<int>(int_from_json(facets[i][k], idx(fw, k))));
    fan.facets.push_back(std::move(facet));
  }
  FanSupport support = support_from(str_field(j, "support", where),
                                    at(where, "support"));
  // the flag is a promise the validator then checks; refuse anything else
  if (!bool_field(j, "unimodular", where))
    fail(ErrCode::unsupported, "only unimodular fans are supported",
         at(where, "unimodular"));
  fan.validate(support);
  return {std::move(fan), support};
}

ConeComplex ComplexSpec::build() const {
  if (kind == "fan") return ConeComplex::from_fan(*fan, support);
  if (kind == "orthant") return ConeComplex::orthant(components);
  return ConeComplex::dual_complex(components, strata);
}

Json complex_spec_to_json(const ComplexSpec& s) {
  Json j = make_doc("complex");
  j["kind"] = s.kind;
  if (s.kind == "fan") {
    j["fan"] = fan_to_json(*s.fan, s.support);
  } else {
    j["components"] = s.components;
    if (s.kind == "dual") {
      Json strata = Json::array();
      for (const Stratum& st : s.strata) {
        Json e;
        e["rays"] = st.rays;
        e["label"] = st.label;
        if (!st.faces.empty()) e["faces"] = st.faces;
        strata.push_back(e);
      }
      j["strata"] = strata;
    }
  }
  return j;
}

ComplexSpec complex_spec_from_json(const Json& j, const std::string& where) {
  if (!j.is_object()) fail(ErrCode::parse, "expected a document object", where);
  ComplexSpec s;
  // a bare fan document is accepted as the complex of all its faces
  if (j.contains("type") && j["type"] == "fan") {
    auto [fan, support] = fan_from_json(j, where);
    s.kind = "fan";
    s.fan = std::move(fan);
    s.support = support;
    return s;
  }
  expect_doc(j, "complex", where);
  s.kind = str_field(j, "kind", where);
  if (s.kind == "fan") {
    auto [fan, support] =
        fan_from_json(field(j, "fan", where), at(where, "fan"));
    s.fan = std::move(fan);
    s.support = support;
  } else if (s.kind == "orthant" || s.kind == "dual") {
    s.components = strings_from_json(field(j, "components", where),
                                     at(where, "components"));
    if (s.kind == "dual") {
      const Json& strata =
          expect_array(field(j, "strata", where), at(where, "strata"));
      for (std::size_t i = 0; i < strata.size(); ++i) {
        const std::string sw = idx(at(where, "strata"), i);
        Stratum st;
        st.rays = strings_from_json(field(strata[i], "rays", sw),
                                    at(sw, "rays"));
        st.label = str_field(strata[i], "label", sw);
        if (strata[i].contains("faces")) {
          const Json& f = strata[i]["faces"];
          if (!f.is_object())
            fail(ErrCode::parse, "expected an object", at(sw, "faces"));
          for (auto it = f.begin(); it != f.end(); ++it) {
            if (!it.value().is_string())
              fail(ErrCode::parse, "expected a string",
                   at(at(sw, "faces"), it.key()));
            st.faces[it.key()] = it.value().get<std::string>();
          }
        }
        s.strata.push_back(std::move(st));
      }
    }
  } else {
    fail(ErrCode::parse,
         "kind must be 'fan', 'orthant' or 'dual', found '" + s.kind + "'",
         at(where, "kind"));
  }
  return s;
}

Json series_to_json(const MonomialSeries& f) {
  Json j;
  j["vars"] = f.vars();
  j["laurent"] = f.laurent();
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) {
    Json t;
    t["exp"] = expo_to_json(e);
    t["coeff"] = rat_to_json(c);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

MonomialSeries series_from_json(const Json& j, const std::string& where) {
  std::vector<std::string> vars =
      strings_from_json(field(j, "vars", where), at(where, "vars"));
  bool laurent = bool_field(j, "laurent", where);
  MonomialSeries f(std::move(vars), laurent);
  const Json& terms =
      expect_array(field(j, "terms", where), at(where, "terms"));
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const std::string tw = idx(at(where, "terms"), i);
    Expo e = expo_from_json(field(terms[i], "exp", tw), at(tw, "exp"));
    Rat c = rat_from_json(field(terms[i], "coeff", tw), at(tw, "coeff"));
    f.add_term(e, c);
  }
  return f;
}

Json poly_doc(const MonomialSeries& f) {
  Json j = make_doc("poly");
  j.update(series_to_json(f));
  return j;
}

Json rational_doc(const RationalFunctionRep& f) {
  Json j = make_doc("rational_function");
  j["num"] = series_to_json(f.num);
  j["den"] = series_to_json(f.den);
  return j;
}

RationalFunctionRep rational_from_doc(const Json& j,
                                      const std::string& where) {
  if (!j.is_object()) fail(ErrCode::parse, "expected a document object", where);
  std::string t = str_field(j, "type", where);
  if (t == "poly") {
    expect_doc(j, "poly", where);
    MonomialSeries num = series_from_json(j, where);
    return RationalFunctionRep(num, MonomialSeries::one(num.vars()));
  }
  expect_doc(j, "rational_function", where);
  return RationalFunctionRep(
      series_from_json(field(j, "num", where), at(where, "num")),
      series_from_json(field(j, "den", where), at(where, "den")));
}

Json antichain_to_json(const Antichain& a) {
  Json j;
  j["index"] = a.index_set();
  Json els = Json::array();
  for (const Expo& e : a.elements()) els.push_back(expo_to_json(e));
  j["elements"] = els;
  return j;
}

Antichain antichain_from_json(const Json& j, const std::string& where) {
  std::vector<std::string> index =
      strings_from_json(field(j, "index", where), at(where, "index"));
  const Json& els =
      expect_array(field(j, "elements", where), at(where, "elements"));
  std::vector<Expo> elements;
  for (std::size_t i = 0; i < els.size(); ++i)
    elements.push_back(expo_from_json(els[i], idx(at(where, "elements"), i)));
  return Antichain(std::move(index), std::move(elements));
}

Json family_to_json(const AntichainFamily& fam) {
  Json entries = Json::object();
  for (const auto& [face, a] : fam.entries) entries[face] = antichain_to_json(a);
  Json j;
  j["entries"] = entries;
  return j;
}

AntichainFamily family_from_json(const Json& j, const std::string& where) {
  const Json& entries = field(j, "entries", where);
  if (!entries.is_object())
    fail(ErrCode::parse, "expected an object keyed by face id",
         at(where, "entries"));
  AntichainFamily fam;
  for (auto it = entries.begin(); it != entries.end(); ++it)
    fam.entries.emplace(
        it.key(),
        antichain_from_json(it.value(), at(at(where, "entries"), it.key())));
  return fam;
}

Json family_doc(const AntichainFamily& fam) {
  Json j = make_doc("antichain_family");
  j.update(family_to_json(fam));
  return j;
}

Json tropical_doc(const TropicalFunction& t) {
  Json j = make_doc("tropical_function");
  j["pos"] = family_to_json(t.pos);
  j["neg"] = t.neg ? family_to_json(*t.neg) : Json();
  return j;
}

TropicalFunction tropical_from_doc(const Json& j, const std::string& where) {
  expect_doc(j, "tropical_function", where);
  TropicalFunction t;
  t.pos = family_from_json(field(j, "pos", where), at(where, "pos"));
  const Json& neg = field(j, "neg", where);
  if (!neg.is_null()) t.neg = family_from_json(neg, at(where, "neg"));
  return t;
}

Json weights_to_json(const WeightMatrix& w) {
  Json j;
  j["face"] = w.face;
  Json cols = Json::array();
  for (const LexTuple& c : w.cols) cols.push_back(lex_to_json(c));
  j["cols"] = cols;
  return j;
}

WeightMatrix weights_from_json(const Json& j, const std::string& where) {
  WeightMatrix w;
  w.face = str_field(j, "face", where);
  const Json& cols = expect_array(field(j, "cols", where), at(where, "cols"));
  for (std::size_t i = 0; i < cols.size(); ++i)
    w.cols.push_back(lex_from_json(cols[i], idx(at(where, "cols"), i)));
  return w;
}

Json weights_doc(const WeightMatrix& w,
                 const std::optional<ComplexSpec>& complex) {
  Json j = make_doc("weights");
  j.update(weights_to_json(w));
  if (complex) j["complex"] = complex_spec_to_json(*complex);
  return j;
}

WeightsDoc weights_from_custom_doc(const Json& j, const std::string& where) {
  expect_doc(j, "weights", where);
  WeightsDoc d;
  d.weights = weights_from_json(j, where);
  if (j.contains("complex") && !j["complex"].is_null())
    d.complex = complex_spec_from_json(j["complex"], at(where, "complex"));
  return d;
}

Json tangent_point_to_json(const TangentPoint& p) {
  Json j;
  j["face"] = p.face;
  j["x"] = ratvec_to_json(p.x);
  Json w = Json::array();
  for (const auto& row : p.w) w.push_back(ratvec_to_json(row));
  j["w"] = w;
  return j;
}

TangentPoint tangent_point_from_json(const Json& j, const std::string& where) {
  TangentPoint p;
  p.face = str_field(j, "face", where);
  p.x = ratvec_from_json(field(j, "x", where), at(where, "x"));
  const Json& w = expect_array(field(j, "w", where), at(where, "w"));
  for (std::size_t i = 0; i < w.size(); ++i)
    p.w.push_back(ratvec_from_json(w[i], idx(at(where, "w"), i)));
  return p;
}

Json tangent_point_doc(const TangentPoint& p) {
  Json j = make_doc("tangent_point");
  j.update(tangent_point_to_json(p));
  return j;
}

Json sections_to_json(const GradedSections& s) {
  Json j;
  j["dim"] = s.dim;
  if (!s.polytope.empty()) {
    Json pts = Json::array();
    for (const Expo& e : s.polytope) pts.push_back(expo_to_json(e));
    j["polytope"] = pts;
  } else {
    Json graded = Json::object();
    for (const auto& [n, level] : s.graded) {
      Json pts = Json::array();
      for (const Expo& e : level) pts.push_back(expo_to_json(e));
      graded[std::to_string(n)] = pts;
    }
    j["graded"] = graded;
  }
  return j;
}

GradedSections sections_from_json(const Json& j, const std::string& where) {
  int dim = static_cast<int>(
      int_from_json(field(j, "dim", where), at(where, "dim")));
  if (j.contains("polytope")) {
    const Json& pts = expect_array(j["polytope"], at(where, "polytope"));
    std::vector<Expo> points;
    for (std::size_t i = 0; i < pts.size(); ++i)
      points.push_back(expo_from_json(pts[i], idx(at(where, "polytope"), i)));
    return GradedSections::from_polytope(dim, std::move(points));
  }
  const Json& graded = field(j, "graded", where);
  if (!graded.is_object())
    fail(ErrCode::parse, "expected an object keyed by degree",
         at(where, "graded"));
  std::map<long long, std::vector<Expo>> levels;
  for (auto it = graded.begin(); it != graded.end(); ++it) {
    const std::string lw = at(at(where, "graded"), it.key());
    long long n = 0;
    try {
      n = std::stoll(it.key());
    } catch (const std::exception&) {
      fail(ErrCode::parse, "degree keys must be integers", lw);
    }
    const Json& pts = expect_array(it.value(), lw);
    std::vector<Expo>& level = levels[n];
    for (std::size_t i = 0; i < pts.size(); ++i)
      level.push_back(expo_from_json(pts[i], idx(lw, i)));
  }
  return GradedSections::from_graded(dim, std::move(levels));
}

Json sections_doc(const GradedSections& s) {
  Json j = make_doc("sections");
  j.update(sections_to_json(s));
  return j;
}

Json body_doc(const ConvexBody& b) {
  Json j = make_doc("convex_body");
  j["dim"] = b.dim;
  j["full_dim"] = b.full_dim;
  Json pts = Json::array();
  for (const auto& p : b.points) pts.push_back(ratvec_to_json(p));
  j["points"] = pts;
  Json hull = Json::array();
  for (const auto& p : b.hull) hull.push_back(ratvec_to_json(p));
  j["hull"] = hull;
  return j;
}

ConvexBody body_from_doc(const Json& j, const std::string& where) {
  expect_doc(j, "convex_body", where);
  int dim = static_cast<int>(
      int_from_json(field(j, "dim", where), at(where, "dim")));
  const Json& pts = expect_array(field(j, "points", where), at(where, "points"));
  std::vector<std::vector<Rat>> points;
  for (std::size_t i = 0; i < pts.size(); ++i)
    points.push_back(ratvec_from_json(pts[i], idx(at(where, "points"), i)));
  // the hull is derived data; rebuild instead of trusting the document
  return make_body(dim, std::move(points));
}

Json bumps_to_json(const std::vector<Bump>& bumps) {
  Json out = Json::array();
  for (const Bump& b : bumps) {
    Json e;
    e["center"] = ratvec_to_json(b.center);
    e["radius"] = rat_to_json(b.radius);
    out.push_back(e);
  }
  return out;
}

std::vector<Bump> bumps_from_json(const Json& j, const std::string& where) {
  expect_array(j, where);
  std::vector<Bump> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string bw = idx(where, i);
    Bump b;
    b.center = ratvec_from_json(field(j[i], "center", bw), at(bw, "center"));
    b.radius = rat_from_json(field(j[i], "radius", bw), at(bw, "radius"));
    out.push_back(std::move(b));
  }
  return out;
}

Json path_to_json(const PathDoc& p) {
  Json j = make_doc("tangent_path");
  j["complex"] = complex_spec_to_json(p.complex);
  j["sections"] = sections_to_json(p.sections);
  j["nmax"] = p.n_max;
  Json pts = Json::array();
  for (const TangentPoint& tp : p.points)
    pts.push_back(tangent_point_to_json(tp));
  j["points"] = pts;
  return j;
}

PathDoc path_from_doc(const Json& j, const std::string& where) {
  expect_doc(j, "tangent_path", where);
  PathDoc p;
  p.complex =
      complex_spec_from_json(field(j, "complex", where), at(where, "complex"));
  p.sections =
      sections_from_json(field(j, "sections", where), at(where, "sections"));
  p.n_max = int_from_json(field(j, "nmax", where), at(where, "nmax"));
  const Json& pts = expect_array(field(j, "points", where), at(where, "points"));
  for (std::size_t i = 0; i < pts.size(); ++i)
    p.points.push_back(
        tangent_point_from_json(pts[i], idx(at(where, "points"), i)));
  return p;
}

Json value_doc(const std::optional<LexTuple>& v) {
  Json j = make_doc("value");
  j["finite"] = v.has_value();
  j["value"] = v ? lex_to_json(*v) : Json();
  return j;
}

Json bracket_to_json(const DistanceBracket& b) {
  Json j;
  j["sq"] = rat_to_json(b.sq);
  j["lo"] = rat_to_json(b.lo);
  j["hi"] = rat_to_json(b.hi);
  return j;
}

Json verification_to_json(const VerificationReport& r) {
  Json j;
  j["pass"] = r.pass;
  j["ell"] = r.ell;
  Json lambda = Json::object();
  for (const auto& [face, c] : r.lambda) lambda[face] = rat_to_json(c);
  j["lambda"] = lambda;
  j["box_side"] = r.box_side;
  j["samples_per_face"] = r.samples_per_face;
  j["cross_exact"] = r.cross_exact;
  j["seed"] = r.seed;
  j["note"] = r.note;
  Json faces = Json::array();
  for (const FaceCheck& f : r.faces) {
    Json e;
    e["face"] = f.face;
    Json computed = Json::array();
    for (const Expo& x : f.computed) computed.push_back(expo_to_json(x));
    e["computed"] = computed;
    Json target = Json::array();
    for (const Expo& x : f.target) target.push_back(expo_to_json(x));
    e["target"] = target;
    e["parents_agree"] = f.parents_agree;
    e["equal"] = f.equal;
    faces.push_back(e);
  }
  j["faces"] = faces;
  Json failures = Json::array();
  for (const CrossSample& s : r.cross_failures) {
    Json e;
    e["face"] = s.face;
    Json cols = Json::array();
    for (const auto& c : s.cols) cols.push_back(ratvec_to_json(c));
    e["cols"] = cols;
    e["predicted"] = ratvec_to_json(s.predicted);
    e["symbolic"] = ratvec_to_json(s.symbolic);
    e["ok"] = s.ok;
    failures.push_back(e);
  }
  j["cross_failures"] = failures;
  return j;
}

Json approx_doc(const ApproxOutcome& o) {
  Json j = make_doc("approx_report");
  j["pass"] = o.pass;
  j["inconclusive"] = o.inconclusive;
  j["attempts"] = o.attempts;
  j["ell"] = o.candidate.ell;
  Json lambda = Json::object();
  for (const auto& [face, c] : o.candidate.lambda)
    lambda[face] = rat_to_json(c);
  j["lambda"] = lambda;
  j["report"] = verification_to_json(o.report);
  return j;
}

Json weak_report_to_json(const WeakDistanceReport& r) {
  Json j;
  j["seed"] = r.seed;
  j["samples"] = r.samples;
  Json stats = Json::array();
  for (const BumpStat& s : r.stats) {
    Json e;
    e["estimate"] = s.estimate;
    e["std_error"] = s.std_error;
    stats.push_back(e);
  }
  j["stats"] = stats;
  return j;
}

std::string variation_csv(const VariationTable& t) {
  // the one non-JSON format: bracket endpoints as 12-digit floats, which
  // keeps the table humanly scannable; exact values live in the JSON docs
  std::ostringstream out;
  out << "step,to_prev_lo,to_prev_hi,to_limit_lo,to_limit_hi\n";
  char buf[64];
  auto cell = [&](const Rat& r) {
    std::snprintf(buf, sizeof buf, "%.12g", rat_to_double(r));
    out << buf;
  };
  for (const VariationRow& row : t.rows) {
    out << row.step << ",";
    cell(row.to_prev.lo);
    out << ",";
    cell(row.to_prev.hi);
    out << ",";
    cell(row.to_limit.lo);
    out << ",";
    cell(row.to_limit.hi);
    out << "\n";
  }
  return out.str();
}

}  // namespace valkit::io
