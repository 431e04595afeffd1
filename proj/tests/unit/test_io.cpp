#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "io/jsonio.hpp"
#include "io/runner.hpp"

using namespace valkit;
using io::Json;

namespace fs = std::filesystem;

// Fresh scratch directory per test binary run.
static fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() /
                 ("valkit_io_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

static Fan line_pair_fan() {
  Fan fan;
  fan.dim = 1;
  fan.rays = {Expo{1}, Expo{-1}};
  fan.facets = {{0}, {1}};
  fan.validate(FanSupport::complete);
  return fan;
}

static MonomialSeries poly_x2y_x5() {
  MonomialSeries f = MonomialSeries::zero({"x", "y"});
  f.add_term(Expo{2, 1}, Rat(1));
  f.add_term(Expo{5, 0}, Rat(1));
  return f;
}

TEST_CASE("rationals persist as p or p/q strings and reject floats") {
  CHECK(io::rat_to_json(Rat(5)) == Json("5"));
  CHECK(io::rat_to_json(Rat(-3, 7)) == Json("-3/7"));
  CHECK(io::rat_from_json(Json("22/4"), "t") == Rat(11, 2));
  CHECK(io::rat_from_json(Json(9), "t") == Rat(9));
  CHECK_THROWS_AS(io::rat_from_json(Json(0.5), "t"), Error);
  CHECK_THROWS_AS(io::rat_from_json(Json("1/0"), "t"), Error);
  CHECK_THROWS_AS(io::rat_from_json(Json("abc"), "t"), Error);
}

TEST_CASE("parse errors and field errors carry a path") {
  try {
    io::parse_text("{nope", "cfg.json");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::parse);
    CHECK(e.path() == "cfg.json");
  }
  Json j = Json::object();
  try {
    io::field(j, "rays", "fan");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("rays") != std::string::npos);
  }
}

TEST_CASE("documents reject foreign schema versions and wrong types") {
  Json doc = io::make_doc("fan");
  CHECK_NOTHROW(io::expect_doc(doc, "fan", "f"));
  CHECK_THROWS_AS(io::expect_doc(doc, "poly", "f"), Error);
  doc["schema"] = "v2";
  try {
    io::expect_doc(doc, "fan", "f");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::parse);
    CHECK(e.path() == "f.schema");
  }
}

TEST_CASE("fans round-trip and the unimodular claim is mandatory") {
  Fan fan = line_pair_fan();
  Json j = io::fan_to_json(fan, FanSupport::complete);
  auto [back, support] = io::fan_from_json(j, "fan");
  CHECK(back.dim == fan.dim);
  CHECK(back.rays == fan.rays);
  CHECK(back.facets == fan.facets);
  CHECK(support == FanSupport::complete);

  Json bad = j;
  bad["unimodular"] = false;
  try {
    io::fan_from_json(bad, "fan");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.code() == ErrCode::unsupported);
    CHECK(e.path() == "fan.unimodular");
  }
  bad.erase("unimodular");
  CHECK_THROWS_AS(io::fan_from_json(bad, "fan"), Error);
}

TEST_CASE("complex specs rebuild the same face posets") {
  io::ComplexSpec fan_spec;
  fan_spec.kind = "fan";
  fan_spec.fan = line_pair_fan();
  fan_spec.support = FanSupport::complete;

  io::ComplexSpec orthant_spec;
  orthant_spec.kind = "orthant";
  orthant_spec.components = {"x", "y", "z"};

  io::ComplexSpec dual_spec;
  dual_spec.kind = "dual";
  dual_spec.components = {"a", "b", "c"};
  Stratum ab;
  ab.rays = {"a", "b"};
  ab.label = "ab";
  Stratum ac;
  ac.rays = {"a", "c"};
  ac.label = "ac";
  Stratum bc;
  bc.rays = {"b", "c"};
  bc.label = "bc";
  Stratum abc;
  abc.rays = {"a", "b", "c"};
  abc.label = "abc";
  abc.faces["a+b"] = "ab";
  dual_spec.strata = {ab, ac, bc, abc};

  for (const io::ComplexSpec& spec : {fan_spec, orthant_spec, dual_spec}) {
    Json j = io::complex_spec_to_json(spec);
    io::ComplexSpec back = io::complex_spec_from_json(j, "complex");
    ConeComplex a = spec.build();
    ConeComplex b = back.build();
    REQUIRE(a.faces().size() == b.faces().size());
    CHECK(a.components() == b.components());
    for (const auto& [id, f] : a.faces()) {
      REQUIRE(b.faces().count(id) == 1);
      CHECK(b.face(id).rays == f.rays);
    }
  }

  // A bare fan document is accepted directly as a complex recipe.
  Json bare = io::fan_to_json(line_pair_fan(), FanSupport::complete);
  io::ComplexSpec from_bare = io::complex_spec_from_json(bare, "complex");
  CHECK(from_bare.kind == "fan");
  CHECK(from_bare.build().faces().count("r0") == 1);
}

TEST_CASE("polynomials and quotients round-trip exactly") {
  MonomialSeries f = poly_x2y_x5();
  Json pj = io::poly_doc(f);
  RationalFunctionRep fp = io::rational_from_doc(pj, "poly");
  CHECK(fp.num.terms() == f.terms());
  CHECK(fp.den.terms() == MonomialSeries::one({"x", "y"}).terms());

  MonomialSeries den = MonomialSeries::one({"x", "y"});
  den.add_term(Expo{1, 1}, Rat(-2, 3));
  RationalFunctionRep q(f, den);
  Json qj = io::rational_doc(q);
  RationalFunctionRep qback = io::rational_from_doc(qj, "rat");
  CHECK(qback.num.terms() == q.num.terms());
  CHECK(qback.den.terms() == q.den.terms());
}

TEST_CASE("antichain families round-trip keyed by face id") {
  AntichainFamily fam;
  fam.entries.emplace("O", Antichain({}, {Expo{}}));
  fam.entries.emplace("r0", Antichain({"r0"}, {Expo{2}}));
  fam.entries.emplace("r0+r1", Antichain({"r0", "r1"}, {Expo{1, 0}, Expo{0, 2}}));
  Json j = io::family_to_json(fam);
  AntichainFamily back = io::family_from_json(j, "family");
  REQUIRE(back.entries.size() == fam.entries.size());
  for (const auto& [id, a] : fam.entries) {
    REQUIRE(back.entries.count(id) == 1);
    CHECK(back.entries.at(id).index_set() == a.index_set());
    CHECK(back.entries.at(id).elements() == a.elements());
  }
}

TEST_CASE("weights documents may carry their complex inline") {
  WeightMatrix w;
  w.face = "x+y";
  w.cols = {LexTuple({Rat(1), Rat(0)}), LexTuple({Rat(0), Rat(1)})};

  Json bare = io::weights_doc(w);
  io::WeightsDoc d1 = io::weights_from_custom_doc(bare, "w");
  CHECK(d1.weights.face == w.face);
  CHECK(d1.weights.cols.size() == 2);
  CHECK(!d1.complex);

  io::ComplexSpec spec;
  spec.kind = "orthant";
  spec.components = {"x", "y"};
  Json carried = io::weights_doc(w, spec);
  io::WeightsDoc d2 = io::weights_from_custom_doc(carried, "w");
  REQUIRE(d2.complex.has_value());
  CHECK(d2.complex->kind == "orthant");
  CHECK(d2.weights.cols[0].v == w.cols[0].v);
}

TEST_CASE("tangent points round-trip") {
  TangentPoint p;
  p.face = "x+y";
  p.x = {Rat(1), Rat(0)};
  p.w = {{Rat(2, 3), Rat(1)}};
  Json j = io::tangent_point_doc(p);
  TangentPoint back = io::tangent_point_from_json(j, "p");
  CHECK(back.face == p.face);
  CHECK(back.x == p.x);
  CHECK(back.w == p.w);
}

TEST_CASE("sections round-trip in both polytope and graded form") {
  GradedSections sq = GradedSections::from_polytope(
      2, {Expo{0, 0}, Expo{1, 0}, Expo{1, 1}, Expo{0, 1}});
  Json j = io::sections_doc(sq);
  GradedSections back = io::sections_from_json(j, "s");
  CHECK(back.dim == 2);
  CHECK(back.level(3) == sq.level(3));

  std::map<long long, std::vector<Expo>> graded;
  graded[1] = {Expo{0, 0}, Expo{1, 0}};
  graded[2] = {Expo{0, 0}, Expo{2, 1}};
  GradedSections g = GradedSections::from_graded(2, graded);
  Json gj = io::sections_doc(g);
  GradedSections gback = io::sections_from_json(gj, "s");
  CHECK(gback.level(1) == g.level(1));
  CHECK(gback.level(2) == g.level(2));
}

TEST_CASE("body documents rebuild the hull instead of trusting it") {
  ConvexBody b = make_body(
      2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)}, {Rat(1, 2), Rat(1, 2)},
          {Rat(0), Rat(1)}, {Rat(1), Rat(1)}});
  Json j = io::body_doc(b);
  // Corrupt the stored hull; the reader must ignore it.
  j["hull"] = Json::array();
  ConvexBody back = io::body_from_doc(j, "b");
  CHECK(same_hull(b, back));
}

TEST_CASE("bump families and tangent paths round-trip") {
  std::vector<Bump> bumps = {{{Rat(1, 2), Rat(1, 2)}, Rat(1, 4)},
                             {{Rat(3, 2), Rat(1, 2)}, Rat(1, 2)}};
  Json bj = io::bumps_to_json(bumps);
  auto bback = io::bumps_from_json(bj, "bumps");
  REQUIRE(bback.size() == 2);
  CHECK(bback[1].center == bumps[1].center);
  CHECK(bback[1].radius == bumps[1].radius);

  io::PathDoc p;
  p.complex.kind = "orthant";
  p.complex.components = {"a", "b"};
  p.sections = GradedSections::from_polytope(
      2, {Expo{0, 0}, Expo{1, 0}, Expo{0, 1}});
  TangentPoint tp;
  tp.face = "a+b";
  tp.x = {Rat(1), Rat(0)};
  tp.w = {{Rat(0), Rat(1)}};
  p.points = {tp, tp};
  p.n_max = 4;
  Json pj = io::path_to_json(p);
  io::PathDoc back = io::path_from_doc(pj, "path");
  CHECK(back.n_max == 4);
  REQUIRE(back.points.size() == 2);
  CHECK(back.points[0].face == "a+b");
  CHECK(back.sections.level(2).size() == p.sections.level(2).size());
}

TEST_CASE("canonical dump is key-order independent and deterministic") {
  Json a;
  a["zeta"] = 1;
  a["alpha"] = Json::array({1, 2});
  Json b;
  b["alpha"] = Json::array({1, 2});
  b["zeta"] = 1;
  CHECK(io::dump_canonical(a) == io::dump_canonical(b));
  CHECK(io::dump_canonical(a).back() == '\n');
}

TEST_CASE("writes are atomic and leave no temp file behind") {
  fs::path p = scratch() / "atomic.json";
  Json doc = io::make_doc("fan");
  io::write_json_file(p.string(), doc);
  CHECK(fs::exists(p));
  CHECK(!fs::exists(p.string() + ".tmp"));
  Json back = io::load_file(p.string());
  CHECK(back == doc);
  // Overwrite keeps the invariant.
  doc["dim"] = 3;
  io::write_json_file(p.string(), doc);
  CHECK(io::load_file(p.string())["dim"] == 3);
}

TEST_CASE("value documents distinguish finite from infinite") {
  Json fin = io::value_doc(LexTuple({Rat(2), Rat(1)}));
  CHECK(fin["finite"] == true);
  CHECK(fin["value"] == Json::array({"2", "1"}));
  Json inf = io::value_doc(std::nullopt);
  CHECK(inf["finite"] == false);
  CHECK(inf["value"].is_null());
}

TEST_CASE("run configs round-trip through JSON") {
  io::RunConfig c;
  c.command = "approx";
  c.inputs = {{"fan", "fan.json"}, {"family", "fam.json"}};
  c.outputs = {{"out", "report.json"}};
  c.seed = 99;
  c.ell = 6;
  c.lambda = std::map<std::string, Rat>{{"r0", Rat(2)}, {"r1", Rat(3, 2)}};
  c.samples_per_face = 8;
  io::RunConfig back = io::config_from_json(io::config_to_json(c));
  CHECK(back.command == c.command);
  CHECK(back.inputs == c.inputs);
  CHECK(back.outputs == c.outputs);
  CHECK(back.seed == c.seed);
  REQUIRE(back.ell.has_value());
  CHECK(*back.ell == 6);
  REQUIRE(back.lambda.has_value());
  CHECK(back.lambda->at("r1") == Rat(3, 2));
  CHECK(back.samples_per_face == 8);

  Json bad = io::config_to_json(c);
  bad["nmax"] = "soon";
  CHECK_THROWS_AS(io::config_from_json(bad), Error);
}

// --- end-to-end through the runner --------------------------------------

static std::string fixture(const std::string& name, const Json& doc) {
  fs::path p = scratch() / name;
  io::write_json_file(p.string(), doc);
  return p.string();
}

TEST_CASE("runner evaluates weights on a polynomial with orthant fallback") {
  WeightMatrix w;
  w.face = "x+y";
  w.cols = {LexTuple({Rat(1), Rat(0)}), LexTuple({Rat(0), Rat(1)})};
  io::RunConfig c;
  c.command = "eval";
  c.inputs["weights"] = fixture("w.json", io::weights_doc(w));
  c.inputs["poly"] = fixture("f.json", io::poly_doc(poly_x2y_x5()));
  io::RunResult r = io::run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.err_text.empty());
  CHECK(r.document["finite"] == true);
  CHECK(r.document["value"] == Json::array({"2", "1"}));
  CHECK(r.out_text == io::dump_canonical(r.document));
}

TEST_CASE("runner reports missing inputs as input errors with the role") {
  io::RunConfig c;
  c.command = "eval";
  c.inputs["poly"] = fixture("f2.json", io::poly_doc(poly_x2y_x5()));
  io::RunResult r = io::run(c);
  CHECK(r.exit_code == 2);
  CHECK(r.err_text.find("--weights") != std::string::npos);

  io::RunConfig missing_file = c;
  missing_file.inputs["weights"] = (scratch() / "nope.json").string();
  io::RunResult r2 = io::run(missing_file);
  CHECK(r2.exit_code == 2);
}

TEST_CASE("runner tropicalizes onto the orthant of the variables") {
  io::RunConfig c;
  c.command = "trop";
  c.inputs["poly"] = fixture("f3.json", io::poly_doc(poly_x2y_x5()));
  io::RunResult r = io::run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.document["neg"].is_null());
  CHECK(r.document["pos"]["entries"].contains("x+y"));
}

TEST_CASE("runner approx realizes the two-ray line family") {
  Json fan = io::fan_to_json(line_pair_fan(), FanSupport::complete);
  AntichainFamily fam;
  fam.entries.emplace("O", Antichain({}, {Expo{}}));
  fam.entries.emplace("r0", Antichain({"r0"}, {Expo{2}}));
  fam.entries.emplace("r1", Antichain({"r1"}, {Expo{1}}));
  io::RunConfig c;
  c.command = "approx";
  c.inputs["fan"] = fixture("fan.json", fan);
  c.inputs["family"] = fixture("fam.json", io::family_doc(fam));
  c.outputs["out"] = (scratch() / "report.json").string();
  io::RunResult r = io::run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.document["pass"] == true);
  CHECK(io::load_file(c.outputs["out"]) == r.document);

  // Same seed, same bytes.
  io::RunResult again = io::run(c);
  CHECK(again.out_text == r.out_text);
}

TEST_CASE("VALKIT_SEED overrides the configured seed") {
  Json fan = io::fan_to_json(line_pair_fan(), FanSupport::complete);
  AntichainFamily fam;
  fam.entries.emplace("O", Antichain({}, {Expo{}}));
  fam.entries.emplace("r0", Antichain({"r0"}, {Expo{2}}));
  fam.entries.emplace("r1", Antichain({"r1"}, {Expo{1}}));
  io::RunConfig c;
  c.command = "approx";
  c.inputs["fan"] = fixture("fan_env.json", fan);
  c.inputs["family"] = fixture("fam_env.json", io::family_doc(fam));
  c.seed = 1;
  ::setenv("VALKIT_SEED", "424242", 1);
  io::RunResult env_run = io::run(c);
  ::unsetenv("VALKIT_SEED");
  CHECK(env_run.exit_code == 0);

  // With the env override, the run must reproduce a config-seeded run
  // byte for byte, and differ from the seed it would otherwise have used.
  io::RunConfig direct = c;
  direct.seed = 424242;
  CHECK(io::run(direct).out_text == env_run.out_text);
  io::RunConfig other = c;  // seed stays 1
  CHECK(io::run(other).out_text != env_run.out_text);

  ::setenv("VALKIT_SEED", "not-a-number", 1);
  io::RunResult bad = io::run(c);
  ::unsetenv("VALKIT_SEED");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("runner retract requires the fine subdivision inline") {
  WeightMatrix w;
  w.face = "r0+r1";
  w.cols = {LexTuple({Rat(1)}), LexTuple({Rat(2)})};
  io::RunConfig c;
  c.command = "retract";
  c.inputs["fine-weights"] = fixture("fw_bare.json", io::weights_doc(w));
  Fan quad;
  quad.dim = 2;
  quad.rays = {Expo{1, 0}, Expo{0, 1}};
  quad.facets = {{0, 1}};
  quad.validate(FanSupport::orthant);
  c.inputs["coarse"] = fixture("coarse.json",
                               io::fan_to_json(quad, FanSupport::orthant));
  io::RunResult r = io::run(c);
  CHECK(r.exit_code == 2);
  CHECK(r.err_text.find("complex") != std::string::npos);

  io::ComplexSpec spec;
  spec.kind = "fan";
  spec.fan = quad;
  spec.support = FanSupport::orthant;
  c.inputs["fine-weights"] = fixture("fw.json", io::weights_doc(w, spec));
  io::RunResult ok = io::run(c);
  CHECK(ok.exit_code == 0);
  CHECK(ok.document["face"] == "r0+r1");
}

TEST_CASE("runner okounkov samples the square and writes an SVG") {
  io::RunConfig c;
  c.command = "okounkov";
  GradedSections sq = GradedSections::from_polytope(
      2, {Expo{0, 0}, Expo{1, 0}, Expo{1, 1}, Expo{0, 1}});
  c.inputs["sections"] = fixture("sq.json", io::sections_doc(sq));
  TangentPoint tp;
  tp.face = "a+b";
  tp.x = {Rat(1), Rat(0)};
  tp.w = {{Rat(0), Rat(1)}};
  Json pt = io::tangent_point_doc(tp);
  io::ComplexSpec spec;
  spec.kind = "orthant";
  spec.components = {"a", "b"};
  pt["complex"] = io::complex_spec_to_json(spec);
  c.inputs["point"] = fixture("pt.json", pt);
  c.n_max = 4;
  c.outputs["out"] = (scratch() / "body.json").string();
  c.outputs["svg"] = (scratch() / "body.svg").string();
  io::RunResult r = io::run(c);
  CHECK(r.exit_code == 0);
  ConvexBody body = io::body_from_doc(r.document, "body");
  ConvexBody square = make_body(2, {{Rat(0), Rat(0)}, {Rat(1), Rat(0)},
                                    {Rat(1), Rat(1)}, {Rat(0), Rat(1)}});
  CHECK(same_hull(body, square));
  std::ifstream svg(c.outputs["svg"]);
  std::string first;
  std::getline(svg, first);
  CHECK(first.find("<svg") != std::string::npos);
}

TEST_CASE("runner okounkov-path emits the variation CSV") {
  io::PathDoc p;
  p.complex.kind = "orthant";
  p.complex.components = {"a", "b"};
  p.sections = GradedSections::from_polytope(
      2, {Expo{0, 0}, Expo{1, 0}, Expo{1, 1}, Expo{0, 1}});
  TangentPoint tp;
  tp.face = "a+b";
  tp.x = {Rat(1), Rat(0)};
  tp.w = {{Rat(0), Rat(1)}};
  p.points = {tp, tp};
  p.n_max = 3;
  io::RunConfig c;
  c.command = "okounkov-path";
  c.inputs["path"] = fixture("path.json", io::path_to_json(p));
  c.outputs["out"] = (scratch() / "table.csv").string();
  io::RunResult r = io::run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.out_text.rfind("step,to_prev_lo,to_prev_hi,to_limit_lo,to_limit_hi",
                         0) == 0);
  std::ifstream in(c.outputs["out"]);
  std::string header;
  std::getline(in, header);
  CHECK(header == "step,to_prev_lo,to_prev_hi,to_limit_lo,to_limit_hi");
}

TEST_CASE("runner check runs selected criteria and reports lines") {
  io::RunConfig c;
  c.command = "check";
  c.suite = "3";
  c.seed = 20260816;
  io::RunResult r = io::run(c);
  CHECK(r.exit_code == 0);
  CHECK(r.out_text.find("PASS") != std::string::npos);
  CHECK(r.document["results"].size() == 1);
  CHECK(r.document["results"][0]["number"] == 3);
  CHECK(r.document["pass"] == true);

  io::RunConfig bogus = c;
  bogus.suite = "3,99";
  io::RunResult rb = io::run(bogus);
  CHECK(rb.exit_code == 2);
}

TEST_CASE("unknown commands are input errors") {
  io::RunConfig c;
  c.command = "frobnicate";
  io::RunResult r = io::run(c);
  CHECK(r.exit_code == 2);
}
