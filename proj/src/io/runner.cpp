#include "io/runner.hpp"

#include <cstdlib>
#include <exception>

#include "selfcheck/selfcheck.hpp"
#include "valuation/retraction.hpp"

namespace valkit::io {

namespace {

const std::string& input_path(const RunConfig& c, const std::string& role) {
  auto it = c.inputs.find(role);
  if (it == c.inputs.end())
    fail(ErrCode::validation, "missing required input", "--" + role);
  return it->second;
}

Json load_input(const RunConfig& c, const std::string& role) {
  return load_file(input_path(c, role));
}

// tangent point documents may carry an inline complex, like weights docs
std::pair<TangentPoint, std::optional<ComplexSpec>> load_point_doc(
    const Json& j, const std::string& where) {
  expect_doc(j, "tangent_point", where);
  auto p = tangent_point_from_json(j, where);
  std::optional<ComplexSpec> spec;
  if (j.contains("complex") && !j["complex"].is_null())
    spec = complex_spec_from_json(j["complex"], where + ".complex");
  return {std::move(p), std::move(spec)};
}

ComplexSpec complex_for(const RunConfig& c,
                        const std::optional<ComplexSpec>& inline_spec,
                        const std::vector<std::string>& fallback_orthant) {
  // explicit file beats the inline recipe beats the orthant of the
  // function's own variables
  auto it = c.inputs.find("complex");
  if (it == c.inputs.end()) it = c.inputs.find("fan");
  if (it != c.inputs.end())
    return complex_spec_from_json(load_file(it->second), it->second);
  if (inline_spec) return *inline_spec;
  ComplexSpec spec;
  spec.kind = "orthant";
  spec.components = fallback_orthant;
  return spec;
}

void emit(RunResult& r, const RunConfig& c, const Json& doc) {
  r.document = doc;
  r.out_text = dump_canonical(doc);
  auto it = c.outputs.find("out");
  if (it != c.outputs.end()) write_json_file(it->second, doc);
}

RunResult do_eval(const RunConfig& c) {
  RunResult r;
  auto wd = weights_from_custom_doc(load_input(c, "weights"),
                                    input_path(c, "weights"));
  auto f = rational_from_doc(load_input(c, "poly"), input_path(c, "poly"));
  auto complex = complex_for(c, wd.complex, f.num.vars()).build();
  emit(r, c, value_doc(qm_eval_rational(wd.weights, complex, f)));
  return r;
}

RunResult do_trop(const RunConfig& c) {
  RunResult r;
  Json doc = load_input(c, "poly");
  const std::string where = input_path(c, "poly");
  auto f = rational_from_doc(doc, where);
  auto complex = complex_for(c, std::nullopt, f.num.vars()).build();
  // A plain polynomial tropicalizes without a negative part; only genuine
  // quotients carry one.
  if (str_field(doc, "type", where) == "poly")
    emit(r, c, tropical_doc(tropicalize(f.num, complex)));
  else
    emit(r, c, tropical_doc(tropicalize(f, complex)));
  return r;
}

RunResult do_approx(const RunConfig& c) {
  RunResult r;
  auto spec = complex_spec_from_json(load_input(c, "fan") /* or complex */,
                                     input_path(c, "fan"));
  auto family = family_from_json(load_input(c, "family"),
                                 input_path(c, "family"));
  auto complex = spec.build();
  auto out = toric_approximate(complex, family, c.ell, c.lambda, c.seed,
                               c.samples_per_face);
  emit(r, c, approx_doc(out));
  if (!out.pass) {
    r.exit_code = 1;
    r.err_text = out.inconclusive
                     ? "approximation inconclusive: every attempt failed"
                     : "verification failed: " + out.report.note;
  }
  return r;
}

RunResult do_retract(const RunConfig& c) {
  RunResult r;
  const std::string& wpath = input_path(c, "fine-weights");
  auto wd = weights_from_custom_doc(load_file(wpath), wpath);
  if (!wd.complex)
    fail(ErrCode::validation,
         "the fine weights document must carry its subdivision complex",
         wpath + ".complex");
  auto coarse_spec = complex_spec_from_json(load_input(c, "coarse"),
                                            input_path(c, "coarse"));
  auto retracted =
      retract_toric(wd.weights, wd.complex->build(), coarse_spec.build());
  emit(r, c, weights_doc(retracted, coarse_spec));
  return r;
}

RunResult do_okounkov(const RunConfig& c) {
  RunResult r;
  auto sections = [&] {
    const Json& j = load_input(c, "sections");
    expect_doc(j, "sections", input_path(c, "sections"));
    return sections_from_json(j, input_path(c, "sections"));
  }();
  auto [point, inline_spec] =
      load_point_doc(load_input(c, "point"), input_path(c, "point"));
  auto it = c.inputs.find("complex");
  if (it == c.inputs.end()) it = c.inputs.find("fan");
  if (it == c.inputs.end() && !inline_spec)
    fail(ErrCode::validation,
         "the tangent point document must carry its complex",
         input_path(c, "point") + ".complex");
  auto complex = complex_for(c, inline_spec, {}).build();
  auto body = okounkov_sample(point, complex, sections, c.n_max);
  emit(r, c, body_doc(body));
  auto svg = c.outputs.find("svg");
  if (svg != c.outputs.end()) write_text_file(svg->second, render_svg(body));
  return r;
}

RunResult do_okounkov_path(const RunConfig& c) {
  RunResult r;
  auto doc = path_from_doc(load_input(c, "path"), input_path(c, "path"));
  auto complex = doc.complex.build();
  auto table = variation_experiment(doc.points, complex, doc.sections,
                                    doc.n_max, c.bracket_width);
  r.out_text = variation_csv(table);
  auto it = c.outputs.find("out");
  if (it != c.outputs.end()) write_text_file(it->second, r.out_text);
  return r;
}

RunResult do_check(const RunConfig& c) {
  RunResult r;
  std::vector<int> wanted;
  if (c.suite == "all") {
    for (const auto& cr : selfcheck::criteria()) wanted.push_back(cr.number);
  } else {
    std::string tok;
    for (char ch : c.suite + ",") {
      if (ch == ',') {
        if (!tok.empty()) {
          try {
            wanted.push_back(std::stoi(tok));
          } catch (const std::exception&) {
            fail(ErrCode::validation,
                 "suite must be 'all' or comma-separated criterion numbers",
                 "--suite");
          }
          tok.clear();
        }
      } else {
        tok += ch;
      }
    }
    if (wanted.empty())
      fail(ErrCode::validation, "suite selects no criteria", "--suite");
  }

  Json results = Json::array();
  bool all_pass = true;
  for (int number : wanted) {
    const selfcheck::Criterion* found = nullptr;
    for (const auto& cr : selfcheck::criteria())
      if (cr.number == number) found = &cr;
    if (!found)
      fail(ErrCode::validation,
           "unknown criterion " + std::to_string(number), "--suite");
    auto res = selfcheck::run_criterion(*found, c.seed);
    all_pass = all_pass && res.pass;
    r.out_text += selfcheck::format_result(*found, res) + "\n";
    Json e;
    e["number"] = found->number;
    e["name"] = found->name;
    e["pass"] = res.pass;
    e["seconds"] = res.seconds;
    e["detail"] = res.detail;
    results.push_back(e);
  }
  Json doc = make_doc("check_report");
  doc["seed"] = c.seed;
  doc["results"] = results;
  doc["pass"] = all_pass;
  r.document = doc;
  auto it = c.outputs.find("out");
  if (it != c.outputs.end()) write_json_file(it->second, doc);
  if (!all_pass) {
    r.exit_code = 1;
    r.err_text = "self-check failed";
  }
  return r;
}

}  // namespace

Json config_to_json(const RunConfig& c) {
  Json j = make_doc("run_config");
  j["command"] = c.command;
  j["inputs"] = c.inputs;
  j["outputs"] = c.outputs;
  j["seed"] = c.seed;
  j["nmax"] = c.n_max;
  j["samples"] = c.samples;
  j["width"] = rat_to_json(c.bracket_width);
  j["samples_per_face"] = c.samples_per_face;
  j["ell"] = c.ell ? Json(*c.ell) : Json();
  if (c.lambda) {
    Json l = Json::object();
    for (const auto& [face, v] : *c.lambda) l[face] = rat_to_json(v);
    j["lambda"] = l;
  } else {
    j["lambda"] = Json();
  }
  j["suite"] = c.suite;
  return j;
}

RunConfig config_from_json(const Json& j) {
  expect_doc(j, "run_config", "config");
  RunConfig c;
  c.command = str_field(j, "command", "config");
  auto names = [&](const char* key, std::map<std::string, std::string>& out) {
    if (!j.contains(key) || j[key].is_null()) return;
    const Json& m = j[key];
    if (!m.is_object())
      fail(ErrCode::parse, "expected an object of file paths",
           std::string("config.") + key);
    for (auto it = m.begin(); it != m.end(); ++it) {
      if (!it.value().is_string())
        fail(ErrCode::parse, "expected a string path",
             std::string("config.") + key + "." + it.key());
      out[it.key()] = it.value().get<std::string>();
    }
  };
  names("inputs", c.inputs);
  names("outputs", c.outputs);
  auto integer = [&](const char* key, auto& out) {
    if (!j.contains(key) || j[key].is_null()) return;
    if (!j[key].is_number_integer() && !j[key].is_number_unsigned())
      fail(ErrCode::parse, "expected an integer",
           std::string("config.") + key);
    out = j[key];
  };
  if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned() && !j["seed"].is_number_integer())
      fail(ErrCode::parse, "seed must be an unsigned integer", "config.seed");
    c.seed = j["seed"].get<std::uint64_t>();
  }
  integer("nmax", c.n_max);
  integer("samples", c.samples);
  integer("samples_per_face", c.samples_per_face);
  if (j.contains("width"))
    c.bracket_width = rat_from_json(j["width"], "config.width");
  if (j.contains("ell") && !j["ell"].is_null()) {
    long long ell = 0;
    integer("ell", ell);
    c.ell = ell;
  }
  if (j.contains("lambda") && !j["lambda"].is_null()) {
    if (!j["lambda"].is_object())
      fail(ErrCode::parse, "expected an object keyed by face id",
           "config.lambda");
    std::map<std::string, Rat> l;
    for (auto it = j["lambda"].begin(); it != j["lambda"].end(); ++it)
      l[it.key()] = rat_from_json(it.value(), "config.lambda." + it.key());
    c.lambda = std::move(l);
  }
  if (j.contains("suite")) c.suite = str_field(j, "suite", "config");
  return c;
}

RunResult run(const RunConfig& config) {
  RunConfig c = config;
  if (const char* env = std::getenv("VALKIT_SEED")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
      return {2, "", "VALKIT_SEED is not an unsigned integer\n", Json()};
    c.seed = v;
  }
  try {
    if (c.command == "eval") return do_eval(c);
    if (c.command == "trop") return do_trop(c);
    if (c.command == "approx") return do_approx(c);
    if (c.command == "retract") return do_retract(c);
    if (c.command == "okounkov") return do_okounkov(c);
    if (c.command == "okounkov-path") return do_okounkov_path(c);
    if (c.command == "check") return do_check(c);
    fail(ErrCode::validation, "unknown command '" + c.command + "'",
         "config.command");
  } catch (const Error& e) {
    RunResult r;
    r.exit_code = is_input_error(e.code()) ? 2 : 1;
    r.err_text = std::string(e.what()) + "\n";
    return r;
  } catch (const std::exception& e) {
    RunResult r;
    r.exit_code = 3;
    r.err_text = std::string("internal error: ") + e.what() + "\n";
    return r;
  }
}

}  // namespace valkit::io
