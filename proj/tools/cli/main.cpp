#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "valkit.h"

using nlohmann::json;

int main(int argc, char** argv) {
  CLI::App app{"quasi-monomial valuations on cone complexes"};
  app.require_subcommand(1);

  std::string weights, poly, fan, family, fine_weights, coarse, sections,
      point, path, out, svg, width, suite = "all";
  std::vector<std::string> lambda;
  std::uint64_t seed = 7;
  long long nmax = 5, ell = 0, samples_per_face = 32;

  auto* eval = app.add_subcommand(
      "eval", "value of a weight system on a polynomial or quotient");
  eval->add_option("--weights", weights, "weights document")->required();
  eval->add_option("--poly", poly, "poly or rational_function document")
      ->required();
  eval->add_option("--fan", fan,
                   "complex to evaluate on (default: the weights' inline "
                   "complex, else the orthant of the variables)");

  auto* trop = app.add_subcommand("trop", "tropicalize onto a complex");
  trop->add_option("--poly", poly, "poly or rational_function document")
      ->required();
  trop->add_option("--complex", fan,
                   "complex document (default: orthant of the variables)");

  auto* approx = app.add_subcommand(
      "approx", "realize an antichain family on a fan and verify it");
  approx->add_option("--fan", fan, "fan document")->required();
  approx->add_option("--family", family, "antichain_family document")
      ->required();
  approx->add_option("--out", out, "write the report here too");
  approx->add_option("--seed", seed, "seed for coefficients and cross-checks");
  approx->add_option("--ell", ell, "pin the denominator exponent");
  approx->add_option("--lambda", lambda,
                     "pin a coefficient, face=value (repeatable)");
  approx->add_option("--samples-per-face", samples_per_face,
                     "verification weight samples per face");

  auto* retract = app.add_subcommand(
      "retract", "push weights on a subdivision down to the coarse fan");
  retract->add_option("--fine-weights", fine_weights,
                      "weights document carrying its subdivision complex")
      ->required();
  retract->add_option("--coarse", coarse, "coarse fan document")->required();
  retract->add_option("--out", out, "write the retracted weights here too");

  auto* okounkov = app.add_subcommand(
      "okounkov", "sample the normalized value body of graded sections");
  okounkov->add_option("--sections", sections, "sections document")
      ->required();
  okounkov->add_option("--point", point,
                       "tangent_point document carrying its complex")
      ->required();
  okounkov->add_option("--nmax", nmax, "largest degree to sample");
  okounkov->add_option("--out", out, "write the body document here too");
  okounkov->add_option("--svg", svg, "render the body to this SVG file");

  auto* opath = app.add_subcommand(
      "okounkov-path", "tabulate body variation along a tangent path");
  opath->add_option("--path", path, "tangent_path document")->required();
  opath->add_option("--out", out, "write the CSV table here too");
  opath->add_option("--width", width, "bracket width, e.g. 1/10000000");

  auto* check =
      app.add_subcommand("check", "run the registered acceptance criteria");
  check->add_option("--suite", suite,
                    "'all' or comma-separated criterion numbers");
  check->add_option("--seed", seed, "seed for the randomized criteria");
  check->add_option("--out", out, "write the JSON report here too");

  CLI11_PARSE(app, argc, argv);

  json cfg;
  cfg["schema"] = "v1";
  cfg["type"] = "run_config";
  json inputs = json::object(), outputs = json::object();
  auto put = [](json& m, const char* k, const std::string& v) {
    if (!v.empty()) m[k] = v;
  };

  if (eval->parsed()) {
    cfg["command"] = "eval";
    put(inputs, "weights", weights);
    put(inputs, "poly", poly);
    put(inputs, "fan", fan);
  } else if (trop->parsed()) {
    cfg["command"] = "trop";
    put(inputs, "poly", poly);
    put(inputs, "complex", fan);
  } else if (approx->parsed()) {
    cfg["command"] = "approx";
    put(inputs, "fan", fan);
    put(inputs, "family", family);
    put(outputs, "out", out);
    cfg["seed"] = seed;
    cfg["samples_per_face"] = samples_per_face;
    if (approx->count("--ell")) cfg["ell"] = ell;
    if (!lambda.empty()) {
      json l = json::object();
      for (const auto& kv : lambda) {
        auto eq = kv.find('=');
        if (eq == std::string::npos || eq == 0) {
          std::fprintf(stderr, "--lambda expects face=value, got '%s'\n",
                       kv.c_str());
          return VK_EINPUT;
        }
        l[kv.substr(0, eq)] = kv.substr(eq + 1);
      }
      cfg["lambda"] = l;
    }
  } else if (retract->parsed()) {
    cfg["command"] = "retract";
    put(inputs, "fine-weights", fine_weights);
    put(inputs, "coarse", coarse);
    put(outputs, "out", out);
  } else if (okounkov->parsed()) {
    cfg["command"] = "okounkov";
    put(inputs, "sections", sections);
    put(inputs, "point", point);
    cfg["nmax"] = nmax;
    put(outputs, "out", out);
    put(outputs, "svg", svg);
  } else if (opath->parsed()) {
    cfg["command"] = "okounkov-path";
    put(inputs, "path", path);
    put(outputs, "out", out);
    if (!width.empty()) cfg["width"] = width;
  } else if (check->parsed()) {
    cfg["command"] = "check";
    cfg["suite"] = suite;
    cfg["seed"] = seed;
    put(outputs, "out", out);
  }
  cfg["inputs"] = inputs;
  cfg["outputs"] = outputs;

  vk_result* res = vk_run_json(cfg.dump().c_str());
  if (!res) {
    std::fprintf(stderr, "%s\n", vk_last_error());
    return VK_EINTERNAL;
  }
  std::fputs(vk_result_output(res), stdout);
  std::fputs(vk_result_error(res), stderr);
  int code = vk_result_code(res);
  vk_result_free(res);
  return code;
}
