#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "io/jsonio.hpp"

namespace valkit::io {

// Everything one command invocation needs, decoupled from flag parsing so
// the CLI, the C API and tests all drive the same entry point.
struct RunConfig {
  std::string command;  // eval | trop | approx | retract | okounkov |
                        // okounkov-path | check
  std::map<std::string, std::string> inputs;   // role -> input file path
  std::map<std::string, std::string> outputs;  // role -> output file path
  std::uint64_t seed = 7;
  long long n_max = 5;                  // okounkov degree cap
  long long samples = 100000;           // Monte Carlo sample count
  Rat bracket_width = Rat(1, 10000000); // sqrt bracket target width
  int samples_per_face = 32;            // verification cross-checks
  std::optional<long long> ell;         // approx overrides
  std::optional<std::map<std::string, Rat>> lambda;
  std::string suite = "all";  // check: "all" or comma-separated numbers
};

Json config_to_json(const RunConfig& c);
RunConfig config_from_json(const Json& j);

struct RunResult {
  // 0 success, 1 verification failure, 2 input error, 3 internal defect
  int exit_code = 0;
  std::string out_text;  // stdout payload (documents, pass/fail lines)
  std::string err_text;  // diagnostic for stderr, empty on success
  Json document;         // primary result document, null when none
};

// Execute one command. Never throws: problems come back as exit codes,
// input errors carrying the offending field path in err_text. The
// VALKIT_SEED environment variable, when set, overrides the config seed.
RunResult run(const RunConfig& config);

}  // namespace valkit::io
