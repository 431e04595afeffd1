#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace valkit {

// Error taxonomy. The category decides how the CLI and the C API report a
// failure: parse/validation problems map to "input error" (exit 2), the
// verification-shaped ones to "verification failure" (exit 1).
enum class ErrCode {
  dimension,       // length / rank mismatch between tuples or vectors
  index_mismatch,  // operands over different index sets
  domain,          // empty support, zero series, value out of range
  parse,           // malformed document, bad rational literal, bad version
  validation,      // structurally parsed but violates an invariant
  no_face,         // positivity support of a value map is not a face
  not_a_unit,      // inversion of a series with zero constant term
  non_regular,     // local expansion produced a negative shift (ell too small)
  unsupported,     // requested a documented non-goal (e.g. 3D hulls)
  internal,        // broken internal assumption; always a bug
};

class Error : public std::runtime_error {
 public:
  Error(ErrCode code, const std::string& msg, std::string path = {})
      : std::runtime_error(path.empty() ? msg : path + ": " + msg),
        code_(code),
        path_(std::move(path)) {}

  ErrCode code() const { return code_; }
  // Field path of the offending input ("fan.rays[2][0]"), empty when the
  // error did not come from a document.
  const std::string& path() const { return path_; }

 private:
  ErrCode code_;
  std::string path_;
};

[[noreturn]] inline void fail(ErrCode code, const std::string& msg,
                              std::string path = {}) {
  throw Error(code, msg, std::move(path));
}

inline bool is_input_error(ErrCode c) {
  return c == ErrCode::parse || c == ErrCode::validation ||
         c == ErrCode::dimension || c == ErrCode::index_mismatch ||
         c == ErrCode::domain || c == ErrCode::unsupported;
}

}  // namespace valkit
