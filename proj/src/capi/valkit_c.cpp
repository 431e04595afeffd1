#include "valkit.h"

#include <new>
#include <string>

#include "io/runner.hpp"

struct vk_result {
  int code = VK_EINTERNAL;
  std::string output;
  std::string error;
  std::string document;
};

namespace {

thread_local std::string t_last_error;

}  // namespace

extern "C" {

vk_result* vk_run_json(const char* config_json) {
  if (!config_json) {
    t_last_error = "config_json is NULL";
    return nullptr;
  }
  vk_result* r = new (std::nothrow) vk_result;
  if (!r) {
    t_last_error = "out of memory";
    return nullptr;
  }
  try {
    auto config =
        valkit::io::config_from_json(valkit::io::parse_text(config_json));
    auto run = valkit::io::run(config);
    r->code = run.exit_code;
    r->output = std::move(run.out_text);
    r->error = std::move(run.err_text);
    if (!run.document.is_null())
      r->document = valkit::io::dump_canonical(run.document);
  } catch (const valkit::Error& e) {
    r->code = valkit::is_input_error(e.code()) ? VK_EINPUT : VK_EVERIFY;
    r->error = std::string(e.what()) + "\n";
  } catch (const std::exception& e) {
    r->code = VK_EINTERNAL;
    r->error = std::string("internal error: ") + e.what() + "\n";
  }
  return r;
}

int vk_result_code(const vk_result* r) { return r ? r->code : VK_EINTERNAL; }

const char* vk_result_output(const vk_result* r) {
  return r ? r->output.c_str() : "";
}

const char* vk_result_error(const vk_result* r) {
  return r ? r->error.c_str() : "invalid result handle";
}

const char* vk_result_document(const vk_result* r) {
  return r ? r->document.c_str() : "";
}

void vk_result_free(vk_result* r) { delete r; }

const char* vk_last_error(void) { return t_last_error.c_str(); }

const char* vk_version(void) { return "0.1.0"; }

}  // extern "C"
