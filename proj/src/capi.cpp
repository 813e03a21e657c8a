#include <cgcore/cgcore.h>

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "errors.hpp"
#include "io.hpp"

struct cgcore_instance {
  cgcore::ParsedInput input;
};

namespace {

char* copy_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (out != nullptr) std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

void set_message(char** slot, const std::string& text) {
  if (slot != nullptr) *slot = copy_string(text);
}

template <typename Body>
cgcore_status guarded(char** error_message, Body&& body) {
  if (error_message != nullptr) *error_message = nullptr;
  try {
    return body();
  } catch (const cgcore::ResourceLimitError& e) {
    set_message(error_message, e.what());
    return CGCORE_RESOURCE_ERROR;
  } catch (const cgcore::Error& e) {
    set_message(error_message, e.what());
    return e.code() == "internal" ? CGCORE_INTERNAL_ERROR
                                  : CGCORE_INPUT_ERROR;
  } catch (const std::exception& e) {
    set_message(error_message, e.what());
    return CGCORE_INTERNAL_ERROR;
  } catch (...) {
    set_message(error_message, "unknown failure");
    return CGCORE_INTERNAL_ERROR;
  }
}

}  // namespace

extern "C" {

const char* cgcore_version(void) { return "0.1.0"; }

const char* cgcore_status_name(cgcore_status status) {
  switch (status) {
    case CGCORE_OK:
      return "ok";
    case CGCORE_THEOREM_FAILURE:
      return "theorem-failure";
    case CGCORE_INPUT_ERROR:
      return "input-error";
    case CGCORE_RESOURCE_ERROR:
      return "resource-error";
    case CGCORE_INTERNAL_ERROR:
      return "internal-error";
  }
  return "unknown";
}

cgcore_status cgcore_parse_instance(const char* json, int bound,
                                    cgcore_instance** out,
                                    char** error_message) {
  if (out != nullptr) *out = nullptr;
  return guarded(error_message, [&]() -> cgcore_status {
    if (json == nullptr || out == nullptr) {
      set_message(error_message, "json and out must be non-NULL");
      return CGCORE_INPUT_ERROR;
    }
    cgcore::ParsedInput input = cgcore::parse_input(
        json, bound > 0 ? bound : cgcore::kDefaultAgentBound);
    *out = new cgcore_instance{std::move(input)};
    return CGCORE_OK;
  });
}

void cgcore_instance_free(cgcore_instance* instance) { delete instance; }

void cgcore_string_free(char* text) { std::free(text); }

cgcore_status cgcore_run(const cgcore_instance* instance,
                         const cgcore_run_options* options,
                         char** report_json, char** error_message) {
  if (report_json != nullptr) *report_json = nullptr;
  return guarded(error_message, [&]() -> cgcore_status {
    if (instance == nullptr || options == nullptr ||
        options->command == nullptr || report_json == nullptr) {
      set_message(error_message,
                  "instance, options, command and report_json must be "
                  "non-NULL");
      return CGCORE_INPUT_ERROR;
    }
    cgcore::RunRequest request;
    request.command = options->command;
    if (options->imputation_json != nullptr) {
      request.imputation_json = options->imputation_json;
    }
    if (options->bound > 0) request.bound = options->bound;
    if (options->trials >= 0) request.trials = options->trials;
    request.seed = options->seed;
    const cgcore::RunOutcome outcome =
        cgcore::run_command(instance->input, request);
    *report_json = copy_string(outcome.report_json);
    return outcome.exit_status == 0 ? CGCORE_OK : CGCORE_THEOREM_FAILURE;
  });
}

}  // extern "C"
