#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <json.hpp>

#include <cgcore/cgcore.h>

namespace {

using Json = nlohmann::json;

struct Parsed {
  cgcore_instance* instance = nullptr;
  cgcore_status status = CGCORE_OK;
  std::string message;

  explicit Parsed(const char* text, int bound = 0) {
    char* error = nullptr;
    status = cgcore_parse_instance(text, bound, &instance, &error);
    if (error != nullptr) {
      message = error;
      cgcore_string_free(error);
    }
  }
  ~Parsed() { cgcore_instance_free(instance); }
  Parsed(const Parsed&) = delete;
  Parsed& operator=(const Parsed&) = delete;
};

struct Run {
  cgcore_status status = CGCORE_OK;
  std::string report;
  std::string message;

  Run(const Parsed& parsed, cgcore_run_options options) {
    char* report_json = nullptr;
    char* error = nullptr;
    status = cgcore_run(parsed.instance, &options, &report_json, &error);
    if (report_json != nullptr) {
      report = report_json;
      cgcore_string_free(report_json);
    }
    if (error != nullptr) {
      message = error;
      cgcore_string_free(error);
    }
  }
};

cgcore_run_options options_for(const char* command) {
  cgcore_run_options options{};
  options.command = command;
  options.imputation_json = nullptr;
  options.bound = 0;
  options.trials = -1;
  options.seed = 0;
  return options;
}

const char* kTriangle = R"({"n": 3, "edges": [[0,1],[1,2],[0,2]]})";
const char* kC5 = R"({"n": 5, "edges": [[0,1],[1,2],[2,3],[3,4],[4,0]]})";

Json result_of(const Run& run) {
  return Json::parse(run.report).at("result");
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::strcmp(cgcore_version(), "0.1.0") == 0);
  CHECK(std::strcmp(cgcore_status_name(CGCORE_OK), "ok") == 0);
  CHECK(std::strcmp(cgcore_status_name(CGCORE_THEOREM_FAILURE),
                    "theorem-failure") == 0);
  CHECK(std::strcmp(cgcore_status_name(CGCORE_INPUT_ERROR), "input-error") ==
        0);
  CHECK(std::strcmp(cgcore_status_name(CGCORE_RESOURCE_ERROR),
                    "resource-error") == 0);
  CHECK(std::strcmp(cgcore_status_name(CGCORE_INTERNAL_ERROR),
                    "internal-error") == 0);
}

TEST_CASE("parse and solve through the C surface") {
  Parsed parsed(kTriangle);
  REQUIRE(parsed.status == CGCORE_OK);
  REQUIRE(parsed.instance != nullptr);
  CHECK(parsed.message.empty());

  const Run run(parsed, options_for("solve"));
  CHECK(run.status == CGCORE_OK);
  CHECK(run.message.empty());
  const Json doc = Json::parse(run.report);
  CHECK(doc.at("command") == "solve");
  CHECK(doc.at("instance") == Json{{"kind", "stable_set"}, {"agents", 3}});
  CHECK(doc.at("result").at("lp_value") == "1");
  CHECK(doc.at("result").at("lp_matches_worth") == true);
}

TEST_CASE("theorem failures still produce a report") {
  Parsed parsed(kC5);
  REQUIRE(parsed.status == CGCORE_OK);
  const Run run(parsed, options_for("tdi-witness"));
  CHECK(run.status == CGCORE_THEOREM_FAILURE);
  CHECK(!run.report.empty());
  CHECK(result_of(run).at("found") == false);
  CHECK(result_of(run).at("min_integral_value") == "3");

  const Run audit(parsed, options_for("audit"));
  CHECK(audit.status == CGCORE_OK);
  CHECK(result_of(audit).at("trials") == 100);
  CHECK(result_of(audit).at("ok") == true);
}

TEST_CASE("verify-core takes the imputation through the options") {
  Parsed parsed(kTriangle);
  REQUIRE(parsed.status == CGCORE_OK);
  cgcore_run_options options = options_for("verify-core");
  options.imputation_json =
      R"({"type": "satisfaction", "values": {"0,1,2": "1"}})";
  const Run run(parsed, options);
  CHECK(run.status == CGCORE_OK);
  CHECK(result_of(run).at("in_core") == true);

  const Run missing(parsed, options_for("verify-core"));
  CHECK(missing.status == CGCORE_INPUT_ERROR);
  CHECK(missing.report.empty());
  CHECK(!missing.message.empty());
}

TEST_CASE("error statuses and messages") {
  Parsed bad_json("{\"n\": 2,");
  CHECK(bad_json.status == CGCORE_INPUT_ERROR);
  CHECK(bad_json.instance == nullptr);
  CHECK(!bad_json.message.empty());

  Parsed bad_weight(R"({"n": 1, "weights": ["1/0"]})");
  CHECK(bad_weight.status == CGCORE_INPUT_ERROR);

  Parsed too_big(R"({"kind": "uniform", "n": 11, "k": 1})");
  CHECK(too_big.status == CGCORE_RESOURCE_ERROR);
  Parsed unlocked(R"({"kind": "uniform", "n": 11, "k": 1})", 11);
  CHECK(unlocked.status == CGCORE_OK);

  CHECK(cgcore_parse_instance(nullptr, 0, nullptr, nullptr) ==
        CGCORE_INPUT_ERROR);

  Parsed parsed(kTriangle);
  const Run unknown(parsed, options_for("explode"));
  CHECK(unknown.status == CGCORE_INPUT_ERROR);
  CHECK(unknown.report.empty());

  char* report = nullptr;
  char* error = nullptr;
  CHECK(cgcore_run(parsed.instance, nullptr, &report, &error) ==
        CGCORE_INPUT_ERROR);
  CHECK(report == nullptr);
  cgcore_string_free(error);

  cgcore_instance_free(nullptr);
  cgcore_string_free(nullptr);
}

TEST_CASE("seeded runs replay byte-for-byte apart from elapsed time") {
  Parsed parsed(kC5);
  cgcore_run_options options = options_for("audit");
  options.trials = 20;
  options.seed = 9;
  const Run first(parsed, options);
  const Run second(parsed, options);
  CHECK(first.status == second.status);
  Json a = Json::parse(first.report);
  Json b = Json::parse(second.report);
  a.erase("elapsed_ms");
  b.erase("elapsed_ms");
  CHECK(a == b);
}
