#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <cgcore/cgcore.h>

namespace {

using Json = nlohmann::json;

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = buffer.str();
  return true;
}

std::string inline_text(const Json& value) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_array()) {
    std::string out = "[";
    for (std::size_t i = 0; i < value.size(); ++i) {
      if (i > 0) out += ", ";
      out += inline_text(value.at(i));
    }
    return out + "]";
  }
  return value.dump();
}

void render_text(std::ostream& os, const Json& object, int depth) {
  const std::string indent(static_cast<std::size_t>(depth) * 2, ' ');
  for (const auto& item : object.items()) {
    const Json& value = item.value();
    if (value.is_object() && !value.empty()) {
      os << indent << item.key() << ":\n";
      render_text(os, value, depth + 1);
    } else {
      os << indent << item.key() << ": " << inline_text(value) << "\n";
    }
  }
}

int fail(cgcore_status status, char* message) {
  std::cerr << "error (" << cgcore_status_name(status)
            << "): " << (message != nullptr ? message : "unknown") << "\n";
  cgcore_string_free(message);
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact core imputations for combinatorial cooperative games"};
  app.require_subcommand(1);

  std::string input;
  std::string imputation;
  std::string format = "json";
  int bound = 0;
  long long trials = -1;
  unsigned long long seed = 0;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"solve", "solve the relaxation and package its optimal dual"},
      {"verify-core", "check an imputation against every coalition"},
      {"audit", "compare brute-force core membership with dual optimality"},
      {"check-perfect", "perfection check with an odd-cycle certificate"},
      {"check-matroid", "verify the rank axioms"},
      {"tdi-witness", "search for an integral optimal dual"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--input", input, "instance file (JSON)")->required();
    if (name == "verify-core") {
      sub->add_option("--imputation", imputation, "imputation file (JSON)")
          ->required();
    }
    sub->add_option("--format", format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--bound", bound,
                    "raise the exhaustive-step size bound");
    if (name == "audit") {
      sub->add_option("--trials", trials,
                      "sampled imputations (default 100)");
      sub->add_option("--seed", seed, "sampling seed (default 0)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return static_cast<int>(CGCORE_INPUT_ERROR);
  }
  const std::string command = app.get_subcommands().front()->get_name();

  std::string input_text;
  if (!read_file(input, input_text)) {
    std::cerr << "error (input-error): cannot read " << input << "\n";
    return static_cast<int>(CGCORE_INPUT_ERROR);
  }
  std::string imputation_text;
  if (command == "verify-core" && !read_file(imputation, imputation_text)) {
    std::cerr << "error (input-error): cannot read " << imputation << "\n";
    return static_cast<int>(CGCORE_INPUT_ERROR);
  }

  cgcore_instance* instance = nullptr;
  char* message = nullptr;
  cgcore_status status =
      cgcore_parse_instance(input_text.c_str(), bound, &instance, &message);
  if (status != CGCORE_OK) return fail(status, message);

  cgcore_run_options options{};
  options.command = command.c_str();
  options.imputation_json =
      command == "verify-core" ? imputation_text.c_str() : nullptr;
  options.bound = bound;
  options.trials = trials;
  options.seed = seed;

  char* report = nullptr;
  status = cgcore_run(instance, &options, &report, &message);
  cgcore_instance_free(instance);
  if (status != CGCORE_OK && status != CGCORE_THEOREM_FAILURE) {
    return fail(status, message);
  }
  if (format == "text") {
    render_text(std::cout, Json::parse(report), 0);
  } else {
    std::cout << report;
  }
  cgcore_string_free(report);
  return static_cast<int>(status);
}
