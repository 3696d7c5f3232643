#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace rbcat::tools {

using Config = nlohmann::ordered_json;

/// One problem found in a configuration. `line` is 1-based when the
/// offending key could be located in the source text.
struct Diagnostic {
  std::string field;
  std::string message;
  std::optional<std::size_t> line;

  std::string to_string() const;
};

/// Parsed config plus the text it came from (used to attach line numbers).
struct ConfigSource {
  Config data = Config::object();
  std::string text;
  std::string origin;
};

/// Reads a JSON config file. Syntax errors are reported as diagnostics with
/// the line of the failure; `data` is left empty in that case.
ConfigSource load_config(const std::filesystem::path& path, std::vector<Diagnostic>& diagnostics);

/// Unknown keys, wrong types, unknown registry names, missing parameters and
/// desk-scale cap violations. Empty result means run() would start.
std::vector<Diagnostic> validate(const ConfigSource& config);

/// Exit codes returned by run().
enum ExitCode : int { kSuccess = 0, kPropertyFail = 1, kConfigError = 2 };

/// Validates, then executes config["subcommand"]. Artifacts go to the paths
/// under config["output"]; anything without a path goes to `out`.
int run(const ConfigSource& config, std::ostream& out, std::ostream& err);

/// Names accepted in config["subcommand"].
std::vector<std::string> subcommand_names();

struct KeyInfo {
  std::string key;
  bool numeric = false;
};
/// Top-level config keys a subcommand accepts, apart from "subcommand" and
/// "output".
std::vector<KeyInfo> subcommand_keys(const std::string& subcommand);

}  // namespace rbcat::tools
