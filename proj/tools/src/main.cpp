#include <cstdint>
#include <iostream>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "rbcat_tools/runner.hpp"

namespace {

using rbcat::tools::ConfigSource;
using rbcat::tools::Diagnostic;

struct Overrides {
  std::string config_path;
  std::map<std::string, std::uint64_t> numbers;
  std::map<std::string, std::string> texts;
  std::map<std::string, std::string> outputs;
};

std::string flag_name(const std::string& key) {
  std::string out = "--" + key;
  for (char& ch : out) {
    if (ch == '_') ch = '-';
  }
  return out;
}

CLI::App* add_config_subcommand(CLI::App& app, const std::string& name, const std::string& help, Overrides& o) {
  CLI::App* sub = app.add_subcommand(name, help);
  sub->add_option("--config", o.config_path, "JSON experiment config; flags override its keys");
  for (const auto& info : rbcat::tools::subcommand_keys(name)) {
    if (info.numeric) {
      sub->add_option(flag_name(info.key), o.numbers[info.key]);
    } else {
      sub->add_option(flag_name(info.key), o.texts[info.key]);
    }
  }
  sub->add_option("--jsonl", o.outputs["jsonl"], "write JSONL records here");
  sub->add_option("--csv", o.outputs["csv"], "write the capital CSV here");
  sub->add_option("--prefix-file", o.outputs["prefix"], "write the characteristic prefix here");
  return sub;
}

ConfigSource assemble(const std::string& subcommand, const Overrides& o, const CLI::App& sub,
                      std::vector<Diagnostic>& diags) {
  ConfigSource src;
  if (!o.config_path.empty()) src = rbcat::tools::load_config(o.config_path, diags);
  if (!src.data.is_object()) return src;
  if (!subcommand.empty()) src.data["subcommand"] = subcommand;
  for (const auto& [key, value] : o.numbers) {
    if (sub.count(flag_name(key))) src.data[key] = value;
  }
  for (const auto& [key, value] : o.texts) {
    if (sub.count(flag_name(key))) src.data[key] = value;
  }
  for (const auto& [key, value] : o.outputs) {
    const std::string flag = key == "prefix" ? "--prefix-file" : "--" + key;
    if (sub.count(flag)) src.data["output"][key] = value;
  }
  return src;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Resource-bounded category workbench"};
  app.require_subcommand(1);
  std::map<std::string, Overrides> overrides;
  std::map<std::string, CLI::App*> subs;
  const std::map<std::string, std::string> help = {
      {"chi", "print a characteristic prefix"},
      {"strategy", "apply a strategy to a prefix and meter it"},
      {"check", "meets/avoids verdict of a strategy against a language"},
      {"game", "play a Banach-Mazur game and emit the transcript"},
      {"diag", "build a diagonal language and check it meets every h_i"},
      {"circuit-diag", "per-bit consistent-set sizes of a circuit diagonalizer"},
      {"martingale", "capital trace CSV of a martingale along a language"},
      {"verify", "run invariant suites"},
  };
  for (const auto& name : rbcat::tools::subcommand_names()) {
    subs[name] = add_config_subcommand(app, name, help.at(name), overrides[name]);
  }
  Overrides run_opts;
  CLI::App* run_cmd = app.add_subcommand("run", "execute the subcommand named inside a config");
  run_cmd->add_option("--config", run_opts.config_path, "JSON experiment config")->required();
  Overrides validate_opts;
  CLI::App* validate_cmd = app.add_subcommand("validate", "list config diagnostics without running");
  validate_cmd->add_option("--config", validate_opts.config_path, "JSON experiment config")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : rbcat::tools::kConfigError;
  }

  std::vector<Diagnostic> diags;
  if (validate_cmd->parsed() || run_cmd->parsed()) {
    const bool validating = validate_cmd->parsed();
    const Overrides& o = validating ? validate_opts : run_opts;
    const ConfigSource src = assemble("", o, validating ? *validate_cmd : *run_cmd, diags);
    if (diags.empty() && validating) diags = rbcat::tools::validate(src);
    if (!diags.empty()) {
      for (const auto& d : diags) std::cerr << "config error: " << d.to_string() << '\n';
      return rbcat::tools::kConfigError;
    }
    if (validating) {
      std::cout << "config OK\n";
      return rbcat::tools::kSuccess;
    }
    return rbcat::tools::run(src, std::cout, std::cerr);
  }
  for (const auto& [name, sub] : subs) {
    if (!sub->parsed()) continue;
    const ConfigSource src = assemble(name, overrides[name], *sub, diags);
    if (!diags.empty()) {
      for (const auto& d : diags) std::cerr << "config error: " << d.to_string() << '\n';
      return rbcat::tools::kConfigError;
    }
    return rbcat::tools::run(src, std::cout, std::cerr);
  }
  return rbcat::tools::kConfigError;
}
