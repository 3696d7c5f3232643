#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "rbcat_tools/runner.hpp"

using namespace rbcat::tools;
namespace fs = std::filesystem;

namespace {

ConfigSource from_json(const std::string& text) {
  ConfigSource src;
  src.text = text;
  src.data = Config::parse(text);
  return src;
}

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_text(const std::string& text) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(from_json(text), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) { return fs::temp_directory_path() / ("rbcat_cli_" + name); }

}  // namespace

TEST_CASE("chi prints the prefix") {
  const auto r = run_text(R"({"subcommand":"chi","language":"empty","bits":8})");
  CHECK(r.code == kSuccess);
  CHECK(r.out == "00000000\n");
}

TEST_CASE("check reports Met for sparse on full") {
  const auto r = run_text(R"({"subcommand":"check","strategy":"sparse","language":"full","horizon":8})");
  CHECK(r.code == kSuccess);
  const auto rec = Config::parse(r.out);
  CHECK(rec["verdict"] == "Met");
  CHECK(r.err.find("Met{λ}") != std::string::npos);
}

TEST_CASE("exit code contract") {
  CHECK(run_text(R"({"subcommand":"check","strategy":"singleton:language=parity","language":"parity",
                     "horizon":32,"expect":"met"})")
            .code == kPropertyFail);
  CHECK(run_text(R"({"subcommand":"check","strategy":"nope","language":"full","horizon":8})").code == kConfigError);
  CHECK(run_text(R"({"subcommand":"fly"})").code == kConfigError);
  CHECK(run_text(R"({"subcommand":"chi","language":"full","bits":8,"horizon":3})").code == kConfigError);
  CHECK(run_text(R"({"subcommand":"martingale","language":"full","horizon":8,"depth":6,
                     "martingale":"proportional:fraction=1/3"})")
            .code == kSuccess);
}

TEST_CASE("validate diagnostics") {
  const auto unknown = validate(from_json("{\n\"subcommand\": \"check\",\n\"strategy\": \"mystery\",\n"
                                          "\"language\": \"full\", \"horizon\": 4}"));
  REQUIRE(unknown.size() == 1);
  CHECK(unknown[0].message.find("mystery") != std::string::npos);
  CHECK(unknown[0].line == std::optional<std::size_t>{3});
  const auto big = validate(from_json(R"({"subcommand":"circuit-diag","n":10})"));
  REQUIRE(big.size() == 1);
  CHECK(big[0].message.find("ScaleGuard") != std::string::npos);
  CHECK(validate(from_json(R"({"subcommand":"verify"})")).empty());
  CHECK(validate(from_json(R"({"subcommand":"chi","language":"empty","bits":4})")).empty());
  const auto missing = validate(from_json(R"({"subcommand":"chi","language":"empty"})"));
  REQUIRE(missing.size() == 1);
  CHECK(missing[0].message.find("bits") != std::string::npos);
}

TEST_CASE("syntax errors carry a line") {
  const auto path = scratch("bad.json");
  {
    std::ofstream o(path);
    o << "{\n  \"subcommand\": \"chi\",\n  \"bits\": 8,,\n}\n";
  }
  std::vector<Diagnostic> diags;
  (void)load_config(path, diags);
  REQUIRE(diags.size() == 1);
  CHECK(diags[0].line == std::optional<std::size_t>{3});
  fs::remove(path);
}

TEST_CASE("game transcript schema and determinism") {
  const auto path = scratch("game.jsonl");
  const std::string cfg = R"({"subcommand":"game","strategy":"singleton-family","adversary":"random","seed":3,
      "horizon":256,"output":{"jsonl":")" + path.string() + "\"}}";
  REQUIRE(run_text(cfg).code == kSuccess);
  const std::string first = slurp(path);
  REQUIRE(run_text(cfg).code == kSuccess);
  CHECK(slurp(path) == first);
  std::istringstream lines(first);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const auto rec = Config::parse(line);
    std::vector<std::string> keys;
    for (const auto& [k, v] : rec.items()) keys.push_back(k);
    REQUIRE(keys == std::vector<std::string>{"move_index", "player", "state_length", "extension_length"});
    ++count;
  }
  CHECK(count > 0);
  fs::remove(path);
}

TEST_CASE("capital CSV has horizon + 1 rows") {
  const auto path = scratch("capital.csv");
  const auto r = run_text(R"({"subcommand":"martingale","language":"generic:K=2","horizon":100,"output":{"csv":")" +
                          path.string() + "\"}}");
  REQUIRE(r.code == kSuccess);
  std::istringstream in(slurp(path));
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 1 + 101);
  fs::remove(path);
}

TEST_CASE("circuit-diag output is independent of workers") {
  const auto one = run_text(R"({"subcommand":"circuit-diag","n":3,"size":2,"sigma":"0110","workers":1})");
  const auto four = run_text(R"({"subcommand":"circuit-diag","n":3,"size":2,"sigma":"0110","workers":4})");
  CHECK(one.code == kSuccess);
  CHECK(one.out == four.out);
  CHECK(std::count(one.out.begin(), one.out.end(), '\n') == 8);
}

TEST_CASE("verify halving override") {
  const auto r = run_text(R"({"subcommand":"verify","suite":"halving","n":2,"size":3})");
  CHECK(r.code == kSuccess);
  CHECK(r.out.find("4762 -> 1804 -> 488 -> 121 -> 0") != std::string::npos);
}

TEST_CASE("diag and strategy subcommands") {
  const auto d = run_text(R"({"subcommand":"diag","strategy":"ones","blocks":2})");
  CHECK(d.code == kSuccess);
  CHECK(d.out == "0101100\n");
  const auto l = run_text(R"({"subcommand":"diag","strategy":"sparse","i_max":3})");
  CHECK(l.code == kSuccess);
  const auto s = run_text(R"({"subcommand":"strategy","strategy":"sparse","sigma":"0110"})");
  CHECK(s.code == kSuccess);
  CHECK(Config::parse(s.out)["extension"] == "1111");
  CHECK(run_text(R"({"subcommand":"strategy","strategy":"sigma2:a=empty","sigma":"0","cap":64})").code ==
        kPropertyFail);
}
