#include "rbcat_tools/runner.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "rbcat/circuits.hpp"
#include "rbcat/diagonal.hpp"
#include "rbcat/errors.hpp"
#include "rbcat/game.hpp"
#include "rbcat/martingale.hpp"
#include "rbcat/zoo.hpp"
#include "rbcat_tools/suites.hpp"

namespace rbcat::tools {

std::string Diagnostic::to_string() const {
  std::string out;
  if (line) out += "line " + std::to_string(*line) + ": ";
  if (!field.empty()) out += field + ": ";
  return out + message;
}

namespace {

enum class Kind { Natural, Text, Bits, Spec, Output };

struct KeyRule {
  Kind kind;
  std::vector<std::string> subcommands;  // empty: every subcommand
};

const std::map<std::string, KeyRule>& key_rules() {
  static const std::map<std::string, KeyRule> rules = {
      {"subcommand", {Kind::Text, {}}},
      {"seed", {Kind::Natural, {}}},
      {"workers", {Kind::Natural, {}}},
      {"output", {Kind::Output, {}}},
      {"language", {Kind::Spec, {"chi", "check", "martingale"}}},
      {"strategy", {Kind::Spec, {"strategy", "check", "game", "diag"}}},
      {"martingale", {Kind::Spec, {"martingale"}}},
      {"bits", {Kind::Natural, {"chi"}}},
      {"sigma", {Kind::Bits, {"strategy", "check", "circuit-diag", "verify"}}},
      {"index", {Kind::Natural, {"strategy", "check"}}},
      {"bound", {Kind::Text, {"strategy"}}},
      {"cap", {Kind::Natural, {"strategy", "check", "game", "diag"}}},
      {"horizon", {Kind::Natural, {"check", "game", "martingale"}}},
      {"min_length", {Kind::Natural, {"check"}}},
      {"expect", {Kind::Text, {"check"}}},
      {"adversary", {Kind::Text, {"game"}}},
      {"conversion", {Kind::Text, {"game"}}},
      {"max_moves", {Kind::Natural, {"game"}}},
      {"meet_upto", {Kind::Natural, {"game", "diag"}}},
      {"mode", {Kind::Text, {"diag", "circuit-diag"}}},
      {"blocks", {Kind::Natural, {"diag"}}},
      {"i_max", {Kind::Natural, {"diag"}}},
      {"positions", {Kind::Natural, {"diag"}}},
      {"n", {Kind::Natural, {"circuit-diag", "verify"}}},
      {"size", {Kind::Natural, {"circuit-diag", "verify"}}},
      {"c", {Kind::Natural, {"circuit-diag"}}},
      {"b", {Kind::Natural, {"circuit-diag"}}},
      {"s", {Kind::Text, {"circuit-diag"}}},
      {"max_size", {Kind::Natural, {"circuit-diag"}}},
      {"max_z_length", {Kind::Natural, {"circuit-diag"}}},
      {"max_extension", {Kind::Natural, {"circuit-diag"}}},
      {"max_width", {Kind::Natural, {"circuit-diag"}}},
      {"depth", {Kind::Natural, {"martingale"}}},
      {"suite", {Kind::Text, {"verify"}}},
  };
  return rules;
}

const std::set<std::string> kOutputKeys = {"jsonl", "csv", "prefix"};

constexpr Natural kMaxChiBits = Natural{1} << 24;
constexpr Natural kMaxHorizon = Natural{1} << 20;
constexpr Natural kMaxCapitalHorizon = Natural{1} << 16;
constexpr unsigned kMaxWorkers = 64;

using Spec = std::pair<std::string, ParamMap>;

struct Settings {
  std::string subcommand;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::map<std::string, std::string> output;
  std::map<std::string, Natural> numbers;
  std::map<std::string, std::string> texts;
  std::map<std::string, Spec> specs;
  std::optional<BitString> sigma;

  Natural num(const std::string& key, Natural fallback) const {
    auto it = numbers.find(key);
    return it == numbers.end() ? fallback : it->second;
  }
  bool has(const std::string& key) const {
    return numbers.count(key) || texts.count(key) || specs.count(key) || (key == "sigma" && sigma);
  }
  std::string text(const std::string& key, const std::string& fallback) const {
    auto it = texts.find(key);
    return it == texts.end() ? fallback : it->second;
  }
};

std::optional<std::size_t> line_of(const std::string& text, const std::string& key) {
  const auto at = text.find("\"" + key + "\"");
  if (at == std::string::npos) return std::nullopt;
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(at), '\n'));
}

struct Collector {
  const ConfigSource& src;
  std::vector<Diagnostic>& out;

  void add(const std::string& field, const std::string& message) {
    out.push_back({field, message, field.empty() ? std::nullopt : line_of(src.text, field)});
  }
};

std::string scalar_text(const Config& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_boolean()) return v.get<bool>() ? "1" : "0";
  return v.dump();
}

std::optional<Spec> read_spec(const std::string& key, const Config& v, Collector& c) {
  try {
    if (v.is_string()) return parse_spec(v.get<std::string>());
    if (v.is_object()) {
      if (!v.contains("name") || !v["name"].is_string()) {
        c.add(key, "spec object needs a string 'name'");
        return std::nullopt;
      }
      Spec spec{v["name"].get<std::string>(), {}};
      for (const auto& [k, pv] : v.items()) {
        if (k == "name") continue;
        if (k != "params") {
          c.add(key, "unknown spec field '" + k + "'");
          return std::nullopt;
        }
        if (!pv.is_object()) {
          c.add(key, "'params' must be an object");
          return std::nullopt;
        }
        for (const auto& [pk, pval] : pv.items()) {
          if (pval.is_object() || pval.is_array() || pval.is_null()) {
            c.add(key, "parameter '" + pk + "' must be a scalar");
            return std::nullopt;
          }
          spec.second[pk] = scalar_text(pval);
        }
      }
      return spec;
    }
    c.add(key, "expected a spec string or {name, params} object");
  } catch (const ConfigError& e) {
    c.add(key, e.what());
  }
  return std::nullopt;
}

bool applies(const KeyRule& rule, const std::string& sub) {
  return rule.subcommands.empty() ||
         std::find(rule.subcommands.begin(), rule.subcommands.end(), sub) != rule.subcommands.end();
}

Settings parse_settings(const ConfigSource& src, std::vector<Diagnostic>& diags) {
  Collector c{src, diags};
  Settings s;
  const Config& d = src.data;
  if (!d.is_object()) {
    c.add("", "config must be a JSON object");
    return s;
  }
  if (!d.contains("subcommand") || !d["subcommand"].is_string()) {
    c.add("subcommand", "missing or not a string");
    return s;
  }
  s.subcommand = d["subcommand"].get<std::string>();
  const auto subs = subcommand_names();
  if (std::find(subs.begin(), subs.end(), s.subcommand) == subs.end()) {
    c.add("subcommand", "unknown subcommand '" + s.subcommand + "'");
    return s;
  }
  for (const auto& [key, v] : d.items()) {
    auto rule = key_rules().find(key);
    if (rule == key_rules().end()) {
      c.add(key, "unknown key '" + key + "'");
      continue;
    }
    if (!applies(rule->second, s.subcommand)) {
      c.add(key, "key '" + key + "' is not used by subcommand '" + s.subcommand + "'");
      continue;
    }
    if (key == "subcommand") continue;
    switch (rule->second.kind) {
      case Kind::Natural:
        if (!v.is_number_unsigned()) {
          c.add(key, "expected a nonnegative integer");
        } else {
          s.numbers[key] = v.get<Natural>();
        }
        break;
      case Kind::Text:
        if (!v.is_string()) c.add(key, "expected a string");
        else s.texts[key] = v.get<std::string>();
        break;
      case Kind::Bits:
        if (!v.is_string()) {
          c.add(key, "expected a string of 0/1");
        } else {
          try {
            s.sigma = BitString::parse(v.get<std::string>());
          } catch (const std::exception&) {
            c.add(key, "expected a string of 0/1");
          }
        }
        break;
      case Kind::Spec:
        if (auto spec = read_spec(key, v, c)) s.specs[key] = *spec;
        break;
      case Kind::Output:
        if (!v.is_object()) {
          c.add(key, "expected an object with jsonl/csv/prefix paths");
          break;
        }
        for (const auto& [ok, ov] : v.items()) {
          if (!kOutputKeys.count(ok)) c.add(key, "unknown output '" + ok + "'");
          else if (!ov.is_string()) c.add(key, "output '" + ok + "' must be a path string");
          else s.output[ok] = ov.get<std::string>();
        }
        break;
    }
  }
  if (s.numbers.count("seed")) s.seed = s.numbers["seed"];
  s.workers = static_cast<unsigned>(s.num("workers", 1));
  return s;
}

void require(const Settings& s, Collector& c, std::initializer_list<const char*> keys) {
  for (const char* k : keys) {
    if (!s.has(k)) c.add("", "missing parameter '" + std::string(k) + "' for subcommand '" + s.subcommand + "'");
  }
}

void require_choice(const Settings& s, Collector& c, const std::string& key,
                    std::initializer_list<const char*> choices) {
  if (!s.texts.count(key)) return;
  for (const char* ch : choices) {
    if (s.texts.at(key) == ch) return;
  }
  std::string list;
  for (const char* ch : choices) list += (list.empty() ? "" : ", ") + std::string(ch);
  c.add(key, "unknown value '" + s.texts.at(key) + "' (expected one of " + list + ")");
}

void cap(Collector& c, const std::string& key, Natural value, Natural limit) {
  if (value > limit) {
    c.add(key, "ScaleGuard: " + key + "=" + std::to_string(value) + " exceeds the cap " + std::to_string(limit));
  }
}

Martingale make_martingale(const Spec& spec) {
  if (spec.first == "density" || spec.first == "constant") {
    if (!spec.second.empty()) throw ConfigError(spec.first + ": takes no parameters");
    return spec.first == "density" ? density_bettor() : constant_martingale(1);
  }
  if (spec.first == "proportional") {
    for (const auto& [k, v] : spec.second) {
      if (k != "fraction") throw ConfigError("proportional: unknown parameter '" + k + "'");
    }
    auto it = spec.second.find("fraction");
    Rational f(1, 2);
    if (it != spec.second.end()) {
      try {
        f = Rational(it->second);
      } catch (const std::exception&) {
        throw ConfigError("proportional: bad fraction '" + it->second + "'");
      }
    }
    if (f < -1 || f > 1) throw ConfigError("proportional: fraction must lie in [-1, 1]");
    return proportional_bettor(f);
  }
  throw ConfigError("unknown martingale '" + spec.first + "' (expected density, constant, proportional)");
}

std::vector<Diagnostic> semantic_checks(const Settings& s, const ConfigSource& src) {
  std::vector<Diagnostic> diags;
  Collector c{src, diags};
  const std::string& sub = s.subcommand;
  if (s.workers == 0 || s.workers > kMaxWorkers) c.add("workers", "must be in 1.." + std::to_string(kMaxWorkers));

  std::optional<StrategySpec> strategy;
  for (const auto& [key, spec] : s.specs) {
    try {
      if (key == "strategy") strategy = make_strategy(spec.first, spec.second);
      else if (key == "language") (void)make_language(spec.first, spec.second);
      else (void)make_martingale(spec);
    } catch (const std::exception& e) {
      c.add(key, e.what());
    }
  }
  const bool local = strategy && std::holds_alternative<LocalConstructor>(strategy->impl);

  if (sub == "chi") {
    require(s, c, {"language", "bits"});
    cap(c, "bits", s.num("bits", 0), kMaxChiBits);
  } else if (sub == "strategy") {
    require(s, c, {"strategy"});
    if (s.texts.count("bound")) {
      try {
        (void)BoundFamily::parse(s.texts.at("bound"));
      } catch (const std::exception& e) {
        c.add("bound", e.what());
      }
    }
  } else if (sub == "check") {
    require(s, c, {"strategy", "language", "horizon"});
    cap(c, "horizon", s.num("horizon", 0), kMaxHorizon);
    require_choice(s, c, "expect", {"met", "not-met"});
  } else if (sub == "game") {
    require(s, c, {"strategy"});
    cap(c, "horizon", s.num("horizon", 0), kMaxHorizon);
    cap(c, "max_moves", s.num("max_moves", 0), kMaxHorizon);
    require_choice(s, c, "adversary", {"identity", "append-0", "random"});
    require_choice(s, c, "conversion", {"global", "local"});
    if (s.text("conversion", "global") == "local" && strategy && !local) {
      c.add("conversion", "local conversion needs a locally computable strategy");
    }
  } else if (sub == "diag") {
    require(s, c, {"strategy"});
    require_choice(s, c, "mode", {"global", "local"});
    if (s.text("mode", local ? "local" : "global") == "local" && strategy && !local) {
      c.add("mode", "local diagonalization needs a locally computable strategy");
    }
    cap(c, "blocks", s.num("blocks", 0), DiagCaps{}.max_block);
    cap(c, "i_max", s.num("i_max", 0), 8);
    cap(c, "positions", s.num("positions", 0), kMaxHorizon);
    if (s.num("meet_upto", 0) > std::max(s.num("blocks", 10), s.num("i_max", 4))) {
      c.add("meet_upto", "exceeds the number of constructed blocks");
    }
  } else if (sub == "circuit-diag") {
    require_choice(s, c, "mode", {"halving", "size", "derand"});
    const std::string mode = s.text("mode", "halving");
    const CircuitCaps caps;
    if (mode == "halving") {
      cap(c, "n", s.num("n", 2), caps.max_inputs);
      cap(c, "size", s.num("size", 3), caps.max_size);
    } else if (mode == "size") {
      cap(c, "max_z_length", s.num("max_z_length", 3), caps.max_inputs);
      cap(c, "max_size", s.num("max_size", 5), caps.max_size);
      if (s.num("c", 1) == 0) c.add("c", "must be >= 1");
    } else if (mode == "derand") {
      cap(c, "max_width", s.num("max_width", 2), caps.max_inputs);
      cap(c, "max_size", s.num("max_size", 5), caps.max_size);
      if (s.num("b", 1) == 0) c.add("b", "must be >= 1");
      try {
        (void)parse_schedule(s.text("s", "4"));
      } catch (const ConfigError& e) {
        c.add("s", e.what());
      }
    }
    const char* modal[][2] = {{"n", "halving"},     {"size", "halving"},     {"c", "size"},
                              {"max_z_length", "size"}, {"max_extension", "size"}, {"b", "derand"},
                              {"s", "derand"},       {"max_width", "derand"}};
    for (const auto& [key, owner] : modal) {
      if (s.has(key) && mode != owner) c.add(key, "only used in mode '" + std::string(owner) + "'");
    }
  } else if (sub == "martingale") {
    require(s, c, {"language", "horizon"});
    cap(c, "horizon", s.num("horizon", 0), kMaxCapitalHorizon);
    cap(c, "depth", s.num("depth", 0), 14);
  } else if (sub == "verify") {
    const std::string suite = s.text("suite", "all");
    const auto names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
      c.add("suite", "unknown suite '" + suite + "'");
    }
    if ((s.has("n") || s.has("size") || s.has("sigma")) && suite != "halving") {
      c.add("suite", "n, size and sigma apply to the halving suite only");
    }
    if (s.has("n") != s.has("size")) c.add("", "halving overrides need both 'n' and 'size'");
    const CircuitCaps caps;
    cap(c, "n", s.num("n", 0), caps.max_inputs);
    cap(c, "size", s.num("size", 0), caps.max_size);
  }
  return diags;
}

// ---------------------------------------------------------------------------
// Artifact sinks

class Sink {
 public:
  Sink(const Settings& s, const std::string& which, std::ostream& fallback) : stream_(&fallback) {
    auto it = s.output.find(which);
    if (it != s.output.end()) {
      file_.open(it->second, std::ios::binary | std::ios::trunc);
      if (!file_) throw std::ios_base::failure("cannot open '" + it->second + "' for writing");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }
  void record(const Config& j) { *stream_ << j.dump() << '\n'; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw std::ios_base::failure("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

/// Swallows records when no path was configured for an auxiliary stream.
struct NullBuffer : std::streambuf {
  int overflow(int c) override { return c; }
};

std::string yes(bool b) { return b ? "yes" : "no"; }

int run_chi(const Settings& s, std::ostream& out) {
  const auto& spec = s.specs.at("language");
  const BitString prefix = chi_prefix(make_language(spec.first, spec.second), s.num("bits", 0));
  Sink sink(s, "prefix", out);
  sink.stream() << prefix.to_string() << '\n';
  sink.finish();
  return kSuccess;
}

int run_strategy(const Settings& s, std::ostream& out) {
  const auto& sp = s.specs.at("strategy");
  const StrategySpec spec = make_strategy(sp.first, sp.second);
  const BitString sigma = s.sigma.value_or(BitString{});
  const Natural index = s.num("index", 0);
  const Natural cap_bits = s.num("cap", Natural{1} << 16);
  BitString ext;
  MeterCounts counts;
  if (const auto* h = std::get_if<LocalConstructor>(&spec.impl)) {
    ext = materialize_local(*h, index, sigma, cap_bits);
    counts = measure_local(*h, index, sigma, cap_bits);
  } else {
    const IndexedConstructor indexed = as_indexed(spec, cap_bits);
    ext = indexed.extension(index, sigma);
    counts = measure_extension(indexed, index, sigma);
  }
  const BoundFamily bound = BoundFamily::parse(s.text("bound", "poly:2"));
  const MeterReport meter = meter_report(counts, bound, meter_argument_size(sigma.size(), index));
  Config rec;
  rec["strategy"] = sp.first;
  rec["index"] = index;
  rec["sigma_length"] = sigma.size();
  rec["extension_length"] = ext.size();
  rec["extension"] = ext.to_string();
  rec["queries"] = counts.queries;
  rec["emitted"] = counts.emitted;
  rec["steps"] = counts.steps;
  rec["bound"] = bound.to_string();
  rec["n"] = meter.n;
  rec["limit"] = meter.limit.str();
  rec["meter_violation"] = meter.violation;
  Sink sink(s, "jsonl", out);
  sink.record(rec);
  sink.finish();
  return kSuccess;
}

int run_check(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto& sp = s.specs.at("strategy");
  const auto& lp = s.specs.at("language");
  const StrategySpec spec = make_strategy(sp.first, sp.second);
  const Language lang = make_language(lp.first, lp.second);
  const Natural index = s.num("index", 0);
  const Natural horizon = s.num("horizon", 0);
  const Natural min_length = s.num("min_length", 0);
  const Natural cap_bits = s.num("cap", Natural{1} << 16);
  MeetsVerdict verdict;
  if (const auto* h = std::get_if<LocalConstructor>(&spec.impl)) {
    verdict = meets_check(*h, index, lang, horizon, min_length, cap_bits);
  } else {
    verdict = meets_check(as_indexed(spec, cap_bits).at(index), lang, horizon, min_length);
  }
  Config rec;
  rec["strategy"] = sp.first;
  rec["language"] = lp.first;
  rec["index"] = index;
  rec["horizon"] = horizon;
  rec["min_length"] = min_length;
  rec["verdict"] = verdict.met ? "Met" : "NotMetUpTo";
  rec["witness"] = verdict.witness ? Config(verdict.witness->to_string()) : Config(nullptr);
  if (s.sigma) {
    rec["sigma"] = s.sigma->to_string();
    rec["avoids"] = avoids_at(as_indexed(spec, cap_bits).at(index), lang, *s.sigma);
  }
  Sink sink(s, "jsonl", out);
  sink.record(rec);
  sink.finish();
  err << verdict.to_string() << '\n';
  if (s.texts.count("expect") && (s.texts.at("expect") == "met") != verdict.met) {
    err << "FAIL: expected " << s.texts.at("expect") << '\n';
    return kPropertyFail;
  }
  return kSuccess;
}

Constructor pick_adversary(const Settings& s) {
  const std::string name = s.text("adversary", "identity");
  if (name == "append-0") return append_zero_adversary();
  if (name == "random") return random_adversary(s.seed.value_or(7));
  return identity_adversary();
}

int run_game_cmd(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto& sp = s.specs.at("strategy");
  const StrategySpec spec = make_strategy(sp.first, sp.second);
  const Natural cap_bits = s.num("cap", Natural{1} << 16);
  const Natural horizon = s.num("horizon", Natural{1} << 10);
  const Natural meet_upto = s.num("meet_upto", 4);
  const bool local = s.text("conversion", "global") == "local";
  const Constructor f = pick_adversary(s);
  std::function<bool(Natural, const BitString&)> meets;
  Constructor g = identity_adversary();
  if (local) {
    const LocalConstructor h = std::get<LocalConstructor>(spec.impl);
    g = local_at(indexed_to_winning_loc(h), 0, cap_bits);
    meets = [h](Natural i, const BitString& chi) { return meets_prefix(h, i, chi).met; };
  } else {
    const IndexedConstructor h = as_indexed(spec, cap_bits);
    g = indexed_to_winning(h);
    meets = [h](Natural i, const BitString& chi) { return meets_prefix(h.at(i), chi).met; };
  }
  const GameTranscript t = run_game(f, g, s.num("max_moves", Natural{1} << 20), horizon);
  Sink transcript(s, "jsonl", out);
  for (const HalfMove& m : t.moves) {
    Config rec;
    rec["move_index"] = m.move_index;
    rec["player"] = m.player;
    rec["state_length"] = m.state_length;
    rec["extension_length"] = m.extension_length;
    transcript.record(rec);
  }
  transcript.finish();
  NullBuffer null_buffer;
  std::ostream discard(&null_buffer);
  Sink prefix(s, "prefix", discard);
  prefix.stream() << t.result_prefix.to_string() << '\n';
  prefix.finish();
  bool all_met = true;
  std::string met_list;
  for (Natural i = 0; i <= meet_upto; ++i) {
    const bool ok = meets(i, t.result_prefix);
    all_met = all_met && ok;
    met_list += ok ? '1' : '0';
  }
  const bool rounds = extends_all_rounds(t, f, g);
  err << "result " << t.result_prefix.size() << " bits after " << t.move_count() << " half-moves; meets h_0..h_"
      << meet_upto << ": " << met_list << "; rounds extend: " << yes(rounds) << '\n';
  return all_met && rounds ? kSuccess : kPropertyFail;
}

int run_diag(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto& sp = s.specs.at("strategy");
  const StrategySpec spec = make_strategy(sp.first, sp.second);
  const Natural cap_bits = s.num("cap", Natural{1} << 16);
  const bool is_local = std::holds_alternative<LocalConstructor>(spec.impl);
  const bool local = s.text("mode", is_local ? "local" : "global") == "local";
  BitString prefix;
  bool agree = false;
  bool all_met = true;
  NullBuffer null_buffer;
  std::ostream discard(&null_buffer);
  Sink records(s, "jsonl", discard);
  if (local) {
    const LocalConstructor h = std::get<LocalConstructor>(spec.impl);
    const Natural i_max = s.num("i_max", 4);
    const auto layout = local_diag_layout(h, i_max);
    prefix = diag_local_prefix(h, layout, cap_bits);
    agree = chi_prefix(diag_language_local(h, layout), prefix.size()) == prefix;
    for (Natural i = 0; i <= std::min(s.num("meet_upto", i_max), i_max); ++i) {
      const BitString tau = prefix.prefix(i == 0 ? 0 : layout.ends[i - 1]);
      const BitString w = materialize_local(h, i, tau, cap_bits);
      const bool met = (tau + w).is_prefix_of(prefix);
      all_met = all_met && met;
      Config rec;
      rec["index"] = i;
      rec["block_size"] = layout.f[i];
      rec["tau_length"] = tau.size();
      rec["extension_length"] = w.size();
      rec["met"] = met;
      records.record(rec);
    }
  } else {
    const IndexedConstructor h = as_indexed(spec, cap_bits);
    const auto blocks = static_cast<unsigned>(s.num("blocks", 10));
    prefix = diag_global_prefix(h, blocks);
    const Natural positions = std::min<Natural>(s.num("positions", Natural{1} << 10), prefix.size());
    agree = chi_prefix(diag_language_global(h), positions) == prefix.prefix(positions);
    for (Natural i = 1; i <= std::min<Natural>(s.num("meet_upto", 6), blocks); ++i) {
      const BitString tau = prefix.prefix((Natural{1} << i) - 1);
      const BitString w = h.extension(i, tau);
      const bool met = (tau + w).is_prefix_of(prefix);
      all_met = all_met && met;
      Config rec;
      rec["index"] = i;
      rec["block_size"] = Natural{1} << i;
      rec["tau_length"] = tau.size();
      rec["extension_length"] = w.size();
      rec["met"] = met;
      records.record(rec);
    }
  }
  records.finish();
  Sink sink(s, "prefix", out);
  sink.stream() << prefix.to_string() << '\n';
  sink.finish();
  err << (local ? "local" : "global") << " diagonal prefix " << prefix.size()
      << " bits; per-string membership agrees: " << yes(agree) << "; meets all checked h_i: " << yes(all_met)
      << '\n';
  return agree && all_met ? kSuccess : kPropertyFail;
}

Config step_record(const DiagStep& st) {
  Config rec;
  rec["position"] = st.position;
  rec["z"] = st.z.to_string();
  rec["inputs"] = st.inputs;
  rec["size"] = st.size;
  rec["before"] = st.before;
  rec["ones"] = st.ones;
  rec["zeros"] = st.zeros;
  rec["bit"] = st.bit ? 1 : 0;
  rec["after"] = st.after;
  return rec;
}

int run_circuit_diag(const Settings& s, std::ostream& out, std::ostream& err) {
  const std::string mode = s.text("mode", "halving");
  const BitString sigma = s.sigma.value_or(BitString{});
  CircuitCaps circuits;
  circuits.workers = s.workers;
  Sink sink(s, "jsonl", out);
  bool halving = true;
  if (mode == "halving") {
    const auto n = static_cast<unsigned>(s.num("n", 2));
    const auto size = static_cast<unsigned>(s.num("size", 3));
    const auto hist = table_histogram(n, size, sigma, circuits);
    ConstraintSet z;
    const auto inputs = all_inputs(n);
    for (const HalvingStep& st : diagonalize_tables(hist, inputs, z)) {
      halving = halving && st.after <= st.before / 2;
      Config rec;
      rec["u"] = st.u.to_string();
      rec["before"] = st.before;
      rec["ones"] = st.ones;
      rec["zeros"] = st.zeros;
      rec["bit"] = st.bit ? 1 : 0;
      rec["after"] = st.after;
      sink.record(rec);
    }
    err << "n=" << n << " size<=" << size << ": " << hist.total() << " circuits, " << hist.distinct_tables()
        << " distinct truth tables\n";
  } else if (mode == "size") {
    SizeDiagCaps caps;
    caps.circuits = circuits;
    caps.max_z_length = static_cast<unsigned>(s.num("max_z_length", caps.max_z_length));
    caps.max_size = static_cast<unsigned>(s.num("max_size", caps.max_size));
    caps.max_extension = s.num("max_extension", caps.max_extension);
    const auto trace = size_diagonalizer_trace(static_cast<unsigned>(s.num("c", 1)), sigma, caps);
    for (const DiagStep& st : trace.steps) {
      halving = halving && st.after <= st.before / 2;
      sink.record(step_record(st));
    }
    err << "extension " << trace.extension.to_string() << '\n';
  } else {
    DerandCaps caps;
    caps.circuits = circuits;
    caps.max_width = static_cast<unsigned>(s.num("max_width", caps.max_width));
    caps.max_size = static_cast<unsigned>(s.num("max_size", caps.max_size));
    const auto trace = derand_diagonalizer_trace(static_cast<unsigned>(s.num("b", 1)),
                                                 parse_schedule(s.text("s", "4")), sigma, caps);
    for (const DiagStep& st : trace.steps) {
      halving = halving && st.after <= st.before / 2;
      sink.record(step_record(st));
    }
    err << "width " << trace.width << ", size < " << trace.size_bound << ", extension length "
        << trace.extension.size() << '\n';
  }
  sink.finish();
  if (!halving) err << "FAIL: a consistent set did not halve\n";
  return halving ? kSuccess : kPropertyFail;
}

int run_martingale(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto& lp = s.specs.at("language");
  const Language lang = make_language(lp.first, lp.second);
  const auto mit = s.specs.find("martingale");
  const Martingale d = make_martingale(mit == s.specs.end() ? Spec{"density", {}} : mit->second);
  const auto trace = capital_trace(d, lang, s.num("horizon", 0));
  Sink sink(s, "csv", out);
  write_capital_csv(sink.stream(), trace, lang);
  sink.finish();
  const Rational peak = *std::max_element(trace.begin(), trace.end());
  err << d.name() << " on " << lang.name() << ": final capital " << trace.back() << ", peak " << peak << '\n';
  if (s.numbers.count("depth")) {
    const auto report = fairness_check(d, static_cast<unsigned>(s.numbers.at("depth")));
    err << "fairness: " << report.to_string() << '\n';
    if (!report.pass) return kPropertyFail;
  }
  return kSuccess;
}

SuiteResult run_configured_suite(const std::string& name, const Settings& s) {
  const auto seed = [&](std::uint64_t fallback) { return s.seed.value_or(fallback); };
  if (name == "halving") {
    HalvingParams p;
    if (s.has("n")) p.shapes = {{static_cast<unsigned>(s.num("n", 0)), static_cast<unsigned>(s.num("size", 0))}};
    if (s.sigma) p.sigma = *s.sigma;
    p.workers = s.workers;
    return suite_halving(p);
  }
  if (name == "games") {
    GameParams p;
    p.seed = seed(p.seed);
    return suite_games(p);
  }
  if (name == "sigma2") {
    Sigma2Params p;
    p.seed = seed(p.seed);
    return suite_sigma2(p);
  }
  if (name == "union") {
    UnionParams p;
    p.seed = seed(p.seed);
    return suite_union(p);
  }
  if (name == "amplify") {
    AmplifyParams p;
    p.seed = seed(p.seed);
    return suite_amplify(p);
  }
  if (name == "query-sets") {
    QuerySetParams p;
    p.seed = seed(p.seed);
    return suite_query_sets(p);
  }
  return run_suite(name);
}

int run_verify(const Settings& s, std::ostream& out) {
  const std::string which = s.text("suite", "all");
  std::vector<std::string> names = which == "all" ? suite_names() : std::vector<std::string>{which};
  NullBuffer null_buffer;
  std::ostream discard(&null_buffer);
  Sink records(s, "jsonl", discard);
  bool pass = true;
  for (const auto& name : names) {
    const SuiteResult r = run_configured_suite(name, s);
    pass = pass && r.pass;
    out << (r.pass ? "PASS " : "FAIL ") << r.name << '\n';
    for (const auto& line : r.details) out << "  " << line << '\n';
    out.flush();
    Config rec;
    rec["suite"] = r.name;
    rec["pass"] = r.pass;
    rec["details"] = r.details;
    records.record(rec);
  }
  records.finish();
  return pass ? kSuccess : kPropertyFail;
}

}  // namespace

std::vector<std::string> subcommand_names() {
  return {"chi", "strategy", "check", "game", "diag", "circuit-diag", "martingale", "verify"};
}

std::vector<KeyInfo> subcommand_keys(const std::string& subcommand) {
  std::vector<KeyInfo> out;
  for (const auto& [key, rule] : key_rules()) {
    if (key == "subcommand" || key == "output" || !applies(rule, subcommand)) continue;
    out.push_back({key, rule.kind == Kind::Natural});
  }
  return out;
}

ConfigSource load_config(const std::filesystem::path& path, std::vector<Diagnostic>& diagnostics) {
  ConfigSource src;
  src.origin = path.string();
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    diagnostics.push_back({"", "cannot read config '" + path.string() + "'", std::nullopt});
    return src;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  src.text = buffer.str();
  try {
    src.data = Config::parse(src.text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, src.text.size());
    const auto line = 1 + static_cast<std::size_t>(
                              std::count(src.text.begin(), src.text.begin() + static_cast<long>(upto), '\n'));
    diagnostics.push_back({"", std::string("JSON syntax error: ") + e.what(), line});
    src.data = Config::object();
  }
  return src;
}

std::vector<Diagnostic> validate(const ConfigSource& config) {
  std::vector<Diagnostic> diags;
  const Settings s = parse_settings(config, diags);
  if (!diags.empty() || s.subcommand.empty()) return diags;
  return semantic_checks(s, config);
}

int run(const ConfigSource& config, std::ostream& out, std::ostream& err) {
  const auto diags = validate(config);
  if (!diags.empty()) {
    for (const auto& d : diags) err << "config error: " << d.to_string() << '\n';
    return kConfigError;
  }
  std::vector<Diagnostic> unused;
  const Settings s = parse_settings(config, unused);
  try {
    const std::string& sub = s.subcommand;
    if (sub == "chi") return run_chi(s, out);
    if (sub == "strategy") return run_strategy(s, out);
    if (sub == "check") return run_check(s, out, err);
    if (sub == "game") return run_game_cmd(s, out, err);
    if (sub == "diag") return run_diag(s, out, err);
    if (sub == "circuit-diag") return run_circuit_diag(s, out, err);
    if (sub == "martingale") return run_martingale(s, out, err);
    return run_verify(s, out);
  } catch (const ScaleGuard& e) {
    err << "config error: ScaleGuard: " << e.what() << '\n';
    return kConfigError;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kPropertyFail;
  }
}

}  // namespace rbcat::tools
