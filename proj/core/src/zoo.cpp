#include "rbcat/zoo.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rbcat/errors.hpp"

namespace rbcat {

Constructor singleton_avoider(const Language& lang) {
  return Constructor("singleton(" + lang.name() + ")", [lang](const PrefixView& sigma) {
    BitString w;
    w.push_back(!lang.contains(rank_to_string(sigma.size())));
    return w;
  });
}

Language singleton_family_language(Natural t) {
  return Language("singleton-family:t=" + std::to_string(t),
                  [t](const BitString& x) { return string_to_rank(x) % (t + 2) == 0; },
                  "ranks divisible by " + std::to_string(t + 2));
}

IndexedConstructor singleton_family() {
  return IndexedConstructor("singleton-family", [](Natural t, const PrefixView& sigma) {
    BitString w;
    w.push_back(!singleton_family_language(t).contains(rank_to_string(sigma.size())));
    return w;
  });
}

LocalConstructor singleton_family_local() {
  return LocalConstructor(
      "singleton-family-local",
      [](Natural i, const PrefixView& sigma, Natural k) -> ExtBit {
        if (k != 1) return std::nullopt;
        return !singleton_family_language(i).contains(rank_to_string(sigma.size()));
      },
      [](Natural, Natural, Natural) { return QuerySet{}; });
}

IndexedConstructor ones_family() {
  return IndexedConstructor("ones", [](Natural t, const PrefixView&) { return BitString::ones(t); });
}

LocalConstructor ones_family_local() {
  return LocalConstructor(
      "ones-local",
      [](Natural i, const PrefixView&, Natural k) -> ExtBit {
        if (k > i) return std::nullopt;
        return true;
      },
      [](Natural, Natural, Natural) { return QuerySet{}; });
}

IndexedConstructor identity_family() {
  return IndexedConstructor("identity", [](Natural, const PrefixView&) { return BitString{}; });
}

LocalConstructor complement_prefix_family() {
  return LocalConstructor(
      "complement-prefix",
      [](Natural i, const PrefixView& sigma, Natural k) -> ExtBit {
        if (k > i + 1) return std::nullopt;
        return k > sigma.size() || !sigma.bit(k);
      },
      [](Natural, Natural i, Natural k) { return QuerySet::range(1, std::min(k, i + 1)); });
}

LocalConstructor constant_one() {
  return LocalConstructor(
      "constant-one",
      [](Natural, const PrefixView&, Natural k) -> ExtBit {
        if (k != 1) return std::nullopt;
        return true;
      },
      [](Natural, Natural, Natural) { return QuerySet{}; });
}

LocalConstructor sparse_avoider() {
  return LocalConstructor(
      "sparse",
      [](Natural, const PrefixView& sigma, Natural k) -> ExtBit {
        if (k > sigma.size()) return std::nullopt;
        return true;
      },
      [](Natural, Natural, Natural) { return QuerySet{}; });
}

LocalConstructor query_violation_fixture() {
  return LocalConstructor(
      "violation-fixture",
      [](Natural, const PrefixView& sigma, Natural) -> ExtBit {
        if (sigma.size() >= 1) (void)sigma.bit(1);
        return std::nullopt;
      },
      [](Natural, Natural, Natural) { return QuerySet{}; });
}

Natural sparse_threshold(const Polynomial& p) {
  constexpr Natural kLimit = Natural{1} << 20;
  auto feasible = [&](Natural m) {
    // Strings s_m .. s_{2m-1}, counted per length.
    const Natural lo = m;
    const Natural hi = 2 * m - 1;
    for (unsigned len = 0; len < 63; ++len) {
      const Natural first = first_rank_of_length(len);
      const Natural last = first_rank_of_length(len + 1) - 1;
      if (first > hi) break;
      const Natural a = std::max(lo, first);
      const Natural b = std::min(hi, last);
      if (a > b) continue;
      const Natural count = b - a + 1;
      const Natural allowed = std::min(p(len), Natural{1} << len);
      if (count > allowed) return false;
    }
    return true;
  };
  Natural last_feasible = 0;
  for (Natural m = 1; m <= kLimit; ++m) {
    if (feasible(m)) last_feasible = m;
  }
  if (last_feasible + 1 >= kLimit / 2) throw ScaleGuard("sparse_threshold: census bound too generous");
  return last_feasible + 1;
}

// ---------------------------------------------------------------------------
// Circuit diagonalizers

namespace {

Natural saturating_pow(Natural base, unsigned exp) {
  Natural r = 1;
  for (unsigned e = 0; e < exp; ++e) {
    if (base != 0 && r > ~Natural{0} / base) return ~Natural{0};
    r *= base;
  }
  return r;
}

DiagStep make_step(Natural position, BitString z, unsigned inputs, unsigned size,
                   const TruthTableHistogram& h, ConstraintSet& constraints) {
  DiagStep st;
  st.position = position;
  st.inputs = inputs;
  st.size = size;
  std::tie(st.ones, st.zeros) = h.split(constraints, z);
  st.before = st.ones + st.zeros;
  st.bit = !(st.ones >= st.zeros);
  st.after = st.bit ? st.ones : st.zeros;
  constraints.add(z, st.bit);
  st.z = std::move(z);
  return st;
}

}  // namespace

SizeDiagTrace size_diagonalizer_trace(unsigned c, const BitString& sigma, const SizeDiagCaps& caps) {
  SizeDiagTrace trace;
  trace.n = log_length(sigma.size());
  const Natural wanted = trace.n == 0 ? 0 : saturating_pow(trace.n, c + 1);
  const Natural doubled = wanted > ~Natural{0} / 2 ? ~Natural{0} : 2 * wanted;
  const Natural length = std::min(doubled, caps.max_extension);
  CircuitCaps cc = caps.circuits;
  cc.max_inputs = caps.max_z_length;
  cc.max_size = caps.max_size;
  std::map<unsigned, TruthTableHistogram> tables;
  std::map<unsigned, ConstraintSet> constraints;
  for (Natural i = 1; i <= length; ++i) {
    const Natural position = sigma.size() + i;
    BitString z = rank_to_string(position - 1);
    const auto len = static_cast<unsigned>(z.size());
    if (len > caps.max_z_length) {
      throw ScaleGuard("size_diagonalizer: |z| = " + std::to_string(len) + " exceeds cap " +
                       std::to_string(caps.max_z_length));
    }
    const auto size = static_cast<unsigned>(std::min<Natural>(saturating_pow(len, c), caps.max_size));
    auto it = tables.find(len);
    if (it == tables.end()) it = tables.emplace(len, table_histogram(len, size, sigma, cc)).first;
    trace.steps.push_back(make_step(position, std::move(z), len, size, it->second, constraints[len]));
    trace.extension.push_back(trace.steps.back().bit);
  }
  return trace;
}

Constructor size_diagonalizer(unsigned c, SizeDiagCaps caps) {
  return Constructor("size-diag(c=" + std::to_string(c) + ")", [c, caps](const PrefixView& sigma) {
    return size_diagonalizer_trace(c, sigma.materialize(), caps).extension;
  });
}

Natural coding_position(const BitString& u, unsigned b) {
  const Natural pad_exp = Natural{b} * u.size();
  if (pad_exp >= 6) throw ScaleGuard("coding_position: padding 2^" + std::to_string(pad_exp) + " too long");
  return position_of(BitString::zeros(Natural{1} << pad_exp) + u);
}

DerandTrace derand_diagonalizer_trace(unsigned b, const SizeSchedule& s, const BitString& sigma,
                                      const DerandCaps& caps) {
  if (b == 0) throw std::invalid_argument("derand_diagonalizer: b must be >= 1");
  DerandTrace trace;
  const unsigned n = log_length(sigma.size());
  const unsigned floor_log_n = n == 0 ? 0 : log_length(n) - 1;
  unsigned w = std::max(1U, floor_log_n / b);
  auto guard = [&](unsigned width) {
    if (width > caps.max_width) {
      throw ScaleGuard("derand_diagonalizer: level width " + std::to_string(width) + " exceeds cap " +
                       std::to_string(caps.max_width));
    }
  };
  guard(w);
  while (coding_position(BitString::zeros(w), b) <= sigma.size()) guard(++w);
  trace.width = w;
  trace.size_bound = s(w);
  if (trace.size_bound > caps.max_size + 1) {
    throw ScaleGuard("derand_diagonalizer: size bound " + std::to_string(trace.size_bound) + " exceeds cap");
  }
  CircuitCaps cc = caps.circuits;
  cc.max_inputs = std::max(cc.max_inputs, w);
  cc.max_size = caps.max_size;
  TruthTableHistogram h;
  h.n = w;
  if (trace.size_bound == 0) {
    h.counts.assign(std::size_t{1} << (1U << w), 0);
  } else {
    h = table_histogram(w, trace.size_bound - 1, sigma, cc);
  }
  ConstraintSet constraints;
  const Natural pad = Natural{1} << (Natural{b} * w);
  const Natural end = coding_position(BitString::ones(w), b);
  for (Natural p = sigma.size() + 1; p <= end; ++p) {
    const BitString x = string_at_position(p);
    const bool coding = x.size() == pad + w && x.prefix(pad).popcount() == 0;
    if (!coding) {
      trace.extension.push_back(false);
      continue;
    }
    trace.steps.push_back(make_step(p, x.slice(pad, w), w,
                                    trace.size_bound == 0 ? 0 : trace.size_bound - 1, h, constraints));
    trace.extension.push_back(trace.steps.back().bit);
  }
  return trace;
}

Constructor derand_diagonalizer(unsigned b, SizeSchedule s, DerandCaps caps) {
  return Constructor("derand-diag(b=" + std::to_string(b) + ")", [b, s, caps](const PrefixView& sigma) {
    return derand_diagonalizer_trace(b, s, sigma.materialize(), caps).extension;
  });
}

// ---------------------------------------------------------------------------
// Σ⁰₂ avoider

Sigma2Predicate finite_languages_predicate() {
  return {"finite",
          [](const Language& l, Natural x, Natural y) { return y >= x && l.contains(rank_to_string(y)); },
          [](Natural, Natural y) { return y + 1; }};
}

LocalConstructor sigma2_avoider(Sigma2Predicate m, Language a) {
  auto pred = std::make_shared<const Sigma2Predicate>(std::move(m));
  const std::string name = "sigma2(" + pred->name + "," + a.name() + ")";
  return LocalConstructor(
      name,
      [pred, a](Natural, const PrefixView& sigma, Natural k) -> ExtBit {
        if (k >= 2) {
          const Natural xs = ceil_log2_plus2(log_length(sigma.size()));
          const Natural ys = ceil_log2_plus2(k);
          const Language l("σ·A", [&sigma, &a](const BitString& x) {
            const Natural p = position_of(x);
            return p <= sigma.size() ? sigma.bit(p) : a.contains(x);
          });
          bool all = true;
          for (Natural x = 0; x < xs && all; ++x) {
            bool found = false;
            for (Natural y = 0; y < ys && !found; ++y) found = pred->fn(l, x, y);
            all = found;
          }
          if (all) return std::nullopt;
        }
        return a.at_position(sigma.size() + k);
      },
      [pred](Natural n, Natural, Natural k) {
        const Natural xs = ceil_log2_plus2(n);
        const Natural ys = ceil_log2_plus2(k);
        Natural top = 0;
        for (Natural x = 0; x < xs; ++x) {
          for (Natural y = 0; y < ys; ++y) top = std::max(top, pred->max_query(x, y));
        }
        return QuerySet::range(1, top);
      },
      true);
}

// ---------------------------------------------------------------------------
// Generic-set builder

GenericLayout generic_blocks(const std::vector<LocalConstructor>& hs, Natural k, Natural cap) {
  if (k > hs.size()) throw std::invalid_argument("generic_builder: K exceeds the number of strategies");
  GenericLayout layout;
  layout.prefix.push_back(true);
  layout.block_ends.push_back(1);
  for (Natural i = 1; i <= k; ++i) {
    layout.prefix.append(materialize_local(hs[i - 1], i, layout.prefix, cap));
    layout.block_ends.push_back(layout.prefix.size());
    const Natural pad = 5 * layout.prefix.size();
    if (layout.prefix.size() + pad > (Natural{1} << 26)) throw ScaleGuard("generic_builder: prefix too long");
    layout.prefix.append(BitString::zeros(pad));
    layout.block_ends.push_back(layout.prefix.size());
  }
  return layout;
}

Language generic_builder(const std::vector<LocalConstructor>& hs, Natural k, Natural cap) {
  auto prefix = std::make_shared<const BitString>(generic_blocks(hs, k, cap).prefix);
  return Language("generic:K=" + std::to_string(k), [prefix](const BitString& x) {
    if (x.size() >= 63) return false;
    const Natural p = position_of(x);
    return p <= prefix->size() && prefix->bit(p);
  });
}

std::vector<LocalConstructor> default_generic_strategies() {
  return {constant_one(), sparse_avoider(), complement_prefix_family()};
}

// ---------------------------------------------------------------------------
// Registry

std::pair<std::string, ParamMap> parse_spec(const std::string& text) {
  const auto colon = text.find(':');
  std::pair<std::string, ParamMap> out;
  out.first = text.substr(0, colon);
  if (out.first.empty()) throw ConfigError("empty name in spec '" + text + "'");
  if (colon == std::string::npos) return out;
  const std::string rest = text.substr(colon + 1);
  std::size_t start = 0;
  while (start <= rest.size()) {
    const auto semi = rest.find(';', start);
    const std::string item = rest.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    if (!item.empty()) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        out.second["value"] = item;
      } else {
        out.second[item.substr(0, eq)] = item.substr(eq + 1);
      }
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return out;
}

namespace {

class Params {
 public:
  Params(std::string owner, const ParamMap& params) : owner_(std::move(owner)), params_(params) {}

  std::string str(const std::string& key, const std::string& fallback) {
    used_.push_back(key);
    auto it = params_.find(key);
    return it == params_.end() ? fallback : it->second;
  }

  Natural num(const std::string& key, Natural fallback) {
    used_.push_back(key);
    auto it = params_.find(key);
    if (it == params_.end()) return fallback;
    try {
      std::size_t used = 0;
      const Natural v = std::stoull(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ConfigError(owner_ + ": parameter '" + key + "' must be a natural number, got '" + it->second + "'");
    }
  }

  void finish() const {
    for (const auto& [k, v] : params_) {
      if (std::find(used_.begin(), used_.end(), k) == used_.end()) {
        throw ConfigError(owner_ + ": unknown parameter '" + k + "'");
      }
    }
  }

 private:
  std::string owner_;
  const ParamMap& params_;
  std::vector<std::string> used_;
};

}  // namespace

SizeSchedule parse_schedule(const std::string& text) {
  std::vector<unsigned> values;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string part = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      values.push_back(static_cast<unsigned>(std::stoul(part)));
    } catch (const std::exception&) {
      throw ConfigError("derand-diag: bad size schedule '" + text + "'");
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return [values](unsigned w) { return values[std::min<std::size_t>(w == 0 ? 0 : w - 1, values.size() - 1)]; };
}


StrategySpec make_strategy(const std::string& name, const ParamMap& params) {
  Params p(name, params);
  StrategySpec spec{name, params, identity_family()};
  if (name == "singleton") {
    spec.impl = singleton_avoider(language_from_spec(p.str("language", "empty")));
  } else if (name == "singleton-family") {
    if (p.num("local", 0)) spec.impl = singleton_family_local();
    else spec.impl = singleton_family();
  } else if (name == "sparse") {
    spec.impl = sparse_avoider();
  } else if (name == "ones") {
    if (p.num("local", 0)) spec.impl = ones_family_local();
    else spec.impl = ones_family();
  } else if (name == "identity") {
    spec.impl = identity_family();
  } else if (name == "complement-prefix") {
    spec.impl = complement_prefix_family();
  } else if (name == "constant-one") {
    spec.impl = constant_one();
  } else if (name == "violation-fixture") {
    spec.impl = query_violation_fixture();
  } else if (name == "size-diag") {
    SizeDiagCaps caps;
    const auto c = static_cast<unsigned>(p.num("c", 1));
    caps.max_z_length = static_cast<unsigned>(p.num("max_z_length", caps.max_z_length));
    caps.max_size = static_cast<unsigned>(p.num("max_size", caps.max_size));
    caps.max_extension = p.num("max_extension", caps.max_extension);
    if (caps.max_z_length > 4) throw ConfigError("size-diag: max_z_length above 4 exceeds the circuit cap");
    spec.impl = size_diagonalizer(c, caps);
  } else if (name == "derand-diag") {
    DerandCaps caps;
    const auto b = static_cast<unsigned>(p.num("b", 1));
    if (b == 0) throw ConfigError("derand-diag: b must be >= 1");
    caps.max_width = static_cast<unsigned>(p.num("max_width", caps.max_width));
    caps.max_size = static_cast<unsigned>(p.num("max_size", caps.max_size));
    spec.impl = derand_diagonalizer(b, parse_schedule(p.str("s", "4")), caps);
  } else if (name == "sigma2") {
    const std::string pred = p.str("predicate", "finite");
    if (pred != "finite") throw ConfigError("sigma2: unknown predicate '" + pred + "'");
    spec.impl = sigma2_avoider(finite_languages_predicate(), language_from_spec(p.str("a", "full")));
  } else {
    throw ConfigError("unknown strategy '" + name + "'");
  }
  p.finish();
  return spec;
}

std::vector<std::string> strategy_names() {
  return {"singleton", "singleton-family", "sparse",   "ones",        "identity",     "complement-prefix",
          "constant-one", "violation-fixture", "size-diag", "derand-diag", "sigma2"};
}

Language make_language(const std::string& name, const ParamMap& params) {
  Params p(name, params);
  Language out = empty_language();
  if (name == "empty") {
  } else if (name == "full") {
    out = full_language();
  } else if (name == "parity") {
    out = parity_language();
  } else if (name == "sparse") {
    Polynomial poly;
    try {
      poly = Polynomial::parse(p.str("p", "1"));
    } catch (const std::exception& e) {
      throw ConfigError(std::string("sparse: bad polynomial: ") + e.what());
    }
    out = make_sparse(poly, p.num("seed", 0));
  } else if (name == "explicit") {
    const std::string bits = p.str("bits", p.str("value", ""));
    try {
      out = explicit_prefix(BitString::parse(bits));
    } catch (const std::invalid_argument&) {
      throw ConfigError("explicit: bits must be 0/1 characters");
    }
  } else if (name == "file") {
    const std::string path = p.str("path", p.str("value", ""));
    if (path.empty()) throw ConfigError("file: missing path");
    out = read_language_file(path);
  } else if (name == "singleton-family") {
    out = singleton_family_language(p.num("t", 0));
  } else if (name == "generic") {
    const Natural k = p.num("K", 3);
    if (k < 1 || k > 3) throw ConfigError("generic: K must be 1..3 with the default strategies");
    out = generic_builder(default_generic_strategies(), k);
  } else {
    throw ConfigError("unknown language '" + name + "'");
  }
  p.finish();
  return out;
}

Language language_from_spec(const std::string& text) {
  const auto [name, params] = parse_spec(text);
  return make_language(name, params);
}

std::vector<std::string> language_names() {
  return {"empty", "full", "parity", "sparse", "explicit", "file", "singleton-family", "generic"};
}

IndexedConstructor as_indexed(const StrategySpec& spec, Natural cap) {
  struct Visitor {
    Natural cap;
    IndexedConstructor operator()(const Constructor& c) const {
      return IndexedConstructor(c.name(), [c](Natural, const PrefixView& s) { return c.extension(s); });
    }
    IndexedConstructor operator()(const IndexedConstructor& h) const { return h; }
    IndexedConstructor operator()(const LocalConstructor& h) const { return rbcat::as_indexed(h, cap); }
  };
  return std::visit(Visitor{cap}, spec.impl);
}

}  // namespace rbcat
