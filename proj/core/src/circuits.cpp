#include "rbcat/circuits.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "rbcat/errors.hpp"

namespace rbcat {

struct CircuitAccess {
  static OracleCircuit raw(unsigned n, std::vector<Gate> gates, std::size_t output) {
    OracleCircuit c;
    c.n_inputs_ = n;
    c.gates_ = std::move(gates);
    c.output_ = output;
    return c;
  }
  static std::vector<Gate>& gates(OracleCircuit& c) { return c.gates_; }
  static std::size_t& output(OracleCircuit& c) { return c.output_; }
};

namespace {

const char* op_name(GateOp op) {
  switch (op) {
    case GateOp::Input: return "IN";
    case GateOp::Not: return "NOT";
    case GateOp::And: return "AND";
    case GateOp::Or: return "OR";
    case GateOp::Oracle: return "ORC";
  }
  return "?";
}

[[noreturn]] void malformed(const std::string& what) { throw MalformedCircuit(what); }

}  // namespace

OracleCircuit::OracleCircuit(unsigned n_inputs, std::vector<Gate> gates, std::size_t output)
    : n_inputs_(n_inputs), gates_(std::move(gates)), output_(output) {
  if (gates_.size() < n_inputs_) malformed("fewer gates than inputs");
  if (gates_.size() > 255) malformed("too many gates");
  if (output_ >= gates_.size()) malformed("output references missing gate " + std::to_string(output_));
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const Gate& gate = gates_[g];
    const std::string where = "g" + std::to_string(g);
    if (g < n_inputs_) {
      if (gate.op != GateOp::Input || gate.in[0] != g) malformed(where + " must be IN(" + std::to_string(g) + ")");
      continue;
    }
    auto check_ref = [&](unsigned ref) {
      if (ref >= g) malformed(where + " references g" + std::to_string(ref) + " which is not earlier");
    };
    switch (gate.op) {
      case GateOp::Input:
        malformed(where + ": INPUT after the input block");
      case GateOp::Not:
        if (gate.arity != 1) malformed(where + ": NOT takes one wire");
        check_ref(gate.in[0]);
        break;
      case GateOp::And:
      case GateOp::Or:
        if (gate.arity != 2) malformed(where + ": binary gate takes two wires");
        check_ref(gate.in[0]);
        check_ref(gate.in[1]);
        if (gate.in[0] >= gate.in[1]) malformed(where + ": operands must be strictly increasing");
        break;
      case GateOp::Oracle:
        if (gate.arity < 1 || gate.arity > kMaxOracleArity) malformed(where + ": bad oracle arity");
        for (unsigned r = 0; r < gate.arity; ++r) {
          check_ref(gate.in[r]);
          for (unsigned q = 0; q < r; ++q) {
            if (gate.in[q] == gate.in[r]) malformed(where + ": repeated oracle wire");
          }
        }
        break;
    }
  }
}

std::string OracleCircuit::dump() const {
  std::ostringstream os;
  for (std::size_t g = 0; g < gates_.size(); ++g) {
    const Gate& gate = gates_[g];
    os << 'g' << g << '=' << op_name(gate.op) << '(';
    if (gate.op == GateOp::Input) {
      os << unsigned{gate.in[0]};
    } else {
      for (unsigned r = 0; r < gate.arity; ++r) os << (r ? "," : "") << 'g' << unsigned{gate.in[r]};
    }
    os << ") ";
  }
  os << "out=g" << output_;
  return os.str();
}

OracleCircuit OracleCircuit::parse(std::string_view text) {
  std::vector<Gate> gates;
  std::size_t output = 0;
  bool have_output = false;
  std::istringstream is{std::string(text)};
  std::string token;
  auto number = [](std::string_view s) {
    unsigned v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) malformed("bad number '" + std::string(s) + "'");
    return v;
  };
  auto wire = [&](std::string_view s) {
    if (s.empty() || s[0] != 'g') malformed("bad wire '" + std::string(s) + "'");
    return number(s.substr(1));
  };
  while (is >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) malformed("missing '=' in '" + token + "'");
    const std::string lhs = token.substr(0, eq);
    const std::string rhs = token.substr(eq + 1);
    if (lhs == "out") {
      output = wire(rhs);
      have_output = true;
      continue;
    }
    if (wire(lhs) != gates.size()) malformed("gates must be listed in order");
    const auto open = rhs.find('(');
    if (open == std::string::npos || rhs.back() != ')') malformed("bad gate '" + token + "'");
    const std::string op = rhs.substr(0, open);
    const std::string args = rhs.substr(open + 1, rhs.size() - open - 2);
    Gate gate;
    if (op == "IN") {
      gate.op = GateOp::Input;
      gate.in[0] = static_cast<std::uint8_t>(number(args));
    } else {
      if (op == "NOT") gate.op = GateOp::Not;
      else if (op == "AND") gate.op = GateOp::And;
      else if (op == "OR") gate.op = GateOp::Or;
      else if (op == "ORC") gate.op = GateOp::Oracle;
      else malformed("unknown gate '" + op + "'");
      std::size_t start = 0;
      while (start <= args.size()) {
        const auto comma = args.find(',', start);
        const std::string part = args.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (gate.arity == kMaxOracleArity) malformed("too many wires");
        gate.in[gate.arity++] = static_cast<std::uint8_t>(wire(part));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
    }
    gates.push_back(gate);
  }
  if (!have_output) malformed("missing out=");
  unsigned n = 0;
  while (n < gates.size() && gates[n].op == GateOp::Input) ++n;
  return OracleCircuit(n, std::move(gates), output);
}

namespace {

inline bool oracle_bit(const BitString& sigma, unsigned arity, Natural value) {
  const Natural pos = (Natural{1} << arity) + value;
  return pos <= sigma.size() && sigma.bit(pos);
}

}  // namespace

bool eval(const OracleCircuit& c, const BitString& x, const BitString& sigma) {
  if (x.size() != c.n_inputs()) {
    throw std::invalid_argument("eval: input has " + std::to_string(x.size()) + " bits, circuit expects " +
                                std::to_string(c.n_inputs()));
  }
  const auto& gates = c.gates();
  std::vector<std::uint8_t> value(gates.size());
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    switch (gate.op) {
      case GateOp::Input: value[g] = x.bit(gate.in[0] + 1); break;
      case GateOp::Not: value[g] = !value[gate.in[0]]; break;
      case GateOp::And: value[g] = value[gate.in[0]] && value[gate.in[1]]; break;
      case GateOp::Or: value[g] = value[gate.in[0]] || value[gate.in[1]]; break;
      case GateOp::Oracle: {
        Natural u = 0;
        for (unsigned r = 0; r < gate.arity; ++r) u = (u << 1) | value[gate.in[r]];
        value[g] = oracle_bit(sigma, gate.arity, u);
        break;
      }
    }
  }
  return value[c.output()];
}

std::vector<BitString> all_inputs(unsigned n) {
  std::vector<BitString> out;
  const Natural count = Natural{1} << n;
  for (Natural v = 0; v < count; ++v) out.push_back(rank_to_string(first_rank_of_length(n) + v));
  return out;
}

Natural input_index(const BitString& u) {
  return string_to_rank(u) - first_rank_of_length(static_cast<unsigned>(u.size()));
}

BitString truth_table(const OracleCircuit& c, const BitString& sigma) {
  if (c.n_inputs() > 4) throw ScaleGuard("truth_table: more than 4 inputs");
  BitString t;
  for (const BitString& x : all_inputs(c.n_inputs())) t.push_back(eval(c, x, sigma));
  return t;
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

struct ChoiceTable {
  unsigned n = 0;
  unsigned s = 0;
  /// choices[j]: options for non-input gate j, which sees n + j wires.
  std::vector<std::vector<Gate>> choices;
  /// first[k]: global index of the first circuit of size k; first[s+1] = total.
  std::vector<Natural> first;
};

void validate_shape(unsigned n, unsigned s, const CircuitCaps& caps, const char* what) {
  if (n > caps.max_inputs || n > 4) {
    throw ScaleGuard(std::string(what) + ": " + std::to_string(n) + " inputs exceeds cap " +
                     std::to_string(std::min(caps.max_inputs, 4U)));
  }
  if (s > caps.max_size) {
    throw ScaleGuard(std::string(what) + ": size " + std::to_string(s) + " exceeds cap " +
                     std::to_string(caps.max_size));
  }
}

ChoiceTable build_choices(unsigned n, unsigned s, const CircuitCaps& caps) {
  ChoiceTable t;
  t.n = n;
  t.s = s;
  const unsigned max_arity = std::min<unsigned>(caps.max_arity == 0 ? n : caps.max_arity, kMaxOracleArity);
  for (unsigned j = 0; j < s; ++j) {
    const unsigned wires = n + j;
    std::vector<Gate> opts;
    for (unsigned a = 0; a < wires; ++a) {
      Gate g;
      g.op = GateOp::Not;
      g.arity = 1;
      g.in[0] = static_cast<std::uint8_t>(a);
      opts.push_back(g);
    }
    for (GateOp op : {GateOp::And, GateOp::Or}) {
      for (unsigned a = 0; a < wires; ++a) {
        for (unsigned b = a + 1; b < wires; ++b) {
          Gate g;
          g.op = op;
          g.arity = 2;
          g.in[0] = static_cast<std::uint8_t>(a);
          g.in[1] = static_cast<std::uint8_t>(b);
          opts.push_back(g);
        }
      }
    }
    for (unsigned arity = 1; arity <= std::min(max_arity, wires); ++arity) {
      Gate g;
      g.op = GateOp::Oracle;
      g.arity = static_cast<std::uint8_t>(arity);
      // Ordered tuples of distinct wires, lexicographic.
      std::vector<unsigned> idx(arity, 0);
      while (true) {
        bool distinct = true;
        for (unsigned r = 0; r < arity && distinct; ++r) {
          for (unsigned q = 0; q < r; ++q) distinct = distinct && idx[q] != idx[r];
        }
        if (distinct) {
          for (unsigned r = 0; r < arity; ++r) g.in[r] = static_cast<std::uint8_t>(idx[r]);
          opts.push_back(g);
        }
        int r = static_cast<int>(arity) - 1;
        while (r >= 0 && ++idx[r] == wires) idx[r--] = 0;
        if (r < 0) break;
      }
    }
    t.choices.push_back(std::move(opts));
  }
  t.first.push_back(0);
  Natural total = n;
  t.first.push_back(total);
  for (unsigned k = 1; k <= s; ++k) {
    Natural count = 1;
    for (unsigned j = 0; j < k; ++j) {
      const Natural c = t.choices[j].size();
      if (count > ~Natural{0} / c) throw ScaleGuard("circuit count overflows 64 bits");
      count *= c;
    }
    if (total > ~Natural{0} - count) throw ScaleGuard("circuit count overflows 64 bits");
    total += count;
    t.first.push_back(total);
  }
  return t;
}

std::vector<Gate> input_gates(unsigned n) {
  std::vector<Gate> gates(n);
  for (unsigned j = 0; j < n; ++j) gates[j].in[0] = static_cast<std::uint8_t>(j);
  return gates;
}

/// Mixed-radix digits of a within-size index, first gate most significant.
std::vector<Natural> decode_digits(const ChoiceTable& t, unsigned size, Natural offset) {
  std::vector<Natural> digits(size, 0);
  for (int j = static_cast<int>(size) - 1; j >= 0; --j) {
    const Natural radix = t.choices[j].size();
    digits[j] = offset % radix;
    offset /= radix;
  }
  return digits;
}

/// Walks [begin, end) size by size. `start(size, digits)` is called at the
/// beginning of each size segment, `step(j)` after the odometer changed gates
/// j.. (j is the most significant changed gate) and `visit()` once per circuit.
template <typename Start, typename Step, typename Visit>
void walk(const ChoiceTable& t, Natural begin, Natural end, Start&& start, Step&& step,
          Visit&& visit) {
  end = std::min(end, t.first.back());
  for (unsigned size = 0; size <= t.s && begin < end; ++size) {
    const Natural lo = t.first[size];
    const Natural hi = t.first[size + 1];
    if (begin >= hi) continue;
    const Natural from = std::max(begin, lo);
    const Natural to = std::min(end, hi);
    if (size == 0) {
      for (Natural idx = from; idx < to; ++idx) {
        start(0, std::vector<Natural>{idx});
        visit();
      }
      begin = to;
      continue;
    }
    std::vector<Natural> digits = decode_digits(t, size, from - lo);
    start(size, digits);
    for (Natural idx = from;;) {
      visit();
      if (++idx == to) break;
      int j = static_cast<int>(size) - 1;
      while (++digits[j] == t.choices[j].size()) digits[j--] = 0;
      step(static_cast<unsigned>(j), digits);
    }
    begin = to;
  }
}

Natural checked_total(const ChoiceTable& t, const CircuitCaps& caps, const char* what) {
  const Natural total = t.first.back();
  if (total > caps.max_circuits) {
    throw ScaleGuard(std::string(what) + ": " + std::to_string(total) + " circuits exceeds cap " +
                     std::to_string(caps.max_circuits));
  }
  return total;
}

}  // namespace

Natural circuit_count(unsigned n, unsigned s, const CircuitCaps& caps) {
  validate_shape(n, s, caps, "circuit_count");
  return build_choices(n, s, caps).first.back();
}

void for_each_circuit_range(unsigned n, unsigned s, const CircuitCaps& caps, Natural begin,
                            Natural end, const std::function<void(const OracleCircuit&)>& fn) {
  validate_shape(n, s, caps, "enumerate");
  const ChoiceTable t = build_choices(n, s, caps);
  checked_total(t, caps, "enumerate");
  OracleCircuit c = CircuitAccess::raw(n, input_gates(n), 0);
  auto& gates = CircuitAccess::gates(c);
  auto& output = CircuitAccess::output(c);
  walk(
      t, begin, end,
      [&](unsigned size, const std::vector<Natural>& digits) {
        gates.resize(n + size);
        if (size == 0) {
          output = static_cast<std::size_t>(digits[0]);
          return;
        }
        for (unsigned j = 0; j < size; ++j) gates[n + j] = t.choices[j][digits[j]];
        output = n + size - 1;
      },
      [&](unsigned j, const std::vector<Natural>& digits) {
        for (std::size_t q = j; q < digits.size(); ++q) gates[n + q] = t.choices[q][digits[q]];
      },
      [&] { fn(c); });
}

void for_each_circuit(unsigned n, unsigned s, const CircuitCaps& caps,
                      const std::function<void(const OracleCircuit&)>& fn) {
  for_each_circuit_range(n, s, caps, 0, ~Natural{0}, fn);
}

OracleCircuit circuit_at(unsigned n, unsigned s, Natural index, const CircuitCaps& caps) {
  validate_shape(n, s, caps, "circuit_at");
  const ChoiceTable t = build_choices(n, s, caps);
  if (index >= t.first.back()) throw std::out_of_range("circuit_at: index past the enumeration");
  std::vector<Gate> gates = input_gates(n);
  unsigned size = 0;
  while (index >= t.first[size + 1]) ++size;
  if (size == 0) return OracleCircuit(n, std::move(gates), static_cast<std::size_t>(index));
  const auto digits = decode_digits(t, size, index - t.first[size]);
  for (unsigned j = 0; j < size; ++j) gates.push_back(t.choices[j][digits[j]]);
  return OracleCircuit(n, std::move(gates), n + size - 1);
}

std::vector<OracleCircuit> enumerate(unsigned n, unsigned s, const CircuitCaps& caps) {
  if (circuit_count(n, s, caps) > caps.max_materialize) {
    throw ScaleGuard("enumerate: more than " + std::to_string(caps.max_materialize) +
                     " circuits to materialize");
  }
  std::vector<OracleCircuit> out;
  for_each_circuit(n, s, caps, [&](const OracleCircuit& c) { out.push_back(c); });
  return out;
}

// ---------------------------------------------------------------------------
// Constraints and majority

void ConstraintSet::add(BitString u, bool z) {
  for (const auto& c : items_) {
    if (c.u == u) throw std::invalid_argument("ConstraintSet: " + u.to_string() + " already constrained");
  }
  items_.push_back({std::move(u), z});
}

bool satisfies(const OracleCircuit& c, const ConstraintSet& z, const BitString& sigma) {
  return std::all_of(z.items().begin(), z.items().end(),
                     [&](const Constraint& k) { return eval(c, k.u, sigma) == k.z; });
}

std::vector<OracleCircuit> consistent_set(unsigned n, unsigned s, const BitString& sigma,
                                          const ConstraintSet& z, const CircuitCaps& caps) {
  std::vector<OracleCircuit> out;
  for_each_circuit(n, s, caps, [&](const OracleCircuit& c) {
    if (!satisfies(c, z, sigma)) return;
    if (out.size() == caps.max_materialize) {
      throw ScaleGuard("consistent_set: more than " + std::to_string(caps.max_materialize) + " circuits");
    }
    out.push_back(c);
  });
  return out;
}

Natural consistent_count(unsigned n, unsigned s, const BitString& sigma, const ConstraintSet& z,
                         const CircuitCaps& caps) {
  Natural count = 0;
  for_each_circuit(n, s, caps, [&](const OracleCircuit& c) { count += satisfies(c, z, sigma); });
  return count;
}

bool majority_vote(std::span<const OracleCircuit> set, const BitString& u, const BitString& sigma) {
  if (set.empty()) throw EmptySet("majority_vote over an empty circuit set");
  std::size_t ones = 0;
  for (const auto& c : set) ones += eval(c, u, sigma);
  return ones >= set.size() - ones;
}

// ---------------------------------------------------------------------------
// Truth-table histogram

Natural TruthTableHistogram::total() const {
  Natural sum = 0;
  for (Natural c : counts) sum += c;
  return sum;
}

Natural TruthTableHistogram::distinct_tables() const {
  return static_cast<Natural>(std::count_if(counts.begin(), counts.end(), [](Natural c) { return c > 0; }));
}

namespace {

bool table_ok(Natural table, const ConstraintSet& z) {
  for (const auto& c : z.items()) {
    if (((table >> input_index(c.u)) & 1U) != static_cast<Natural>(c.z)) return false;
  }
  return true;
}

}  // namespace

Natural TruthTableHistogram::consistent(const ConstraintSet& z) const {
  Natural sum = 0;
  for (Natural t = 0; t < counts.size(); ++t) {
    if (counts[t] && table_ok(t, z)) sum += counts[t];
  }
  return sum;
}

std::pair<Natural, Natural> TruthTableHistogram::split(const ConstraintSet& z, const BitString& u) const {
  const Natural idx = input_index(u);
  Natural ones = 0;
  Natural zeros = 0;
  for (Natural t = 0; t < counts.size(); ++t) {
    if (!counts[t] || !table_ok(t, z)) continue;
    ((t >> idx) & 1U ? ones : zeros) += counts[t];
  }
  return {ones, zeros};
}

namespace {

using Mask = std::uint32_t;

struct MaskEvaluator {
  unsigned n = 0;
  unsigned rows = 0;
  // oracle[a][v]: oracle answer for the a-bit string with value v.
  std::array<std::vector<std::uint8_t>, kMaxOracleArity + 1> oracle;

  MaskEvaluator(unsigned n_, const BitString& sigma) : n(n_), rows(1U << n_) {
    for (unsigned a = 1; a <= kMaxOracleArity; ++a) {
      oracle[a].resize(std::size_t{1} << a);
      for (Natural v = 0; v < oracle[a].size(); ++v) oracle[a][v] = oracle_bit(sigma, a, v);
    }
  }

  Mask input_mask(unsigned j) const {
    Mask m = 0;
    for (unsigned t = 0; t < rows; ++t) m |= static_cast<Mask>((t >> (n - 1 - j)) & 1U) << t;
    return m;
  }

  Mask gate_mask(const Gate& g, const std::vector<Mask>& w) const {
    const Mask all = rows == 32 ? ~Mask{0} : ((Mask{1} << rows) - 1);
    switch (g.op) {
      case GateOp::Not: return ~w[g.in[0]] & all;
      case GateOp::And: return w[g.in[0]] & w[g.in[1]];
      case GateOp::Or: return w[g.in[0]] | w[g.in[1]];
      case GateOp::Oracle: {
        Mask m = 0;
        const auto& table = oracle[g.arity];
        for (unsigned t = 0; t < rows; ++t) {
          unsigned v = 0;
          for (unsigned r = 0; r < g.arity; ++r) v = (v << 1) | ((w[g.in[r]] >> t) & 1U);
          m |= static_cast<Mask>(table[v]) << t;
        }
        return m;
      }
      case GateOp::Input: break;
    }
    return 0;
  }
};

void histogram_range(const ChoiceTable& t, const MaskEvaluator& ev, Natural begin, Natural end,
                     std::vector<Natural>& counts) {
  const unsigned n = t.n;
  std::vector<Mask> wires(n + t.s);
  for (unsigned j = 0; j < n; ++j) wires[j] = ev.input_mask(j);
  unsigned size = 0;
  std::size_t output = 0;
  auto refresh = [&](unsigned from, const std::vector<Natural>& digits) {
    for (unsigned q = from; q < size; ++q) wires[n + q] = ev.gate_mask(t.choices[q][digits[q]], wires);
  };
  walk(
      t, begin, end,
      [&](unsigned sz, const std::vector<Natural>& digits) {
        size = sz;
        if (sz == 0) {
          output = static_cast<std::size_t>(digits[0]);
          return;
        }
        output = n + sz - 1;
        refresh(0, digits);
      },
      [&](unsigned j, const std::vector<Natural>& digits) { refresh(j, digits); },
      [&] { ++counts[wires[output]]; });
}

}  // namespace

TruthTableHistogram table_histogram(unsigned n, unsigned s, const BitString& sigma, const CircuitCaps& caps) {
  validate_shape(n, s, caps, "table_histogram");
  const ChoiceTable t = build_choices(n, s, caps);
  const Natural total = checked_total(t, caps, "table_histogram");
  const MaskEvaluator ev(n, sigma);
  TruthTableHistogram h;
  h.n = n;
  h.counts.assign(std::size_t{1} << (1U << n), 0);
  const unsigned workers = std::max(1U, caps.workers);
  if (workers == 1 || total < 4096) {
    histogram_range(t, ev, 0, total, h.counts);
    return h;
  }
  std::vector<std::vector<Natural>> partial(workers, std::vector<Natural>(h.counts.size(), 0));
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    const Natural lo = total / workers * w;
    const Natural hi = w + 1 == workers ? total : total / workers * (w + 1);
    threads.emplace_back([&, lo, hi, w] { histogram_range(t, ev, lo, hi, partial[w]); });
  }
  for (auto& th : threads) th.join();
  for (const auto& p : partial) {
    for (std::size_t i = 0; i < p.size(); ++i) h.counts[i] += p[i];
  }
  return h;
}

std::vector<HalvingStep> diagonalize_tables(const TruthTableHistogram& h,
                                            std::span<const BitString> inputs, ConstraintSet& z) {
  std::vector<HalvingStep> steps;
  for (const BitString& u : inputs) {
    if (u.size() != h.n) throw std::invalid_argument("diagonalize_tables: input length mismatch");
    HalvingStep step;
    step.u = u;
    std::tie(step.ones, step.zeros) = h.split(z, u);
    step.before = step.ones + step.zeros;
    step.bit = !(step.ones >= step.zeros);
    step.after = step.bit ? step.ones : step.zeros;
    z.add(u, step.bit);
    steps.push_back(std::move(step));
  }
  return steps;
}

std::vector<HalvingStep> replay_brute_force(unsigned n, unsigned s, const BitString& sigma,
                                            std::span<const HalvingStep> steps, const CircuitCaps& caps) {
  std::vector<HalvingStep> out(steps.begin(), steps.end());
  for (auto& st : out) st.before = st.ones = st.zeros = st.after = 0;
  Natural survivors = 0;
  for_each_circuit(n, s, caps, [&](const OracleCircuit& c) {
    std::size_t j = 0;
    for (; j < steps.size(); ++j) {
      const bool v = eval(c, steps[j].u, sigma);
      ++(v ? out[j].ones : out[j].zeros);
      if (v != steps[j].bit) break;
    }
    if (j == steps.size()) ++survivors;
  });
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j].before = out[j].ones + out[j].zeros;
    out[j].bit = !(out[j].ones >= out[j].zeros);
    out[j].after = j + 1 < out.size() ? out[j + 1].ones + out[j + 1].zeros : survivors;
  }
  return out;
}

}  // namespace rbcat
