#include "rbcat/diagonal.hpp"

#include <map>

#include "rbcat/circuits.hpp"
#include "rbcat/errors.hpp"

namespace rbcat {

namespace {

void check_block(const BitString& ext, Natural capacity, Natural i) {
  if (ext.size() > capacity) {
    throw ExtensionOverflow("block " + std::to_string(i) + ": extension of " + std::to_string(ext.size()) +
                            " bits exceeds block size " + std::to_string(capacity));
  }
}

/// Per-query state: blocks simulated so far.
class GlobalQuery {
 public:
  explicit GlobalQuery(const IndexedConstructor& h) : h_(h) {}

  const BitString& block(Natural i) {
    auto it = blocks_.find(i);
    if (it != blocks_.end()) return it->second;
    BitString b;
    if (i == 0) {
      b = BitString::parse("0");
    } else {
      const Natural len = (Natural{1} << i) - 1;
      const PrefixView view(len, [this](Natural p) { return bit(p); });
      b = h_.extension(i, view);
      check_block(b, Natural{1} << i, i);
    }
    return blocks_.emplace(i, std::move(b)).first->second;
  }

  /// χ[p] read from the simulated blocks; past the extension it is padding.
  bool bit(Natural p) {
    const auto i = log_length(p) - 1;
    const Natural offset = p - (Natural{1} << i);
    const BitString& b = block(i);
    return offset < b.size() && b.bit(offset + 1);
  }

 private:
  const IndexedConstructor& h_;
  std::map<Natural, BitString> blocks_;
};

}  // namespace

Language diag_language_global(const IndexedConstructor& h, const DiagCaps& caps) {
  return Language("diag(" + h.name() + ")", [h, caps](const BitString& x) {
    if (x.size() > caps.max_block) {
      throw ScaleGuard("diag_language_global: |x| = " + std::to_string(x.size()) + " beyond block cap");
    }
    GlobalQuery q(h);
    return q.bit(position_of(x));
  });
}

BitString diag_global_prefix(const IndexedConstructor& h, unsigned blocks) {
  BitString chi = BitString::parse("0");
  for (Natural i = 1; i <= blocks; ++i) {
    const Natural size = Natural{1} << i;
    BitString b = h.extension(i, chi);
    check_block(b, size, i);
    b.append(BitString::zeros(size - b.size()));
    chi.append(b);
  }
  return chi;
}

std::pair<Natural, Natural> locate(const std::vector<Natural>& f, Natural rank) {
  const Natural p = rank + 1;
  Natural before = 0;
  for (Natural i = 0; i < f.size(); ++i) {
    if (p <= before + f[i]) return {i, rank - before};
    before += f[i];
  }
  throw ScaleGuard("locate: position " + std::to_string(p) + " lies past the last computed block");
}

LocalDiagLayout local_diag_layout(const LocalConstructor& h, Natural i_max, const BoundCaps& caps) {
  LocalDiagLayout layout;
  layout.f = bound_extension_sizes(h, i_max, caps);
  Natural sum = 0;
  for (Natural v : layout.f) layout.ends.push_back(sum += v);
  return layout;
}

namespace {

class LocalQuery {
 public:
  LocalQuery(const LocalConstructor& h, const LocalDiagLayout& layout) : h_(h), layout_(layout) {}

  bool bit(Natural p) {
    auto it = bits_.find(p);
    if (it != bits_.end()) return it->second;
    const auto [i, rpos] = locate(layout_.f, p - 1);
    const Natural k = rpos + 1;
    const Natural start = i == 0 ? 0 : layout_.ends[i - 1];
    const PrefixView view(start, [this](Natural q) { return bit(q); });
    const ExtBit b = h_.ext_bit(i, view, k);
    if (k == layout_.f[i] && b && h_.ext_bit(i, view, k + 1)) {
      throw ExtensionOverflow("block " + std::to_string(i) + ": extension longer than f(i) = " +
                              std::to_string(layout_.f[i]));
    }
    return bits_.emplace(p, b.value_or(false)).first->second;
  }

 private:
  const LocalConstructor& h_;
  const LocalDiagLayout& layout_;
  std::map<Natural, bool> bits_;
};

}  // namespace

Language diag_language_local(const LocalConstructor& h, const LocalDiagLayout& layout) {
  auto shared = std::make_shared<const LocalDiagLayout>(layout);
  return Language("diag-local(" + h.name() + ")", [h, shared](const BitString& x) {
    LocalQuery q(h, *shared);
    return q.bit(position_of(x));
  });
}

BitString diag_local_prefix(const LocalConstructor& h, const LocalDiagLayout& layout, Natural cap) {
  BitString chi;
  for (Natural i = 0; i < layout.f.size(); ++i) {
    BitString b = materialize_local(h, i, chi, std::max(cap, layout.f[i] + 1));
    check_block(b, layout.f[i], i);
    b.append(BitString::zeros(layout.f[i] - b.size()));
    chi.append(b);
  }
  return chi;
}

}  // namespace rbcat
