#pragma once

#include <stdexcept>
#include <string>

namespace rbcat {

// Every guard in the library throws one of these. They all derive from
// std::runtime_error so callers that only care about "it failed" can catch
// that.

/// A requested computation exceeds a configured desk-scale cap.
class ScaleGuard : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A local strategy did not reach ⊥ within the materialization cap.
class ExtensionCap : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ExtensionCap raised by a strategy whose termination is a semantic
/// property (the Σ⁰₂ avoider); reported separately so misuse is visible.
class NonTermination : public ExtensionCap {
 public:
  using ExtensionCap::ExtensionCap;
};

class ExtensionOverflow : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class MalformedCircuit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class EmptySet : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Player II returned an empty extension, which a play forbids.
class PlayerIIStalled : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace rbcat
