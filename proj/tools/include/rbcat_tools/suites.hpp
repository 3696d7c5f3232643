#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "rbcat/bitstring.hpp"
#include "rbcat/enumeration.hpp"

namespace rbcat::tools {

/// Outcome of one invariant suite. `details` holds one human-readable line
/// per sub-check.
struct SuiteResult {
  std::string name;
  bool pass = true;
  std::vector<std::string> details;
  double seconds = 0;

  void check(bool ok, std::string line);
};

struct EnumerationParams {
  Natural max_rank = Natural{1} << 16;
  unsigned max_length = 12;
};
SuiteResult suite_enumeration(const EnumerationParams& p = {});

struct FairnessParams {
  unsigned depth = 12;
};
SuiteResult suite_fairness(const FairnessParams& p = {});

struct HalvingParams {
  std::vector<std::pair<unsigned, unsigned>> shapes{{2, 0}, {2, 1}, {3, 0}, {3, 1}, {2, 2}, {2, 3},
                                                    {2, 4}, {3, 2}, {3, 3}, {3, 4}};
  BitString sigma = BitString::parse("0110100110010110");
  unsigned workers = 1;
};
SuiteResult suite_halving(const HalvingParams& p = {});

struct DerandParams {
  unsigned b = 1;
  std::vector<unsigned> size_bounds{1, 2, 3, 4};
  std::vector<BitString> sigmas{BitString{}, BitString::parse("1"), BitString::parse("0110"),
                                BitString::parse("01101001"), BitString::parse("0110100101")};
};
SuiteResult suite_derand(const DerandParams& p = {});

struct DiagGlobalParams {
  unsigned meet_upto = 6;
  Natural positions = Natural{1} << 10;
};
SuiteResult suite_diag_global(const DiagGlobalParams& p = {});

struct DiagLocalParams {
  unsigned meet_upto = 4;
};
SuiteResult suite_diag_local(const DiagLocalParams& p = {});

struct GameParams {
  unsigned meet_upto = 4;
  Natural horizon = Natural{1} << 10;
  std::uint64_t seed = 7;
  unsigned identity_trials = 100;
};
SuiteResult suite_games(const GameParams& p = {});

struct SparseParams {
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5};
  Natural horizon = Natural{1} << 10;
};
SuiteResult suite_sparse(const SparseParams& p = {});

struct Sigma2Params {
  unsigned max_prefix_length = 8;
  Natural horizon = Natural{1} << 8;
  unsigned languages = 5;
  std::uint64_t seed = 11;
};
SuiteResult suite_sigma2(const Sigma2Params& p = {});

struct GenericParams {
  unsigned k = 3;
  Natural horizon = Natural{1} << 10;
};
SuiteResult suite_generic(const GenericParams& p = {});

struct UnionParams {
  unsigned trials = 100;
  std::uint64_t seed = 5;
};
SuiteResult suite_union(const UnionParams& p = {});

struct AmplifyParams {
  unsigned reps = 15;
  unsigned trials = 1000;
  double base_correctness = 0.7;
  double required = 0.95;
  std::uint64_t seed = 2024;
};
SuiteResult suite_amplify(const AmplifyParams& p = {});

struct QuerySetParams {
  unsigned trials = 50;
  std::uint64_t seed = 13;
};
SuiteResult suite_query_sets(const QuerySetParams& p = {});

std::vector<std::string> suite_names();
/// Runs a suite by name with default parameters.
SuiteResult run_suite(const std::string& name);

}  // namespace rbcat::tools
