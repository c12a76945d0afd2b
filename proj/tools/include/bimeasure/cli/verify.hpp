#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bimeasure/json_io.hpp"

namespace bimeasure::cli {

struct SuiteResult {
  std::string name;
  std::size_t passed = 0;
  std::size_t failed = 0;
  /// First failing case: suite, seed, case index, message and serialized inputs.
  std::optional<Json> counterexample;
  double seconds = 0.0;
};

struct VerifyReport {
  std::vector<SuiteResult> suites;  ///< sorted by name

  bool ok() const;
  /// Wall times are included only when `timings` is set, so the default
  /// report is byte-identical across runs.
  Json to_json(bool timings = false) const;
};

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t cases = 1000;
  double tol = 1e-9;
  std::string suite_glob = "*";
};

/// Every registered suite, sorted.
std::vector<std::string> suite_names();

/// Runs every suite whose name matches the glob. Case k of suite s draws from
/// an engine seeded by (seed, s, k), so a counterexample is reproduced by
/// rerunning with the same seed and at least k + 1 cases.
VerifyReport run_verify(const VerifyOptions& options);

/// Exact long-run orbit average: every atom's mass is carried to the cycle its
/// orbit falls into and spread evenly over that cycle.
DProbability cycle_average_oracle(const PointMap& f, const DProbability& mu0);

}  // namespace bimeasure::cli
