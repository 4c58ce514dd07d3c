#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcoh/core.hpp"
#include "qcoh/rng.hpp"

namespace qcoh {

/// Outcome of one property suite: pass/fail, the number of individual checks
/// performed, the worst deviation magnitude observed (also recorded on
/// passing runs), and a short description of the first failure, if any.
struct SuiteResult {
  bool passed = true;
  long checks = 0;
  double worst_error = 0.0;
  std::string detail;
};

/// A named property suite. The runner hands each suite its own independent
/// random stream and the trial-count knob; suites with fixed deterministic
/// grids ignore the knob.
struct Suite {
  std::string name;
  std::function<SuiteResult(Rng&, int)> run;
};

/// Every invariants-and-properties suite of the library, in a fixed order.
std::vector<Suite> standard_suites();

struct VerifySummary {
  std::uint64_t seed = 0;
  int trials = 0;
  bool all_passed = false;
  std::vector<std::string> names;
  std::vector<SuiteResult> results;
};

/// Run the given suites with per-suite child streams of the seed. The result
/// is byte-for-byte reproducible for a fixed (seed, trials) pair.
VerifySummary run_suites(const std::vector<Suite>& suites, std::uint64_t seed,
                         int trials);

nlohmann::ordered_json summary_to_json(const VerifySummary& summary);

}  // namespace qcoh
