#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "chipart/roots.hpp"

namespace chipart {

struct FuzzOptions {
  std::size_t count = 1000;
  int min_degree = 1;
  int max_degree = 9;
  std::uint64_t seed = 0;
  double margin = kDefaultMargin;
  /// Self-test of the harness: negate the factored Delta_4 inside the
  /// identity check so it must report counterexamples.
  bool flip_delta4_sign = false;
};

struct PropertyTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;  // e.g. oracle Indeterminate
};

struct Counterexample {
  std::string property;
  std::size_t sample = 0;
  nlohmann::json polynomial;
  std::string detail;
};

struct FuzzResult {
  std::vector<PropertyTally> properties;
  std::vector<Counterexample> counterexamples;  // first kMaxCounterexamples

  static constexpr std::size_t kMaxCounterexamples = 20;

  bool passed() const;
};

/// Runs, on `count` seeded samples: the Delta_4 triple identity (exact),
/// agreement of the three minor criteria, root-oracle agreement (outside
/// the margin) with reconstruction error < 1e-6, soundness of the Cor 1/2/3
/// certificates on samples from their hypothesis regions, and
/// analyze == lienard_chipart. Output depends only on the options.
FuzzResult run_fuzz(const FuzzOptions& options);

nlohmann::json fuzz_result_json(const FuzzOptions& options, const FuzzResult& result);
std::string fuzz_result_text(const FuzzOptions& options, const FuzzResult& result);

}  // namespace chipart
