#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace indpow {

/// Deliberate defects used to prove the harness can fail.
enum class Fault {
  none,
  /// Oracle-agreement checks use C(n - hk + h + 1, k) for p_{n,k}.
  binom_off_by_one,
};

struct VerifyOptions {
  int h_max = 4;
  int n_max_formula = 200;
  int n_max_oracle = 14;
  Fault fault = Fault::none;
};

struct CheckResult {
  std::string name;
  std::string range;
  bool passed = true;
  /// Parameters and values of the first failing case, empty on success.
  std::string counterexample;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool overall() const;
  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

/// Runs every formula, recurrence, oracle and cube identity over the given
/// ranges. Independent cases run in parallel; check order and the reported
/// counterexample (the first failing case in iteration order) do not depend
/// on scheduling.
VerificationReport run_verification(const VerifyOptions& options);

}  // namespace indpow
