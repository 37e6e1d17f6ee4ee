#ifndef ODDPERM_VERIFY_HPP
#define ODDPERM_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

namespace oddperm {

/// Outcome of one named check. `degree` is the n the check actually ran at;
/// checks whose cost grows too fast are capped below the requested n.
/// Findings are structured records: counterexamples for failed checks,
/// observations for open-question probes (which never fail).
struct CheckResult {
  std::string name;
  std::string scope;  // "exhaustive" or "sampled"
  int degree = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t findings_total = 0;
  std::vector<nlohmann::json> findings;  // at most kMaxFindings kept
};

inline constexpr std::size_t kMaxFindings = 25;

struct VerificationReport {
  int n = 0;
  int jobs = 0;
  bool long_run = false;
  std::vector<CheckResult> checks;
  double wall_time = 0.0;

  bool ok() const;
  nlohmann::json to_json() const;
};

struct VerifyOptions {
  /// Raises the per-check degree caps and unlocks n = 10.
  bool long_run = false;
  int jobs = 0;
  std::uint64_t seed = 0x0dd0dd;
};

/// Names accepted by run_verification, in execution order.
const std::vector<std::string>& available_checks();

/// Runs the named checks (all of them when `checks` is empty) on S_n.
/// Throws std::invalid_argument for unknown names, n outside [1, 10], or
/// n = 10 without long_run.
VerificationReport run_verification(int n, std::span<const std::string> checks,
                                    const VerifyOptions& opts = {});

}  // namespace oddperm

#endif  // ODDPERM_VERIFY_HPP
