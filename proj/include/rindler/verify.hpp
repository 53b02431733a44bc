#pragma once

// Cross-validation layer: every closed-form result in the library is checked
// against an independent route (quadrature oracle, alternate representation,
// or exact identity), and every place where the implementation deliberately
// departs from the published closed forms is itemized with its measured
// separation factor.

#include <cstdint>
#include <string>
#include <vector>

namespace rindler::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  // Worst deviation the check measured and the pinned bound it must stay
  // under. Multi-part checks normalize each part by its own bound and
  // report the worst ratio against threshold 1.
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct DiscrepancyEntry {
  std::string name;
  std::string published;    // what the reference closed form states
  std::string implemented;  // what this library validates and uses
  double measured_factor = 1.0;
  std::string note;
};

struct VerificationReport {
  std::vector<CheckResult> checks;
  bool all_passed() const;
};

// Check names in canonical execution order.
const std::vector<std::string>& check_names();

// Runs one named check. Unknown names throw ConfigError.
CheckResult run_check(const std::string& name, std::uint64_t seed = 1729);

// Runs every check whose name contains filter (all checks when empty), in
// canonical order.
VerificationReport run_checks(const std::string& filter = "",
                              std::uint64_t seed = 1729);

// The measured divergences between published closed forms and the validated
// implementation, with the numbers that settle each one.
std::vector<DiscrepancyEntry> discrepancy_report();

}  // namespace rindler::verify
