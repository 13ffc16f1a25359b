#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qet {

// Named tolerances used by the verification suite. Runtime overrides go
// through set(); unknown names are rejected so a typo cannot silently
// disable a check.
class Tolerances {
 public:
  Tolerances();  // defaults
  double get(const std::string& name) const;
  void set(const std::string& name, double value);
  const std::map<std::string, double>& all() const { return values_; }

 private:
  std::map<std::string, double> values_;
};

struct CheckResult {
  std::string name;
  double residual;   // worst case observed
  double tolerance;  // pass iff residual <= tolerance
  bool pass;
};

struct VerifyReport {
  std::uint64_t seed;
  std::vector<CheckResult> checks;
  bool all_pass;
  double elapsed_seconds;  // informational; not part of the summary
};

struct VerifyOptions {
  std::uint64_t seed = 12345;  // default Monte-Carlo seed
  Tolerances tolerances;
};

// Full invariant suite: oracle equivalences, energy bookkeeping,
// passivity and channel-dominance Monte-Carlo, measurement-minimization
// and partial-transpose checks, thresholds and contour properties.
// Deterministic for a fixed seed.
VerifyReport run_verification(const VerifyOptions& options);

}  // namespace qet
