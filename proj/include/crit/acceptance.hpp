#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace crit {

enum class Tier { Fast, Full };

// One acceptance criterion outcome. `values` holds every measured number in
// evaluation order so a repeated run can be compared bit-for-bit.
struct CriterionResult {
  int id = 0;
  std::string name;
  std::string status;  // "pass", "fail" or "skipped"
  std::string detail;
  std::vector<double> values;
  double seconds = 0.0;

  bool passed() const { return status == "pass"; }
  bool skipped() const { return status == "skipped"; }
};

struct AcceptanceReport {
  Tier tier = Tier::Fast;
  std::uint64_t seed = 0;
  int threads = 1;
  std::vector<CriterionResult> criteria;

  bool all_pass() const;
};

// Runs the criteria for the tier (fast: oracle-exact checks plus the
// determinism contract; full: everything), printing one pass/fail line per
// criterion to `log`.
AcceptanceReport run_acceptance(Tier tier, std::uint64_t seed, int threads, std::ostream& log);

void write_report_json(const AcceptanceReport& report, std::ostream& out);

}  // namespace crit
