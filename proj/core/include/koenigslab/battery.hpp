#ifndef KOENIGSLAB_BATTERY_HPP
#define KOENIGSLAB_BATTERY_HPP

#include <string>
#include <vector>

namespace koenigslab {

/// One self-check of the reproduction battery. `detail` is deterministic
/// (frozen expectations and measured defects, never wall time); `seconds`
/// is informational and excluded from machine-readable output.
struct BatteryItem {
  std::string name;
  bool pass;
  std::string detail;
  double seconds;
};

struct BatteryResult {
  std::vector<BatteryItem> items;
  bool all_pass;
  double total_seconds;
  /// Operation checklist: every public library operation must be exercised
  /// by at least one check. A non-empty `coverage_missing` fails the battery.
  int coverage_exercised;
  int coverage_required;
  std::vector<std::string> coverage_missing;
};

/// The full self-check battery: closed-form kernels, the exact and floating
/// counterexample to the necessary condition, both Koenigs routes, the
/// conjugation axioms and Gram structure, commutant / power / spectral /
/// rotation symmetry checks, exact certificates, and an IO round trip.
/// Every check owns its frozen tolerances; nothing is configurable here,
/// which is what makes two runs comparable.
BatteryResult run_battery();

}  // namespace koenigslab

#endif  // KOENIGSLAB_BATTERY_HPP
