#ifndef SASAKI_REPORT_HPP
#define SASAKI_REPORT_HPP

#include <string>
#include <vector>

namespace sasaki {

/// One verified identity: the measured worst-case violation against its
/// tolerance. Reports carry magnitudes, not booleans, so tolerance policy
/// stays in one place.
struct CheckReport {
  std::string name;
  double max_violation = 0.0;
  double tolerance = 0.0;

  bool pass() const { return max_violation < tolerance; }
};

using CheckList = std::vector<CheckReport>;

inline bool all_pass(const CheckList& checks) {
  for (const auto& c : checks)
    if (!c.pass()) return false;
  return true;
}

}  // namespace sasaki

#endif
