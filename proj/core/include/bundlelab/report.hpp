#pragma once

#include <string>
#include <vector>

namespace bundlelab {

struct CheckResult {
  std::string check;
  int points = 0;
  double max_defect = 0.0;
  double tolerance = 0.0;
  bool pass = true;
  std::string note;
};

// Associative merge of two partial sweeps of the same check.
CheckResult merge(const CheckResult& a, const CheckResult& b);

inline bool all_pass(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

}  // namespace bundlelab
