#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "bundlelab/holo.hpp"

namespace bundlelab {

struct DistanceBounds {
  double lower = 0.0, upper = 0.0;
};

// Bounds on the distance from the origin in the (1, conj tau) Gaugen metric.
// lower = max(|z|, |z2|); upper = length of the path
// 0 -> (0,0,z2) -> (0,z1,z2) -> (z,z1,z2) by quadrature.
DistanceBounds gaugenspe_distance_bounds(const Point3& p);

struct OdEntry {
  Monomial monomial;
  double max_ratio = 0.0;   // bounded side: |f| / (lower + 1)^k
  std::vector<std::pair<double, double>> ray;  // witness side: (R, |f| / (upper + 1)^d)
  bool pass = true;
};

struct OdGrowthReport {
  int degree = 0;
  std::vector<OdEntry> basis;
  std::optional<OdEntry> witness;  // next admissible degree, expected to diverge
  bool pass = true;
};

OdGrowthReport verify_Od_growth(const Rank2Bundle& e, int d, int samples = 200, std::uint64_t seed = 0xE11);

}  // namespace bundlelab
