#pragma once

#include <Eigen/Dense>
#include <complex>
#include <numbers>

namespace bundlelab {

using cplx = std::complex<double>;
using Point3 = Eigen::Vector3cd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr cplx kI{0.0, 1.0};

// e^{2 pi i x}
inline cplx unit_phase(double x) { return std::exp(cplx(0.0, 2.0 * kPi * x)); }

}  // namespace bundlelab
