#pragma once

#include <functional>
#include <vector>

#include "bundlelab/jet.hpp"
#include "bundlelab/types.hpp"

namespace bundlelab {

enum class DiffMethod { Jet, Central };

inline constexpr double kCentralStep = 1e-4;

// Real-coordinate derivatives of a vector-valued function of n complex
// variables, with r = (x_1, y_1, ..., x_n, y_n).
struct RealDerivatives {
  int n = 0, outputs = 0;
  std::vector<cplx> grad;  // [a * outputs + k]
  std::vector<cplx> hess;  // [(a * 2n + b) * outputs + k]

  cplx d(int a, int k) const { return grad[a * outputs + k]; }
  cplx dd(int a, int b, int k) const { return hess[(a * 2 * n + b) * outputs + k]; }
  // d/dz_i and d/dzbar_i
  cplx holo(int i, int k) const { return 0.5 * (d(2 * i, k) - kI * d(2 * i + 1, k)); }
  cplx antiholo(int i, int k) const { return 0.5 * (d(2 * i, k) + kI * d(2 * i + 1, k)); }
  // d^2/dz_i dzbar_j
  cplx mixed(int i, int j, int k) const {
    return 0.25 * (dd(2 * i, 2 * j, k) + dd(2 * i + 1, 2 * j + 1, k) +
                   kI * (dd(2 * i, 2 * j + 1, k) - dd(2 * i + 1, 2 * j, k)));
  }
};

using JetVectorFn = std::function<std::vector<Jet>(const Jet*)>;
using ValueVectorFn = std::function<std::vector<cplx>(const cplx*)>;

// order 1: gradient only; order 2: gradient and Hessian.
RealDerivatives derivatives_jet(const JetVectorFn& f, const cplx* p, int n, int order);
RealDerivatives derivatives_central(const ValueVectorFn& f, const cplx* p, int n, int order,
                                    double h = kCentralStep);

}  // namespace bundlelab
