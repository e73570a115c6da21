#pragma once

#include <string>

#include "bundlelab/derivatives.hpp"
#include "bundlelab/metric.hpp"

namespace bundlelab {

// Hermitian metric h_{alpha betabar}(z) on the fibers of a rank r bundle over C.
class FiberMetric {
 public:
  using ValueFn = std::function<CoeffMatrix<cplx>(const cplx*)>;
  using JetFn = std::function<CoeffMatrix<Jet>(const Jet*)>;

  FiberMetric(int rank, std::string label, ValueFn value, JetFn jet, double k = 0.0)
      : rank_(rank), label_(std::move(label)), value_(std::move(value)), jet_(std::move(jet)), k_(k) {}

  template <class F>
  static FiberMetric generic(int rank, std::string label, F f, double k = 0.0) {
    return FiberMetric(
        rank, std::move(label), [f](const cplx* z) { return f(z); }, [f](const Jet* z) { return f(z); }, k);
  }

  // |v1 - (Im z) v2|^2 + k |v2|^2
  static FiberMetric paun(double k);
  // e^{-pi H |z|^2} |xi|^2
  static FiberMetric ah_weight(double h);
  static FiberMetric constant(const Eigen::Matrix2cd& h);

  int rank() const { return rank_; }
  double k() const { return k_; }
  const std::string& label() const { return label_; }
  Eigen::MatrixXcd operator()(cplx z) const;
  CoeffMatrix<Jet> coeffs(const Jet* z) const { return jet_(z); }
  CoeffMatrix<cplx> coeffs(const cplx* z) const { return value_(z); }
  // t = h(v, vbar)
  double norm2(cplx z, const Eigen::VectorXcd& v) const;

 private:
  int rank_;
  std::string label_;
  ValueFn value_;
  JetFn jet_;
  double k_;
};

// Chern curvature as the coefficient of dzbar ^ dz:
// d_z d_zbar h - d_z h h^{-1} d_zbar h.
Eigen::MatrixXcd fiber_chern_curvature(const FiberMetric& h, cplx z, DiffMethod m = DiffMethod::Jet);

}  // namespace bundlelab
