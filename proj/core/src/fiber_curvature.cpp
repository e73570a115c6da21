#include "bundlelab/fiber_curvature.hpp"

#include "bundlelab/derivatives.hpp"

namespace bundlelab {

FiberMetric FiberMetric::paun(double k) {
  return generic(
      2, "paun",
      [k](const auto* z) {
        using S = std::remove_cvref_t<decltype(z[0])>;
        const S y = imag_part(z[0]);
        CoeffMatrix<S> h(2);
        h(0, 0) = S(1.0);
        h(0, 1) = -y;
        h(1, 0) = -y;
        h(1, 1) = y * y + S(k);
        return h;
      },
      k);
}

FiberMetric FiberMetric::ah_weight(double hform) {
  return generic(1, "ah-weight", [hform](const auto* z) {
    using S = std::remove_cvref_t<decltype(z[0])>;
    using std::exp;
    CoeffMatrix<S> h(1);
    h(0, 0) = exp(S(-kPi * hform) * abs2(z[0]));
    return h;
  });
}

FiberMetric FiberMetric::constant(const Eigen::Matrix2cd& m) {
  return generic(2, "constant", [m](const auto* z) {
    using S = std::remove_cvref_t<decltype(z[0])>;
    CoeffMatrix<S> h(2);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) h(i, j) = S(m(i, j));
    return h;
  });
}

Eigen::MatrixXcd FiberMetric::operator()(cplx z) const {
  const CoeffMatrix<cplx> c = value_(&z);
  Eigen::MatrixXcd m(rank_, rank_);
  for (int i = 0; i < rank_; ++i)
    for (int j = 0; j < rank_; ++j) m(i, j) = c(i, j);
  return m;
}

double FiberMetric::norm2(cplx z, const Eigen::VectorXcd& v) const {
  return (v.transpose() * (*this)(z) * v.conjugate()).value().real();
}

Eigen::MatrixXcd fiber_chern_curvature(const FiberMetric& h, cplx z, DiffMethod m) {
  const int r = h.rank();
  auto flat_j = [&](const Jet* x) {
    const auto c = h.coeffs(x);
    std::vector<Jet> out;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) out.push_back(c(i, j));
    return out;
  };
  auto flat_v = [&](const cplx* x) {
    const auto c = h.coeffs(x);
    std::vector<cplx> out;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < r; ++j) out.push_back(c(i, j));
    return out;
  };
  const RealDerivatives d =
      m == DiffMethod::Jet ? derivatives_jet(flat_j, &z, 1, 2) : derivatives_central(flat_v, &z, 1, 2);
  Eigen::MatrixXcd dh(r, r), dbh(r, r), ddh(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      dh(i, j) = d.holo(0, i * r + j);
      dbh(i, j) = d.antiholo(0, i * r + j);
      ddh(i, j) = d.mixed(0, 0, i * r + j);
    }
  const Eigen::MatrixXcd hv = h(z);
  return ddh - dh * hv.inverse() * dbh;
}

}  // namespace bundlelab
