#include "bundlelab/hermitian_checks.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "bundlelab/forms.hpp"

namespace bundlelab {

namespace {

template <class S>
std::vector<S> flatten(const CoeffMatrix<S>& c) {
  std::vector<S> out;
  out.reserve(c.n * c.n);
  for (int i = 0; i < c.n; ++i)
    for (int j = 0; j < c.n; ++j) out.push_back(c(i, j));
  return out;
}

template <class S>
std::vector<S> log_det(const MetricField& g, const S* z) {
  using std::log;
  return {log(g.coeffs(z).det())};
}

// Masks of the (n-1, n-1) components of omega^{n-1}, in a fixed order.
template <class S>
std::vector<S> omega_power_coefficients(const MetricField& g, const S* z, const std::vector<unsigned>& masks) {
  const Form<S> w = kahler_form(g.coeffs(z));
  Form<S> p = w;
  for (int k = 2; k < g.dim(); ++k) p = p.wedge(w);
  std::vector<S> out;
  out.reserve(masks.size());
  for (unsigned m : masks) {
    auto it = p.coeff.find(m);
    out.push_back(it == p.coeff.end() ? S(0.0) : it->second);
  }
  return out;
}

std::vector<unsigned> middle_masks(int n) {
  std::vector<unsigned> masks;
  const unsigned holo = (1u << n) - 1u;
  for (unsigned m = 0; m <= top_mask(n); ++m)
    if (std::popcount(m & holo) == n - 1 && std::popcount(m & ~holo) == n - 1) masks.push_back(m);
  return masks;
}

RealDerivatives run(const MetricField& g, const Eigen::VectorXcd& p, int order, DiffMethod m,
                    const JetVectorFn& fj, const ValueVectorFn& fv) {
  if (m == DiffMethod::Jet && g.has_jet()) return derivatives_jet(fj, p.data(), g.dim(), order);
  return derivatives_central(fv, p.data(), g.dim(), order);
}

}  // namespace

double det_defect(const MetricField& g, const Eigen::VectorXcd& p) {
  if (!g.has_jet()) return std::abs(g(p).determinant() - 1.0);
  // Extended precision: the exponential weights cancel in det g.
  std::vector<Jet> x(p.size());
  for (int i = 0; i < p.size(); ++i) x[i] = Jet(std::complex<long double>(p(i).real(), p(i).imag()));
  const std::complex<long double> d = g.coeffs(x.data()).det().v;
  return static_cast<double>(std::abs(d - std::complex<long double>(1.0L)));
}

double min_eigenvalue(const MetricField& g, const Eigen::VectorXcd& p) {
  const Eigen::MatrixXcd m = g(p);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

double deck_invariance_defect(const MetricField& g, const Eigen::VectorXcd& p) {
  const Eigen::MatrixXcd base = g(p);
  double worst = 0.0;
  for (const DeckAction& d : g.deck()) {
    const PullbackResult pb = pullback(g, HolomorphicMap::from(d), p);
    worst = std::max(worst, (pb.value - base).norm() / base.norm());
  }
  return worst;
}

RealDerivatives component_derivatives(const MetricField& g, const Eigen::VectorXcd& p, int order, DiffMethod m) {
  return run(
      g, p, order, m, [&](const Jet* z) { return flatten(g.coeffs(z)); },
      [&](const cplx* z) { return flatten(g.coeffs(z)); });
}

double chern_ricci_defect(const MetricField& g, const Eigen::VectorXcd& p, DiffMethod m) {
  const RealDerivatives d = run(
      g, p, 2, m, [&](const Jet* z) { return log_det(g, z); }, [&](const cplx* z) { return log_det(g, z); });
  double worst = 0.0;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = 0; j < g.dim(); ++j) worst = std::max(worst, std::abs(d.mixed(i, j, 0)));
  return worst;
}

cplx gauduchon_coefficient(const MetricField& g, const Eigen::VectorXcd& p, DiffMethod m) {
  const int n = g.dim();
  if (n != 3) throw std::invalid_argument("gauduchon_defect: n = 3 required");
  const std::vector<unsigned> masks = middle_masks(n);
  const RealDerivatives d = run(
      g, p, 2, m, [&](const Jet* z) { return omega_power_coefficients(g, z, masks); },
      [&](const cplx* z) { return omega_power_coefficients(g, z, masks); });
  cplx total = 0.0;
  for (std::size_t k = 0; k < masks.size(); ++k) {
    const unsigned mk = masks[k];
    for (int a = 0; a < n; ++a) {
      if (mk & (1u << a)) continue;
      for (int b = 0; b < n; ++b) {
        const unsigned bb = 1u << (n + b);
        if (mk & bb) continue;
        const unsigned head = (1u << a) | bb;
        total += double(wedge_sign(head, mk)) * d.mixed(a, b, static_cast<int>(k));
      }
    }
  }
  return total / euclidean_volume_coefficient(n);
}

double gauduchon_defect(const MetricField& g, const Eigen::VectorXcd& p, DiffMethod m) {
  return std::abs(gauduchon_coefficient(g, p, m));
}

double kahler_defect(const MetricField& g, const Eigen::VectorXcd& p, DiffMethod m) {
  const int n = g.dim();
  const RealDerivatives d = component_derivatives(g, p, 1, m);
  double worst = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        worst = std::max(worst, std::abs(d.holo(i, j * n + k) - d.holo(j, i * n + k)));
  return worst;
}

CheckResult sweep(const std::string& name, const std::vector<Eigen::VectorXcd>& pts,
                  const std::function<double(const Eigen::VectorXcd&)>& defect, double tol) {
  CheckResult r{name, static_cast<int>(pts.size()), 0.0, tol, true, {}};
  bool finite = true;
  for (const auto& p : pts) {
    const double v = defect(p);
    if (!std::isfinite(v)) finite = false;
    else r.max_defect = std::max(r.max_defect, v);
  }
  if (!finite) {
    r.max_defect = std::numeric_limits<double>::infinity();
    r.note = "non-finite defect";
  }
  r.pass = r.max_defect <= tol;
  return r;
}

CheckResult merge(const CheckResult& a, const CheckResult& b) {
  CheckResult r = a;
  r.points = a.points + b.points;
  r.max_defect = std::max(a.max_defect, b.max_defect);
  r.pass = a.pass && b.pass;
  return r;
}

}  // namespace bundlelab
