#include "bundlelab/metric.hpp"

#include <random>
#include <stdexcept>

namespace bundlelab {

Eigen::VectorXcd DeckAction::apply(const Eigen::VectorXcd& p) const {
  Eigen::VectorXcd out(p.size());
  out(0) = p(0) + translation;
  out.tail(p.size() - 1) = fiber(p(0)) * p.tail(p.size() - 1);
  return out;
}

Eigen::MatrixXcd DeckAction::jacobian(const Eigen::VectorXcd& p) const {
  const Eigen::Index n = p.size();
  Eigen::MatrixXcd j = Eigen::MatrixXcd::Zero(n, n);
  j(0, 0) = 1.0;
  j.block(1, 0, n - 1, 1) = fiber_dz(p(0)) * p.tail(n - 1);
  j.block(1, 1, n - 1, n - 1) = fiber(p(0));
  return j;
}

MetricField::MetricField(int dim, std::string label, ValueFn value, JetFn jet, std::vector<DeckAction> deck)
    : dim_(dim), label_(std::move(label)), value_(std::move(value)), jet_(std::move(jet)), deck_(std::move(deck)) {
  if (dim < 1 || dim > 3) throw std::invalid_argument("MetricField: dimension must be 1..3");
}

Eigen::MatrixXcd MetricField::operator()(const Eigen::VectorXcd& p) const {
  if (p.size() != dim_) throw std::invalid_argument("MetricField: point has wrong dimension");
  const CoeffMatrix<cplx> c = value_(p.data());
  Eigen::MatrixXcd m(dim_, dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) m(i, j) = c(i, j);
  return m;
}

HolomorphicMap HolomorphicMap::from(const DeckAction& d) {
  return {[d](const Eigen::VectorXcd& p) { return d.apply(p); },
          [d](const Eigen::VectorXcd& p) { return d.jacobian(p); }};
}

Eigen::MatrixXcd numeric_jacobian(const HolomorphicMap& phi, const Eigen::VectorXcd& p, double h) {
  const Eigen::Index n = p.size();
  Eigen::MatrixXcd j(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    auto central = [&](double step) {
      Eigen::VectorXcd a = p, b = p;
      a(k) += step;
      b(k) -= step;
      return Eigen::VectorXcd((phi.map(a) - phi.map(b)) / (2.0 * step));
    };
    j.col(k) = (4.0 * central(h / 2.0) - central(h)) / 3.0;
  }
  return j;
}

PullbackResult pullback(const MetricField& g, const HolomorphicMap& phi, const Eigen::VectorXcd& p) {
  const Eigen::MatrixXcd j = phi.jacobian ? phi.jacobian(p) : numeric_jacobian(phi, p);
  PullbackResult r;
  const double scale = std::max(1.0, j.norm());
  r.singular_jacobian = std::abs(j.determinant()) < 1e-12 * std::pow(scale, double(j.rows()));
  r.value = j.transpose() * g(phi.map(p)) * j.conjugate();
  return r;
}

DeckAction line_pair_deck(const LineBundleAH& l1, const LineBundleAH& l2, long m, long n, std::string label) {
  const cplx lam = double(m) + double(n) * l1.tau().value();
  const double h1 = l1.hermitian_form(), h2 = l2.hermitian_form();
  auto fiber = [=](cplx z) {
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(2, 2);
    f(0, 0) = l1.automorphy(m, n, z);
    f(1, 1) = l2.automorphy(m, n, z);
    return f;
  };
  auto fiber_dz = [=](cplx z) {
    Eigen::MatrixXcd f = Eigen::MatrixXcd::Zero(2, 2);
    f(0, 0) = kPi * h1 * std::conj(lam) * l1.automorphy(m, n, z);
    f(1, 1) = kPi * h2 * std::conj(lam) * l2.automorphy(m, n, z);
    return f;
  };
  return {lam, fiber, fiber_dz, std::move(label)};
}

DeckAction representation_deck(const AnglePair& theta, cplx b1, cplx b2, const Tau& tau, long m, long n,
                               std::string label) {
  const cplx lam = double(m) + double(n) * tau.value();
  Eigen::MatrixXcd f(2, 2);
  const cplx s = unit_phase(combine(m, theta[0], n, theta[1]).value());
  f << s, s * (double(m) * b1 + double(n) * b2), 0.0, s;
  return {lam, [f](cplx) { return f; }, [](cplx) { return Eigen::MatrixXcd::Zero(2, 2).eval(); },
          std::move(label)};
}

MetricField build_euclidean(int n) {
  return MetricField::generic(n, "euclidean", [n](const auto* z) {
    using S = std::remove_cvref_t<decltype(z[0])>;
    return CoeffMatrix<S>::identity(n);
  });
}

MetricField build_flat_typeI(const LineBundleAH& l1, const LineBundleAH& l2) {
  if (l1.degree() != 0 || l2.degree() != 0) throw std::invalid_argument("build_flat_typeI: degree 0 required");
  std::vector<DeckAction> deck{line_pair_deck(l1, l2, 1, 0, "gamma1"), line_pair_deck(l1, l2, 0, 1, "gamma2")};
  return MetricField::generic(
      3, "flat-typeI",
      [](const auto* z) {
        using S = std::remove_cvref_t<decltype(z[0])>;
        return CoeffMatrix<S>::identity(3);
      },
      std::move(deck));
}

MetricField build_typeII_metric(const LineBundleAH& l1, const LineBundleAH& l2) {
  if (l1.degree() <= 0 || l2.degree() != -l1.degree())
    throw std::invalid_argument("build_typeII_metric: deg L1 = -deg L2 > 0 required");
  const double h = l1.hermitian_form();
  std::vector<DeckAction> deck{line_pair_deck(l1, l2, 1, 0, "gamma1"), line_pair_deck(l1, l2, 0, 1, "gamma2")};
  return MetricField::generic(
      3, "typeII",
      [h](const auto* x) {
        using S = std::remove_cvref_t<decltype(x[0])>;
        using std::conj;
        using std::exp;
        const S z = x[0];
        const S zb = conj(z);
        const S r2 = abs2(z);
        const S ph(kPi * h);
        const S em = exp(-ph * r2), ep = exp(ph * r2);
        CoeffMatrix<S> g(3);
        g.add_outer(std::array<S, 3>{S(1.0), S(0.0), S(0.0)}, S(1.0));
        // d(e^{-pi H |z|^2} xi1) and d(e^{pi H |z|^2} xi2), each renormalized
        const std::array<S, 3> v{-ph * zb * x[1], S(1.0), S(0.0)};
        const std::array<S, 3> w{ph * zb * x[2], S(0.0), S(1.0)};
        g.add_outer(v, em);
        g.add_outer(w, ep);
        return g;
      },
      std::move(deck));
}

MetricField build_typeIII_metric(cplx b1, cplx b2, const AnglePair& theta, const Tau& tau) {
  const cplx c = (b2 - b1 * tau.re()) / tau.im();
  const cplx kappa = (b1 - kI * c) / 2.0;
  std::vector<DeckAction> deck{representation_deck(theta, b1, b2, tau, 1, 0, "gamma1"),
                               representation_deck(theta, b1, b2, tau, 0, 1, "gamma2")};
  return MetricField::generic(
      3, "gaugen",
      [b1, c, kappa](const auto* x) {
        using S = std::remove_cvref_t<decltype(x[0])>;
        const S ell = S(b1) * real_part(x[0]) + S(c) * imag_part(x[0]);
        CoeffMatrix<S> g(3);
        g.add_outer(std::array<S, 3>{S(1.0), S(0.0), S(0.0)}, S(1.0));
        g.add_outer(std::array<S, 3>{S(0.0), S(0.0), S(1.0)}, S(1.0));
        const std::array<S, 3> v{-S(kappa) * x[2], S(1.0), -ell};
        g.add_outer(v, S(1.0));
        return g;
      },
      std::move(deck));
}

MetricField build_gaugenspe(const AnglePair& theta, const Tau& tau) {
  return build_typeIII_metric(1.0, std::conj(tau.value()), theta, tau);
}

MetricField build_metric_for(const Rank2Bundle& e) {
  switch (e.type()) {
    case BundleType::I: return build_flat_typeI(e.as_i().first, e.as_i().second);
    case BundleType::II: return build_typeII_metric(e.as_ii().positive, e.as_ii().negative);
    case BundleType::III: {
      const auto& r = e.as_iii();
      return build_typeIII_metric(r.b1, r.b2, r.theta, e.tau());
    }
  }
  throw std::logic_error("unreachable");
}

std::vector<Eigen::VectorXcd> sample_points(int n, const Tau& tau, int count, std::uint64_t seed,
                                            double fiber_radius) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Eigen::VectorXcd> pts;
  pts.reserve(count);
  const int fiber_real_dim = 2 * (n - 1);
  for (int k = 0; k < count; ++k) {
    Eigen::VectorXcd p(n);
    p(0) = unit(rng) + unit(rng) * tau.value();
    if (n > 1) {
      Eigen::VectorXd dir(fiber_real_dim);
      for (int i = 0; i < fiber_real_dim; ++i) dir(i) = normal(rng);
      const double r = fiber_radius * std::pow(unit(rng), 1.0 / fiber_real_dim);
      dir *= r / std::max(dir.norm(), 1e-300);
      for (int i = 1; i < n; ++i) p(i) = cplx(dir(2 * (i - 1)), dir(2 * (i - 1) + 1));
    }
    pts.push_back(p);
  }
  return pts;
}

}  // namespace bundlelab
