#include "bundlelab/witness.hpp"

#include <random>
#include <stdexcept>

namespace bundlelab {

namespace {

ModularMatrix lattice_matrix(const Tau& source, const Tau& target, cplx a) {
  const auto one = lattice_coordinates(a, target);
  const auto tau = lattice_coordinates(a * source.value(), target);
  if (!one || !tau) throw std::invalid_argument("IsoWitness: base map does not preserve the lattice");
  const auto [p, q] = *one;
  const auto [r, s] = *tau;
  const ModularMatrix m{s, r, q, p};
  if (m.det() != 1 && m.det() != -1) throw std::invalid_argument("IsoWitness: base map is not a lattice isomorphism");
  return m;
}

}  // namespace

IsoWitness::IsoWitness(Tau source, Tau target, cplx a, cplx b, FiberMatrix n, std::string description)
    : source_(source),
      target_(target),
      a_(a),
      b_(b),
      n_(std::move(n)),
      description_(std::move(description)),
      matrix_(lattice_matrix(source, target, a)) {}

IsoWitness IsoWitness::identity(const Tau& tau) {
  return {tau, tau, 1.0, 0.0, {{{ExpPoly(1.0), ExpPoly()}, {ExpPoly(), ExpPoly(1.0)}}}, "(z, z1, z2)"};
}

Eigen::Matrix2cd IsoWitness::fiber_at(cplx z) const {
  Eigen::Matrix2cd m;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) m(i, j) = n_[i][j](z);
  return m;
}

Point3 IsoWitness::operator()(const Point3& p) const {
  Point3 out;
  out(0) = a_ * p(0) + b_;
  out.tail<2>() = fiber_at(p(0)) * p.tail<2>();
  return out;
}

IsoWitness IsoWitness::inverse() const {
  const ExpPoly det = n_[0][0] * n_[1][1] - n_[0][1] * n_[1][0];
  if (!det.is_single_term() || det.terms().front().power != 0)
    throw std::logic_error("IsoWitness::inverse: fiber determinant is not a pure exponential");
  const auto& t = det.terms().front();
  const ExpPoly inv_det = ExpPoly::exponential(1.0 / t.coeff, -t.rate);
  FiberMatrix adj{{{n_[1][1] * inv_det, ExpPoly() - n_[0][1] * inv_det},
                   {ExpPoly() - n_[1][0] * inv_det, n_[0][0] * inv_det}}};
  // N^{-1} evaluated at z = (w - B) / A
  const cplx sa = 1.0 / a_, sb = -b_ / a_;
  for (auto& row : adj)
    for (auto& e : row) e = e.substitute(sa, sb);
  return {target_, source_, sa, sb, adj, "inverse of " + description_};
}

IsoWitness IsoWitness::after(const IsoWitness& first) const {
  if (!same_tau(first.target_, source_, 1e-9)) throw std::invalid_argument("IsoWitness::after: tau mismatch");
  FiberMatrix shifted = n_;
  for (auto& row : shifted)
    for (auto& e : row) e = e.substitute(first.a_, first.b_);
  FiberMatrix prod;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) prod[i][j] = shifted[i][0] * first.n_[0][j] + shifted[i][1] * first.n_[1][j];
  return {first.source_, target_, a_ * first.a_, a_ * first.b_ + b_, prod,
          description_ + " . " + first.description_};
}

IsoWitness IsoWitness::with_description(std::string d) const {
  IsoWitness w = *this;
  w.description_ = std::move(d);
  return w;
}

double verify_intertwining(const IsoWitness& w, const Rank2Bundle& from, const Rank2Bundle& to,
                           int points, std::uint64_t seed, double radius) {
  if (!same_tau(w.source(), from.tau(), 1e-9) || !same_tau(w.target(), to.tau(), 1e-9))
    throw std::invalid_argument("verify_intertwining: witness does not connect these bundles");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(-radius, radius);
  const ModularMatrix& m = w.matrix();
  // A.1 = p + q tau~ = (m.d, m.c); A.tau = r + s tau~ = (m.b, m.a)
  const std::array<std::array<long, 4>, 2> gens{{{1, 0, m.d, m.c}, {0, 1, m.b, m.a}}};
  double worst = 0.0;
  for (int k = 0; k < points; ++k) {
    Point3 p;
    for (int i = 0; i < 3; ++i) p(i) = cplx(u(rng), u(rng));
    const Point3 wp = w(p);
    for (const auto& g : gens) {
      const Point3 lhs = w(from.deck(g[0], g[1], p));
      const Point3 rhs = to.deck(g[2], g[3], wp);
      worst = std::max(worst, (lhs - rhs).norm() / std::max(1.0, rhs.norm()));
    }
  }
  return worst;
}

}  // namespace bundlelab
