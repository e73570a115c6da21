#include "bundlelab/growth.hpp"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>
#include <random>

#include "bundlelab/metric.hpp"

namespace bundlelab {

namespace {

constexpr double kBoundedTol = 1e-9;
constexpr int kRaySteps = 6;

double segment_length(const MetricField& g, const Point3& a, const Point3& b) {
  const Eigen::VectorXcd dir = b - a;
  if (dir.norm() == 0.0) return 0.0;
  auto speed = [&](double s) {
    const Eigen::VectorXcd p = a + s * dir;
    const cplx q = (dir.transpose() * g(p) * dir.conjugate()).value();
    return std::sqrt(std::max(q.real(), 0.0));
  };
  return boost::math::quadrature::gauss<double, 20>::integrate(speed, 0.0, 1.0);
}

// Fiber-only distance proxy for the flat and Type II metrics.
double fiber_norm(const Point3& p) { return std::hypot(std::abs(p(1)), std::abs(p(2))); }

Eigen::Vector3cd ray_direction(const Monomial& m) {
  Eigen::Vector3cd v(0.0, 0.0, 0.0);
  if (m.form == MonomialForm::Z2Power) {
    v(2) = 1.0;
    return v;
  }
  if (m.p > 0) v(1) = 1.0;
  if (m.q > 0) v(2) = 1.0;
  if (v.norm() == 0.0) v(2) = 1.0;
  return v / v.norm();
}

std::optional<Monomial> next_admissible(const Rank2Bundle& e, int d) {
  for (int extra = 1; extra <= 64; ++extra) {
    const BasisReport r = basis_for(e, d + extra);
    for (const Monomial& m : r.monomials)
      if (m.degree() > d) return m;
  }
  return std::nullopt;
}

}  // namespace

DistanceBounds gaugenspe_distance_bounds(const Point3& p) {
  static const MetricField g = build_gaugenspe({AngleParam::zero(), AngleParam::zero()}, Tau(0.0, 1.0));
  DistanceBounds b;
  b.lower = std::max(std::abs(p(0)), std::abs(p(2)));
  const Point3 o(0.0, 0.0, 0.0);
  const Point3 a(0.0, 0.0, p(2));
  const Point3 c(0.0, p(1), p(2));
  b.upper = segment_length(g, o, a) + segment_length(g, a, c) + segment_length(g, c, p);
  return b;
}

OdGrowthReport verify_Od_growth(const Rank2Bundle& e, int d, int samples, std::uint64_t seed) {
  OdGrowthReport rep;
  rep.degree = d;
  const bool gaugen = e.type() == BundleType::III;
  auto lower = [&](const Point3& p) { return gaugen ? gaugenspe_distance_bounds(p).lower : fiber_norm(p); };
  auto upper = [&](const Point3& p) { return gaugen ? gaugenspe_distance_bounds(p).upper : fiber_norm(p); };

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Point3> pts;
  for (int i = 0; i < samples; ++i) {
    Point3 v;
    for (int k = 0; k < 3; ++k) v(k) = cplx(normal(rng), normal(rng));
    if (!gaugen) v(0) = 0.0;  // fibers over z = 0 carry the Euclidean fiber metric
    v /= v.norm();
    const double r = std::pow(10.0, 6.0 * (i % 7) / 6.0);
    pts.push_back(r * v);
  }

  const BasisReport basis = basis_for(e, d);
  for (const Monomial& m : basis.monomials) {
    OdEntry entry{m, 0.0, {}, true};
    for (const Point3& p : pts) {
      const double ratio = std::abs(m.evaluate(p)) / std::pow(lower(p) + 1.0, m.degree());
      entry.max_ratio = std::max(entry.max_ratio, ratio);
    }
    entry.pass = entry.max_ratio <= 1.0 + kBoundedTol;
    rep.pass = rep.pass && entry.pass;
    rep.basis.push_back(entry);
  }

  if (const auto w = next_admissible(e, d)) {
    OdEntry entry{*w, 0.0, {}, true};
    const Eigen::Vector3cd dir = ray_direction(*w);
    for (int j = 1; j <= kRaySteps; ++j) {
      const double r = std::pow(10.0, j);
      const Point3 p = r * dir;
      entry.ray.emplace_back(r, std::abs(w->evaluate(p)) / std::pow(upper(p) + 1.0, d));
    }
    bool increasing = true;
    for (std::size_t i = 1; i < entry.ray.size(); ++i)
      if (!(entry.ray[i].second > entry.ray[i - 1].second)) increasing = false;
    entry.pass = increasing && entry.ray.back().second > 10.0 * entry.ray.front().second;
    rep.pass = rep.pass && entry.pass;
    rep.witness = entry;
  }
  return rep;
}

}  // namespace bundlelab
