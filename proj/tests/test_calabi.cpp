#include <gtest/gtest.h>

#include <random>

#include "bundlelab/calabi.hpp"
#include "bundlelab/growth.hpp"

using namespace bundlelab;

TEST(FiberDistance, EuclideanIsSquareRoot) {
  const RadialProfile e = RadialProfile::euclidean();
  for (double t : {1.0, 10.0, 100.0, 1e4, 1e8}) EXPECT_NEAR(fiber_distance(e, t), std::sqrt(t), 1e-8 * std::sqrt(t));
  EXPECT_EQ(fiber_distance(e, 0.0), 0.0);
}

TEST(FiberDistance, CalabiLogLowerBound) {
  const double a = 2.0, b = 1.0, c = 3.0;
  const RadialProfile u = RadialProfile::calabi_log(a, b, c);
  double prev = 0.0;
  for (double t : decade_grid(1.0, 1e12)) {
    const double d = fiber_distance(u, t);
    EXPECT_GE(d, 0.5 * b * (std::log(std::log(c + t)) - std::log(std::log(c))));
    EXPECT_GT(d, prev);
    prev = d;
  }
  EXPECT_THROW(RadialProfile::calabi_log(0.5, 1.0, 3.0), std::invalid_argument);
  EXPECT_THROW(RadialProfile::calabi_log(2.0, 1.0, 1.0), std::invalid_argument);
}

TEST(FiberDistance, CalabiLogAgainstTrapezoid) {
  const RadialProfile u = RadialProfile::calabi_log(1.5, 0.7, 2.5);
  // t = e^s, dt / (2 sqrt t) sqrt(w) = sqrt(w t) / 2 ds, trapezoid from s = -40
  const int n = 200000;
  const double lo = -40.0, hi = std::log(1e6);
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double s = lo + (hi - lo) * i / n;
    const double t = std::exp(s);
    const double f = 0.5 * std::sqrt(u.weight(t) * t);
    sum += (i == 0 || i == n) ? 0.5 * f : f;
  }
  sum *= (hi - lo) / n;
  EXPECT_NEAR(fiber_distance(u, 1e6), sum, 1e-7);
}

TEST(FiberDistance, InvariantViolationNamesT) {
  const RadialProfile bad = RadialProfile::custom(
      "bad", [](double t) { return t - t * t; }, [](double t) { return 1 - 2 * t; }, [](double) { return -2.0; });
  try {
    fiber_distance(bad, 10.0);
    FAIL() << "expected ProfileError";
  } catch (const ProfileError& e) {
    EXPECT_GT(e.t(), 0.0);
    EXPECT_LE(e.t(), 10.0);
    EXPECT_LE(bad.weight(e.t()), 0.0);
  }
}

TEST(SlowGrowth, PositivityAndBridge) {
  for (double k : {0.5, 1.0, 3.0}) {
    const RadialProfile u = RadialProfile::slow_growth(k);
    const double alpha = u.slow_alpha();
    EXPECT_GT(std::log(std::log(alpha)), 2.0);
    for (double t = 1e-6; t <= 1e12; t *= 1.07) {
      EXPECT_GT(u.weight(t), 0.0) << t;
      EXPECT_GT(u.du(t), 0.0) << t;
    }
    // h' = 2 alpha > 0 on the left and h' < 0 on the right, so a C^2 bridge
    // cannot be monotone; it rises once, then falls.
    int turns = 0;
    double prev_step = 0.0;
    for (int i = 0; i <= 1000; ++i) {
      const double t = alpha + i / 1000.0;
      EXPECT_GT(u.slow_h(t), 0.0);
      EXPECT_LT(u.slow_h(t), 1.01 * alpha * alpha);
      if (i == 0) continue;
      const double step = u.slow_h(t) - u.slow_h(t - 1e-3);
      if (i > 1 && (step > 0) != (prev_step > 0)) ++turns;
      prev_step = step;
    }
    EXPECT_EQ(turns, 1);
    // pieces and continuity at the joints
    EXPECT_NEAR(u.slow_h(10.0), 100.0, 1e-12);
    const double t2 = alpha + 2.0;
    EXPECT_NEAR(u.slow_h(t2), 1.0 / (t2 * std::log(t2) * std::pow(std::log(std::log(t2)), 2)), 1e-18);
    for (double joint : {alpha, alpha + 1.0}) {
      const double eps = 1e-7;
      EXPECT_NEAR(u.slow_h(joint - eps) / u.slow_h(joint + eps), 1.0, 1e-5);
    }
    EXPECT_NEAR(u.weight(5.0), 2 * k / u.slow_normalizer() * 25.0, 1e-12);
    // t u' = int_0^t weight
    const double t = 3.0;
    EXPECT_NEAR(t * u.du(t), 2 * k / u.slow_normalizer() * t * t * t / 3.0, 1e-12);
  }
  EXPECT_THROW(RadialProfile::slow_growth(1.0, 10.0), std::invalid_argument);
}

TEST(SlowGrowth, DistanceMatchesQuadratureByHand) {
  const RadialProfile u = RadialProfile::slow_growth(1.0);
  double prev = 0.0;
  for (double t : decade_grid(1.0, 1e12)) {
    const double d = fiber_distance(u, t);
    EXPECT_GT(d, prev);
    prev = d;
  }
  // Simpson in s = ln t on a window far from the joints
  const double a = std::log(1e5), b = std::log(1e9);
  const int n = 20000;
  double sum = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double s = a + (b - a) * i / n;
    const double t = std::exp(s);
    const double f = 0.5 * std::sqrt(u.weight(t) * t);
    sum += f * ((i == 0 || i == n) ? 1 : (i % 2 ? 4 : 2));
  }
  sum *= (b - a) / (3.0 * n);
  EXPECT_NEAR(fiber_distance(u, 1e9) - fiber_distance(u, 1e5), sum, 1e-9);
}

TEST(Completeness, Verdicts) {
  EXPECT_TRUE(completeness_verdict(RadialProfile::euclidean()).diverges);
  EXPECT_TRUE(completeness_verdict(RadialProfile::calabi_log(2.0, 1.0, 3.0)).diverges);
  const RadialProfile capped = RadialProfile::custom(
      "ln(1+t)", [](double t) { return std::log1p(t); }, [](double t) { return 1.0 / (1.0 + t); },
      [](double t) { return -1.0 / ((1.0 + t) * (1.0 + t)); });
  const CompletenessVerdict v = completeness_verdict(capped);
  EXPECT_FALSE(v.diverges);
  // d(T) = atan(sqrt T) for this profile
  EXPECT_NEAR(v.grid.back().second, std::atan(std::sqrt(v.grid.back().first)), 1e-8);
  EXPECT_FALSE(v.decade_ratios.empty());
}

TEST(Hadamard, EuclideanDecaysToZero) {
  const GrowthReport r = hadamard_order(RadialProfile::euclidean(), decade_grid(1e2, 1e12));
  ASSERT_FALSE(r.ratios.empty());
  for (std::size_t i = 1; i < r.ratios.size(); ++i) EXPECT_LT(r.ratios[i].second, r.ratios[i - 1].second);
  EXPECT_LT(r.estimated_order, 0.3);
  EXPECT_TRUE(r.diverges);
  EXPECT_FALSE(r.certificate.has_value());
}

TEST(Hadamard, CalabiLogCertificate) {
  const GrowthReport r = hadamard_order(RadialProfile::calabi_log(2.0, 1.0, 3.0), decade_grid(1e1, 1e12));
  ASSERT_TRUE(r.certificate.has_value());
  EXPECT_TRUE(r.certificate->verified);
  EXPECT_GT(r.certificate->fitted_c, 0.0);
  for (const auto& [x, d] : r.grid)
    if (x > std::exp(1.0)) EXPECT_LE(d, r.certificate->fitted_c * std::sqrt(std::log(x)) * (1 + 1e-12));
  // d <= C sqrt(ln x) forces ln ln x / ln d >= 2 asymptotically; the samples exceed 1 already
  EXPECT_GT(r.ratios.back().second, 1.0);
}

TEST(Hadamard, SlowGrowthSamples) {
  const GrowthReport r = hadamard_order(RadialProfile::slow_growth(1.0), decade_grid(1e1, 1e12));
  ASSERT_FALSE(r.ratios.empty());
  EXPECT_TRUE(r.diverges);
  EXPECT_NE(r.direction, "mixed");
  for (const auto& pt : r.ratios) EXPECT_TRUE(std::isfinite(pt.second));
}

TEST(GaugenspeBounds, ExamplesAndOrdering) {
  for (double rr : {1.0, 10.0, 100.0}) {
    const DistanceBounds b = gaugenspe_distance_bounds(Point3(0.0, 0.0, rr));
    EXPECT_NEAR(b.lower, rr, 1e-6);
    EXPECT_NEAR(b.upper, rr, 1e-6);
  }
  const DistanceBounds o = gaugenspe_distance_bounds(Point3(0.0, 0.0, 0.0));
  EXPECT_EQ(o.lower, 0.0);
  EXPECT_EQ(o.upper, 0.0);
  const DistanceBounds one = gaugenspe_distance_bounds(Point3(1.0, 0.0, 0.0));
  EXPECT_NEAR(one.lower, 1.0, 1e-12);
  EXPECT_NEAR(one.upper, 1.0, 1e-12);
  std::mt19937_64 rng(12);
  std::normal_distribution<double> n(0, 3);
  for (int i = 0; i < 1000; ++i) {
    const Point3 p(cplx(n(rng), n(rng)), cplx(n(rng), n(rng)), cplx(n(rng), n(rng)));
    const DistanceBounds b = gaugenspe_distance_bounds(p);
    EXPECT_LE(b.lower, b.upper * (1 + 1e-12));
  }
}

TEST(OdGrowth, DpsDegreeMatching) {
  const Rank2Bundle dps = Rank2Bundle::type_iii({AngleParam::zero(), AngleParam::zero()}, 0.0, 1.0, Tau(0, 1));
  for (int d = 0; d <= 3; ++d) {
    const OdGrowthReport r = verify_Od_growth(dps, d);
    EXPECT_TRUE(r.pass) << d;
    ASSERT_EQ(static_cast<int>(r.basis.size()), d + 1);
    for (const auto& e : r.basis) EXPECT_TRUE(e.pass);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_EQ(r.witness->monomial.q, d + 1);
    // |R^{d+1}| / (R + 1)^d grows like R
    const auto& last = r.witness->ray.back();
    EXPECT_NEAR(last.second, std::pow(last.first, d + 1) / std::pow(last.first + 1, d), 1e-6 * last.second);
  }
}

TEST(OdGrowth, TypeIIAndSkippedDegrees) {
  const Tau t(0, 1);
  const Rank2Bundle e = Rank2Bundle::type_ii(LineBundleAH(1, t, {AngleParam::zero(), AngleParam::zero()}),
                                             LineBundleAH(-1, t, {AngleParam::zero(), AngleParam::zero()}));
  const OdGrowthReport r = verify_Od_growth(e, 1);
  EXPECT_TRUE(r.pass);
  bool linear = false;
  for (const auto& m : r.basis)
    if (m.monomial.p == 0 && m.monomial.q == 1) linear = m.pass;
  EXPECT_TRUE(linear);
  // theta = (1/2, 0): only even powers of z2, the witness for d = 2 is z2^4
  const Rank2Bundle half = Rank2Bundle::type_iii({AngleParam::rational(1, 2), AngleParam::zero()}, 0.0, 1.0, t);
  const OdGrowthReport h = verify_Od_growth(half, 2);
  ASSERT_TRUE(h.witness.has_value());
  EXPECT_EQ(h.witness->monomial.q, 4);
  EXPECT_TRUE(h.pass);
}
