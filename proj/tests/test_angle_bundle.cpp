#include <gtest/gtest.h>

#include <numeric>
#include <random>

#include "bundlelab/isomorphism.hpp"

using namespace bundlelab;

namespace {

AngleParam rat(long p, long q) { return AngleParam::rational(p, q); }
const Tau kI1(0.0, 1.0);

}  // namespace

TEST(Angle, NormalizationAndArithmetic) {
  EXPECT_EQ(rat(3, 2), rat(1, 2));
  EXPECT_EQ(rat(-1, 3), rat(2, 3));
  EXPECT_EQ(rat(2, 4).denominator(), 2);
  EXPECT_TRUE((rat(1, 2) + rat(1, 2)).is_zero());
  EXPECT_EQ(rat(1, 3) + rat(1, 2), rat(5, 6));
  EXPECT_EQ(rat(1, 3).times(-4), rat(2, 3));
  EXPECT_THROW(rat(1, 0), std::invalid_argument);
  const AngleParam x = AngleParam::irrational(std::sqrt(2.0));
  EXPECT_FALSE(x.is_rational());
  EXPECT_NEAR(x.value(), std::sqrt(2.0) - 1.0, 1e-15);
  EXPECT_FALSE((x + rat(1, 2)).is_rational());
  EXPECT_TRUE((x - x).is_zero());
  EXPECT_TRUE(x.times(0).is_zero());
  EXPECT_FALSE(x.times(5).is_rational());
  EXPECT_FALSE(x == rat(0, 1));
}

TEST(LineBundle, DegreeAndH0) {
  const Tau t(0.3, 1.7);
  const LineBundleAH o = LineBundleAH::trivial(t);
  EXPECT_EQ(ah_degree(o), 0);
  const LineBundleAH l1(1, t, {rat(0, 1), rat(0, 1)});
  EXPECT_NEAR(l1.hermitian_form(), 1.0 / 1.7, 1e-15);
  EXPECT_EQ(ah_degree(l1), 1);
  EXPECT_EQ(ah_degree(LineBundleAH(-2, t, {rat(0, 1), rat(0, 1)})), -2);
  EXPECT_EQ(h0_line(o), 1);
  EXPECT_EQ(h0_line(LineBundleAH(0, t, {rat(1, 2), rat(0, 1)})), 0);
  EXPECT_EQ(h0_line(LineBundleAH(3, t, {rat(1, 5), rat(0, 1)})), 3);
  EXPECT_EQ(h0_line(LineBundleAH(-1, t, {rat(0, 1), rat(0, 1)})), 0);
  EXPECT_EQ(h0_line(LineBundleAH(0, t, {AngleParam::irrational(0.0), rat(0, 1)})), 0);
}

TEST(LineBundle, TensorLaw) {
  const Tau t(0.0, 2.0);
  const LineBundleAH o = LineBundleAH::trivial(t);
  const LineBundleAH l(0, t, {rat(1, 3), AngleParam::irrational(0.25)});
  EXPECT_EQ(ah_tensor(o, l), l);
  const LineBundleAH h(0, t, {rat(1, 2), rat(0, 1)});
  EXPECT_TRUE(ah_tensor(h, h).is_trivial());
  EXPECT_EQ(ah_tensor(LineBundleAH(1, t, {rat(0, 1), rat(0, 1)}), LineBundleAH(-1, t, {rat(0, 1), rat(0, 1)})).degree(), 0);
  EXPECT_TRUE(ah_tensor(l, l.dual()).is_trivial());
  EXPECT_THROW(ah_tensor(o, LineBundleAH::trivial(Tau(0, 1))), std::invalid_argument);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(0, 5), deg(-2, 2);
  for (int i = 0; i < 200; ++i) {
    const LineBundleAH a(deg(rng), t, {rat(num(rng), 6), rat(num(rng), 4)});
    const LineBundleAH b(deg(rng), t, {rat(num(rng), 3), rat(num(rng), 6)});
    EXPECT_EQ(h0_line(ah_tensor(a, b)), h0_line(ah_tensor(b, a)));
  }
}

TEST(LineBundle, SemicharacterCocycle) {
  // e(l + m, z) = e(l, z + m) e(m, z)
  const Tau t(0.2, 1.3);
  const LineBundleAH l(3, t, {rat(1, 7), AngleParam::irrational(0.4)});
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> n(-3, 3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int i = 0; i < 200; ++i) {
    const long a = n(rng), b = n(rng), c = n(rng), d = n(rng);
    const cplx z(u(rng), u(rng));
    const cplx mu = double(c) + double(d) * t.value();
    const cplx lhs = l.automorphy(a + c, b + d, z);
    const cplx rhs = l.automorphy(a, b, z + mu) * l.automorphy(c, d, z);
    EXPECT_LT(std::abs(lhs - rhs), 1e-9 * std::abs(lhs));
  }
}

TEST(Classify, Examples) {
  const Rank2Bundle dps = classify(rat(0, 1), rat(0, 1), 0.0, 1.0, kI1);
  EXPECT_EQ(dps.type(), BundleType::III);
  const Rank2Bundle split = classify(rat(1, 3), rat(0, 1), 1.0, kI1.value(), kI1);
  ASSERT_EQ(split.type(), BundleType::I);
  EXPECT_EQ(split.as_i().first, split.as_i().second);
  const Rank2Bundle e = classify(rat(1, 3), rat(0, 1), 2.0, 5.0, kI1);
  ASSERT_EQ(e.type(), BundleType::III);
  EXPECT_NEAR(std::abs(e.as_iii().b2 - cplx(5, -2)), 0.0, 1e-15);
  EXPECT_EQ(e.as_iii().b1, 0.0);
}

TEST(Classify, NormalizationInvariant) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> u(-3, 3);
  std::uniform_int_distribution<int> num(0, 5);
  for (int i = 0; i < 1000; ++i) {
    const Tau t(u(rng) / 6.0, 0.5 + std::abs(u(rng)));
    const cplx b1(u(rng), u(rng)), b2(u(rng), u(rng));
    const AnglePair th{rat(num(rng), 6), rat(num(rng), 4)};
    const Rank2Bundle direct = classify(th[0], th[1], b1, b2, t);
    if (direct.type() != BundleType::III) continue;
    const Rank2Bundle raw = Rank2Bundle::type_iii(th, b1, b2, t);
    const auto [norm, w] = normalize(raw);
    const auto& r = norm.as_iii();
    EXPECT_EQ(classify(r.theta[0], r.theta[1], r.b1, r.b2, t), direct);
    EXPECT_LT(verify_intertwining(w, raw, norm, 10, i), 1e-10);
  }
}

TEST(BiNonneg, Families) {
  const Tau t(0, 1);
  EXPECT_FALSE(admits_bi_nonneg(LineBundleAH(1, t, {rat(0, 1), rat(0, 1)})).admits);
  const auto r = admits_bi_nonneg(LineBundleAH(0, t, {rat(1, 2), rat(1, 3)}));
  EXPECT_TRUE(r.admits);
  EXPECT_EQ(r.family, BiFamily::ZkSymmetric);
  // minimality by enumeration
  long kmin = 0;
  for (long k = 1; k <= 12 && !kmin; ++k)
    if (rat(1, 2).times(k).is_zero() && rat(1, 3).times(k).is_zero()) kmin = k;
  EXPECT_EQ(r.k, kmin);
  const auto irr = admits_bi_nonneg(LineBundleAH(0, t, {AngleParam::irrational(0.1234), rat(0, 1)}));
  EXPECT_TRUE(irr.admits);
  EXPECT_EQ(irr.family, BiFamily::Rotational);
}
