#include <gtest/gtest.h>

#include <random>

#include "bundlelab/modular.hpp"

using namespace bundlelab;

namespace {

ModularMatrix random_sl2(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> shift(-3, 3);
  ModularMatrix m;
  for (int i = 0; i < 4; ++i) {
    if (pick(rng) == 0) m = ModularMatrix::inversion() * m;
    else m = ModularMatrix::translation(shift(rng)) * m;
  }
  return m;
}

}  // namespace

TEST(Mobius, Examples) {
  EXPECT_NEAR(std::abs(mobius_apply(ModularMatrix::identity(), Tau(0, 2)).value() - cplx(0, 2)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(mobius_apply({1, -1, 0, 1}, Tau(1, 1)).value() - cplx(0, 1)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(mobius_apply({0, -1, 1, 0}, Tau(0, 1)).value() - cplx(0, 1)), 0.0, 1e-15);
}

TEST(Mobius, CocycleAndImaginaryIdentity) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> re(-3, 3), im(0.1, 4);
  for (int i = 0; i < 1000; ++i) {
    const Tau t(re(rng), im(rng));
    const ModularMatrix a = random_sl2(rng), b = random_sl2(rng);
    ASSERT_EQ(a.det(), 1);
    const cplx lhs = mobius_apply(a * b, t).value();
    const cplx rhs = mobius_apply(a, mobius_apply(b, t)).value();
    EXPECT_LT(std::abs(lhs - rhs), 1e-12 * std::max(1.0, std::abs(lhs)));
    const cplx den = double(a.c) * t.value() + double(a.d);
    const cplx direct = (double(a.a) * t.value() + double(a.b)) / den;
    EXPECT_NEAR(mobius_apply(a, t).im(), direct.imag(), 1e-12 * std::max(1.0, direct.imag()));
    EXPECT_NEAR(mobius_apply(a, t).im(), t.im() / std::norm(den), 1e-15 * t.im() / std::norm(den) + 1e-300);
  }
}

TEST(FundamentalDomain, Membership) {
  EXPECT_TRUE(in_fundamental_domain(Tau(0, 2)));
  EXPECT_FALSE(in_fundamental_domain(Tau(std::exp(cplx(0, kPi / 3)))));
  EXPECT_TRUE(in_fundamental_domain(Tau(0, 1)));
  EXPECT_TRUE(in_fundamental_domain(Tau(std::exp(cplx(0, 2 * kPi / 3)))));
  EXPECT_TRUE(in_fundamental_domain(Tau(-0.5, 3)));
  EXPECT_FALSE(in_fundamental_domain(Tau(0.5, 3)));
  EXPECT_TRUE(in_fundamental_domain(Tau(std::polar(1.0, 0.6 * kPi))));   // left arc
  EXPECT_FALSE(in_fundamental_domain(Tau(std::polar(1.0, 0.4 * kPi))));  // right arc
  EXPECT_FALSE(in_fundamental_domain(Tau(0.1, 0.5)));
  EXPECT_THROW(Tau(0.0, 0.0), std::invalid_argument);
  EXPECT_THROW(Tau(1.0, -1.0), std::invalid_argument);
  EXPECT_THROW(Tau(std::nan(""), 1.0), std::invalid_argument);
}

TEST(Reduction, Examples) {
  auto r = reduce_tau(Tau(0, 1));
  EXPECT_TRUE(r.matrix.is_identity());
  r = reduce_tau(Tau(1, 1));
  EXPECT_NEAR(std::abs(r.reduced.value() - cplx(0, 1)), 0.0, 1e-12);
  EXPECT_EQ(r.matrix, (ModularMatrix{1, -1, 0, 1}));
  r = reduce_tau(Tau(0.5, 2));
  EXPECT_NEAR(std::abs(r.reduced.value() - cplx(-0.5, 2)), 0.0, 1e-12);
  EXPECT_EQ(r.matrix, (ModularMatrix{1, -1, 0, 1}));
  // e^{i pi/3} is equivalent to e^{2 pi i/3}
  r = reduce_tau(Tau(std::exp(cplx(0, kPi / 3))));
  EXPECT_NEAR(std::abs(r.reduced.value() - std::exp(cplx(0, 2 * kPi / 3))), 0.0, 1e-12);
}

TEST(Reduction, RandomPropertiesAndIdempotence) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(-10, 10), im(1e-3, 10);
  for (int i = 0; i < 3000; ++i) {
    const Tau t(re(rng), im(rng));
    const Reduction r = reduce_tau(t);
    ASSERT_TRUE(in_fundamental_domain(r.reduced)) << t.value();
    EXPECT_EQ(r.matrix.det(), 1);
    EXPECT_LT(std::abs(mobius_apply(r.matrix, t).value() - r.reduced.value()), 1e-12);
    const Reduction again = reduce_tau(r.reduced);
    EXPECT_TRUE(again.matrix.is_identity());
    EXPECT_LT(std::abs(again.reduced.value() - r.reduced.value()), 1e-12);
  }
}

TEST(Reduction, ImageOfReducedPointIsReducedBack) {
  // tau* and M tau* reduce to the same point: the domain meets each orbit once
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-0.5, 0.5), im(0.87, 3);
  for (int i = 0; i < 500; ++i) {
    const Tau t(re(rng), im(rng));
    if (!in_fundamental_domain(t)) continue;
    const ModularMatrix m = random_sl2(rng);
    const Reduction r = reduce_tau(mobius_apply(m, t));
    EXPECT_LT(std::abs(r.reduced.value() - t.value()), 1e-9) << t.value();
  }
}

TEST(EllipticIso, Examples) {
  auto m = elliptic_iso(Tau(0, 1), Tau(0, 1));
  ASSERT_TRUE(m);
  EXPECT_TRUE(m->same_action(ModularMatrix::identity()));
  m = elliptic_iso(Tau(1, 1), Tau(0, 1));
  ASSERT_TRUE(m);
  EXPECT_LT(std::abs(mobius_apply(*m, Tau(0, 1)).value() - cplx(1, 1)), 1e-12);
  EXPECT_FALSE(elliptic_iso(Tau(0, 2), Tau(0, 3)));
}

TEST(Multipliers, ListsAndLatticePreservation) {
  EXPECT_EQ(torus_multipliers(Tau(0, 2)).size(), 2u);
  EXPECT_EQ(torus_multipliers(Tau(0, 1)).size(), 4u);
  const Tau rho(std::exp(cplx(0, 2 * kPi / 3)));
  const auto six = torus_multipliers(rho);
  ASSERT_EQ(six.size(), 6u);
  for (const auto& a : six) EXPECT_NEAR(std::abs(std::pow(a.value, 6) - 1.0), 0.0, 1e-12);
  EXPECT_THROW(torus_multipliers(Tau(0.2, 0.5)), std::invalid_argument);
  for (const Tau& t : {Tau(0, 2), Tau(0, 1), rho, Tau(-0.3, 1.7)}) {
    for (const auto& a : torus_multipliers(t)) {
      EXPECT_NEAR(std::abs(a.value), 1.0, 1e-12);
      EXPECT_TRUE(lattice_coordinates(a.value, t));
      EXPECT_TRUE(lattice_coordinates(a.value * t.value(), t));
    }
  }
}

TEST(Reduction, IterationCapSignals) {
  // Tiny imaginary parts still terminate well inside the cap.
  EXPECT_NO_THROW(reduce_tau(Tau(0.3, 1e-6)));
}
