#include "bundlelab/holo.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bundlelab {

namespace {

std::string power(const char* var, int k) {
  if (k == 0) return "";
  if (k == 1) return var;
  return std::string(var) + "^" + std::to_string(k);
}

std::string product(std::string a, std::string b) {
  if (a.empty() && b.empty()) return "1";
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

void push(BasisReport& r, Monomial m) {
  if (m.section_dim <= 0) return;
  r.total_dim += m.section_dim;
  r.monomials.push_back(m);
}

long common_denominator(const AngleParam& a, const AngleParam& b) {
  return std::lcm(a.denominator(), b.denominator());
}

// x/2 + y*k in Z for the Fuchsian congruences, with y rational and x an integer.
bool integral_with_half(const AngleParam& y, long k, long x) {
  return (y.times(k) + AngleParam::rational(x, 2)).is_zero();
}

BasisReport constants_only(int d) {
  BasisReport r;
  r.degree_bound = d;
  if (d >= 0) push(r, {0, 0, 1, MonomialForm::Z2Power, 0.0});
  return r;
}

}  // namespace

std::string Monomial::text() const {
  switch (form) {
    case MonomialForm::FiberPower: return product(power("xi1", p), power("xi2", q));
    case MonomialForm::Z2Power: return product("", power("z2", q));
    case MonomialForm::Single: return product(power("z1", p), power("z2", q));
    case MonomialForm::ShiftedPower: {
      std::string base;
      if (p > 0) {
        std::ostringstream os;
        os.precision(6);
        os << "(z1-(" << param.real() << (param.imag() < 0 ? "-" : "+") << std::abs(param.imag()) << "i)*z*z2)";
        base = os.str();
        if (p > 1) base += "^" + std::to_string(p);
      }
      return product(base, power("z2", q));
    }
    case MonomialForm::SymmetrizedPair: {
      const std::string sign = param.real() < 0 ? " - " : " + ";
      return product(power("z1", p), power("z2", q)) + sign + product(power("z1", q), power("z2", p));
    }
  }
  return "?";
}

cplx Monomial::evaluate(const Point3& x) const {
  const cplx z = x(0), z1 = x(1), z2 = x(2);
  switch (form) {
    case MonomialForm::FiberPower:
    case MonomialForm::Single: return std::pow(z1, p) * std::pow(z2, q);
    case MonomialForm::Z2Power: return std::pow(z2, q);
    case MonomialForm::ShiftedPower: return std::pow(z1 - param * z * z2, p) * std::pow(z2, q);
    case MonomialForm::SymmetrizedPair:
      return std::pow(z1, p) * std::pow(z2, q) + param * std::pow(z1, q) * std::pow(z2, p);
  }
  return 0.0;
}

BasisReport basis_typeI(const LineBundleAH& l1, const LineBundleAH& l2, int d) {
  if (l1.degree() != 0 || l2.degree() != 0) throw std::invalid_argument("basis_typeI: degree 0 required");
  BasisReport r;
  r.degree_bound = d;
  for (int k = 0; k <= d; ++k)
    for (int q = 0; q <= k; ++q) {
      const int p = k - q;
      const int dim = h0_line(ah_tensor(l1.power(-p), l2.power(-q)));
      push(r, {p, q, dim, MonomialForm::FiberPower, 0.0});
    }
  return r;
}

BasisReport basis_typeII(const LineBundleAH& l1, const LineBundleAH& l2, int d) {
  if (l1.degree() <= 0 || l2.degree() != -l1.degree())
    throw std::invalid_argument("basis_typeII: deg L1 = -deg L2 > 0 required");
  BasisReport r;
  r.degree_bound = d;
  const bool dual_pair = ah_tensor(l1, l2).is_trivial();
  for (int k = 0; k <= d; ++k)
    for (int q = 0; q <= k; ++q) {
      const int p = k - q;
      if (p > q) continue;
      const int dim = p == q ? (dual_pair ? 1 : 0) : h0_line(ah_tensor(l1.power(-p), l2.power(-q)));
      push(r, {p, q, dim, MonomialForm::FiberPower, 0.0});
    }
  return r;
}

BasisReport basis_typeIII(const AngleParam& theta1, const AngleParam& theta2, cplx b1, cplx b2,
                          const Tau& tau, int d) {
  if (!theta1.is_rational() || !theta2.is_rational()) return constants_only(d);
  const long m = common_denominator(theta1, theta2);
  BasisReport r;
  r.degree_bound = d;
  if (std::abs(b2 - b1 * tau.value()) > kBEps) {
    for (int k = 0; k <= d; ++k)
      if (k % m == 0) push(r, {0, k, 1, MonomialForm::Z2Power, 0.0});
    return r;
  }
  for (int k = 0; k <= d; ++k) {
    if (k % m != 0) continue;
    for (int q = 0; q <= k; ++q) push(r, {k - q, q, 1, MonomialForm::ShiftedPower, b1});
  }
  return r;
}

BasisReport basis_fuchsian(const AngleParam& theta1, const AngleParam& theta2, int d) {
  if (!theta1.is_rational() || !theta2.is_rational()) return constants_only(d);
  BasisReport r;
  r.degree_bound = d;
  for (int k = 0; k <= d; ++k) {
    if (!theta1.times(2L * k).is_zero()) continue;
    for (int t = 0; 2 * t <= k; ++t) {
      if (!integral_with_half(theta2, k, k - t) || !integral_with_half(theta2, k, t)) continue;
      if (2 * t == k) {
        // c_{t,t} = e^{2 pi i theta1 k} c_{t,t} needs theta1 k in Z as well.
        if (!theta1.times(k).is_zero()) continue;
        push(r, {t, t, 1, MonomialForm::Single, 0.0});
        continue;
      }
      const cplx phase = theta1.times(k).is_zero() ? 1.0 : -1.0;
      push(r, {k - t, t, 1, MonomialForm::SymmetrizedPair, phase});
    }
  }
  return r;
}

BasisReport basis_for(const Rank2Bundle& e, int d) {
  switch (e.type()) {
    case BundleType::I: return basis_typeI(e.as_i().first, e.as_i().second, d);
    case BundleType::II: return basis_typeII(e.as_ii().positive, e.as_ii().negative, d);
    case BundleType::III: {
      const auto& x = e.as_iii();
      return basis_typeIII(x.theta[0], x.theta[1], x.b1, x.b2, e.tau(), d);
    }
  }
  throw std::logic_error("unreachable");
}

bool has_nonconstant(const Rank2Bundle& e) {
  switch (e.type()) {
    case BundleType::II: return true;
    case BundleType::III: return e.as_iii().theta[0].is_rational() && e.as_iii().theta[1].is_rational();
    case BundleType::I: {
      // p theta(L1) + q theta(L2) = 0 has a solution with p + q > 0 iff some
      // degree up to the product of the orders works; irrational data needs
      // a cancellation, which the angle arithmetic detects exactly.
      const auto& a = e.as_i().first.theta();
      const auto& b = e.as_i().second.theta();
      auto order = [](const AnglePair& t) -> long {
        if (!t[0].is_rational() || !t[1].is_rational()) return 0;
        return std::lcm(t[0].denominator(), t[1].denominator());
      };
      const long oa = order(a), ob = order(b);
      if (oa > 0 || ob > 0) return true;  // a pure power of one summand
      // both summands irrational: look for L1^p L2^q trivial in a bounded window
      for (long p = 0; p <= 64; ++p)
        for (long q = 0; q <= 64; ++q) {
          if (p + q == 0) continue;
          if (combine(-p, a[0], -q, b[0]).is_zero() && combine(-p, a[1], -q, b[1]).is_zero()) return true;
        }
      return false;
    }
  }
  return false;
}

FuchsianData fuchsian_generators() {
  const double s2 = std::sqrt(2.0), s6 = std::sqrt(6.0);
  FuchsianData f;
  f.alpha << (s6 + s2) / 2.0, 0.0, 0.0, (s6 - s2) / 2.0;
  f.beta << s2, 1.0, 1.0, s2;
  f.delta = (f.alpha * f.beta * f.alpha.inverse() * f.beta.inverse()).inverse();
  return f;
}

cplx fuchsian_act(const Eigen::Matrix2d& g, cplx z) {
  return (g(0, 0) * z + g(0, 1)) / (g(1, 0) * z + g(1, 1));
}

std::pair<Point3, Point3> fuchsian_deck(const AngleParam& theta1, const AngleParam& theta2, const Point3& x) {
  const FuchsianData f = fuchsian_generators();
  const cplx e1 = unit_phase(theta1.value()), e2 = unit_phase(theta2.value());
  Point3 a, b;
  a << fuchsian_act(f.alpha, x(0)), e1 * x(2), e1 * x(1);
  b << fuchsian_act(f.beta, x(0)), -e2 * x(1), e2 * x(2);
  return {a, b};
}

}  // namespace bundlelab
