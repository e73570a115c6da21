#include "bundlelab/modular.hpp"

#include <cmath>
#include <sstream>

namespace bundlelab {

Tau::Tau(cplx value) : value_(value) {
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw std::invalid_argument("tau must be finite");
  if (!(value.imag() > 0.0)) throw std::invalid_argument("tau must satisfy Im tau > 0");
}

bool ModularMatrix::same_action(const ModularMatrix& o) const {
  return *this == o || (a == -o.a && b == -o.b && c == -o.c && d == -o.d);
}

Tau mobius_apply(const ModularMatrix& m, const Tau& tau) {
  const cplx t = tau.value();
  const cplx den = double(m.c) * t + double(m.d);
  const cplx num = double(m.a) * t + double(m.b);
  cplx w = num / den;
  // Im part from the exact identity keeps precision when entries are large.
  w.imag(tau.im() / std::norm(den));
  return Tau(w);
}

bool in_fundamental_domain(const Tau& tau) {
  const double x = tau.re();
  const double r2 = std::norm(tau.value());
  if (std::abs(x + 0.5) <= kDomainEps) return r2 >= 1.0 - kDomainEps;
  if (x < -0.5 || x >= 0.5 - kDomainEps) return false;
  const double r = std::sqrt(r2);
  if (r > 1.0 + kDomainEps) return true;
  if (std::abs(r - 1.0) <= kDomainEps) return x <= kDomainEps;
  return false;
}

Reduction reduce_tau(const Tau& tau) {
  ModularMatrix m;
  Tau cur = tau;
  for (int it = 0; it < kReductionCap; ++it) {
    const double shift = std::floor(cur.re() + 0.5);
    if (shift != 0.0) {
      m = ModularMatrix::translation(-static_cast<long>(shift)) * m;
      cur = mobius_apply(m, tau);
      continue;
    }
    if (std::norm(cur.value()) < 1.0 - kDomainEps) {
      m = ModularMatrix::inversion() * m;
      cur = mobius_apply(m, tau);
      continue;
    }
    // Boundary conventions: keep Re = -1/2 and the left half of the arc.
    if (cur.re() >= 0.5 - kDomainEps) {
      m = ModularMatrix::translation(-1) * m;
      cur = mobius_apply(m, tau);
    }
    if (std::abs(std::abs(cur.value()) - 1.0) <= kDomainEps && cur.re() > kDomainEps) {
      m = ModularMatrix::inversion() * m;
      cur = mobius_apply(m, tau);
    }
    if (!in_fundamental_domain(cur)) continue;
    if (m.c < 0 || (m.c == 0 && m.d < 0)) m = {-m.a, -m.b, -m.c, -m.d};
    return {cur, m};
  }
  throw ReductionError("reduce_tau: iteration cap reached");
}

bool same_tau(const Tau& x, const Tau& y, double tol) {
  return std::abs(x.value() - y.value()) < tol;
}

std::optional<ModularMatrix> elliptic_iso(const Tau& tau1, const Tau& tau2) {
  const Reduction r1 = reduce_tau(tau1);
  const Reduction r2 = reduce_tau(tau2);
  if (!same_tau(r1.reduced, r2.reduced)) return std::nullopt;
  ModularMatrix m = r1.matrix.inverse() * r2.matrix;
  if (m.c < 0 || (m.c == 0 && m.d < 0)) m = {-m.a, -m.b, -m.c, -m.d};
  return m;
}

std::vector<Multiplier> torus_multipliers(const Tau& tau) {
  if (!in_fundamental_domain(tau))
    throw std::invalid_argument("torus_multipliers expects a reduced modulus");
  const cplx t = tau.value();
  if (std::abs(t - kI) < kDomainEps) return {{1.0}, {-1.0}, {kI}, {-kI}};
  const cplx rho = std::exp(cplx(0.0, 2.0 * kPi / 3.0));
  if (std::abs(t - rho) < kDomainEps) {
    const cplx w = std::exp(cplx(0.0, kPi / 3.0));
    return {{1.0}, {-1.0}, {w}, {-w}, {rho}, {-rho}};
  }
  return {{1.0}, {-1.0}};
}

std::optional<std::pair<long, long>> lattice_coordinates(cplx w, const Tau& tau, double tol) {
  const double n = w.imag() / tau.im();
  const double m = w.real() - n * tau.re();
  const double rn = std::round(n), rm = std::round(m);
  if (std::abs(w - (rm + rn * tau.value())) > tol * std::max(1.0, std::abs(w))) return std::nullopt;
  return std::make_pair(static_cast<long>(rm), static_cast<long>(rn));
}

std::string to_string(const ModularMatrix& m) {
  std::ostringstream os;
  os << "[[" << m.a << "," << m.b << "],[" << m.c << "," << m.d << "]]";
  return os.str();
}

}  // namespace bundlelab
