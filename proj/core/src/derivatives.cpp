#include "bundlelab/derivatives.hpp"

#include <stdexcept>

namespace bundlelab {

namespace {

std::complex<long double> seed_direction(int coord, int a) {
  if (coord == a / 2) return (a % 2 == 0) ? std::complex<long double>(1, 0) : std::complex<long double>(0, 1);
  return {};
}

cplx to_double(std::complex<long double> x) { return {static_cast<double>(x.real()), static_cast<double>(x.imag())}; }

}  // namespace

RealDerivatives derivatives_jet(const JetVectorFn& f, const cplx* p, int n, int order) {
  RealDerivatives r;
  r.n = n;
  const int m = 2 * n;
  std::vector<Jet> x(n);
  auto eval = [&](int a, int b) {
    for (int i = 0; i < n; ++i) {
      x[i] = Jet(std::complex<long double>(p[i].real(), p[i].imag()));
      if (a >= 0) x[i].e1 = seed_direction(i, a);
      if (b >= 0) x[i].e2 = seed_direction(i, b);
    }
    return f(x.data());
  };
  if (order >= 2) {
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) {
        const std::vector<Jet> out = eval(a, b);
        if (r.outputs == 0) {
          r.outputs = static_cast<int>(out.size());
          r.grad.assign(m * r.outputs, 0.0);
          r.hess.assign(m * m * r.outputs, 0.0);
        }
        for (int k = 0; k < r.outputs; ++k) {
          const cplx v = to_double(out[k].e12);
          r.hess[(a * m + b) * r.outputs + k] = v;
          r.hess[(b * m + a) * r.outputs + k] = v;
          if (b == a) r.grad[a * r.outputs + k] = to_double(out[k].e1);
        }
      }
    return r;
  }
  for (int a = 0; a < m; ++a) {
    const std::vector<Jet> out = eval(a, -1);
    if (r.outputs == 0) {
      r.outputs = static_cast<int>(out.size());
      r.grad.assign(m * r.outputs, 0.0);
    }
    for (int k = 0; k < r.outputs; ++k) r.grad[a * r.outputs + k] = to_double(out[k].e1);
  }
  return r;
}

RealDerivatives derivatives_central(const ValueVectorFn& f, const cplx* p, int n, int order, double h) {
  RealDerivatives r;
  r.n = n;
  const int m = 2 * n;
  std::vector<cplx> x(p, p + n);
  auto shifted = [&](int a, double sa, int b, double sb) {
    std::vector<cplx> y = x;
    if (a >= 0) y[a / 2] += (a % 2 == 0) ? cplx(sa, 0) : cplx(0, sa);
    if (b >= 0) y[b / 2] += (b % 2 == 0) ? cplx(sb, 0) : cplx(0, sb);
    return f(y.data());
  };
  const std::vector<cplx> f0 = f(x.data());
  r.outputs = static_cast<int>(f0.size());
  r.grad.assign(m * r.outputs, 0.0);
  for (int a = 0; a < m; ++a) {
    auto central = [&](double s) {
      const auto fp = shifted(a, s, -1, 0), fm = shifted(a, -s, -1, 0);
      std::vector<cplx> d(r.outputs);
      for (int k = 0; k < r.outputs; ++k) d[k] = (fp[k] - fm[k]) / (2.0 * s);
      return d;
    };
    const auto d1 = central(h), d2 = central(h / 2);
    for (int k = 0; k < r.outputs; ++k) r.grad[a * r.outputs + k] = (4.0 * d2[k] - d1[k]) / 3.0;
  }
  if (order < 2) return r;
  r.hess.assign(m * m * r.outputs, 0.0);
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      auto second = [&](double s) {
        std::vector<cplx> d(r.outputs);
        if (a == b) {
          const auto fp = shifted(a, s, -1, 0), fm = shifted(a, -s, -1, 0);
          for (int k = 0; k < r.outputs; ++k) d[k] = (fp[k] - 2.0 * f0[k] + fm[k]) / (s * s);
        } else {
          const auto pp = shifted(a, s, b, s), pm = shifted(a, s, b, -s);
          const auto mp = shifted(a, -s, b, s), mm = shifted(a, -s, b, -s);
          for (int k = 0; k < r.outputs; ++k) d[k] = (pp[k] - pm[k] - mp[k] + mm[k]) / (4.0 * s * s);
        }
        return d;
      };
      const auto d1 = second(h), d2 = second(h / 2);
      for (int k = 0; k < r.outputs; ++k) {
        const cplx v = (4.0 * d2[k] - d1[k]) / 3.0;
        r.hess[(a * m + b) * r.outputs + k] = v;
        r.hess[(b * m + a) * r.outputs + k] = v;
      }
    }
  return r;
}

}  // namespace bundlelab
