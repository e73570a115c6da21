#pragma once

#include <cmath>
#include <complex>
#include <type_traits>

namespace bundlelab {

// Complex hyper-dual number v + e1 E1 + e2 E2 + e12 E1E2 with E1^2 = E2^2 = 0.
// Seeding two real coordinates gives exact first and mixed second derivatives.
template <class R>
struct HyperDual {
  using C = std::complex<R>;
  C v{}, e1{}, e2{}, e12{};

  HyperDual() = default;
  HyperDual(C value, C d1 = {}, C d2 = {}, C d12 = {}) : v(value), e1(d1), e2(d2), e12(d12) {}
  template <class T, class = std::enable_if_t<std::is_arithmetic_v<T>>>
  HyperDual(T x) : v(static_cast<R>(x)) {}  // NOLINT
  template <class T, class = std::enable_if_t<!std::is_same_v<T, R>>>
  HyperDual(std::complex<T> x) : v(static_cast<R>(x.real()), static_cast<R>(x.imag())) {}  // NOLINT

  HyperDual& operator+=(const HyperDual& o) { v += o.v; e1 += o.e1; e2 += o.e2; e12 += o.e12; return *this; }
  HyperDual& operator-=(const HyperDual& o) { v -= o.v; e1 -= o.e1; e2 -= o.e2; e12 -= o.e12; return *this; }
  HyperDual& operator*=(const HyperDual& o) { return *this = *this * o; }
  HyperDual& operator/=(const HyperDual& o) { return *this = *this / o; }
  HyperDual operator-() const { return {-v, -e1, -e2, -e12}; }

  friend HyperDual operator+(HyperDual a, const HyperDual& b) { return a += b; }
  friend HyperDual operator-(HyperDual a, const HyperDual& b) { return a -= b; }
  friend HyperDual operator*(const HyperDual& a, const HyperDual& b) {
    return {a.v * b.v, a.v * b.e1 + a.e1 * b.v, a.v * b.e2 + a.e2 * b.v,
            a.v * b.e12 + a.e1 * b.e2 + a.e2 * b.e1 + a.e12 * b.v};
  }
  friend HyperDual inv(const HyperDual& b) {
    const C i = C(1) / b.v;
    return {i, -b.e1 * i * i, -b.e2 * i * i, (-b.e12 + C(2) * b.e1 * b.e2 * i) * i * i};
  }
  friend HyperDual operator/(const HyperDual& a, const HyperDual& b) { return a * inv(b); }

  friend HyperDual conj(const HyperDual& a) {
    return {std::conj(a.v), std::conj(a.e1), std::conj(a.e2), std::conj(a.e12)};
  }
  friend HyperDual exp(const HyperDual& a) {
    const C ev = std::exp(a.v);
    return {ev, ev * a.e1, ev * a.e2, ev * (a.e12 + a.e1 * a.e2)};
  }
  friend HyperDual log(const HyperDual& a) {
    const C i = C(1) / a.v;
    return {std::log(a.v), a.e1 * i, a.e2 * i, a.e12 * i - a.e1 * a.e2 * i * i};
  }
  friend HyperDual sqrt(const HyperDual& a) {
    const C s = std::sqrt(a.v);
    const C h = C(1) / (C(2) * s);
    return {s, a.e1 * h, a.e2 * h, a.e12 * h - a.e1 * a.e2 * h * h * h * C(2)};
  }
};

using Jet = HyperDual<long double>;

// Generic helpers usable with std::complex<double> and Jet alike.
template <class S>
S real_part(const S& z) {
  using std::conj;
  return (z + conj(z)) * S(0.5);
}
template <class S>
S imag_part(const S& z) {
  using std::conj;
  return (z - conj(z)) * S(std::complex<double>(0.0, -0.5));
}
template <class S>
S abs2(const S& z) {
  using std::conj;
  return z * conj(z);
}

}  // namespace bundlelab
