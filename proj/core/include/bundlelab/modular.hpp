#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bundlelab/types.hpp"

namespace bundlelab {

// Boundary tolerance for fundamental-domain membership.
inline constexpr double kDomainEps = 1e-9;
inline constexpr int kReductionCap = 10000;

class Tau {
 public:
  explicit Tau(cplx value);
  Tau(double re, double im) : Tau(cplx(re, im)) {}

  cplx value() const { return value_; }
  double re() const { return value_.real(); }
  double im() const { return value_.imag(); }

 private:
  cplx value_;
};

struct ModularMatrix {
  long a = 1, b = 0, c = 0, d = 1;

  static ModularMatrix identity() { return {}; }
  static ModularMatrix translation(long n) { return {1, n, 0, 1}; }
  static ModularMatrix inversion() { return {0, -1, 1, 0}; }

  long det() const { return a * d - b * c; }
  ModularMatrix inverse() const { return {d, -b, -c, a}; }
  bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
  // -I acts trivially on the upper half plane; callers compare up to sign.
  bool same_action(const ModularMatrix& o) const;

  friend ModularMatrix operator*(const ModularMatrix& x, const ModularMatrix& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
            x.c * y.b + x.d * y.d};
  }
  friend bool operator==(const ModularMatrix&, const ModularMatrix&) = default;
};

struct Multiplier {
  cplx value;
};

struct Reduction {
  Tau reduced;
  ModularMatrix matrix;
};

class ReductionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Tau mobius_apply(const ModularMatrix& m, const Tau& tau);
bool in_fundamental_domain(const Tau& tau);
Reduction reduce_tau(const Tau& tau);
// Some(M) with M . tau2 = tau1 when the two curves are isomorphic.
std::optional<ModularMatrix> elliptic_iso(const Tau& tau1, const Tau& tau2);
std::vector<Multiplier> torus_multipliers(const Tau& tau);

// Integer (m, n) with w = m + n tau, if w lies on the lattice within tol.
std::optional<std::pair<long, long>> lattice_coordinates(cplx w, const Tau& tau,
                                                         double tol = 1e-9);

bool same_tau(const Tau& x, const Tau& y, double tol = kDomainEps);

std::string to_string(const ModularMatrix& m);

}  // namespace bundlelab
