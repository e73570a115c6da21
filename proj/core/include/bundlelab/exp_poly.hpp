#pragma once

#include <string>
#include <vector>

#include "bundlelab/types.hpp"

namespace bundlelab {

// Finite sum of c * z^k * e^{kappa z}.
class ExpPoly {
 public:
  struct Term {
    cplx coeff;
    int power;
    cplx rate;
  };

  ExpPoly() = default;
  ExpPoly(cplx c) { add(c, 0, 0.0); }  // NOLINT: constants convert implicitly
  static ExpPoly monomial(cplx c, int power) { ExpPoly e; e.add(c, power, 0.0); return e; }
  static ExpPoly exponential(cplx c, cplx rate) { ExpPoly e; e.add(c, 0, rate); return e; }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_single_term() const { return terms_.size() == 1; }

  cplx operator()(cplx z) const;
  // e(a z + b)
  ExpPoly substitute(cplx a, cplx b) const;

  friend ExpPoly operator+(const ExpPoly& x, const ExpPoly& y);
  friend ExpPoly operator-(const ExpPoly& x, const ExpPoly& y);
  friend ExpPoly operator*(const ExpPoly& x, const ExpPoly& y);

  std::string to_string() const;

 private:
  void add(cplx c, int power, cplx rate);
  std::vector<Term> terms_;
};

}  // namespace bundlelab
