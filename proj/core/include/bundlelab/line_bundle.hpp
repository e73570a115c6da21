#pragma once

#include <array>

#include "bundlelab/angle.hpp"
#include "bundlelab/modular.hpp"

namespace bundlelab {

using AnglePair = std::array<AngleParam, 2>;

// Appell-Humbert datum: degree h, H = h / Im tau, alpha(1) = e^{2 pi i theta1},
// alpha(tau) = e^{2 pi i theta2}.
class LineBundleAH {
 public:
  LineBundleAH(int degree, Tau tau, AnglePair theta);
  static LineBundleAH trivial(Tau tau) { return {0, tau, {AngleParam::zero(), AngleParam::zero()}}; }

  int degree() const { return degree_; }
  const Tau& tau() const { return tau_; }
  const AnglePair& theta() const { return theta_; }
  double hermitian_form() const { return degree_ / tau_.im(); }

  // Semicharacter on m + n tau as an angle: h*m*n/2 + m*theta1 + n*theta2.
  AngleParam character_angle(long m, long n) const;
  cplx character(long m, long n) const;
  // Automorphy factor of m + n tau at z.
  cplx automorphy(long m, long n, cplx z) const;

  bool is_trivial() const { return degree_ == 0 && theta_[0].is_zero() && theta_[1].is_zero(); }
  LineBundleAH dual() const;
  LineBundleAH power(long k) const;

  friend bool operator==(const LineBundleAH& x, const LineBundleAH& y);

 private:
  int degree_;
  Tau tau_;
  AnglePair theta_;
};

int ah_degree(const LineBundleAH& l);
LineBundleAH ah_tensor(const LineBundleAH& l1, const LineBundleAH& l2);
int h0_line(const LineBundleAH& l);

}  // namespace bundlelab
