#include "bundlelab/line_bundle.hpp"

#include <cmath>
#include <stdexcept>

namespace bundlelab {

LineBundleAH::LineBundleAH(int degree, Tau tau, AnglePair theta)
    : degree_(degree), tau_(tau), theta_(theta) {}

AngleParam LineBundleAH::character_angle(long m, long n) const {
  const long sign_part = (static_cast<long>(degree_) * m % 2) * (n % 2);
  return combine(m, theta_[0], n, theta_[1]) + AngleParam::rational(sign_part, 2);
}

cplx LineBundleAH::character(long m, long n) const {
  return unit_phase(character_angle(m, n).value());
}

cplx LineBundleAH::automorphy(long m, long n, cplx z) const {
  const cplx lam = double(m) + double(n) * tau_.value();
  const double h = hermitian_form();
  return character(m, n) * std::exp(kPi * h * z * std::conj(lam) + 0.5 * kPi * h * std::norm(lam));
}

LineBundleAH LineBundleAH::dual() const { return power(-1); }

LineBundleAH LineBundleAH::power(long k) const {
  return {static_cast<int>(degree_ * k), tau_, {theta_[0].times(k), theta_[1].times(k)}};
}

bool operator==(const LineBundleAH& x, const LineBundleAH& y) {
  return x.degree_ == y.degree_ && same_tau(x.tau_, y.tau_, 1e-12) && x.theta_ == y.theta_;
}

int ah_degree(const LineBundleAH& l) {
  const double recovered = l.hermitian_form() * l.tau().im();
  if (std::abs(recovered - l.degree()) > 1e-12 * std::max(1, std::abs(l.degree())))
    throw std::logic_error("ah_degree: H Im tau inconsistent with degree");
  return l.degree();
}

LineBundleAH ah_tensor(const LineBundleAH& l1, const LineBundleAH& l2) {
  if (!same_tau(l1.tau(), l2.tau(), 1e-12)) throw std::invalid_argument("ah_tensor: mismatched tau");
  return {l1.degree() + l2.degree(), l1.tau(),
          {l1.theta()[0] + l2.theta()[0], l1.theta()[1] + l2.theta()[1]}};
}

int h0_line(const LineBundleAH& l) {
  if (l.degree() < 0) return 0;
  if (l.degree() > 0) return l.degree();
  return l.is_trivial() ? 1 : 0;
}

}  // namespace bundlelab
