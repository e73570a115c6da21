#pragma once

#include <string>
#include <vector>

#include "bundlelab/rank2.hpp"

namespace bundlelab {

enum class MonomialForm {
  FiberPower,      // xi1^p xi2^q (coefficient section suppressed)
  Z2Power,         // z2^q
  ShiftedPower,    // (z1 - b1 z z2)^p z2^q
  SymmetrizedPair, // z1^p z2^q + phase z1^q z2^p
  Single,          // z1^p z2^q
};

struct Monomial {
  int p = 0, q = 0;
  int section_dim = 1;
  MonomialForm form = MonomialForm::FiberPower;
  cplx param = 0.0;  // b1 for ShiftedPower, phase for SymmetrizedPair

  int degree() const { return p + q; }
  std::string text() const;
  // Value of the representative function at (z, z1, z2).
  cplx evaluate(const Point3& x) const;
};

struct BasisReport {
  int degree_bound = 0;
  std::vector<Monomial> monomials;
  int total_dim = 0;
};

BasisReport basis_typeI(const LineBundleAH& l1, const LineBundleAH& l2, int d);
BasisReport basis_typeII(const LineBundleAH& l1, const LineBundleAH& l2, int d);
BasisReport basis_typeIII(const AngleParam& theta1, const AngleParam& theta2, cplx b1, cplx b2,
                          const Tau& tau, int d);
BasisReport basis_fuchsian(const AngleParam& theta1, const AngleParam& theta2, int d);
BasisReport basis_for(const Rank2Bundle& e, int d);

bool has_nonconstant(const Rank2Bundle& e);

// 2x2 real matrices of the surface group action on the disc model and the
// representation used for the degree -1 Fuchsian total space.
struct FuchsianData {
  Eigen::Matrix2d alpha, beta, delta;
};
FuchsianData fuchsian_generators();
// (alpha or beta)(z) as a Moebius transformation of the upper half plane.
cplx fuchsian_act(const Eigen::Matrix2d& g, cplx z);
// Lifted invariance: f(alpha z, e^{2 pi i th1} z2, e^{2 pi i th1} z1) and
// f(beta z, -e^{2 pi i th2} z1, e^{2 pi i th2} z2); returns the two images.
std::pair<Point3, Point3> fuchsian_deck(const AngleParam& theta1, const AngleParam& theta2, const Point3& x);

}  // namespace bundlelab
