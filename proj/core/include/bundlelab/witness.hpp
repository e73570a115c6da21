#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "bundlelab/exp_poly.hpp"
#include "bundlelab/rank2.hpp"

namespace bundlelab {

using FiberMatrix = std::array<std::array<ExpPoly, 2>, 2>;

// (z, v) -> (A z + B, N(z) v) from the total space over `source` to the one over `target`.
class IsoWitness {
 public:
  IsoWitness(Tau source, Tau target, cplx a, cplx b, FiberMatrix n, std::string description);
  static IsoWitness identity(const Tau& tau);

  const Tau& source() const { return source_; }
  const Tau& target() const { return target_; }
  cplx multiplier() const { return a_; }
  cplx translation() const { return b_; }
  const FiberMatrix& fiber() const { return n_; }
  const std::string& description() const { return description_; }
  // A . 1 = p + q tau~ and A . tau = r + s tau~, stored as (a,b,c,d) = (s, r, q, p).
  const ModularMatrix& matrix() const { return matrix_; }

  Point3 operator()(const Point3& p) const;
  Eigen::Matrix2cd fiber_at(cplx z) const;

  IsoWitness inverse() const;
  // (*this) after `first`
  IsoWitness after(const IsoWitness& first) const;
  IsoWitness with_description(std::string d) const;

 private:
  Tau source_, target_;
  cplx a_, b_;
  FiberMatrix n_;
  std::string description_;
  ModularMatrix matrix_;
};

// Max relative error of W(gamma . p) = (A gamma) . W(p) over both generators and
// `points` random points of C^3 (box of radius `radius`).
double verify_intertwining(const IsoWitness& w, const Rank2Bundle& from, const Rank2Bundle& to,
                           int points, std::uint64_t seed, double radius = 2.0);

}  // namespace bundlelab
