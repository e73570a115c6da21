#pragma once

#include <string>
#include <variant>

#include "bundlelab/line_bundle.hpp"

namespace bundlelab {

inline constexpr double kBEps = 1e-9;

enum class BundleType { I, II, III };

struct TypeI {
  LineBundleAH first, second;
};

struct TypeII {
  LineBundleAH positive, negative;
};

// Representation bundle: rho(gamma_k) = e^{2 pi i theta_k} [[1, b_k], [0, 1]].
struct TypeIII {
  AnglePair theta;
  cplx b1, b2;
};

class Rank2Bundle {
 public:
  static Rank2Bundle type_i(const LineBundleAH& l1, const LineBundleAH& l2);
  static Rank2Bundle type_ii(const LineBundleAH& l1, const LineBundleAH& l2);
  static Rank2Bundle type_iii(const AnglePair& theta, cplx b1, cplx b2, const Tau& tau);

  const Tau& tau() const { return tau_; }
  BundleType type() const { return static_cast<BundleType>(data_.index()); }
  const TypeI& as_i() const { return std::get<TypeI>(data_); }
  const TypeII& as_ii() const { return std::get<TypeII>(data_); }
  const TypeIII& as_iii() const { return std::get<TypeIII>(data_); }

  // Deck transformation of the lattice element m + n tau on C^3 = (z, fiber).
  Point3 deck(long m, long n, const Point3& p) const;

  // Same bundle data over tau' = M tau, reached through z' = z / (c tau + d).
  Rank2Bundle transported(const ModularMatrix& m) const;

  friend bool operator==(const Rank2Bundle& x, const Rank2Bundle& y);

 private:
  using Data = std::variant<TypeI, TypeII, TypeIII>;
  Rank2Bundle(Tau tau, Data data) : tau_(tau), data_(std::move(data)) {}
  Tau tau_;
  Data data_;
};

// Classification of a representation bundle; Type III results are normalized to b1 = 0.
Rank2Bundle classify(const AngleParam& theta1, const AngleParam& theta2, cplx b1, cplx b2,
                     const Tau& tau);

std::string to_string(BundleType t);
std::string describe(const Rank2Bundle& e);

}  // namespace bundlelab
