#include "bundlelab/rank2.hpp"

#include <sstream>
#include <stdexcept>

namespace bundlelab {

namespace {

// Unipotent part of rho(m + n tau) for a representation bundle.
cplx unipotent_offset(const TypeIII& r, long m, long n) {
  return double(m) * r.b1 + double(n) * r.b2;
}

}  // namespace

Rank2Bundle Rank2Bundle::type_i(const LineBundleAH& l1, const LineBundleAH& l2) {
  if (l1.degree() != 0 || l2.degree() != 0) throw std::invalid_argument("TypeI requires degree 0 summands");
  if (!same_tau(l1.tau(), l2.tau(), 1e-12)) throw std::invalid_argument("TypeI: mismatched tau");
  return {l1.tau(), TypeI{l1, l2}};
}

Rank2Bundle Rank2Bundle::type_ii(const LineBundleAH& l1, const LineBundleAH& l2) {
  if (l1.degree() <= 0 || l2.degree() != -l1.degree())
    throw std::invalid_argument("TypeII requires deg L1 = -deg L2 > 0");
  if (!same_tau(l1.tau(), l2.tau(), 1e-12)) throw std::invalid_argument("TypeII: mismatched tau");
  return {l1.tau(), TypeII{l1, l2}};
}

Rank2Bundle Rank2Bundle::type_iii(const AnglePair& theta, cplx b1, cplx b2, const Tau& tau) {
  if (std::abs(b2 - b1 * tau.value()) <= kBEps)
    throw std::invalid_argument("TypeIII requires b2 != b1 tau");
  return {tau, TypeIII{theta, b1, b2}};
}

Point3 Rank2Bundle::deck(long m, long n, const Point3& p) const {
  const cplx lam = double(m) + double(n) * tau_.value();
  const cplx z = p(0);
  Point3 out;
  out(0) = z + lam;
  switch (type()) {
    case BundleType::I: {
      const auto& d = as_i();
      out(1) = d.first.automorphy(m, n, z) * p(1);
      out(2) = d.second.automorphy(m, n, z) * p(2);
      break;
    }
    case BundleType::II: {
      const auto& d = as_ii();
      out(1) = d.positive.automorphy(m, n, z) * p(1);
      out(2) = d.negative.automorphy(m, n, z) * p(2);
      break;
    }
    case BundleType::III: {
      const auto& r = as_iii();
      const cplx s = unit_phase(combine(m, r.theta[0], n, r.theta[1]).value());
      out(1) = s * (p(1) + unipotent_offset(r, m, n) * p(2));
      out(2) = s * p(2);
      break;
    }
  }
  return out;
}

Rank2Bundle Rank2Bundle::transported(const ModularMatrix& mm) const {
  const Tau t2 = mobius_apply(mm, tau_);
  // New generators 1' and tau' correspond to d + c tau and b + a tau.
  auto move_line = [&](const LineBundleAH& l) {
    return LineBundleAH(l.degree(), t2, {l.character_angle(mm.d, mm.c), l.character_angle(mm.b, mm.a)});
  };
  switch (type()) {
    case BundleType::I:
      return {t2, TypeI{move_line(as_i().first), move_line(as_i().second)}};
    case BundleType::II:
      return {t2, TypeII{move_line(as_ii().positive), move_line(as_ii().negative)}};
    case BundleType::III: {
      const auto& r = as_iii();
      const AnglePair th{combine(mm.d, r.theta[0], mm.c, r.theta[1]),
                         combine(mm.b, r.theta[0], mm.a, r.theta[1])};
      return {t2, TypeIII{th, unipotent_offset(r, mm.d, mm.c), unipotent_offset(r, mm.b, mm.a)}};
    }
  }
  throw std::logic_error("unreachable");
}

bool operator==(const Rank2Bundle& x, const Rank2Bundle& y) {
  if (x.type() != y.type() || !same_tau(x.tau_, y.tau_, 1e-12)) return false;
  switch (x.type()) {
    case BundleType::I:
      return x.as_i().first == y.as_i().first && x.as_i().second == y.as_i().second;
    case BundleType::II:
      return x.as_ii().positive == y.as_ii().positive && x.as_ii().negative == y.as_ii().negative;
    case BundleType::III: {
      const auto& a = x.as_iii();
      const auto& b = y.as_iii();
      return a.theta == b.theta && std::abs(a.b1 - b.b1) <= kBEps && std::abs(a.b2 - b.b2) <= kBEps;
    }
  }
  return false;
}

Rank2Bundle classify(const AngleParam& theta1, const AngleParam& theta2, cplx b1, cplx b2,
                     const Tau& tau) {
  const cplx defect = b2 - b1 * tau.value();
  if (std::abs(defect) <= kBEps) {
    const LineBundleAH l(0, tau, {theta1, theta2});
    return Rank2Bundle::type_i(l, l);
  }
  return Rank2Bundle::type_iii({theta1, theta2}, 0.0, defect, tau);
}

std::string to_string(BundleType t) {
  switch (t) {
    case BundleType::I: return "TypeI";
    case BundleType::II: return "TypeII";
    case BundleType::III: return "TypeIII";
  }
  return "?";
}

std::string describe(const Rank2Bundle& e) {
  std::ostringstream os;
  os << to_string(e.type()) << " over tau=" << e.tau().value();
  switch (e.type()) {
    case BundleType::I:
      os << ", theta1=(" << e.as_i().first.theta()[0].to_string() << "," << e.as_i().first.theta()[1].to_string()
         << "), theta2=(" << e.as_i().second.theta()[0].to_string() << "," << e.as_i().second.theta()[1].to_string()
         << ")";
      break;
    case BundleType::II:
      os << ", degree=" << e.as_ii().positive.degree();
      break;
    case BundleType::III:
      os << ", theta=(" << e.as_iii().theta[0].to_string() << "," << e.as_iii().theta[1].to_string()
         << "), b=(" << e.as_iii().b1 << "," << e.as_iii().b2 << ")";
      break;
  }
  return os.str();
}

}  // namespace bundlelab
