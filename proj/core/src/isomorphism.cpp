#include "bundlelab/isomorphism.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bundlelab {

namespace {

FiberMatrix diagonal(ExpPoly a, ExpPoly d) { return {{{std::move(a), ExpPoly()}, {ExpPoly(), std::move(d)}}}; }

std::string format_cplx(cplx c) {
  std::ostringstream os;
  os.precision(6);
  os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  return os.str();
}

// Integer coordinates (p,q,r,s) of A.1 and A.tau on the lattice of tau.
struct UnitCoords {
  long p, q, r, s;
};

UnitCoords unit_coords(cplx a, const Tau& tau) {
  const auto one = lattice_coordinates(a, tau);
  const auto t = lattice_coordinates(a * tau.value(), tau);
  if (!one || !t) throw std::logic_error("multiplier does not preserve the lattice");
  return {one->first, one->second, t->first, t->second};
}

std::optional<IsoWitness> iso_type_iii(const Rank2Bundle& e, const Rank2Bundle& f) {
  const auto [e0, ne] = normalize(e);
  const auto [f0, nf] = normalize(f);
  const TypeIII& x = e0.as_iii();
  const TypeIII& y = f0.as_iii();
  const Tau& tau = e.tau();
  for (const Multiplier& mult : torus_multipliers(tau)) {
    const cplx a = mult.value;
    const auto [p, q, r, s] = unit_coords(a, tau);
    if (!(combine(p, y.theta[0], q, y.theta[1]) == x.theta[0])) continue;
    if (!(combine(r, y.theta[0], s, y.theta[1]) == x.theta[1])) continue;
    const cplx c1 = y.b2 * (double(s) - double(q) * tau.value()) / x.b2;
    FiberMatrix n{{{ExpPoly(c1), ExpPoly::monomial(double(q) * y.b2, 1)}, {ExpPoly(), ExpPoly(1.0)}}};
    std::ostringstream d;
    d << "(" << format_cplx(a) << "*z, " << format_cplx(c1) << "*z1";
    if (q != 0) d << " + " << format_cplx(double(q) * y.b2) << "*z*z2";
    d << ", z2)";
    const IsoWitness core(tau, tau, a, 0.0, n, d.str());
    return nf.inverse().after(core.after(ne)).with_description(d.str());
  }
  return std::nullopt;
}

std::optional<IsoWitness> iso_type_i(const Rank2Bundle& e, const Rank2Bundle& f) {
  const TypeI& x = e.as_i();
  const TypeI& y = f.as_i();
  const Tau& tau = e.tau();
  for (const Multiplier& mult : torus_multipliers(tau)) {
    const cplx a = mult.value;
    const auto [p, q, r, s] = unit_coords(a, tau);
    auto matches = [&](const LineBundleAH& l, const LineBundleAH& m) {
      return m.character_angle(p, q) == l.theta()[0] && m.character_angle(r, s) == l.theta()[1];
    };
    const std::string az = format_cplx(a) + "*z";
    if (matches(x.first, y.first) && matches(x.second, y.second))
      return IsoWitness(tau, tau, a, 0.0, diagonal(ExpPoly(1.0), ExpPoly(1.0)), "(" + az + ", z1, z2)");
    if (matches(x.first, y.second) && matches(x.second, y.first)) {
      FiberMatrix swap{{{ExpPoly(), ExpPoly(1.0)}, {ExpPoly(1.0), ExpPoly()}}};
      return IsoWitness(tau, tau, a, 0.0, swap, "(" + az + ", z2, z1)");
    }
  }
  return std::nullopt;
}

std::optional<IsoWitness> iso_type_ii(const Rank2Bundle& e, const Rank2Bundle& f) {
  const TypeII& x = e.as_ii();
  const TypeII& y = f.as_ii();
  if (x.positive.degree() != y.positive.degree()) return std::nullopt;
  const Tau& tau = e.tau();
  const double h = x.positive.hermitian_form();
  const LineBundleAH prod_x = ah_tensor(x.positive, x.negative);
  const LineBundleAH prod_y = ah_tensor(y.positive, y.negative);
  for (const Multiplier& mult : torus_multipliers(tau)) {
    const cplx a = mult.value;
    const auto [p, q, r, s] = unit_coords(a, tau);
    if (!(prod_y.character_angle(p, q) == prod_x.character_angle(1, 0))) continue;
    if (!(prod_y.character_angle(r, s) == prod_x.character_angle(0, 1))) continue;
    // beta(1) / beta~(A) = e^{2 pi i theta}, beta(tau) / beta~(A tau) = e^{2 pi i phi}
    const double th = (x.negative.character_angle(1, 0) - y.negative.character_angle(p, q)).value();
    const double ph = (x.negative.character_angle(0, 1) - y.negative.character_angle(r, s)).value();
    const double v = th / h;
    const double u = (ph - th * tau.re()) / (h * tau.im());
    const cplx b = std::conj(cplx(u, v) / a);
    const cplx rate = kPi * h * a * std::conj(b);
    std::ostringstream d;
    d << "(" << format_cplx(a) << "*z + " << format_cplx(b) << ", exp(" << format_cplx(rate)
      << "*z)*z1, exp(-" << format_cplx(rate) << "*z)*z2)";
    return IsoWitness(tau, tau, a, b, diagonal(ExpPoly::exponential(1.0, rate), ExpPoly::exponential(1.0, -rate)),
                      d.str());
  }
  return std::nullopt;
}

}  // namespace

std::pair<Rank2Bundle, IsoWitness> normalize(const Rank2Bundle& e) {
  if (e.type() != BundleType::III) return {e, IsoWitness::identity(e.tau())};
  const TypeIII& r = e.as_iii();
  const Rank2Bundle n = Rank2Bundle::type_iii(r.theta, 0.0, r.b2 - r.b1 * e.tau().value(), e.tau());
  FiberMatrix m{{{ExpPoly(1.0), ExpPoly::monomial(-r.b1, 1)}, {ExpPoly(), ExpPoly(1.0)}}};
  return {n, IsoWitness(e.tau(), e.tau(), 1.0, 0.0, m, "(z, z1 - " + format_cplx(r.b1) + "*z*z2, z2)")};
}

std::optional<IsoWitness> bundles_isomorphic(const Rank2Bundle& e, const Rank2Bundle& f) {
  if (!same_tau(e.tau(), f.tau())) throw std::invalid_argument("bundles_isomorphic: mismatched tau");
  if (!in_fundamental_domain(e.tau())) throw std::invalid_argument("bundles_isomorphic: tau is not reduced");
  if (e.type() != f.type()) return std::nullopt;
  switch (e.type()) {
    case BundleType::I: return iso_type_i(e, f);
    case BundleType::II: return iso_type_ii(e, f);
    case BundleType::III: return iso_type_iii(e, f);
  }
  return std::nullopt;
}

IsoWitness transport_witness(const Rank2Bundle& e, const ModularMatrix& m) {
  const Tau t2 = mobius_apply(m, e.tau());
  const cplx mu = double(m.c) * e.tau().value() + double(m.d);
  return {e.tau(), t2, 1.0 / mu, 0.0, diagonal(ExpPoly(1.0), ExpPoly(1.0)), "(z/" + format_cplx(mu) + ", z1, z2)"};
}

std::optional<IsoWitness> total_spaces_biholomorphic(const Rank2Bundle& e, const Rank2Bundle& f) {
  if (e.type() != f.type()) return std::nullopt;
  const Reduction re = reduce_tau(e.tau());
  const Reduction rf = reduce_tau(f.tau());
  if (!same_tau(re.reduced, rf.reduced)) return std::nullopt;
  Rank2Bundle es = e.transported(re.matrix);
  Rank2Bundle fs = f.transported(rf.matrix);
  // Pin both transported bundles to the same reduced value.
  const auto core = bundles_isomorphic(es, fs);
  if (!core) return std::nullopt;
  const IsoWitness te = transport_witness(e, re.matrix);
  const IsoWitness tf = transport_witness(f, rf.matrix);
  return tf.inverse().after(core->after(te)).with_description(core->description());
}

bool admits_flat_kahler(const Rank2Bundle& e) { return e.type() == BundleType::I; }

BiNonnegResult admits_bi_nonneg(const LineBundleAH& l) {
  if (l.degree() != 0) return {};
  const auto& th = l.theta();
  if (!th[0].is_rational() || !th[1].is_rational()) return {true, BiFamily::Rotational, 0};
  return {true, BiFamily::ZkSymmetric, std::lcm(th[0].denominator(), th[1].denominator())};
}

}  // namespace bundlelab
