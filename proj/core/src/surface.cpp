#include "bundlelab/surface.hpp"

#include <cmath>
#include <random>


namespace bundlelab {

namespace {

constexpr double kInvarianceTol = 1e-10;

template <class S>
S radial(const S& t, double a) {
  return t + S(a);
}

}  // namespace

SurfaceFunction SurfaceFunction::constant(double c) {
  return generic("constant", [c](const auto* z) {
    using S = std::remove_cvref_t<decltype(z[0])>;
    return S(c);
  });
}

SurfaceFunction SurfaceFunction::cigar() {
  return generic("cigar", [](const auto* z) {
    using S = std::remove_cvref_t<decltype(z[0])>;
    return S(1.0) / radial(abs2(z[0]), 1.0);
  });
}

SurfaceFunction SurfaceFunction::negative_example() {
  return generic("negexam", [](const auto* z) {
    using S = std::remove_cvref_t<decltype(z[0])>;
    const S t = abs2(z[0]);
    return t + S(1.0) / radial(t, 1.0);
  });
}

double laplacian_log(const SurfaceFunction& f, cplx xi, DiffMethod m) {
  const RealDerivatives d =
      m == DiffMethod::Jet
          ? derivatives_jet([&](const Jet* x) { return std::vector<Jet>{log(f.at(x))}; }, &xi, 1, 2)
          : derivatives_central([&](const cplx* x) { return std::vector<cplx>{std::log(f.at(x))}; }, &xi, 1, 2);
  return 4.0 * d.mixed(0, 0, 0).real();
}

double gauss_curvature(const SurfaceFunction& lambda, cplx xi, DiffMethod m) {
  return -laplacian_log(lambda, xi, m) / (2.0 * lambda(xi));
}

double superharmonic_defect(const SurfaceFunction& u, const std::vector<cplx>& samples) {
  double worst = 0.0;
  for (cplx xi : samples) worst = std::max(worst, laplacian_log(u, xi));
  return worst;
}

std::vector<cplx> sample_disc(int count, double radius, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<cplx> pts;
  pts.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double r = radius * std::sqrt(unit(rng));
    pts.push_back(std::polar(r, 2.0 * kPi * unit(rng)));
  }
  return pts;
}

BiCandidateReport validate_bi_candidate(const AnglePair& theta, long k, const SurfaceFunction& u,
                                        const std::function<cplx(cplx)>& h, int samples, std::uint64_t seed,
                                        double radius) {
  BiCandidateReport rep;
  const std::vector<cplx> pts = sample_disc(samples, radius, seed);
  const bool rational = theta[0].is_rational() && theta[1].is_rational();
  auto relative = [](cplx a, cplx b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); };

  double positivity = 0.0;
  for (cplx xi : pts)
    if (!(u(xi) > 0.0)) positivity = 1.0;
  rep.checks.push_back({"u-positive", samples, positivity, 0.0, positivity == 0.0, {}});

  if (rational) {
    const bool compatible = k >= 1 && theta[0].times(k).is_zero() && theta[1].times(k).is_zero();
    rep.checks.push_back({"k-compatible", 1, compatible ? 0.0 : 1.0, 0.0, compatible,
                          "k theta must be integral for the Z_k family"});
    const cplx rot = k >= 1 ? std::polar(1.0, 2.0 * kPi / double(k)) : cplx(1.0);
    double du = 0.0, dh = 0.0;
    for (cplx xi : pts) {
      du = std::max(du, relative(u(rot * xi), u(xi)));
      dh = std::max(dh, relative(h(rot * xi), h(xi)));
    }
    rep.checks.push_back({"u-zk-invariant", samples, du, kInvarianceTol, du <= kInvarianceTol, {}});
    rep.checks.push_back({"h-zk-invariant", samples, dh, kInvarianceTol, dh <= kInvarianceTol, {}});
  } else {
    std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    double du = 0.0, dh = 0.0;
    const cplx h0 = h(0.0);
    for (cplx xi : pts) {
      du = std::max(du, relative(u(std::polar(1.0, angle(rng)) * xi), u(xi)));
      dh = std::max(dh, relative(h(xi), h0));
    }
    rep.checks.push_back({"u-rotational", samples, du, kInvarianceTol, du <= kInvarianceTol, {}});
    rep.checks.push_back({"h-constant", samples, dh, kInvarianceTol, dh <= kInvarianceTol, {}});
  }
  const double sd = superharmonic_defect(u, pts);
  rep.checks.push_back({"ln-u-superharmonic", samples, sd, 0.0, sd <= 0.0, {}});
  rep.pass = all_pass(rep.checks);
  return rep;
}

std::vector<GridValue> curvature_grid(const SurfaceFunction& lambda, double half_width, int n) {
  std::vector<GridValue> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double re = -half_width + 2.0 * half_width * i / std::max(1, n - 1);
      const double im = -half_width + 2.0 * half_width * j / std::max(1, n - 1);
      out.push_back({re, im, gauss_curvature(lambda, cplx(re, im))});
    }
  return out;
}

}  // namespace bundlelab
