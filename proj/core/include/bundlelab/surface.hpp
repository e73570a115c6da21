#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bundlelab/derivatives.hpp"
#include "bundlelab/line_bundle.hpp"
#include "bundlelab/report.hpp"

namespace bundlelab {

// Positive smooth function on C (conformal factor or fiber weight).
class SurfaceFunction {
 public:
  using ValueFn = std::function<cplx(const cplx*)>;
  using JetFn = std::function<Jet(const Jet*)>;

  SurfaceFunction(std::string label, ValueFn value, JetFn jet)
      : label_(std::move(label)), value_(std::move(value)), jet_(std::move(jet)) {}

  template <class F>
  static SurfaceFunction generic(std::string label, F f) {
    return SurfaceFunction(
        std::move(label), [f](const cplx* z) { return f(z); }, [f](const Jet* z) { return f(z); });
  }

  static SurfaceFunction constant(double c);
  // 1 / (1 + |xi|^2)
  static SurfaceFunction cigar();
  // |xi|^2 + 1 / (1 + |xi|^2)
  static SurfaceFunction negative_example();

  const std::string& label() const { return label_; }
  double operator()(cplx xi) const { return value_(&xi).real(); }
  Jet at(const Jet* xi) const { return jet_(xi); }
  cplx at(const cplx* xi) const { return value_(xi); }

 private:
  std::string label_;
  ValueFn value_;
  JetFn jet_;
};

// Delta ln f with Delta = 4 d dbar.
double laplacian_log(const SurfaceFunction& f, cplx xi, DiffMethod m = DiffMethod::Jet);
// K = -(1 / (2 lambda)) Delta ln lambda
double gauss_curvature(const SurfaceFunction& lambda, cplx xi, DiffMethod m = DiffMethod::Jet);
double superharmonic_defect(const SurfaceFunction& u, const std::vector<cplx>& samples);

// Uniform points in the disc of the given radius.
std::vector<cplx> sample_disc(int count, double radius, std::uint64_t seed);

struct BiCandidateReport {
  std::vector<CheckResult> checks;
  bool pass = true;
};

// Candidate data C d(z + h(xi)) ^ d(zbar + conj h) + u dxi ^ dxibar on the total space
// of the degree 0 line bundle with characters theta.
BiCandidateReport validate_bi_candidate(const AnglePair& theta, long k, const SurfaceFunction& u,
                                        const std::function<cplx(cplx)>& h, int samples = 200,
                                        std::uint64_t seed = 0xE11, double radius = 5.0);

struct GridValue {
  double re, im, value;
};
std::vector<GridValue> curvature_grid(const SurfaceFunction& lambda, double half_width, int n);

}  // namespace bundlelab
