#pragma once

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bundlelab {

class ProfileError : public std::runtime_error {
 public:
  ProfileError(const std::string& what, double t) : std::runtime_error(what), t_(t) {}
  double t() const { return t_; }

 private:
  double t_;
};

// Calabi potential u(t) of the fiber norm squared t.
class RadialProfile {
 public:
  enum class Kind { Euclidean, CalabiLog, SlowGrowth, Custom };

  static RadialProfile euclidean();
  // u = A log(C + t) - B log log(C + t)
  static RadialProfile calabi_log(double a, double b, double c);
  // (t u')' = (2k / C) h(t), h = t^2 on [0, alpha], 1 / (t ln t (ln ln t)^2) past alpha + 1
  static RadialProfile slow_growth(double k, double alpha = 1620.0);
  static RadialProfile custom(std::string label, std::function<double(double)> u, std::function<double(double)> du,
                              std::function<double(double)> d2u);

  Kind kind() const { return kind_; }
  const std::string& label() const { return label_; }
  const std::vector<double>& params() const { return params_; }

  double du(double t) const;
  double d2u(double t) const;
  // u' + t u'' = (t u')'
  double weight(double t) const;
  // Only Euclidean, CalabiLog and Custom have u itself in closed form.
  std::optional<double> u(double t) const;

  // SlowGrowth internals
  double slow_h(double t) const;
  double slow_normalizer() const { return slow_c_; }
  double slow_alpha() const { return params_.size() > 1 ? params_[1] : 0.0; }

  // interior points where the profile is only piecewise smooth
  std::vector<double> breakpoints() const;

 private:
  RadialProfile() = default;
  double slow_cumulative(double t) const;

  Kind kind_ = Kind::Euclidean;
  std::string label_;
  std::vector<double> params_;
  std::function<double(double)> cu_, cdu_, cd2u_;
  // SlowGrowth: normalizer C and bridge integral
  double slow_c_ = 0.0, slow_bridge_ = 0.0;
  std::vector<double> bridge_;  // quintic coefficients of ln h on [alpha, alpha + 1]
};

// int_0^T sqrt(u' + t u'') / (2 sqrt t) dt
double fiber_distance(const RadialProfile& u, double t_max);

struct CompletenessVerdict {
  bool diverges = false;
  std::vector<std::pair<double, double>> grid;  // (T, d(T))
  std::vector<double> decade_ratios;            // successive decade increment ratios
};

// Numerical divergence heuristic: over the last three decades up to t_max, each
// decade increment of d must be at least `margin` times the previous one.
CompletenessVerdict completeness_verdict(const RadialProfile& u, double t_max = 1e12, double margin = 0.5);

struct GrowthCertificate {
  double fitted_c = 0.0;
  bool verified = false;
};

struct GrowthReport {
  std::vector<std::pair<double, double>> grid;    // (x, d(x))
  bool diverges = false;
  std::vector<std::pair<double, double>> ratios;  // (x, ln ln x / ln d(x))
  double estimated_order = 0.0;
  std::string direction;                          // "increasing", "decreasing" or "mixed" beyond 1e6
  std::optional<GrowthCertificate> certificate;   // CalabiLog: d <= C sqrt(ln x)
};

std::vector<double> decade_grid(double from, double to, int per_decade = 1);
GrowthReport hadamard_order(const RadialProfile& u, const std::vector<double>& xs);

}  // namespace bundlelab
