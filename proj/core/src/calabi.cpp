#include "bundlelab/calabi.hpp"

#include <algorithm>
#include <array>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>

namespace bundlelab {

namespace {

constexpr double kLogSwitch = 10.0;

double gk(const std::function<double(double)>& f, double a, double b) {
  if (b <= a) return 0.0;
  double err = 0.0;
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 15, 1e-13, &err);
}

// ln of the tail weight 1 / (t ln t (ln ln t)^2) and two derivatives.
std::array<double, 3> tail_log_jet(double t) {
  const double l = std::log(t), m = std::log(l);
  const double g = -std::log(t) - std::log(l) - 2.0 * std::log(m);
  const double g1 = -1.0 / t - 1.0 / (t * l) - 2.0 / (t * l * m);
  const double tlm = t * l * m;
  const double g2 = 1.0 / (t * t) + (l + 1.0) / (t * t * l * l) + 2.0 * (l * m + m + 1.0) / (tlm * tlm);
  return {g, g1, g2};
}

std::vector<double> quintic_hermite(const std::array<double, 3>& a, const std::array<double, 3>& b) {
  // basis polynomials on [0,1], coefficients of s^0..s^5
  static const double basis[6][6] = {
      {1, 0, 0, -10, 15, -6}, {0, 1, 0, -6, 8, -3}, {0, 0, 0.5, -1.5, 1.5, -0.5},
      {0, 0, 0, 10, -15, 6},  {0, 0, 0, -4, 7, -3}, {0, 0, 0, 0.5, -1, 0.5}};
  const double w[6] = {a[0], a[1], a[2], b[0], b[1], b[2]};
  std::vector<double> c(6, 0.0);
  for (int k = 0; k < 6; ++k)
    for (int j = 0; j < 6; ++j) c[j] += w[k] * basis[k][j];
  return c;
}

double horner(const std::vector<double>& c, double s) {
  double v = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * s + *it;
  return v;
}

void require_positive(double w, double t) {
  if (!(w > 0.0) || !std::isfinite(w)) throw ProfileError("profile invariant violated: u' + t u'' <= 0", t);
}

}  // namespace

RadialProfile RadialProfile::euclidean() {
  RadialProfile p;
  p.kind_ = Kind::Euclidean;
  p.label_ = "euclidean";
  return p;
}

RadialProfile RadialProfile::calabi_log(double a, double b, double c) {
  if (!(a > 0 && b > 0 && c > 1.0)) throw std::invalid_argument("calabi_log: A, B > 0 and C > 1 required");
  if (!(a > b / std::log(c))) throw std::invalid_argument("calabi_log: A > B / ln C required");
  RadialProfile p;
  p.kind_ = Kind::CalabiLog;
  p.label_ = "calabi-log";
  p.params_ = {a, b, c};
  return p;
}

RadialProfile RadialProfile::slow_growth(double k, double alpha) {
  if (!(k > 0)) throw std::invalid_argument("slow_growth: k > 0 required");
  if (!(alpha > 1.0) || !(std::log(std::log(alpha)) > 2.0))
    throw std::invalid_argument("slow_growth: ln ln alpha > 2 required");
  RadialProfile p;
  p.kind_ = Kind::SlowGrowth;
  p.label_ = "slow-growth";
  p.params_ = {k, alpha};
  p.bridge_ = quintic_hermite({2.0 * std::log(alpha), 2.0 / alpha, -2.0 / (alpha * alpha)}, tail_log_jet(alpha + 1.0));
  p.slow_bridge_ = gk([&p](double t) { return p.slow_h(t); }, alpha, alpha + 1.0);
  p.slow_c_ = alpha * alpha * alpha / 3.0 + p.slow_bridge_ + 1.0 / std::log(std::log(alpha + 1.0));
  return p;
}

RadialProfile RadialProfile::custom(std::string label, std::function<double(double)> u,
                                    std::function<double(double)> du, std::function<double(double)> d2u) {
  RadialProfile p;
  p.kind_ = Kind::Custom;
  p.label_ = std::move(label);
  p.cu_ = std::move(u);
  p.cdu_ = std::move(du);
  p.cd2u_ = std::move(d2u);
  return p;
}

double RadialProfile::slow_h(double t) const {
  const double alpha = params_[1];
  if (t <= alpha) return t * t;
  if (t >= alpha + 1.0) {
    const double l = std::log(t), m = std::log(l);
    return 1.0 / (t * l * m * m);
  }
  return std::exp(horner(bridge_, t - alpha));
}

double RadialProfile::slow_cumulative(double t) const {
  const double alpha = params_[1];
  if (t <= alpha) return t * t * t / 3.0;
  const double head = alpha * alpha * alpha / 3.0;
  if (t < alpha + 1.0) return head + gk([this](double s) { return slow_h(s); }, alpha, t);
  return head + slow_bridge_ + 1.0 / std::log(std::log(alpha + 1.0)) - 1.0 / std::log(std::log(t));
}

double RadialProfile::du(double t) const {
  switch (kind_) {
    case Kind::Euclidean: return 1.0;
    case Kind::CalabiLog: {
      const double a = params_[0], b = params_[1], s = params_[2] + t, l = std::log(s);
      return a / s - b / (s * l);
    }
    case Kind::SlowGrowth: {
      if (t <= 0.0) return 0.0;
      return 2.0 * params_[0] / slow_c_ * slow_cumulative(t) / t;
    }
    case Kind::Custom: return cdu_(t);
  }
  return 0.0;
}

double RadialProfile::d2u(double t) const {
  switch (kind_) {
    case Kind::Euclidean: return 0.0;
    case Kind::CalabiLog: {
      const double a = params_[0], b = params_[1], s = params_[2] + t, l = std::log(s);
      return -a / (s * s) + b * (l + 1.0) / (s * s * l * l);
    }
    case Kind::SlowGrowth: {
      if (t <= 0.0) return 0.0;
      return (weight(t) - du(t)) / t;
    }
    case Kind::Custom: return cd2u_(t);
  }
  return 0.0;
}

double RadialProfile::weight(double t) const {
  if (kind_ == Kind::SlowGrowth) return 2.0 * params_[0] / slow_c_ * slow_h(t);
  return du(t) + t * d2u(t);
}

std::optional<double> RadialProfile::u(double t) const {
  switch (kind_) {
    case Kind::Euclidean: return t;
    case Kind::CalabiLog: {
      const double s = params_[2] + t;
      return params_[0] * std::log(s) - params_[1] * std::log(std::log(s));
    }
    case Kind::Custom: return cu_ ? std::optional<double>(cu_(t)) : std::nullopt;
    case Kind::SlowGrowth: break;
  }
  return std::nullopt;
}

std::vector<double> RadialProfile::breakpoints() const {
  if (kind_ == Kind::SlowGrowth) return {params_[1], params_[1] + 1.0};
  return {};
}

namespace {

double distance_piece(const RadialProfile& u, double a, double b) {
  if (b <= kLogSwitch) {
    // t = s^2
    return gk(
        [&u](double s) {
          const double t = s * s;
          const double w = u.weight(t);
          if (t > 0.0) require_positive(w, t);
          return std::sqrt(std::max(w, 0.0));
        },
        std::sqrt(a), std::sqrt(b));
  }
  // t = e^sigma
  return gk(
      [&u](double sg) {
        const double t = std::exp(sg);
        const double w = u.weight(t);
        require_positive(w, t);
        return 0.5 * std::sqrt(w) * std::exp(0.5 * sg);
      },
      std::log(a), std::log(b));
}

double distance_between(const RadialProfile& u, double a, double b) {
  std::vector<double> cuts{a, b};
  if (a < kLogSwitch && b > kLogSwitch) cuts.push_back(kLogSwitch);
  for (double x : u.breakpoints())
    if (x > a && x < b) cuts.push_back(x);
  std::sort(cuts.begin(), cuts.end());
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) total += distance_piece(u, cuts[i], cuts[i + 1]);
  return total;
}

}  // namespace

double fiber_distance(const RadialProfile& u, double t_max) {
  if (!(t_max >= 0.0)) throw std::invalid_argument("fiber_distance: t_max >= 0 required");
  return distance_between(u, 0.0, t_max);
}

std::vector<double> decade_grid(double from, double to, int per_decade) {
  std::vector<double> xs;
  const double lo = std::log10(from), hi = std::log10(to);
  const int steps = static_cast<int>(std::llround((hi - lo) * per_decade));
  for (int i = 0; i <= steps; ++i) xs.push_back(std::pow(10.0, lo + double(i) / per_decade));
  return xs;
}

CompletenessVerdict completeness_verdict(const RadialProfile& u, double t_max, double margin) {
  CompletenessVerdict v;
  const std::vector<double> ts = decade_grid(1.0, t_max);
  double d = fiber_distance(u, ts.front());
  v.grid.emplace_back(ts.front(), d);
  std::vector<double> inc;
  for (std::size_t i = 1; i < ts.size(); ++i) {
    const double step = distance_between(u, ts[i - 1], ts[i]);
    d += step;
    v.grid.emplace_back(ts[i], d);
    inc.push_back(step);
  }
  if (inc.size() < 4) return v;
  v.diverges = true;
  for (std::size_t i = inc.size() - 3; i < inc.size(); ++i) {
    const double r = inc[i] / inc[i - 1];
    v.decade_ratios.push_back(r);
    if (!(inc[i] > 0.0) || !(r >= margin)) v.diverges = false;
  }
  return v;
}

GrowthReport hadamard_order(const RadialProfile& u, const std::vector<double>& xs_in) {
  GrowthReport rep;
  std::vector<double> xs = xs_in;
  std::sort(xs.begin(), xs.end());
  double prev = 0.0, d = 0.0;
  for (double x : xs) {
    d += distance_between(u, prev, x);
    prev = x;
    rep.grid.emplace_back(x, d);
    if (x > std::exp(1.0) && d > 0.0) rep.ratios.emplace_back(x, std::log(std::log(x)) / std::log(d));
  }
  if (!rep.ratios.empty()) rep.estimated_order = rep.ratios.back().second;
  if (!xs.empty()) rep.diverges = completeness_verdict(u, std::max(1e4, xs.back())).diverges;

  int up = 0, down = 0;
  for (std::size_t i = 1; i < rep.ratios.size(); ++i) {
    if (rep.ratios[i - 1].first < 1e6) continue;
    if (rep.ratios[i].second > rep.ratios[i - 1].second) ++up;
    else if (rep.ratios[i].second < rep.ratios[i - 1].second) ++down;
  }
  rep.direction = (up > 0 && down == 0) ? "increasing" : (down > 0 && up == 0) ? "decreasing" : "mixed";

  if (u.kind() == RadialProfile::Kind::CalabiLog) {
    std::vector<std::pair<double, double>> pts;
    for (const auto& [x, dx] : rep.grid)
      if (x > std::exp(1.0)) pts.emplace_back(x, dx / std::sqrt(std::log(x)));
    if (pts.size() >= 2) {
      const std::size_t half = pts.size() / 2;
      GrowthCertificate c;
      for (std::size_t i = 0; i < half; ++i) c.fitted_c = std::max(c.fitted_c, pts[i].second);
      c.verified = true;
      for (std::size_t i = half; i < pts.size(); ++i)
        if (pts[i].second > c.fitted_c) c.verified = false;
      rep.certificate = c;
    }
  }
  return rep;
}

}  // namespace bundlelab
