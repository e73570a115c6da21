#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <type_traits>
#include <vector>

#include "bundlelab/jet.hpp"
#include "bundlelab/rank2.hpp"

namespace bundlelab {

// Dense n x n (n <= 3) coefficient matrix over a generic scalar. While it is built only
// through add_outer, the rank-one terms are kept so that det() can sum nonnegative
// Cauchy-Binet terms instead of cancelling large entries.
template <class S>
struct CoeffMatrix {
  static constexpr int kMaxTerms = 4;
  int n = 0;
  std::array<S, 9> a{};
  int terms = 0;
  bool gram = true;
  std::array<std::array<S, 3>, kMaxTerms> tv{};
  std::array<S, kMaxTerms> tw{};

  explicit CoeffMatrix(int dim = 0) : n(dim) {}
  static CoeffMatrix identity(int dim) {
    CoeffMatrix m(dim);
    for (int i = 0; i < dim; ++i) {
      std::array<S, 3> e{};
      e[i] = S(1.0);
      m.add_outer(e, S(1.0));
    }
    return m;
  }
  // Mutable access drops the rank-one record.
  S& operator()(int i, int j) {
    gram = false;
    return a[3 * i + j];
  }
  const S& operator()(int i, int j) const { return a[3 * i + j]; }

  // += w v v^H
  template <class V>
  void add_outer(const V& v, const S& w) {
    using std::conj;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[3 * i + j] += w * v[i] * conj(v[j]);
    if (gram && terms < kMaxTerms) {
      for (int i = 0; i < n; ++i) tv[terms][i] = v[i];
      tw[terms++] = w;
    } else {
      gram = false;
    }
  }

  S det() const {
    if (gram) return gram_det();
    if (n == 1) return a[0];
    const auto& m = *this;
    if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
    return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
           m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
  }

 private:
  // sum over n-subsets of terms of (prod w) |det[v ...]|^2
  S gram_det() const {
    using std::conj;
    S total(0.0);
    auto sq = [](const S& d) { return d * conj(d); };
    if (n == 1) {
      for (int i = 0; i < terms; ++i) total += tw[i] * sq(tv[i][0]);
    } else if (n == 2) {
      for (int i = 0; i < terms; ++i)
        for (int j = i + 1; j < terms; ++j)
          total += tw[i] * tw[j] * sq(tv[i][0] * tv[j][1] - tv[i][1] * tv[j][0]);
    } else {
      for (int i = 0; i < terms; ++i)
        for (int j = i + 1; j < terms; ++j)
          for (int k = j + 1; k < terms; ++k) {
            const auto &x = tv[i], &y = tv[j], &z = tv[k];
            const S d = x[0] * (y[1] * z[2] - y[2] * z[1]) - y[0] * (x[1] * z[2] - x[2] * z[1]) +
                        z[0] * (x[1] * y[2] - x[2] * y[1]);
            total += tw[i] * tw[j] * tw[k] * sq(d);
          }
    }
    return total;
  }
};

// (z, v) -> (z + translation, N(z) v) with N holomorphic and invertible.
struct DeckAction {
  cplx translation;
  std::function<Eigen::MatrixXcd(cplx)> fiber;
  std::function<Eigen::MatrixXcd(cplx)> fiber_dz;
  std::string label;

  Eigen::VectorXcd apply(const Eigen::VectorXcd& p) const;
  Eigen::MatrixXcd jacobian(const Eigen::VectorXcd& p) const;
};

// Hermitian metric g_{i jbar} on C^n with its deck group. Evaluation is pure.
class MetricField {
 public:
  using ValueFn = std::function<CoeffMatrix<cplx>(const cplx*)>;
  using JetFn = std::function<CoeffMatrix<Jet>(const Jet*)>;

  MetricField(int dim, std::string label, ValueFn value, JetFn jet, std::vector<DeckAction> deck);

  // F is a generic callable: (const S* coords) -> CoeffMatrix<S>.
  template <class F>
  static MetricField generic(int dim, std::string label, F f, std::vector<DeckAction> deck = {}) {
    return MetricField(
        dim, std::move(label), [f](const cplx* z) { return f(z); }, [f](const Jet* z) { return f(z); },
        std::move(deck));
  }

  int dim() const { return dim_; }
  const std::string& label() const { return label_; }
  const std::vector<DeckAction>& deck() const { return deck_; }
  bool has_jet() const { return static_cast<bool>(jet_); }

  Eigen::MatrixXcd operator()(const Eigen::VectorXcd& p) const;
  CoeffMatrix<cplx> coeffs(const cplx* z) const { return value_(z); }
  CoeffMatrix<Jet> coeffs(const Jet* z) const { return jet_(z); }

 private:
  int dim_;
  std::string label_;
  ValueFn value_;
  JetFn jet_;
  std::vector<DeckAction> deck_;
};

struct HolomorphicMap {
  std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)> map;
  std::function<Eigen::MatrixXcd(const Eigen::VectorXcd&)> jacobian;  // optional

  static HolomorphicMap from(const DeckAction& d);
};

// Central-difference complex Jacobian along real directions (valid for holomorphic maps).
Eigen::MatrixXcd numeric_jacobian(const HolomorphicMap& phi, const Eigen::VectorXcd& p, double h = 1e-4);

struct PullbackResult {
  Eigen::MatrixXcd value;
  bool singular_jacobian = false;
};

// J^T g(phi(p)) conj(J), i.e. (phi^* g)_{i jbar}.
PullbackResult pullback(const MetricField& g, const HolomorphicMap& phi, const Eigen::VectorXcd& p);

MetricField build_euclidean(int n);
MetricField build_flat_typeI(const LineBundleAH& l1, const LineBundleAH& l2);
MetricField build_typeII_metric(const LineBundleAH& l1, const LineBundleAH& l2);
MetricField build_typeIII_metric(cplx b1, cplx b2, const AnglePair& theta, const Tau& tau);
// (b1, b2) = (1, conj tau)
MetricField build_gaugenspe(const AnglePair& theta, const Tau& tau);
// Metric attached to a bundle: flat (I), Type II form (II), Gaugen (III).
MetricField build_metric_for(const Rank2Bundle& e);

DeckAction line_pair_deck(const LineBundleAH& l1, const LineBundleAH& l2, long m, long n, std::string label);
DeckAction representation_deck(const AnglePair& theta, cplx b1, cplx b2, const Tau& tau, long m, long n,
                               std::string label);

// Random points with base in {s + t tau : s,t in [0,1]} and fiber coordinates
// uniform in the ball of the given radius.
std::vector<Eigen::VectorXcd> sample_points(int n, const Tau& tau, int count, std::uint64_t seed,
                                            double fiber_radius = 10.0);

}  // namespace bundlelab
