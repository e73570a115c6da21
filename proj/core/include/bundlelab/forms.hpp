#pragma once

#include <bit>
#include <map>

#include "bundlelab/metric.hpp"

namespace bundlelab {

// Sign of e_A ^ e_B relative to e_{A|B}, generators ordered by bit index.
int wedge_sign(unsigned a, unsigned b);

// Complex differential form on C^n: generator i < n is dz_i, n + j is dzbar_j.
template <class S>
struct Form {
  int n = 0;
  std::map<unsigned, S> coeff;

  Form wedge(const Form& o) const {
    Form r{n, {}};
    for (const auto& [ma, ca] : coeff)
      for (const auto& [mb, cb] : o.coeff) {
        if (ma & mb) continue;
        const S v = ca * cb * S(double(wedge_sign(ma, mb)));
        auto it = r.coeff.find(ma | mb);
        if (it == r.coeff.end()) r.coeff.emplace(ma | mb, v);
        else it->second += v;
      }
    return r;
  }
};

// omega = i sum g_{i jbar} dz_i ^ dzbar_j
template <class S>
Form<S> kahler_form(const CoeffMatrix<S>& g) {
  Form<S> w{g.n, {}};
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j) w.coeff[(1u << i) | (1u << (g.n + j))] = S(kI) * g(i, j);
  return w;
}

inline unsigned top_mask(int n) { return (1u << (2 * n)) - 1u; }

// Coefficient of e_full in omega_0^n / n! for the Euclidean omega_0.
cplx euclidean_volume_coefficient(int n);

}  // namespace bundlelab
