#include "bundlelab/forms.hpp"

namespace bundlelab {

int wedge_sign(unsigned a, unsigned b) {
  int swaps = 0;
  for (unsigned x = b; x; x &= x - 1) {
    const unsigned low = x & (~x + 1);
    // elements of a above this generator must move past it
    swaps += std::popcount(a & ~((low << 1) - 1));
  }
  return (swaps % 2) ? -1 : 1;
}

cplx euclidean_volume_coefficient(int n) {
  const Form<cplx> w = kahler_form(CoeffMatrix<cplx>::identity(n));
  Form<cplx> p = w;
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) {
    p = p.wedge(w);
    fact *= k;
  }
  return p.coeff.at(top_mask(n)) / fact;
}

}  // namespace bundlelab
