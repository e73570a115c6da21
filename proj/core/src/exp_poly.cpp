#include "bundlelab/exp_poly.hpp"

#include <cmath>
#include <sstream>

namespace bundlelab {

namespace {

constexpr double kRateMatch = 1e-14;

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void put_complex(std::ostringstream& os, cplx c) {
  if (c.imag() == 0.0) {
    os << c.real();
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  }
}

}  // namespace

void ExpPoly::add(cplx c, int power, cplx rate) {
  if (c == 0.0) return;
  for (auto it = terms_.begin(); it != terms_.end(); ++it) {
    if (it->power == power && std::abs(it->rate - rate) <= kRateMatch * (1.0 + std::abs(rate))) {
      it->coeff += c;
      if (it->coeff == 0.0) terms_.erase(it);
      return;
    }
  }
  terms_.push_back({c, power, rate});
}

cplx ExpPoly::operator()(cplx z) const {
  cplx s = 0.0;
  for (const auto& t : terms_) {
    cplx v = t.coeff * std::exp(t.rate * z);
    if (t.power > 0) v *= std::pow(z, t.power);
    s += v;
  }
  return s;
}

ExpPoly ExpPoly::substitute(cplx a, cplx b) const {
  // c (a z + b)^k e^{kappa b} e^{kappa a z}
  ExpPoly out;
  for (const auto& t : terms_) {
    const cplx shift = t.coeff * std::exp(t.rate * b);
    for (int j = 0; j <= t.power; ++j) {
      const cplx c = shift * double(binomial(t.power, j)) * std::pow(a, j) * std::pow(b, t.power - j);
      out.add(c, j, t.rate * a);
    }
  }
  return out;
}

ExpPoly operator+(const ExpPoly& x, const ExpPoly& y) {
  ExpPoly out = x;
  for (const auto& t : y.terms_) out.add(t.coeff, t.power, t.rate);
  return out;
}

ExpPoly operator-(const ExpPoly& x, const ExpPoly& y) {
  ExpPoly out = x;
  for (const auto& t : y.terms_) out.add(-t.coeff, t.power, t.rate);
  return out;
}

ExpPoly operator*(const ExpPoly& x, const ExpPoly& y) {
  ExpPoly out;
  for (const auto& s : x.terms_)
    for (const auto& t : y.terms_) out.add(s.coeff * t.coeff, s.power + t.power, s.rate + t.rate);
  return out;
}

std::string ExpPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  os.precision(6);
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    put_complex(os, t.coeff);
    if (t.power == 1) os << "*z";
    if (t.power > 1) os << "*z^" << t.power;
    if (t.rate != 0.0) {
      os << "*exp(";
      put_complex(os, t.rate);
      os << "*z)";
    }
  }
  return os.str();
}

}  // namespace bundlelab
