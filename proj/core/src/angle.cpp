#include "bundlelab/angle.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bundlelab {

namespace {

constexpr double kCancelTol = 1e-12;

__extension__ typedef __int128 wide;

double wrap_unit(double x) {
  double r = x - std::floor(x);
  if (r >= 1.0) r = 0.0;
  return r;
}

// distance from x to the nearest integer
double frac_distance(double x) { return std::abs(x - std::round(x)); }

}  // namespace

AngleParam AngleParam::rational(long num, long den) {
  if (den == 0) throw std::invalid_argument("AngleParam: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  num %= den;
  if (num < 0) num += den;
  const long g = std::gcd(num, den);
  AngleParam a;
  a.rational_ = true;
  a.num_ = num / g;
  a.den_ = den / g;
  return a;
}

AngleParam AngleParam::irrational(double approx) {
  if (!std::isfinite(approx)) throw std::invalid_argument("AngleParam: non-finite value");
  AngleParam a;
  a.rational_ = false;
  a.num_ = 0;
  a.den_ = 1;
  a.approx_ = wrap_unit(approx);
  return a;
}

double AngleParam::value() const {
  return rational_ ? static_cast<double>(num_) / static_cast<double>(den_) : approx_;
}

AngleParam AngleParam::times(long k) const {
  if (rational_) {
    const wide n = static_cast<wide>(num_) * k % den_;
    return rational(static_cast<long>(n), den_);
  }
  if (k == 0) return zero();
  return irrational(approx_ * static_cast<double>(k));
}

AngleParam operator+(const AngleParam& x, const AngleParam& y) {
  if (x.rational_ && y.rational_) {
    const long g = std::gcd(x.den_, y.den_);
    const wide den = static_cast<wide>(x.den_ / g) * y.den_;
    const wide num = static_cast<wide>(x.num_) * (y.den_ / g) +
                         static_cast<wide>(y.num_) * (x.den_ / g);
    if (den > static_cast<wide>(1) << 62) throw std::overflow_error("AngleParam: denominator overflow");
    return AngleParam::rational(static_cast<long>(num % den), static_cast<long>(den));
  }
  const double s = x.value() + y.value();
  if (!x.rational_ && !y.rational_ && frac_distance(s) < kCancelTol) return AngleParam::zero();
  return AngleParam::irrational(s);
}

bool operator==(const AngleParam& x, const AngleParam& y) {
  if (x.rational_ != y.rational_) return false;
  if (x.rational_) return x.num_ == y.num_ && x.den_ == y.den_;
  return frac_distance(x.approx_ - y.approx_) < kCancelTol;
}

std::string AngleParam::to_string() const {
  std::ostringstream os;
  if (rational_) {
    os << num_ << "/" << den_;
  } else {
    os.precision(17);
    os << "irr(" << approx_ << ")";
  }
  return os.str();
}

AngleParam combine(long p, const AngleParam& x, long q, const AngleParam& y) {
  return x.times(p) + y.times(q);
}

}  // namespace bundlelab
