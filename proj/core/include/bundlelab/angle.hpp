#pragma once

#include <string>

namespace bundlelab {

// theta in [0,1), either exactly rational or tagged irrational.
class AngleParam {
 public:
  static AngleParam rational(long num, long den);
  static AngleParam irrational(double approx);
  static AngleParam zero() { return rational(0, 1); }

  bool is_rational() const { return rational_; }
  bool is_zero() const { return rational_ && num_ == 0; }
  long numerator() const { return num_; }
  long denominator() const { return den_; }
  double value() const;

  AngleParam operator-() const { return times(-1); }
  AngleParam times(long k) const;
  friend AngleParam operator+(const AngleParam& x, const AngleParam& y);
  friend AngleParam operator-(const AngleParam& x, const AngleParam& y) { return x + (-y); }

  // Rational: exact. Irrational: approximations agree mod 1 within 1e-12.
  friend bool operator==(const AngleParam& x, const AngleParam& y);

  std::string to_string() const;

 private:
  AngleParam() = default;
  bool rational_ = true;
  long num_ = 0, den_ = 1;
  double approx_ = 0.0;
};

// p*x + q*y mod 1
AngleParam combine(long p, const AngleParam& x, long q, const AngleParam& y);

}  // namespace bundlelab
