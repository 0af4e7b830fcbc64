#pragma once

#include <gmpxx.h>

#include <ostream>
#include <stdexcept>
#include <string>

namespace gsn {

using BigInt = mpz_class;

// Exact rational, always kept in lowest terms with a positive denominator.
class BigRational {
 public:
  BigRational() : v_(0) {}
  BigRational(long n) : v_(n) {}  // NOLINT: implicit on purpose
  BigRational(const BigInt& n) : v_(n) {}
  BigRational(const BigInt& num, const BigInt& den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("BigRational: zero denominator");
    v_.canonicalize();
  }
  BigRational(long num, long den) : BigRational(BigInt(num), BigInt(den)) {}

  // Accepts "p" or "p/q" in base 10.
  static BigRational from_string(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
    if (v.get_den() == 0) throw std::invalid_argument("BigRational: zero denominator in '" + s + "'");
    v.canonicalize();
    BigRational r;
    r.v_ = v;
    return r;
  }

  BigInt numerator() const { return v_.get_num(); }
  BigInt denominator() const { return v_.get_den(); }
  int sign() const { return sgn(v_); }

  // "p" when the denominator is 1, otherwise "p/q".
  std::string str() const { return v_.get_str(); }
  // Correctly scaled even when numerator/denominator individually overflow.
  double to_double() const { return v_.get_d(); }

  friend BigRational operator+(const BigRational& a, const BigRational& b) { return wrap(a.v_ + b.v_); }
  friend BigRational operator-(const BigRational& a, const BigRational& b) { return wrap(a.v_ - b.v_); }
  friend BigRational operator*(const BigRational& a, const BigRational& b) { return wrap(a.v_ * b.v_); }
  friend BigRational operator/(const BigRational& a, const BigRational& b) {
    if (b.v_ == 0) throw std::invalid_argument("BigRational: division by zero");
    return wrap(a.v_ / b.v_);
  }
  BigRational operator-() const { return wrap(-v_); }
  BigRational& operator+=(const BigRational& o) { v_ += o.v_; return *this; }
  BigRational& operator-=(const BigRational& o) { v_ -= o.v_; return *this; }
  BigRational& operator*=(const BigRational& o) { v_ *= o.v_; return *this; }
  BigRational& operator/=(const BigRational& o) { *this = *this / o; return *this; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const BigRational& a, const BigRational& b) { return a.v_ != b.v_; }
  friend bool operator<(const BigRational& a, const BigRational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const BigRational& a, const BigRational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const BigRational& a, const BigRational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const BigRational& a, const BigRational& b) { return a.v_ >= b.v_; }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  static BigRational wrap(const mpq_class& v) {
    BigRational r;
    r.v_ = v;  // gmp arithmetic preserves canonical form
    return r;
  }
  mpq_class v_;
};

inline BigRational abs(const BigRational& r) { return r.sign() < 0 ? -r : r; }

inline BigInt pow2(unsigned long k) { return BigInt(1) << k; }

inline BigRational rational_pow(const BigRational& base, long e) {
  if (e < 0) return BigRational(1) / rational_pow(base, -e);
  BigRational acc(1), b = base;
  for (long m = e; m > 0; m >>= 1) {
    if (m & 1) acc *= b;
    if (m > 1) b *= b;
  }
  return acc;
}

}  // namespace gsn
