#pragma once

#include <cstdint>
#include <string>

#include "lfw/errors.hpp"

namespace lfw {

using int128 = __int128;

namespace detail {

inline int128 abs128(int128 x) { return x < 0 ? -x : x; }

inline int128 gcd128(int128 a, int128 b) {
  a = abs128(a);
  b = abs128(b);
  while (b != 0) {
    int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::string int128_str(int128 v);

}  // namespace detail

// Exact rational on 128-bit integers, always normalized with den > 0.
// Every denominator in this project is a power of q <= 8 with small
// exponent, far inside the representable range.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}  // NOLINT: implicit by design
  Rational(int128 num, int128 den) : num_(num), den_(den) {
    if (den_ == 0) throw domain_error("rational with zero denominator");
    normalize();
  }

  int128 num() const { return num_; }
  int128 den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }

  long long as_integer() const {
    if (den_ != 1) throw domain_error("rational is not an integer: " + str());
    return static_cast<long long>(num_);
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    int128 g = detail::gcd128(a.den_, b.den_);
    int128 den = a.den_ / g * b.den_;
    return Rational(a.num_ * (den / a.den_) + b.num_ * (den / b.den_), den);
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return a + (-b);
  }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.num_ = -a.num_;
    r.den_ = a.den_;
    return r;
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    int128 g1 = detail::gcd128(a.num_, b.den_);
    int128 g2 = detail::gcd128(b.num_, a.den_);
    Rational r;
    r.num_ = (a.num_ / g1) * (b.num_ / g2);
    r.den_ = (a.den_ / g2) * (b.den_ / g1);
    return r;
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw domain_error("rational division by zero");
    Rational inv;
    inv.num_ = b.den_;
    inv.den_ = b.num_;
    if (inv.den_ < 0) {
      inv.num_ = -inv.num_;
      inv.den_ = -inv.den_;
    }
    return a * inv;
  }

  Rational& operator+=(const Rational& x) { return *this = *this + x; }
  Rational& operator-=(const Rational& x) { return *this = *this - x; }
  Rational& operator*=(const Rational& x) { return *this = *this * x; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) {
    return !(a == b);
  }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) {
    return !(b < a);
  }
  friend bool operator>=(const Rational& a, const Rational& b) {
    return !(a < b);
  }

  // base^exp for integer base >= 2, exp of either sign.
  static Rational power(long long base, long long exp) {
    Rational r = 1;
    Rational x = exp >= 0 ? Rational(base) : Rational(1, base);
    unsigned long long e = exp >= 0 ? exp : -exp;
    while (e > 0) {
      if (e & 1) r *= x;
      x *= x;
      e >>= 1;
    }
    return r;
  }

  // floor(a / b) for b > 0.
  static long long floor_div(const Rational& a, const Rational& b) {
    if (!(b > Rational(0))) throw domain_error("floor_div needs positive divisor");
    Rational q = a / b;
    int128 d = q.num_ / q.den_;
    if (q.num_ < 0 && q.num_ % q.den_ != 0) d -= 1;
    return static_cast<long long>(d);
  }

  std::string str() const {
    return detail::int128_str(num_) + "/" + detail::int128_str(den_);
  }

  double to_double() const {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

 private:
  void normalize() {
    if (den_ < 0) {
      num_ = -num_;
      den_ = -den_;
    }
    int128 g = detail::gcd128(num_, den_);
    if (g > 1) {
      num_ /= g;
      den_ /= g;
    }
    if (num_ == 0) den_ = 1;
  }

  int128 num_ = 0;
  int128 den_ = 1;
};

// A nonnegative exact quantity that may diverge. Addition treats the
// infinite value as absorbing.
class ExtendedRational {
 public:
  ExtendedRational() = default;
  ExtendedRational(Rational v) : value_(v) {}  // NOLINT: implicit by design
  static ExtendedRational infinite() {
    ExtendedRational e;
    e.infinite_ = true;
    return e;
  }

  bool is_infinite() const { return infinite_; }
  const Rational& finite_value() const {
    if (infinite_) throw domain_error("value is infinite");
    return value_;
  }

  ExtendedRational& operator+=(const ExtendedRational& o) {
    if (o.infinite_) infinite_ = true;
    if (!infinite_) value_ += o.value_;
    return *this;
  }
  friend ExtendedRational operator+(ExtendedRational a, const ExtendedRational& b) {
    a += b;
    return a;
  }
  friend bool operator==(const ExtendedRational& a, const ExtendedRational& b) {
    if (a.infinite_ != b.infinite_) return false;
    return a.infinite_ || a.value_ == b.value_;
  }

  std::string str() const { return infinite_ ? "inf" : value_.str(); }

 private:
  bool infinite_ = false;
  Rational value_;
};

namespace detail {

inline std::string int128_str(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1
                            : static_cast<unsigned __int128>(v);
  std::string s;
  while (u > 0) {
    s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
    u /= 10;
  }
  if (neg) s.push_back('-');
  return std::string(s.rbegin(), s.rend());
}

}  // namespace detail

}  // namespace lfw
