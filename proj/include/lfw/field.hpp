#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lfw/errors.hpp"
#include "lfw/rational.hpp"

namespace lfw {

class FieldParams;
using ParamsPtr = std::shared_ptr<const FieldParams>;

// Arithmetic tables for GF(q), q = p^c, in the polynomial basis
// eps_k = X^k modulo a supplied irreducible polynomial over F_p.
// An element is packed as v = sum digits[k] * p^k with digits in [0, p);
// digit k is its coordinate on eps_k, so eps_0 = 1 has packed value 1.
class FieldParams {
 public:
  // Shipped default modulus; defined for (p,c) in
  // {(2,1),(3,1),(2,2),(5,1),(2,3)}.
  static ParamsPtr make(unsigned p, unsigned c);
  static ParamsPtr make(unsigned p, unsigned c, const std::vector<unsigned>& modulus);

  unsigned p() const { return p_; }
  unsigned c() const { return c_; }
  unsigned q() const { return q_; }
  // c+1 digits, lowest degree first, monic.
  const std::vector<unsigned>& modulus() const { return modulus_; }

  unsigned gf_add(unsigned a, unsigned b) const { return add_[a * q_ + b]; }
  unsigned gf_mul(unsigned a, unsigned b) const { return mul_[a * q_ + b]; }
  unsigned gf_neg(unsigned a) const { return neg_[a]; }
  // Coordinate of eps_0 (used by the character).
  unsigned eps0(unsigned v) const { return v % p_; }

  bool same(const FieldParams& o) const {
    return p_ == o.p_ && c_ == o.c_ && modulus_ == o.modulus_;
  }

  std::string modulus_str() const;

 private:
  FieldParams(unsigned p, unsigned c, std::vector<unsigned> modulus);

  unsigned p_, c_, q_;
  std::vector<unsigned> modulus_;
  std::vector<unsigned> add_, mul_, neg_;
};

void require_same_params(const ParamsPtr& a, const ParamsPtr& b);

// An element of K = GF(q)((t)) with finite expansion sum a_n p^n,
// stored as a sparse map from exponent to nonzero packed GF(q) digit.
// All set descriptors, ball centers and translations u(n) are finite,
// so infinite tails never arise.
class FieldElement {
 public:
  explicit FieldElement(ParamsPtr params) : params_(std::move(params)) {}
  static FieldElement monomial(ParamsPtr params, unsigned gf_value, int exponent);

  const ParamsPtr& params() const { return params_; }
  bool is_zero() const { return terms_.empty(); }
  // Minimal stored index; nullopt for 0. The absolute value is
  // q^{-valuation}, |0| = 0.
  std::optional<int> valuation() const;
  unsigned digit(int index) const;
  const std::map<int, unsigned>& terms() const { return terms_; }

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator-(const FieldElement& o) const { return *this + (-o); }
  FieldElement operator*(const FieldElement& o) const;

  // Multiply by p^j (shift every exponent by j).
  FieldElement shifted(int j) const;
  // Keep only indices < scale (reduction modulo p^scale * D).
  FieldElement truncated_below(int scale) const { return truncated(INT32_MIN, scale); }
  FieldElement negative_part() const { return truncated(INT32_MIN, 0); }
  FieldElement nonnegative_part() const { return truncated(0, INT32_MAX); }

  bool operator==(const FieldElement& o) const {
    return params_->same(*o.params_) && terms_ == o.terms_;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  // Digit-string order, read from the most negative index, absent = 0.
  static int compare(const FieldElement& a, const FieldElement& b);

  // Center-expression syntax: "0" or "+"-joined monomials "(d0,..,dc-1)@k".
  std::string str() const;

 private:
  FieldElement truncated(int lo, int hi) const;  // keep lo <= index < hi
  void set_digit(int index, unsigned value);

  ParamsPtr params_;
  std::map<int, unsigned> terms_;

  friend FieldElement u_map(const ParamsPtr&, unsigned long long);
};

// e^{2*pi*i*exponent/p}; multiplication adds exponents mod p.
struct RootOfUnity {
  unsigned p;
  unsigned exponent;

  friend RootOfUnity operator*(const RootOfUnity& a, const RootOfUnity& b) {
    return {a.p, (a.exponent + b.exponent) % a.p};
  }
  RootOfUnity inverse() const { return {p, (p - exponent) % p}; }
  bool is_one() const { return exponent == 0; }
  std::complex<double> value() const;
  bool operator==(const RootOfUnity& o) const {
    return p == o.p && exponent == o.exponent;
  }
};

// The translation map: base-q digits of n, placed at negative indices.
// u(n) = sum_k b_k p^{-k-1} for n = sum_k b_k q^k.
FieldElement u_map(const ParamsPtr& params, unsigned long long n);

// Inverse of u_map on expansions supported on indices <= -1.
unsigned long long u_inverse(const FieldElement& x);

// The canonical character: chi(x) = e^{2 pi i a / p} where a is the
// eps_0-coordinate of the digit of x at index -1. Trivial on D,
// non-trivial on B^{-1}.
RootOfUnity chi(const FieldElement& x);

// chi_y(x) = chi(y x), evaluated without forming the full product.
RootOfUnity chi_pair(const FieldElement& y, const FieldElement& x);

// u(0), ..., u(q^k - 1): exactly the expansions supported on [-k, -1].
std::vector<FieldElement> enumerate_translations(const ParamsPtr& params, unsigned k);

}  // namespace lfw
