#include "lfw/field.hpp"

#include <algorithm>
#include <numbers>

namespace lfw {

namespace {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

using Poly = std::vector<unsigned>;  // lowest degree first, over F_p

int degree(const Poly& f) {
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i)
    if (f[i] != 0) return i;
  return -1;
}

// Remainder of f modulo monic g over F_p.
Poly poly_mod(Poly f, const Poly& g, unsigned p) {
  int dg = degree(g);
  for (int i = degree(f); i >= dg; i = degree(f)) {
    unsigned coef = f[i];
    for (int k = 0; k <= dg; ++k) {
      unsigned sub = (coef * g[k]) % p;
      unsigned& slot = f[i - dg + k];
      slot = (slot + p - sub) % p;
    }
  }
  f.resize(std::max(dg, 1));
  return f;
}

bool divides(const Poly& g, const Poly& f, unsigned p) {
  Poly r = poly_mod(f, g, p);
  return degree(r) < 0;
}

// Brute-force irreducibility: no monic factor of degree 1..c/2.
bool is_irreducible(const Poly& f, unsigned p, unsigned c) {
  for (unsigned d = 1; 2 * d <= c; ++d) {
    // enumerate monic polynomials of degree d
    unsigned long long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned long long code = 0; code < count; ++code) {
      Poly g(d + 1, 0);
      unsigned long long rest = code;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<unsigned>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (divides(g, f, p)) return false;
    }
  }
  return true;
}

Poly unpack(unsigned v, unsigned p, unsigned c) {
  Poly f(c, 0);
  for (unsigned k = 0; k < c; ++k) {
    f[k] = v % p;
    v /= p;
  }
  return f;
}

unsigned pack(const Poly& f, unsigned p) {
  unsigned v = 0;
  for (int i = static_cast<int>(f.size()) - 1; i >= 0; --i) v = v * p + f[i];
  return v;
}

}  // namespace

FieldParams::FieldParams(unsigned p, unsigned c, std::vector<unsigned> modulus)
    : p_(p), c_(c), modulus_(std::move(modulus)) {
  if (!is_prime(p_)) throw domain_error("p = " + std::to_string(p_) + " is not prime");
  if (c_ == 0) throw domain_error("c must be positive");
  unsigned long long q = 1;
  for (unsigned i = 0; i < c_; ++i) q *= p_;
  if (q > 1024) throw domain_error("q = p^c too large for table construction");
  q_ = static_cast<unsigned>(q);

  if (modulus_.size() != c_ + 1)
    throw domain_error("modulus must have c+1 digits");
  for (unsigned d : modulus_)
    if (d >= p_) throw domain_error("modulus digit >= p");
  if (modulus_.back() != 1) throw domain_error("modulus must be monic");
  if (!is_irreducible(modulus_, p_, c_))
    throw domain_error("modulus is reducible over F_p");

  add_.resize(static_cast<size_t>(q_) * q_);
  mul_.resize(static_cast<size_t>(q_) * q_);
  neg_.resize(q_);
  for (unsigned a = 0; a < q_; ++a) {
    Poly fa = unpack(a, p_, c_);
    Poly na(c_);
    for (unsigned k = 0; k < c_; ++k) na[k] = (p_ - fa[k]) % p_;
    neg_[a] = pack(na, p_);
    for (unsigned b = 0; b < q_; ++b) {
      Poly fb = unpack(b, p_, c_);
      Poly sum(c_);
      for (unsigned k = 0; k < c_; ++k) sum[k] = (fa[k] + fb[k]) % p_;
      add_[a * q_ + b] = pack(sum, p_);
      Poly prod(2 * c_ - 1, 0);
      for (unsigned i = 0; i < c_; ++i)
        for (unsigned j = 0; j < c_; ++j)
          prod[i + j] = (prod[i + j] + fa[i] * fb[j]) % p_;
      Poly red = poly_mod(prod, modulus_, p_);
      red.resize(c_, 0);
      mul_[a * q_ + b] = pack(red, p_);
    }
  }
}

ParamsPtr FieldParams::make(unsigned p, unsigned c, const std::vector<unsigned>& modulus) {
  return ParamsPtr(new FieldParams(p, c, modulus));
}

ParamsPtr FieldParams::make(unsigned p, unsigned c) {
  struct Default {
    unsigned p, c;
    std::vector<unsigned> modulus;
  };
  static const Default defaults[] = {
      {2, 1, {0, 1}},        // X
      {3, 1, {0, 1}},        // X
      {5, 1, {0, 1}},        // X
      {2, 2, {1, 1, 1}},     // X^2 + X + 1
      {2, 3, {1, 1, 0, 1}},  // X^3 + X + 1
  };
  for (const auto& d : defaults)
    if (d.p == p && d.c == c) return make(p, c, d.modulus);
  throw domain_error("no shipped default modulus for (p,c) = (" + std::to_string(p) +
                     "," + std::to_string(c) + "); supply one explicitly");
}

std::string FieldParams::modulus_str() const {
  std::string s;
  for (size_t i = 0; i < modulus_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(modulus_[i]);
  }
  return s;
}

void require_same_params(const ParamsPtr& a, const ParamsPtr& b) {
  if (!a || !b || !a->same(*b))
    throw structural_error("field parameters mismatch");
}

FieldElement FieldElement::monomial(ParamsPtr params, unsigned gf_value, int exponent) {
  FieldElement e(std::move(params));
  e.set_digit(exponent, gf_value);
  return e;
}

std::optional<int> FieldElement::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

unsigned FieldElement::digit(int index) const {
  auto it = terms_.find(index);
  return it == terms_.end() ? 0u : it->second;
}

void FieldElement::set_digit(int index, unsigned value) {
  if (value == 0)
    terms_.erase(index);
  else
    terms_[index] = value;
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  require_same_params(params_, o.params_);
  FieldElement r = *this;
  for (const auto& [idx, v] : o.terms_)
    r.set_digit(idx, params_->gf_add(r.digit(idx), v));
  return r;
}

FieldElement FieldElement::operator-() const {
  FieldElement r(params_);
  for (const auto& [idx, v] : terms_) r.terms_[idx] = params_->gf_neg(v);
  return r;
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  require_same_params(params_, o.params_);
  FieldElement r(params_);
  for (const auto& [i, a] : terms_)
    for (const auto& [j, b] : o.terms_) {
      unsigned prod = params_->gf_mul(a, b);
      if (prod) r.set_digit(i + j, params_->gf_add(r.digit(i + j), prod));
    }
  return r;
}

FieldElement FieldElement::shifted(int j) const {
  FieldElement r(params_);
  for (const auto& [idx, v] : terms_) r.terms_[idx + j] = v;
  return r;
}

FieldElement FieldElement::truncated(int lo, int hi) const {
  FieldElement r(params_);
  for (const auto& [idx, v] : terms_)
    if (idx >= lo && idx < hi) r.terms_[idx] = v;
  return r;
}

int FieldElement::compare(const FieldElement& a, const FieldElement& b) {
  auto ia = a.terms_.begin(), ib = b.terms_.begin();
  while (ia != a.terms_.end() || ib != b.terms_.end()) {
    if (ib == b.terms_.end() || (ia != a.terms_.end() && ia->first < ib->first))
      return 1;  // a has a nonzero digit where b has 0
    if (ia == a.terms_.end() || ib->first < ia->first) return -1;
    if (ia->second != ib->second) return ia->second < ib->second ? -1 : 1;
    ++ia;
    ++ib;
  }
  return 0;
}

std::string FieldElement::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  unsigned p = params_->p(), c = params_->c();
  for (const auto& [idx, v] : terms_) {
    if (!s.empty()) s += " + ";
    s += "(";
    unsigned rest = v;
    for (unsigned k = 0; k < c; ++k) {
      if (k) s += ",";
      s += std::to_string(rest % p);
      rest /= p;
    }
    s += ")@" + std::to_string(idx);
  }
  return s;
}

std::complex<double> RootOfUnity::value() const {
  if (exponent == 0) return {1.0, 0.0};
  double angle = 2.0 * std::numbers::pi * static_cast<double>(exponent) /
                 static_cast<double>(p);
  return {std::cos(angle), std::sin(angle)};
}

FieldElement u_map(const ParamsPtr& params, unsigned long long n) {
  FieldElement e(params);
  unsigned q = params->q();
  int index = -1;
  while (n > 0) {
    unsigned digit = static_cast<unsigned>(n % q);
    if (digit) e.terms_[index] = digit;
    n /= q;
    --index;
  }
  return e;
}

unsigned long long u_inverse(const FieldElement& x) {
  unsigned long long n = 0;
  unsigned q = x.params()->q();
  for (auto it = x.terms().rbegin(); it != x.terms().rend(); ++it) {
    const auto& [idx, v] = *it;
    if (idx >= 0)
      throw domain_error("u_inverse: element has a digit at index >= 0");
    if (idx < -21) throw domain_error("u_inverse: index out of range");
    unsigned long long place = 1;
    for (int k = 0; k < -idx - 1; ++k) place *= q;
    n += place * v;
  }
  return n;
}

RootOfUnity chi(const FieldElement& x) {
  return {x.params()->p(), x.params()->eps0(x.digit(-1))};
}

RootOfUnity chi_pair(const FieldElement& y, const FieldElement& x) {
  require_same_params(y.params(), x.params());
  const FieldParams& P = *y.params();
  unsigned acc = 0;  // digit of y*x at index -1
  for (const auto& [i, a] : y.terms()) {
    unsigned b = x.digit(-1 - i);
    if (b) acc = P.gf_add(acc, P.gf_mul(a, b));
  }
  return {P.p(), P.eps0(acc)};
}

std::vector<FieldElement> enumerate_translations(const ParamsPtr& params, unsigned k) {
  unsigned long long count = 1;
  for (unsigned i = 0; i < k; ++i) {
    count *= params->q();
    if (count > 2'000'000ULL)
      throw domain_error("enumerate_translations: q^k too large");
  }
  std::vector<FieldElement> out;
  out.reserve(static_cast<size_t>(count));
  for (unsigned long long n = 0; n < count; ++n) out.push_back(u_map(params, n));
  return out;
}

}  // namespace lfw
