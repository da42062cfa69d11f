#include "dio/fp.hpp"

namespace dio {

namespace {

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t p) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % p);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

uint64_t fp_inv(uint64_t a, uint64_t p) {
  if (a % p == 0) throw domain_error("inverse of zero mod p");
  return powmod(a % p, p - 2, p);
}

FpPoly fp_reduce(const UniPoly& f, uint64_t p) {
  FpPoly r;
  r.p = p;
  r.c.reserve(f.coeffs().size());
  for (const Rational& q : f.coeffs()) {
    Integer den = q.denominator();
    if (mpz_fdiv_ui(den.get_mpz_t(), p) == 0)
      throw domain_error("coefficient denominator not invertible mod p");
    uint64_t n = mpz_fdiv_ui(q.numerator().get_mpz_t(), p);
    uint64_t d = mpz_fdiv_ui(den.get_mpz_t(), p);
    r.c.push_back(mulmod(n, fp_inv(d, p), p));
  }
  r.trim();
  return r;
}

FpPoly fp_monic(const FpPoly& f) {
  if (f.is_zero()) return f;
  uint64_t inv = fp_inv(f.c.back(), f.p);
  FpPoly r = f;
  for (auto& x : r.c) x = mulmod(x, inv, f.p);
  return r;
}

FpPoly fp_mul(const FpPoly& a, const FpPoly& b) {
  FpPoly r;
  r.p = a.p;
  if (a.is_zero() || b.is_zero()) return r;
  r.c.assign(a.c.size() + b.c.size() - 1, 0);
  for (size_t i = 0; i < a.c.size(); ++i)
    for (size_t j = 0; j < b.c.size(); ++j)
      r.c[i + j] = (r.c[i + j] + static_cast<__uint128_t>(a.c[i]) * b.c[j]) % a.p;
  r.trim();
  return r;
}

std::pair<FpPoly, FpPoly> fp_divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw domain_error("polynomial division by zero mod p");
  const uint64_t p = a.p;
  FpPoly rem = a, quot;
  quot.p = p;
  if (a.degree() >= b.degree()) quot.c.assign(a.degree() - b.degree() + 1, 0);
  uint64_t inv = fp_inv(b.c.back(), p);
  while (!rem.is_zero() && rem.degree() >= b.degree()) {
    size_t shift = rem.degree() - b.degree();
    uint64_t f = mulmod(rem.c.back(), inv, p);
    quot.c[shift] = f;
    for (size_t i = 0; i < b.c.size(); ++i) {
      uint64_t sub = mulmod(f, b.c[i], p);
      uint64_t& tgt = rem.c[shift + i];
      tgt = (tgt + p - sub) % p;
    }
    rem.trim();
  }
  quot.trim();
  return {quot, rem};
}

FpPoly fp_gcd(FpPoly a, FpPoly b) {
  while (!b.is_zero()) {
    FpPoly r = fp_divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return fp_monic(a);
}

FpPoly fp_derivative(const FpPoly& f) {
  FpPoly r;
  r.p = f.p;
  if (f.c.size() <= 1) return r;
  r.c.assign(f.c.size() - 1, 0);
  for (size_t i = 1; i < f.c.size(); ++i)
    r.c[i - 1] = mulmod(f.c[i], i % f.p, f.p);
  r.trim();
  return r;
}

FpPoly fp_radical(const FpPoly& f_in) {
  FpPoly f = fp_monic(f_in);
  const uint64_t p = f.p;
  FpPoly one;
  one.p = p;
  one.c = {1};
  if (f.degree() <= 0) return one;
  FpPoly d = fp_derivative(f);
  if (d.is_zero()) {
    // f = g(x^p); over F_p the coefficients are Frobenius-fixed, so the
    // radical of f is the radical of g with exponents divided by p
    FpPoly g;
    g.p = p;
    g.c.assign(f.degree() / p + 1, 0);
    for (size_t i = 0; i < g.c.size(); ++i) g.c[i] = f.c[i * p];
    return fp_radical(g);
  }
  FpPoly cpart = fp_gcd(f, d);
  FpPoly w = fp_divmod(f, cpart).first;  // distinct factors with mult not divisible by p
  // strip every factor shared with w from cpart; what remains is a p-th power
  FpPoly rest = cpart;
  while (true) {
    FpPoly g = fp_gcd(rest, w);
    if (g.degree() <= 0) break;
    rest = fp_divmod(rest, g).first;
  }
  return fp_mul(w, fp_radical(rest));
}

}  // namespace dio
