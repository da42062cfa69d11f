#include "dio/padic.hpp"

#include <algorithm>

namespace dio {

namespace {

Integer p_pow(long p, long e) {
  if (e < 0) throw domain_error("negative modulus exponent");
  return pow(Integer(p), static_cast<unsigned long>(e));
}

Integer inv_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw domain_error("not invertible at this modulus");
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

void PadicNumber::check() const {
  if (p_ < 2 || !is_prime(Integer(p_))) throw domain_error("p must be prime");
  if (prec_ < 1) throw domain_error("p-adic precision exhausted");
}

void PadicNumber::normalize() {
  Integer m = p_pow(p_, prec_ + shift_);
  rep_ = mod(rep_, m);
  if (rep_ == 0) {
    shift_ = 0;
    return;
  }
  while (shift_ > 0 && rep_ % p_ == 0) {
    rep_ /= p_;
    --shift_;
  }
}

void PadicNumber::require_same(const PadicNumber& a, const PadicNumber& b) {
  if (a.p_ != b.p_) throw domain_error("mixed p-adic primes");
}

PadicNumber PadicNumber::from_integer(long p, long prec, const Integer& v) {
  PadicNumber r(p, prec);
  r.rep_ = v;
  r.normalize();
  return r;
}

PadicNumber PadicNumber::from_rational(long p, long prec, const Rational& q) {
  if (q.is_zero()) return PadicNumber(p, prec);
  long vd = dio::valuation(q.denominator(), Integer(p));
  PadicNumber r(p, prec);
  r.shift_ = vd;
  Integer m = p_pow(p, prec + vd);
  Integer den_unit = q.denominator() / p_pow(p, vd);
  r.rep_ = mod(q.numerator(), m) * inv_mod(den_unit, m);
  r.normalize();
  return r;
}

long PadicNumber::valuation() const {
  if (rep_ == 0) return prec_;
  return dio::valuation(rep_, Integer(p_)) - shift_;
}

PadicNumber PadicNumber::operator-() const {
  PadicNumber r = *this;
  r.rep_ = -r.rep_;
  r.normalize();
  return r;
}

PadicNumber operator+(const PadicNumber& a, const PadicNumber& b) {
  PadicNumber::require_same(a, b);
  long s = std::max(a.shift_, b.shift_);
  long n = std::min(a.prec_, b.prec_);
  PadicNumber r(a.p_, n);
  r.shift_ = s;
  r.rep_ = a.rep_ * p_pow(a.p_, s - a.shift_) + b.rep_ * p_pow(a.p_, s - b.shift_);
  r.normalize();
  return r;
}

PadicNumber operator-(const PadicNumber& a, const PadicNumber& b) { return a + (-b); }

PadicNumber operator*(const PadicNumber& a, const PadicNumber& b) {
  PadicNumber::require_same(a, b);
  // value known mod p^min(v_a + N_b, v_b + N_a); valuations enter as the
  // provable lower bounds
  long va = a.valuation(), vb = b.valuation();
  long n = std::min(va + b.prec_, vb + a.prec_);
  PadicNumber r(a.p_, n);
  r.shift_ = a.shift_ + b.shift_;
  r.rep_ = mod(a.rep_ * b.rep_, p_pow(a.p_, n + r.shift_));
  r.normalize();
  return r;
}

PadicNumber PadicNumber::mul_rational(const Rational& q) const {
  if (q.is_zero()) {
    // exact zero: the product vanishes to at least prec + val
    return PadicNumber(p_, prec_ + std::max(0L, valuation()));
  }
  long vn = dio::valuation(q.numerator(), Integer(p_));
  long vd = dio::valuation(q.denominator(), Integer(p_));
  long new_prec = prec_ + vn - vd;  // absolute precision shifts by v_p(q)
  if (new_prec < 1) throw domain_error("p-adic precision exhausted");
  Integer num_unit = q.numerator() / p_pow(p_, vn);
  Integer den_unit = q.denominator() / p_pow(p_, vd);
  PadicNumber r(p_, new_prec);
  long s_new = shift_ + vd - vn;
  Integer extra = 1;
  if (s_new < 0) {
    extra = p_pow(p_, -s_new);
    s_new = 0;
  }
  r.shift_ = s_new;
  Integer m = p_pow(p_, r.prec_ + r.shift_);
  r.rep_ = mod(mod(rep_ * num_unit * extra, m) * inv_mod(den_unit, m), m);
  r.normalize();
  return r;
}

PadicNumber PadicNumber::div_unit(const PadicNumber& u) const {
  require_same(*this, u);
  if (u.valuation() != 0) throw domain_error("division requires a unit");
  // normalized unit: shift 0, rep coprime to p
  Integer m = p_pow(u.p_, u.prec_);
  PadicNumber inv(u.p_, u.prec_);
  inv.rep_ = inv_mod(mod(u.rep_, m), m);
  inv.normalize();
  return *this * inv;
}

PadicNumber PadicNumber::truncate(long new_prec) const {
  if (new_prec > prec_) throw domain_error("cannot raise p-adic precision");
  PadicNumber r(p_, new_prec);
  r.shift_ = shift_;
  r.rep_ = rep_;
  r.normalize();
  return r;
}

bool agree(const PadicNumber& a, const PadicNumber& b) {
  PadicNumber::require_same(a, b);
  long n = std::min(a.prec_, b.prec_);
  PadicNumber d = a - b;
  return d.truncate(n).is_zero_to_precision();
}

std::string PadicNumber::rep_string() const {
  if (shift_ == 0) return rep_.get_str();
  return rep_.get_str() + "/" + p_pow(p_, shift_).get_str();
}

std::string PadicNumber::to_string() const {
  return rep_string() + " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")";
}

PadicNumber padic_log(const PadicNumber& u) {
  const long p = u.prime();
  const long n = u.precision();
  PadicNumber t = u - PadicNumber::from_integer(p, n, 1);
  long min_v = p == 2 ? 2 : 1;
  if (!t.is_zero_to_precision() && t.valuation() < min_v)
    throw domain_error("outside the convergence disk of log");
  if (t.is_zero_to_precision()) return PadicNumber(p, n);

  // every term beyond k_max has valuation k*v(t) - v_p(k) >= k - log2(k) >= n
  const long k_max = n + 64;
  PadicNumber sum(p, n);
  PadicNumber tk = t;
  for (long k = 1; k <= k_max; ++k) {
    Rational c(Integer(k % 2 == 1 ? 1 : -1), Integer(k));
    sum = sum + tk.mul_rational(c);
    if (k < k_max) tk = tk * t;
  }
  return sum.truncate(std::min(n, sum.precision()));
}

DlogWord DlogWord::parse(const std::string& s) {
  std::vector<Letter> ls;
  for (char c : s) {
    if (c == '0')
      ls.push_back(w0);
    else if (c == '1')
      ls.push_back(w1);
    else
      throw domain_error("dlog word must consist of letters 0 and 1");
  }
  return DlogWord(std::move(ls));
}

std::vector<Rational> iterated_integral_series(const DlogWord& word, size_t max_degree) {
  std::vector<Rational> s(max_degree + 1, Rational(0));
  s[0] = Rational(1);
  for (auto it = word.letters.rbegin(); it != word.letters.rend(); ++it) {
    if (*it == DlogWord::w1) {
      // integral of s(t)/(1-t): prefix sums, then divide by the new degree
      std::vector<Rational> out(max_degree + 1, Rational(0));
      Rational acc(0);
      for (size_t k = 0; k + 1 <= max_degree; ++k) {
        acc += s[k];
        out[k + 1] = acc / Rational(Integer(k + 1));
      }
      s = std::move(out);
    } else {
      if (!s[0].is_zero()) throw domain_error("divergent at basepoint");
      // integral of s(t)/t: t^k -> t^k / k
      std::vector<Rational> out(max_degree + 1, Rational(0));
      for (size_t k = 1; k <= max_degree; ++k) out[k] = s[k] / Rational(Integer(k));
      s = std::move(out);
    }
  }
  return s;
}

namespace {

PadicNumber eval_series_at(const std::vector<Rational>& coeffs, const PadicNumber& z,
                           long target_prec) {
  PadicNumber sum(z.prime(), target_prec);
  PadicNumber zk = z;
  for (size_t k = 1; k < coeffs.size(); ++k) {
    if (!coeffs[k].is_zero()) sum = sum + zk.mul_rational(coeffs[k]);
    if (k + 1 < coeffs.size()) zk = zk * z;
  }
  return sum;
}

}  // namespace

PadicNumber iterated_integral(const DlogWord& word, const PadicNumber& z, long prec) {
  if (z.prime() == 2) throw domain_error("iterated integrals require an odd prime");
  if (!z.is_zero_to_precision() && z.valuation() < 1)
    throw domain_error("evaluation point must satisfy v(z) >= 1");
  if (z.is_zero_to_precision()) return PadicNumber(z.prime(), prec);
  const size_t m = word.length();
  const size_t max_deg = static_cast<size_t>(prec) + 64 * m;
  auto coeffs = iterated_integral_series(word, max_deg);
  PadicNumber sum = eval_series_at(coeffs, z, prec);
  return sum.truncate(std::min(prec, sum.precision()));
}

PadicNumber iterated_integral(const DlogWord& word, const Rational& z, long p, long prec) {
  if (z.is_zero()) {
    if (p == 2) throw domain_error("iterated integrals require an odd prime");
    return PadicNumber(p, prec);
  }
  long vz = valuation(z.numerator(), Integer(p)) - valuation(z.denominator(), Integer(p));
  if (vz < 1) throw domain_error("evaluation point must satisfy v(z) >= 1");
  // embed z with enough slack that the target precision survives the
  // denominators k^m of the series coefficients
  const size_t m = word.length();
  const size_t max_deg = static_cast<size_t>(prec) + 64 * m;
  long logp = 0;
  for (size_t q = 1; q <= max_deg; q *= p) ++logp;
  long slack = static_cast<long>(m) * logp + 4;
  PadicNumber zp = PadicNumber::from_rational(p, prec + slack, z);
  PadicNumber sum = iterated_integral(word, zp, prec + slack);
  if (sum.precision() < prec)
    throw domain_error("internal error: precision shortfall in iterated integral");
  return sum.truncate(prec);
}

std::vector<DlogWord> shuffles(const DlogWord& a, const DlogWord& b) {
  std::vector<DlogWord> out;
  std::vector<DlogWord::Letter> prefix;
  auto rec = [&](auto&& self, size_t i, size_t j) -> void {
    if (i == a.letters.size() && j == b.letters.size()) {
      out.push_back(DlogWord(prefix));
      return;
    }
    if (i < a.letters.size()) {
      prefix.push_back(a.letters[i]);
      self(self, i + 1, j);
      prefix.pop_back();
    }
    if (j < b.letters.size()) {
      prefix.push_back(b.letters[j]);
      self(self, i, j + 1);
      prefix.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

bool shuffle_check(const DlogWord& a, const DlogWord& b, const Rational& z, long p, long prec) {
  PadicNumber lhs = iterated_integral(a, z, p, prec) * iterated_integral(b, z, p, prec);
  PadicNumber rhs(p, prec);
  for (const DlogWord& w : shuffles(a, b)) rhs = rhs + iterated_integral(w, z, p, prec);
  return agree(lhs, rhs);
}

PadicSeries PadicSeries::from_rationals(long p, long prec, const std::vector<Rational>& cs) {
  PadicSeries s;
  s.p = p;
  for (const Rational& c : cs) s.coeffs.push_back(PadicNumber::from_rational(p, prec, c));
  s.tail_valuation = std::nullopt;
  return s;
}

long strassmann_bound(const PadicSeries& series) {
  long min_val = 0;
  long arg = -1;
  for (size_t k = 0; k < series.coeffs.size(); ++k) {
    const PadicNumber& c = series.coeffs[k];
    if (c.is_zero_to_precision()) continue;
    long v = c.valuation();
    if (arg < 0 || v <= min_val) {
      if (arg < 0 || v < min_val) min_val = v;
      arg = static_cast<long>(k);
    }
  }
  if (arg < 0) throw domain_error("series indistinguishable from zero");
  for (const PadicNumber& c : series.coeffs)
    if (c.is_zero_to_precision() && c.precision() <= min_val)
      throw domain_error("insufficient precision to locate the minimal valuation");
  if (series.tail_valuation && *series.tail_valuation <= min_val)
    throw domain_error("series not admissible: tail may attain the minimal valuation");
  return arg;
}

namespace {

Integer series_eval_mod(const PadicSeries& s, const Integer& x, const Integer& modulus) {
  Integer acc = 0;
  Integer xk = 1;
  for (const PadicNumber& c : s.coeffs) {
    if (c.shift() != 0) throw domain_error("zero location requires Z_p coefficients");
    acc = mod(acc + c.rep() * xk, modulus);
    xk = mod(xk * x, modulus);
  }
  return acc;
}

}  // namespace

std::vector<ZeroClass> locate_zeros(const PadicSeries& series, long depth) {
  if (depth < 1) throw domain_error("depth must be >= 1");
  // admissibility and the minimal valuation, via the bound computation
  (void)strassmann_bound(series);
  bool seen = false;
  long min_val = 0;
  for (const PadicNumber& c : series.coeffs)
    if (!c.is_zero_to_precision()) {
      min_val = seen ? std::min(min_val, c.valuation()) : c.valuation();
      seen = true;
    }
  if (min_val < 0) throw domain_error("zero location requires Z_p coefficients");

  // dividing by p^min_val changes no zeros and makes the reduction mod p a
  // nonzero polynomial, so residue counting stays within the bound
  const long p = series.p;
  PadicSeries norm;
  norm.p = p;
  const Rational scale = Rational(Integer(1), p_pow(p, min_val));
  for (const PadicNumber& c : series.coeffs) {
    if (c.precision() - min_val < depth)
      throw domain_error("depth exceeds the series coefficient precision");
    norm.coeffs.push_back(c.mul_rational(scale));
  }
  if (series.tail_valuation) {
    norm.tail_valuation = *series.tail_valuation - min_val;
    if (*norm.tail_valuation < depth)
      throw domain_error("depth exceeds the tail valuation bound");
  }

  PadicSeries deriv;
  deriv.p = p;
  for (size_t k = 1; k < norm.coeffs.size(); ++k)
    deriv.coeffs.push_back(norm.coeffs[k].mul_rational(Rational(Integer(k))));
  deriv.tail_valuation = norm.tail_valuation;

  const Integer target = p_pow(p, depth);
  std::vector<ZeroClass> out;

  for (long r = 0; r < p; ++r) {
    if (series_eval_mod(norm, r, Integer(p)) != 0) continue;
    if (series_eval_mod(deriv, r, Integer(p)) != 0) {
      // simple residue: Hensel gives a unique zero; Newton to full depth
      Integer x(r);
      for (int it = 0; it < 64; ++it) {
        Integer fx = series_eval_mod(norm, x, target);
        if (fx == 0) break;
        Integer dfx = series_eval_mod(deriv, x, target);
        x = mod(x - fx * inv_mod(mod(dfx, target), target), target);
      }
      if (series_eval_mod(norm, x, target) != 0)
        throw domain_error("internal error: Newton iteration failed to settle");
      out.push_back({x, depth, true});
      continue;
    }
    // multiple residue: the derivative stays a non-unit on every refinement,
    // so follow the branch only while it remains a single chain
    Integer residue(r);
    long level = 1;
    bool alive = true;
    while (alive && level < depth) {
      Integer step = p_pow(p, level);
      Integer next_mod = step * p;
      std::vector<Integer> survivors;
      for (long t = 0; t < p; ++t) {
        Integer cand = residue + Integer(t) * step;
        if (series_eval_mod(norm, cand, next_mod) == 0) survivors.push_back(cand);
      }
      if (survivors.empty()) {
        alive = false;  // no zero in this class after all
      } else if (survivors.size() == 1) {
        residue = survivors.front();
        ++level;
      } else {
        break;  // stalled: report the class at the current level
      }
    }
    if (alive) out.push_back({residue, level, false});
  }
  std::sort(out.begin(), out.end(),
            [](const ZeroClass& a, const ZeroClass& b) { return a.residue < b.residue; });
  return out;
}

}  // namespace dio
