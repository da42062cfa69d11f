#include "dio/numeric.hpp"

#include <algorithm>

namespace dio {

bool nth_root_exact(const Integer& n, unsigned long k, Integer& root) {
  if (n < 0 && k % 2 == 0) return false;
  Integer r;
  int exact = mpz_root(r.get_mpz_t(), n.get_mpz_t(), k);
  if (exact == 0) return false;
  root = r;
  return true;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

namespace {

Integer brent_rho(const Integer& n) {
  // Brent's cycle variant of Pollard rho. n is odd, composite, not a
  // perfect power of interest. Returns a nontrivial factor or throws.
  const long kMaxIters = 1 << 22;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0xd10cafeUL);
  for (int attempt = 0; attempt < 24; ++attempt) {
    Integer y = rng.get_z_range(n - 3) + 2;
    Integer c = rng.get_z_range(n - 1) + 1;
    Integer x, ys, q = 1, g = 1;
    long r = 1, total = 0;
    const long m = 128;
    while (g == 1 && total < kMaxIters) {
      x = y;
      for (long i = 0; i < r; ++i) y = (y * y + c) % n;
      long k = 0;
      while (k < r && g == 1) {
        ys = y;
        long lim = std::min(m, r - k);
        for (long i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * (x - y) % n;
        }
        g = gcd(q, n);
        k += lim;
        total += lim;
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        g = gcd(x - ys, n);
      }
    }
    if (g > 1 && g < n) return g;
  }
  throw domain_error("integer factorization exceeded the desk-scale effort cap");
}

void factor_into(Integer n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out[n] += 1;
    return;
  }
  Integer d = brent_rho(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

std::map<Integer, unsigned> factorize(const Integer& n) {
  if (n == 0) throw domain_error("cannot factor zero");
  std::map<Integer, unsigned> out;
  Integer m = abs(n);
  for (long p : {2L, 3L, 5L, 7L, 11L, 13L}) {
    while (m % p == 0) {
      out[Integer(p)] += 1;
      m /= p;
    }
  }
  long d = 17;
  while (m > 1 && Integer(d) * d <= m && d < 100000) {
    while (m % d == 0) {
      out[Integer(d)] += 1;
      m /= d;
    }
    d += 2;
  }
  if (m > 1) {
    if (Integer(d) * d > m) {
      out[m] += 1;
    } else {
      factor_into(m, out);
    }
  }
  return out;
}

std::vector<Integer> divisors(const Integer& n) {
  if (n == 0) throw domain_error("zero has no divisor list");
  auto fac = factorize(n);
  std::vector<Integer> out{1};
  for (const auto& [p, e] : fac) {
    size_t sz = out.size();
    Integer pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<long> primes_upto(long bound) {
  std::vector<long> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(bound + 1, true);
  for (long i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (long j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

long valuation(const Integer& n, const Integer& p) {
  if (n == 0) throw domain_error("valuation of zero is infinite");
  Integer m = n;
  long v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

}  // namespace dio
