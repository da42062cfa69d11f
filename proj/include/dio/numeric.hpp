#ifndef DIO_NUMERIC_HPP
#define DIO_NUMERIC_HPP

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace dio {

using Integer = mpz_class;

/// Error raised when an operation's mathematical precondition is violated.
/// The CLI maps this to exit code 1.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline bool is_perfect_square(const Integer& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

inline Integer sqrt_exact(const Integer& n) {
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

/// Exact n-th root: returns true and sets root if n == root^k.
bool nth_root_exact(const Integer& n, unsigned long k, Integer& root);

bool is_prime(const Integer& n);

/// Prime factorization as {prime -> exponent}, sorted by prime.
/// Trial division followed by Brent's rho; throws domain_error if a
/// composite cofactor resists the iteration cap (desk-scale guard).
std::map<Integer, unsigned> factorize(const Integer& n);

/// All positive divisors of |n|, sorted ascending. n must be nonzero.
std::vector<Integer> divisors(const Integer& n);

/// Primes in [2, bound] by sieve.
std::vector<long> primes_upto(long bound);

/// Multiplicity of p in n (n != 0).
long valuation(const Integer& n, const Integer& p);

}  // namespace dio

#endif
