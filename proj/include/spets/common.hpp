#pragma once

#include <gmpxx.h>

#include <numeric>
#include <stdexcept>
#include <string>

namespace spets {

using Int = mpz_class;
using Rat = mpq_class;

struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

inline bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline long pow_mod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  if (b < 0) b += m;
  while (e > 0) {
    if (e & 1) r = (r * b) % m;
    b = (b * b) % m;
    e >>= 1;
  }
  return r;
}

// multiplicative order of a modulo m, requires gcd(a, m) = 1
inline long mul_order_mod(long a, long m) {
  a %= m;
  if (a < 0) a += m;
  if (std::gcd(a, m) != 1) throw Error("order undefined: not a unit");
  long x = a % m, k = 1;
  while (x != 1 % m) {
    x = (x * a) % m;
    if (++k > m) throw Error("order computation failed");
  }
  return k;
}

// largest k with ell^k dividing n; n must be nonzero
inline long nu_ell(const Int& n, long ell) {
  if (n == 0) throw Error("valuation of zero");
  if (!is_prime(ell)) throw Error("ell must be prime");
  Int m = abs(n);
  long k = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(ell))) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(ell));
    ++k;
  }
  return k;
}

inline long euler_phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

}  // namespace spets
