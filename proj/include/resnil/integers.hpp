#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace resnil {

using Int = mpz_class;

/// Primality for arbitrary-precision integers (values < 2 are not prime).
/// GMP's test is deterministic below 2^64 after 25 rounds.
bool is_prime(const Int& n);

/// Distinct prime divisors of |n|, ascending. Empty for n in {-1, 0, 1}.
std::vector<Int> prime_divisors(const Int& n);

inline Int abs_int(const Int& n) { return n < 0 ? Int(-n) : n; }

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Floor-free residue in [0, m) for m > 0.
inline Int mod_nonneg(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

/// Residue in (-m/2, m/2].
inline Int mod_symmetric(const Int& a, const Int& m) {
  Int r = mod_nonneg(a, m);
  if (2 * r > m) r -= m;
  return r;
}

inline Int pow_int(const Int& base, unsigned long exponent) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

/// Exact quotient; the caller guarantees divisibility.
inline Int divexact(const Int& a, const Int& b) {
  Int r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

std::string to_string(const Int& n);

}  // namespace resnil
