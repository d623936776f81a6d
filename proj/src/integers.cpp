#include "resnil/integers.hpp"

#include <algorithm>

namespace resnil {

bool is_prime(const Int& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 25) != 0;
}

namespace {

// Brent's variant of Pollard rho; returns a nontrivial divisor of composite n.
Int pollard_brent(const Int& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Int y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    const unsigned long m = 64;
    auto f = [&](const Int& v) { return mod_nonneg(v * v + c, n); };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = f(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mod_nonneg(q * abs_int(x - y), n);
        }
        g = gcd_int(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_int(abs_int(x - ys), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void collect(const Int& n, std::vector<Int>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  Int d = pollard_brent(n);
  collect(d, out);
  collect(divexact(n, d), out);
}

}  // namespace

std::vector<Int> prime_divisors(const Int& value) {
  std::vector<Int> out;
  Int n = abs_int(value);
  if (n < 2) return out;
  for (unsigned long p = 2; p < 1000 && p * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      out.push_back(p);
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    }
  }
  if (n > 1) collect(n, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string to_string(const Int& n) { return n.get_str(); }

}  // namespace resnil
