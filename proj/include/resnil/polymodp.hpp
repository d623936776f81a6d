#pragma once

#include "resnil/intpoly.hpp"

#include <cstdint>
#include <random>
#include <tuple>
#include <vector>

namespace resnil::modp {

/// Polynomial over F_p for a word-sized prime p < 2^31; coefficients in [0, p),
/// index i is the coefficient of x^i, no trailing zeros.
struct Poly {
  std::uint64_t p = 2;
  std::vector<std::uint64_t> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  std::uint64_t leading() const { return c.back(); }
  friend bool operator==(const Poly&, const Poly&) = default;
};

std::uint64_t inverse(std::uint64_t a, std::uint64_t p);

Poly reduce(const IntPoly& f, std::uint64_t p);
Poly make_monic(Poly a);
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly rem(const Poly& a, const Poly& b);
Poly derivative(const Poly& a);
/// Monic gcd (zero only when both inputs are zero).
Poly gcd(Poly a, Poly b);
/// (g, s, t) with s*a + t*b = g, g monic.
std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b);
Poly powmod(const Poly& base, const Int& exponent, const Poly& modulus);

/// Distinct-degree factorization of a monic squarefree polynomial: products of
/// all irreducible factors of each degree d, as (product, d) pairs.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f);

/// Splits a monic squarefree product of irreducibles of degree d (p odd).
std::vector<Poly> equal_degree(const Poly& f, int d, std::mt19937_64& rng);

/// Monic irreducible factors of a monic squarefree polynomial (p odd).
std::vector<Poly> factor_squarefree(const Poly& f, std::mt19937_64& rng);

/// Sorted degrees of the irreducible factors of a monic squarefree f.
std::vector<int> degree_pattern(const Poly& f);

}  // namespace resnil::modp
