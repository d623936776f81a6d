#pragma once

// Seeded generators and slow reference implementations shared by the tests.

#include "resnil/intpoly.hpp"
#include "resnil/liealg.hpp"
#include "resnil/matrix.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

namespace testsupport {

using resnil::Int;
using resnil::IntMatrix;
using resnil::IntPoly;

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long bound) {
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform(rng, -bound, bound);
  return m;
}

/// Unimodular matrix as a product of random elementary operations, a row
/// permutation and sign flips. Entries stay small for small `steps`.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps) {
  IntMatrix m = IntMatrix::identity(n);
  if (n == 1) {
    m(0, 0) = uniform(rng, 0, 1) ? 1 : -1;
    return m;
  }
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 1));
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(n) - 2));
    if (j >= i) ++j;
    long c = uniform(rng, -2, 2);
    for (std::size_t k = 0; k < n; ++k) m(i, k) += c * m(j, k);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (uniform(rng, 0, 1))
      for (std::size_t k = 0; k < n; ++k) m(i, k) = -m(i, k);
  for (std::size_t i = n - 1; i > 0; --i) {
    std::size_t j = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(i)));
    for (std::size_t k = 0; k < n; ++k) std::swap(m(i, k), m(j, k));
  }
  return m;
}

inline IntPoly random_poly(std::mt19937_64& rng, int max_degree, long bound) {
  int d = static_cast<int>(uniform(rng, 0, max_degree));
  std::vector<Int> c(static_cast<std::size_t>(d + 1));
  for (auto& x : c) x = uniform(rng, -bound, bound);
  while (c.back() == 0) c.back() = uniform(rng, -bound, bound);
  return IntPoly(c);
}

/// Determinant by cofactor expansion along the first row.
inline Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int sum = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = m(r, c);
    Int term = m(0, j) * cofactor_det(minor);
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

inline std::vector<Int> signed_divisors(const Int& v) {
  std::vector<Int> out;
  Int a = resnil::abs_int(v);
  for (Int d = 1; d * d <= a; ++d) {
    if (a % d != 0) continue;
    Int e = a / d;
    out.push_back(d);
    out.push_back(-d);
    if (e != d) {
      out.push_back(e);
      out.push_back(-e);
    }
  }
  return out;
}

/// Lagrange interpolation through (xs[i], ys[i]); nullopt unless every
/// coefficient is an integer.
inline std::optional<IntPoly> interpolate(const std::vector<long>& xs, const std::vector<Int>& ys) {
  const std::size_t m = xs.size();
  std::vector<mpq_class> acc(m, mpq_class(0));
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<mpq_class> basis{mpq_class(1)};
    mpq_class denom = 1;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      std::vector<mpq_class> next(basis.size() + 1, mpq_class(0));
      for (std::size_t k = 0; k < basis.size(); ++k) {
        next[k + 1] += basis[k];
        next[k] -= basis[k] * xs[j];
      }
      basis = next;
      denom *= xs[i] - xs[j];
    }
    for (std::size_t k = 0; k < m; ++k) acc[k] += basis[k] * ys[i] / denom;
  }
  std::vector<Int> c;
  for (auto& q : acc) {
    q.canonicalize();
    if (q.get_den() != 1) return std::nullopt;
    c.push_back(q.get_num());
  }
  return IntPoly(c);
}

/// Some primitive factor of f (primitive, degree >= 1) of degree <= deg f / 2,
/// found by Kronecker's method; nullopt when f is irreducible.
inline std::optional<IntPoly> kronecker_factor(const IntPoly& f) {
  const int n = f.degree();
  std::vector<long> pts;
  for (long t = 0; pts.size() < static_cast<std::size_t>(n / 2 + 1) + 6; t = t > 0 ? -t : -t + 1)
    if (resnil::poly_eval(f, Int(t)) != 0) pts.push_back(t);
  for (int d = 1; d <= n / 2; ++d) {
    // Use the d+1 points whose values have the fewest divisors.
    std::vector<std::pair<std::size_t, long>> ranked;
    for (long t : pts) ranked.push_back({signed_divisors(resnil::poly_eval(f, Int(t))).size(), t});
    std::sort(ranked.begin(), ranked.end());
    std::vector<long> xs;
    std::vector<std::vector<Int>> choices;
    for (int i = 0; i <= d; ++i) {
      xs.push_back(ranked[static_cast<std::size_t>(i)].second);
      choices.push_back(signed_divisors(resnil::poly_eval(f, Int(xs.back()))));
    }
    std::vector<std::size_t> idx(choices.size(), 0);
    while (true) {
      std::vector<Int> ys;
      for (std::size_t i = 0; i < idx.size(); ++i) ys.push_back(choices[i][idx[i]]);
      if (ys[0] > 0)
        if (auto g = interpolate(xs, ys); g && g->degree() == d)
          if (resnil::exact_divide(f, *g)) return g->primitive_part();
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == choices[i].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  }
  return std::nullopt;
}

/// Irreducible primitive factors with multiplicity (positive leading
/// coefficients), for f primitive of positive degree.
inline std::map<std::vector<Int>, unsigned> kronecker_factorization(IntPoly f) {
  std::map<std::vector<Int>, unsigned> out;
  std::vector<IntPoly> work{f.primitive_part()};
  while (!work.empty()) {
    IntPoly g = work.back();
    work.pop_back();
    if (g.degree() < 1) continue;
    if (auto h = kronecker_factor(g)) {
      work.push_back(*h);
      work.push_back(resnil::exact_divide(g, *h)->primitive_part());
    } else {
      ++out[g.primitive_part().coeffs()];
    }
  }
  return out;
}

/// Lyndon test by comparing against every proper rotation.
inline bool lyndon_by_rotation(const std::string& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (!(w < w.substr(i) + w.substr(0, i))) return false;
  return !w.empty();
}

inline std::size_t brute_lyndon_count(std::size_t n, unsigned k) {
  std::size_t count = 0;
  std::string w(k, '\1');
  while (true) {
    if (lyndon_by_rotation(w)) ++count;
    std::size_t i = 0;
    while (i < k && w[i] == static_cast<char>(n)) w[i++] = '\1';
    if (i == k) break;
    ++w[i];
  }
  return count;
}

/// Element of the free associative ring: word -> coefficient.
using Assoc = std::map<std::string, Int>;

inline Assoc assoc_commutator(const Assoc& a, const Assoc& b) {
  Assoc out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) {
      out[u + v] += cu * cv;
      out[v + u] -= cu * cv;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

/// Standard bracket of a Lyndon word expanded into words.
inline Assoc expand_lyndon(const std::string& w) {
  if (w.size() == 1) return {{w, Int(1)}};
  auto [u, v] = resnil::standard_factorization(w);
  return assoc_commutator(expand_lyndon(u), expand_lyndon(v));
}

/// Lyndon coordinates of a Lie element given by its expansion: the smallest
/// word of a Lyndon bracket is the Lyndon word itself with coefficient 1, so
/// peeling off minimal words is triangular.
inline std::map<std::string, Int> lyndon_coordinates(Assoc e) {
  std::map<std::string, Int> out;
  while (!e.empty()) {
    const auto [w, c] = *e.begin();
    out[w] = c;
    for (const auto& [x, cx] : expand_lyndon(w)) e[x] -= c * cx;
    std::erase_if(e, [](const auto& kv) { return kv.second == 0; });
  }
  return out;
}

}  // namespace testsupport
