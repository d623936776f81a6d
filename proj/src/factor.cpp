// Zassenhaus factorization over Z: modular factorization at a good small prime,
// quadratic Hensel lifting past a coefficient bound, then subset recombination.
#include "resnil/intpoly.hpp"
#include "resnil/polymodp.hpp"

#include "resnil/error.hpp"

#include <algorithm>
#include <random>

namespace resnil {

namespace {

IntPoly lift_to_z(const modp::Poly& a) {
  std::vector<Int> v;
  v.reserve(a.c.size());
  for (auto x : a.c) v.emplace_back(static_cast<unsigned long>(x));
  return IntPoly(std::move(v));
}

IntPoly reduce_mod(const IntPoly& a, const Int& m) {
  std::vector<Int> v;
  v.reserve(a.coeffs().size());
  for (const Int& c : a.coeffs()) v.push_back(mod_nonneg(c, m));
  return IntPoly(std::move(v));
}

IntPoly symmetric_mod(const IntPoly& a, const Int& m) {
  std::vector<Int> v;
  v.reserve(a.coeffs().size());
  for (const Int& c : a.coeffs()) v.push_back(mod_symmetric(c, m));
  return IntPoly(std::move(v));
}

std::pair<IntPoly, IntPoly> divmod_monic_mod(const IntPoly& a, const IntPoly& h, const Int& m) {
  auto [q, r] = divmod_monic(a, h);
  return {reduce_mod(q, m), reduce_mod(r, m)};
}

struct HenselState {
  IntPoly g, h, s, t;
};

// One quadratic Hensel step: from f = g*h (mod m), s*g + t*h = 1 (mod m), with
// h monic, to the same relations modulo m^2.
HenselState hensel_step(const IntPoly& f, const HenselState& in, const Int& m) {
  const Int m2 = m * m;
  const IntPoly& g = in.g;
  const IntPoly& h = in.h;
  const IntPoly& s = in.s;
  const IntPoly& t = in.t;
  IntPoly e = reduce_mod(f - g * h, m2);
  auto [q, r] = divmod_monic_mod(reduce_mod(s * e, m2), h, m2);
  IntPoly g1 = reduce_mod(g + t * e + q * g, m2);
  IntPoly h1 = reduce_mod(h + r, m2);
  IntPoly b = reduce_mod(s * g1 + t * h1 - IntPoly::constant(1), m2);
  auto [c, d] = divmod_monic_mod(reduce_mod(s * b, m2), h1, m2);
  IntPoly s1 = reduce_mod(s - d, m2);
  IntPoly t1 = reduce_mod(t - t * b - c * g1, m2);
  return {g1, h1, s1, t1};
}

// Lifts the monic modular factors of f (f = lc * prod(factors) mod p) to
// monic factors modulo `target`, which must be p^(2^j).
std::vector<IntPoly> hensel_lift(const IntPoly& f, const std::vector<modp::Poly>& factors,
                                 std::uint64_t p, const Int& target) {
  std::vector<IntPoly> lifted;
  const Int pz = static_cast<unsigned long>(p);
  const std::uint64_t lc_mod_p = mod_nonneg(f.leading(), pz).get_ui();
  IntPoly current = reduce_mod(f, target);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    modp::Poly g0{p, {lc_mod_p}};
    for (std::size_t j = i + 1; j < factors.size(); ++j) g0 = modp::mul(g0, factors[j]);
    const modp::Poly& h0 = factors[i];
    auto [one, s0, t0] = modp::ext_gcd(g0, h0);
    HenselState st{lift_to_z(g0), lift_to_z(h0), lift_to_z(s0), lift_to_z(t0)};
    for (Int m = pz; m < target; m *= m) st = hensel_step(current, st, m);
    lifted.push_back(st.h);
    current = st.g;
  }
  Int inv;
  Int lc = mod_nonneg(f.leading(), target);
  mpz_invert(inv.get_mpz_t(), lc.get_mpz_t(), target.get_mpz_t());
  lifted.push_back(reduce_mod(current * inv, target));
  return lifted;
}

bool small_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Coefficient bound for lc * g where g is any factor of f.
Int factor_bound(const IntPoly& f) {
  Int sumsq = 0;
  for (const Int& c : f.coeffs()) sumsq += c * c;
  Int norm2;
  mpz_sqrt(norm2.get_mpz_t(), sumsq.get_mpz_t());
  norm2 += 1;
  Int bound = norm2 * abs_int(f.leading());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree()));
  return bound;
}

}  // namespace

std::vector<IntPoly> factor_squarefree(const IntPoly& input) {
  IntPoly f = input.primitive_part();
  if (f.degree() <= 1) return {f};

  // Prefer the prime with the fewest modular factors among a few good ones.
  std::uint64_t best_p = 0;
  std::size_t best_count = 0;
  int good = 0;
  for (std::uint64_t p = 3; good < 6; p += 2) {
    if (!small_prime(p)) continue;
    modp::Poly fp = modp::reduce(f, p);
    if (fp.degree() != f.degree()) continue;
    if (modp::gcd(fp, modp::derivative(fp)).degree() != 0) continue;
    ++good;
    std::size_t count = modp::degree_pattern(fp).size();
    if (best_p == 0 || count < best_count) {
      best_p = p;
      best_count = count;
    }
    if (best_count == 1) break;
  }
  if (best_count == 1) return {f};

  std::mt19937_64 rng(0x5eed ^ best_p);
  std::vector<modp::Poly> modular = modp::factor_squarefree(modp::reduce(f, best_p), rng);

  const Int pz = static_cast<unsigned long>(best_p);
  const Int limit = 2 * factor_bound(f) + 1;
  Int modulus = pz;
  while (modulus <= limit) modulus *= modulus;
  std::vector<IntPoly> lifted = hensel_lift(f, modular, best_p, modulus);

  std::vector<IntPoly> out;
  std::vector<std::size_t> remaining(lifted.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  IntPoly rest = f;
  std::size_t size = 1;
  while (2 * size <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      IntPoly candidate = IntPoly::constant(rest.leading());
      for (std::size_t i : pick) candidate = reduce_mod(candidate * lifted[remaining[i]], modulus);
      candidate = symmetric_mod(candidate, modulus);
      if (candidate.degree() > 0) {
        IntPoly g = candidate.primitive_part();
        if (auto q = exact_divide(rest, g)) {
          out.push_back(g);
          rest = std::move(*q);
          std::vector<std::size_t> keep;
          for (std::size_t i = 0; i < remaining.size(); ++i)
            if (std::find(pick.begin(), pick.end(), i) == pick.end()) keep.push_back(remaining[i]);
          remaining = std::move(keep);
          found = true;
          break;
        }
      }
      // next combination of `size` indices out of remaining.size()
      std::size_t k = size;
      while (k > 0 && pick[k - 1] == remaining.size() - size + k - 1) --k;
      if (k == 0) break;
      ++pick[k - 1];
      for (std::size_t j = k; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++size;
  }
  if (rest.degree() > 0) out.push_back(rest.primitive_part());
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

}  // namespace resnil
