#include "resnil/polymodp.hpp"

#include "resnil/error.hpp"

#include <algorithm>

namespace resnil::modp {

namespace {

void trim(Poly& a) {
  while (!a.c.empty() && a.c.back() == 0) a.c.pop_back();
}

Poly x_poly(std::uint64_t p) { return Poly{p, {0, 1}}; }

}  // namespace

std::uint64_t inverse(std::uint64_t a, std::uint64_t p) {
  std::int64_t t = 0, nt = 1;
  std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a % p);
  while (nr != 0) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw Error(ErrorKind::InvalidInput, "element not invertible mod p");
  if (t < 0) t += static_cast<std::int64_t>(p);
  return static_cast<std::uint64_t>(t);
}

Poly reduce(const IntPoly& f, std::uint64_t p) {
  Poly out{p, {}};
  out.c.reserve(f.coeffs().size());
  Int m = static_cast<unsigned long>(p);
  for (const Int& a : f.coeffs()) out.c.push_back(mod_nonneg(a, m).get_ui());
  trim(out);
  return out;
}

Poly make_monic(Poly a) {
  if (a.is_zero()) return a;
  std::uint64_t inv = inverse(a.leading(), a.p);
  for (auto& x : a.c) x = x * inv % a.p;
  return a;
}

Poly add(const Poly& a, const Poly& b) {
  Poly r{a.p, std::vector<std::uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + b.c[i]) % a.p;
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  Poly r{a.p, std::vector<std::uint64_t>(std::max(a.c.size(), b.c.size()), 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] = a.c[i];
  for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] = (r.c[i] + a.p - b.c[i]) % a.p;
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly{a.p, {}};
  Poly r{a.p, std::vector<std::uint64_t>(a.c.size() + b.c.size() - 1, 0)};
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] = (r.c[i + j] + a.c[i] * b.c[j]) % a.p;
  }
  trim(r);
  return r;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero mod p");
  const std::uint64_t p = a.p;
  if (a.degree() < b.degree()) return {Poly{p, {}}, a};
  std::vector<std::uint64_t> r = a.c;
  std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const std::uint64_t inv = inverse(b.leading(), p);
  const int db = b.degree();
  for (int i = a.degree(); i >= db; --i) {
    std::uint64_t top = r[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    std::uint64_t f = top * inv % p;
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      auto& slot = r[static_cast<std::size_t>(i - db + j)];
      slot = (slot + p - f * b.c[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  Poly qp{p, std::move(q)}, rp{p, std::move(r)};
  trim(qp);
  trim(rp);
  return {qp, rp};
}

Poly rem(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly derivative(const Poly& a) {
  Poly r{a.p, {}};
  for (std::size_t i = 1; i < a.c.size(); ++i) r.c.push_back(a.c[i] * (i % a.p) % a.p);
  trim(r);
  return r;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

std::tuple<Poly, Poly, Poly> ext_gcd(const Poly& a, const Poly& b) {
  const std::uint64_t p = a.p;
  Poly r0 = a, r1 = b;
  Poly s0{p, {1}}, s1{p, {}};
  Poly t0{p, {}}, t1{p, {1}};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly s2 = sub(s0, mul(q, s1));
    Poly t2 = sub(t0, mul(q, t1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  std::uint64_t inv = inverse(r0.leading(), p);
  Poly scale{p, {inv}};
  return {mul(r0, scale), mul(s0, scale), mul(t0, scale)};
}

Poly powmod(const Poly& base, const Int& exponent, const Poly& modulus) {
  Poly result{base.p, {1}};
  result = rem(result, modulus);
  Poly b = rem(base, modulus);
  const std::size_t bits = mpz_sizeinbase(exponent.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result), modulus);
    if (mpz_tstbit(exponent.get_mpz_t(), i)) result = rem(mul(result, b), modulus);
  }
  return result;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f) {
  const std::uint64_t p = f.p;
  std::vector<std::pair<Poly, int>> out;
  Poly rest = f;
  Poly h = x_poly(p);  // x^(p^d) mod rest
  const Int pz = static_cast<unsigned long>(p);
  for (int d = 1; 2 * d <= rest.degree(); ++d) {
    h = powmod(h, pz, rest);
    Poly g = gcd(rest, sub(h, x_poly(p)));
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      rest = divmod(rest, g).first;
      h = rem(h, rest);
    }
  }
  if (rest.degree() > 0) out.emplace_back(make_monic(rest), rest.degree());
  return out;
}

std::vector<Poly> equal_degree(const Poly& f, int d, std::mt19937_64& rng) {
  if (f.degree() == d) return {f};
  const std::uint64_t p = f.p;
  // (p^d - 1) / 2
  Int e = pow_int(Int(static_cast<unsigned long>(p)), static_cast<unsigned long>(d));
  e = (e - 1) / 2;
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    Poly a{p, {}};
    for (int i = 0; i < f.degree(); ++i) a.c.push_back(coeff(rng));
    trim(a);
    if (a.degree() < 1) continue;
    Poly g = gcd(f, a);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree(g, d, rng);
      auto right = equal_degree(divmod(f, g).first, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    Poly b = powmod(a, e, f);
    g = gcd(f, sub(b, Poly{p, {1}}));
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree(g, d, rng);
      auto right = equal_degree(make_monic(divmod(f, g).first), d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Poly> factor_squarefree(const Poly& f, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (auto& [part, d] : distinct_degree(make_monic(f))) {
    for (Poly& q : equal_degree(part, d, rng)) out.push_back(std::move(q));
  }
  return out;
}

std::vector<int> degree_pattern(const Poly& f) {
  std::vector<int> out;
  for (auto& [part, d] : distinct_degree(make_monic(f))) {
    for (int i = 0; i < part.degree() / d; ++i) out.push_back(d);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace resnil::modp
