#include "resnil/intpoly.hpp"

#include "resnil/error.hpp"

#include <algorithm>
#include <sstream>

namespace resnil {

IntPoly::IntPoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Int& c) { return IntPoly(std::vector<Int>{c}); }

IntPoly IntPoly::monomial(const Int& c, std::size_t degree) {
  std::vector<Int> v(degree + 1, Int(0));
  v[degree] = c;
  return IntPoly(std::move(v));
}

IntPoly IntPoly::linear(const Int& a) { return IntPoly(std::vector<Int>{Int(-a), Int(1)}); }

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int IntPoly::content() const {
  Int g = 0;
  for (const Int& c : coeffs_) {
    g = gcd_int(g, c);
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Int c = content();
  if (leading() < 0) c = -c;
  std::vector<Int> v;
  v.reserve(coeffs_.size());
  for (const Int& a : coeffs_) v.push_back(divexact(a, c));
  return IntPoly(std::move(v));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Int> v(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) v[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(v));
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (Int& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> v(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(v));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly& IntPoly::operator*=(const Int& c) {
  for (Int& a : coeffs_) a *= c;
  normalize();
  return *this;
}

std::string IntPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Int& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Int mag = abs_int(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

bool canonical_less(const IntPoly& a, const IntPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = a.degree(); i >= 0; --i) {
    const Int& x = a.coeffs()[static_cast<std::size_t>(i)];
    const Int& y = b.coeffs()[static_cast<std::size_t>(i)];
    if (x != y) return x < y;
  }
  return false;
}

IntPoly pow(const IntPoly& p, unsigned exponent) {
  IntPoly result = IntPoly::constant(1);
  IntPoly base = p;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Int poly_eval(const IntPoly& p, const Int& x) {
  Int acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic) {
  if (!monic.is_monic()) throw Error(ErrorKind::NotMonic, "divisor must be monic");
  const int db = monic.degree();
  if (a.degree() < db) return {IntPoly{}, a};
  std::vector<Int> rem = a.coeffs();
  std::vector<Int> quo(static_cast<std::size_t>(a.degree() - db + 1), Int(0));
  for (int i = a.degree(); i >= db; --i) {
    Int q = rem[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * monic.coeffs()[static_cast<std::size_t>(j)];
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  const int db = b.degree();
  if (a.degree() < db) return std::nullopt;
  const Int& lb = b.leading();
  std::vector<Int> rem = a.coeffs();
  std::vector<Int> quo(static_cast<std::size_t>(a.degree() - db + 1), Int(0));
  for (int i = a.degree(); i >= db; --i) {
    const Int& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    if (!divides(lb, top)) return std::nullopt;
    Int q = divexact(top, lb);
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.coeffs()[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < db; ++i)
    if (rem[static_cast<std::size_t>(i)] != 0) return std::nullopt;
  return IntPoly(std::move(quo));
}

namespace {

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> rem = a.coeffs();
  const int db = b.degree();
  const Int& lb = b.leading();
  for (int i = a.degree(); i >= db; --i) {
    Int top = rem[static_cast<std::size_t>(i)];
    for (auto& c : rem) c *= lb;
    if (top == 0) continue;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= top * b.coeffs()[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(std::max(db, 0)));
  return IntPoly(std::move(rem));
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part() * b.content();
  if (b.is_zero()) return a.primitive_part() * a.content();
  Int c = gcd_int(a.content(), b.content());
  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.is_zero() ? IntPoly{} : r.primitive_part();
  }
  return u.primitive_part() * c;
}

std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "squarefree decomposition of 0");
  std::vector<std::pair<IntPoly, unsigned>> out;
  IntPoly f = p.primitive_part();
  if (f.degree() == 0) return out;
  // Yun's algorithm; every division below is exact over Z by Gauss's lemma.
  IntPoly df = f.derivative();
  IntPoly a = gcd(f, df).primitive_part();
  IntPoly b = *exact_divide(f, a);
  IntPoly c = *exact_divide(df, a);
  IntPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    IntPoly ai = gcd(b, d).primitive_part();
    IntPoly nb = *exact_divide(b, ai);
    IntPoly nc = *exact_divide(d, ai);
    if (ai.degree() > 0) out.emplace_back(ai, i);
    b = std::move(nb);
    d = nc - b.derivative();
    ++i;
  }
  return out;
}

IntPoly FactorizationZ::expand() const {
  IntPoly r = IntPoly::constant(content * unit);
  for (const auto& [f, m] : factors) r *= pow(f, m);
  return r;
}

FactorizationZ factor_over_Z(const IntPoly& p) {
  if (p.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "cannot factor the zero polynomial");
  FactorizationZ out;
  out.unit = p.leading() < 0 ? -1 : 1;
  out.content = p.content();
  for (const auto& [part, mult] : squarefree_decomposition(p)) {
    for (IntPoly& q : factor_squarefree(part)) out.factors.emplace_back(std::move(q), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const auto& x, const auto& y) { return canonical_less(x.first, y.first); });
  return out;
}

LinearRootProfile linear_root_profile(const IntPoly& p) {
  if (!p.is_monic()) throw Error(ErrorKind::NotMonic, "linear root profile needs a monic polynomial");
  LinearRootProfile out;
  IntPoly rest = p;
  const IntPoly minus_one_root = IntPoly::linear(1);
  const IntPoly plus_one_root = IntPoly::linear(-1);
  while (rest.degree() > 0 && poly_eval(rest, 1) == 0) {
    rest = divmod_monic(rest, minus_one_root).first;
    ++out.multiplicity_one;
  }
  while (rest.degree() > 0 && poly_eval(rest, -1) == 0) {
    rest = divmod_monic(rest, plus_one_root).first;
    ++out.multiplicity_minus_one;
  }
  out.residual = std::move(rest);
  return out;
}

}  // namespace resnil
