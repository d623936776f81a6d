#pragma once

#include "resnil/integers.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace resnil {

/// Univariate polynomial over Z. `coeffs()[i]` is the coefficient of x^i; the
/// zero polynomial is the empty sequence and the leading coefficient of any
/// other polynomial is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Int& c);
  static IntPoly monomial(const Int& c, std::size_t degree);
  /// x - a
  static IntPoly linear(const Int& a);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Int>& coeffs() const { return coeffs_; }
  Int coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int(0); }
  const Int& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }
  bool is_constant() const { return degree() <= 0; }

  /// Nonnegative gcd of the coefficients (0 for the zero polynomial).
  Int content() const;
  /// p / content, sign-normalized so the leading coefficient is positive.
  IntPoly primitive_part() const;
  IntPoly derivative() const;

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Int& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Int& c) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, highest degree first, e.g. "x^2 - 3*x - 1".
  std::string to_string(char var = 'x') const;

 private:
  void normalize();
  std::vector<Int> coeffs_;
};

/// Canonical order used for factor lists: by degree, then lexicographically
/// on the coefficient sequence from the leading term down.
bool canonical_less(const IntPoly& a, const IntPoly& b);

IntPoly pow(const IntPoly& p, unsigned exponent);

/// Horner evaluation.
Int poly_eval(const IntPoly& p, const Int& x);

/// Quotient and remainder on division by a monic polynomial (exact over Z).
std::pair<IntPoly, IntPoly> divmod_monic(const IntPoly& a, const IntPoly& monic);

/// a / b in Z[x], or nullopt when b does not divide a over Z.
std::optional<IntPoly> exact_divide(const IntPoly& a, const IntPoly& b);

/// gcd in Z[x]: content gcd times the primitive gcd, positive leading coefficient.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Squarefree decomposition of the primitive part of p (positive leading
/// coefficient): pairwise coprime squarefree parts with multiplicities such that
/// the product of part^multiplicity equals primitive_part(p). Multiplicities are
/// strictly increasing.
std::vector<std::pair<IntPoly, unsigned>> squarefree_decomposition(const IntPoly& p);

struct FactorizationZ {
  int unit = 1;
  Int content = 1;
  /// Primitive irreducible factors with positive leading coefficient, canonical order.
  std::vector<std::pair<IntPoly, unsigned>> factors;

  IntPoly expand() const;
};

/// Complete factorization into irreducibles over Z.
FactorizationZ factor_over_Z(const IntPoly& p);

/// Factors a squarefree primitive polynomial with positive leading coefficient.
/// The irreducible factors are returned in canonical order.
std::vector<IntPoly> factor_squarefree(const IntPoly& f);

struct LinearRootProfile {
  unsigned multiplicity_one = 0;
  unsigned multiplicity_minus_one = 0;
  IntPoly residual;
};

/// Multiplicities of (x-1) and (x+1) in a monic p and the cofactor free of both.
LinearRootProfile linear_root_profile(const IntPoly& p);

}  // namespace resnil
