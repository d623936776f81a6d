#pragma once

#include "resnil/matrix.hpp"

#include <optional>
#include <vector>

namespace resnil {

struct HermiteResult {
  IntMatrix H;  ///< canonical column Hermite form, zero columns last
  IntMatrix U;  ///< unimodular, H = M * U
};

/// Column Hermite form. Pivots sit in strictly increasing rows, are positive,
/// and the entries of a pivot row to the left of its pivot lie in [0, pivot).
HermiteResult hermite_form(const IntMatrix& m);

struct SmithForm {
  IntMatrix D;
  IntMatrix U;
  IntMatrix V;
  /// Diagonal of D (length min(rows, cols)): d1 | d2 | ... with zeros last.
  std::vector<Int> elementary_divisors;
};

/// U * M * V = D with U, V unimodular.
SmithForm smith_form(const IntMatrix& m);

/// A sublattice of Z^n kept as the nonzero columns of its Hermite form.
class SubLattice {
 public:
  /// Lattice generated by the columns of `generators`.
  static SubLattice generated_by(const IntMatrix& generators);

  std::size_t ambient_rank() const { return ambient_rank_; }
  std::size_t rank() const { return basis_.cols(); }
  const IntMatrix& basis() const { return basis_; }
  /// Nonzero elementary divisors of the basis (length = rank).
  const std::vector<Int>& elementary_divisors() const { return divisors_; }
  bool is_full() const;
  /// |Z^n : L| when rank = n; nullopt for lattices of lower rank.
  std::optional<Int> index() const;
  bool contains(const std::vector<Int>& v) const;
  friend bool operator==(const SubLattice& a, const SubLattice& b) = default;

 private:
  std::size_t ambient_rank_ = 0;
  IntMatrix basis_;
  std::vector<std::size_t> pivot_rows_;
  std::vector<Int> divisors_;
};

/// Membership by back-substitution against the Hermite basis.
bool lattice_contains(const SubLattice& lattice, const std::vector<Int>& v);

/// Entry k-2 (k = 2..K+1) is (A - I)^(k-1) Z^n. A must be unimodular.
std::vector<SubLattice> lattice_chain(const IntMatrix& a, unsigned bound);

}  // namespace resnil
