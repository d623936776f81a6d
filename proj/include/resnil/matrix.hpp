#pragma once

#include "resnil/intpoly.hpp"
#include "resnil/integers.hpp"

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace resnil {

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// Matrix whose columns are the given vectors (all of length `rows`).
  static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Int>>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;

  Int& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }
  std::span<const Int> entries() const { return entries_; }

  std::vector<Int> column(std::size_t j) const;
  IntMatrix transpose() const;

  IntMatrix& operator+=(const IntMatrix& o);
  IntMatrix& operator-=(const IntMatrix& o);
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) { return a += b; }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) { return a -= b; }
  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend IntMatrix operator*(const Int& c, IntMatrix a);
  friend std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  /// Bracketed row list, e.g. "[[0,1],[1,3]]"; the same syntax `parse_matrix` reads.
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> entries_;
};

/// Parses "[[a,b],[c,d]]" (whitespace allowed). Throws Error(InvalidInput).
IntMatrix parse_matrix(const std::string& text);

/// Default caps on derived matrix sizes; exceeding one is a reported error.
struct SizeCaps {
  std::size_t kronecker_side = 4096;
  std::size_t witt_dimension = 512;
};

Int trace(const IntMatrix& m);
/// Fraction-free (Bareiss) determinant.
Int determinant(const IntMatrix& m);
bool is_unimodular(const IntMatrix& m);
IntMatrix matrix_power(const IntMatrix& m, unsigned exponent);
IntMatrix reduce_mod(const IntMatrix& m, const Int& modulus);

/// det(xI - M) by Faddeev-LeVerrier; every division is exact over Z.
IntPoly char_poly(const IntMatrix& m);

IntMatrix kronecker_product(const IntMatrix& a, const IntMatrix& b);
/// k-fold Kronecker power; the result side n^k must not exceed `cap`.
IntMatrix kronecker_power(const IntMatrix& m, unsigned k, std::size_t cap = SizeCaps{}.kronecker_side);

/// All k-element subsets of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k);
/// k-th compound: the matrix of k x k minors, rows and columns indexed by
/// k-subsets in lexicographic order.
IntMatrix compound_matrix(const IntMatrix& m, std::size_t k);

}  // namespace resnil
