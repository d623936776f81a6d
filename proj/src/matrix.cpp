#include "resnil/matrix.hpp"

#include "resnil/error.hpp"

#include <cctype>
#include <sstream>

namespace resnil {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols, Int(0)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw Error(ErrorKind::DimensionMismatch, "entry count does not match shape");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::DimensionMismatch, "ragged matrix literal");
    for (long v : r) entries_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(std::size_t rows, const std::vector<std::vector<Int>>& columns) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw Error(ErrorKind::DimensionMismatch, "column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

bool IntMatrix::is_zero() const {
  for (const Int& e : entries_)
    if (e != 0) return false;
  return true;
}

std::vector<Int> IntMatrix::column(std::size_t j) const {
  std::vector<Int> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix& IntMatrix::operator+=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix sum shape");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

IntMatrix& IntMatrix::operator-=(const IntMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::DimensionMismatch, "matrix difference shape");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= o.entries_[i];
  return *this;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw Error(ErrorKind::DimensionMismatch, "matrix product shape");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Int& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

IntMatrix operator*(const Int& c, IntMatrix a) {
  for (Int& e : a.entries_) e *= c;
  return a;
}

std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v) {
  if (a.cols_ != v.size()) throw Error(ErrorKind::DimensionMismatch, "matrix-vector shape");
  std::vector<Int> out(a.rows_, Int(0));
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
  return out;
}

std::string IntMatrix::to_string() const {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) out << ",";
    out << "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out << ",";
      out << (*this)(i, j).get_str();
    }
    out << "]";
  }
  out << "]";
  return out.str();
}

IntMatrix parse_matrix(const std::string& text) {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto expect = [&](char c) {
    skip();
    if (pos >= text.size() || text[pos] != c)
      throw Error(ErrorKind::InvalidInput, std::string("matrix literal: expected '") + c + "' at position " +
                                               std::to_string(pos));
    ++pos;
  };
  auto peek = [&]() -> char {
    skip();
    return pos < text.size() ? text[pos] : '\0';
  };
  std::vector<std::vector<Int>> rows;
  expect('[');
  for (;;) {
    expect('[');
    std::vector<Int> row;
    for (;;) {
      skip();
      std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      std::string token = text.substr(start, pos - start);
      if (token.empty() || token == "-" || token == "+")
        throw Error(ErrorKind::InvalidInput, "matrix literal: expected integer at position " + std::to_string(start));
      if (token[0] == '+') token.erase(0, 1);
      row.emplace_back(token);
      if (peek() == ',') {
        ++pos;
        continue;
      }
      expect(']');
      break;
    }
    rows.push_back(std::move(row));
    if (peek() == ',') {
      ++pos;
      continue;
    }
    expect(']');
    break;
  }
  skip();
  if (pos != text.size()) throw Error(ErrorKind::InvalidInput, "matrix literal: trailing characters");
  const std::size_t cols = rows.front().size();
  std::vector<Int> entries;
  for (auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::InvalidInput, "matrix literal: ragged rows");
    for (auto& e : r) entries.push_back(std::move(e));
  }
  return IntMatrix(rows.size(), cols, std::move(entries));
}

Int trace(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "trace of a non-square matrix");
  Int t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

Int determinant(const IntMatrix& input) {
  if (!input.is_square()) throw Error(ErrorKind::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = input.rows();
  if (n == 0) return 1;
  IntMatrix a = input;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && a(r, k) == 0) ++r;
      if (r == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(r, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = divexact(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

bool is_unimodular(const IntMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "unimodularity of a non-square matrix");
  return abs_int(determinant(m)) == 1;
}

IntMatrix matrix_power(const IntMatrix& m, unsigned exponent) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "power of a non-square matrix");
  IntMatrix result = IntMatrix::identity(m.rows());
  IntMatrix base = m;
  while (exponent > 0) {
    if (exponent & 1u) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

IntMatrix reduce_mod(const IntMatrix& m, const Int& modulus) {
  std::vector<Int> e;
  e.reserve(m.entries().size());
  for (const Int& x : m.entries()) e.push_back(mod_nonneg(x, modulus));
  return IntMatrix(m.rows(), m.cols(), std::move(e));
}

IntPoly char_poly(const IntMatrix& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "characteristic polynomial of a non-square matrix");
  const std::size_t n = a.rows();
  std::vector<Int> c(n + 1, Int(0));
  c[n] = 1;
  IntMatrix m(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    m = a * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    Int t = trace(a * m);
    c[n - k] = -divexact(t, Int(static_cast<unsigned long>(k)));
  }
  return IntPoly(std::move(c));
}

IntMatrix kronecker_product(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Int& aij = a(i, j);
      if (aij == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

IntMatrix kronecker_power(const IntMatrix& m, unsigned k, std::size_t cap) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "Kronecker power of a non-square matrix");
  if (k == 0) throw Error(ErrorKind::InvalidInput, "Kronecker power needs k >= 1");
  std::size_t side = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (m.rows() != 0 && side > cap / m.rows())
      throw Error(ErrorKind::SizeCapExceeded, "Kronecker power side exceeds cap " + std::to_string(cap));
    side *= m.rows();
  }
  if (side > cap) throw Error(ErrorKind::SizeCapExceeded, "Kronecker power side exceeds cap " + std::to_string(cap));
  IntMatrix out = m;
  for (unsigned i = 1; i < k; ++i) out = kronecker_product(out, m);
  return out;
}

std::vector<std::vector<std::size_t>> k_subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> s(k);
  for (std::size_t i = 0; i < k; ++i) s[i] = i;
  for (;;) {
    out.push_back(s);
    std::size_t i = k;
    while (i > 0 && s[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++s[i - 1];
    for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
  }
  return out;
}

IntMatrix compound_matrix(const IntMatrix& m, std::size_t k) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "compound of a non-square matrix");
  if (k < 1 || k > m.rows()) throw Error(ErrorKind::BadCompoundOrder, "compound order must lie in 1..n");
  auto subsets = k_subsets(m.rows(), k);
  IntMatrix out(subsets.size(), subsets.size());
  IntMatrix minor(k, k);
  for (std::size_t r = 0; r < subsets.size(); ++r)
    for (std::size_t c = 0; c < subsets.size(); ++c) {
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) minor(i, j) = m(subsets[r][i], subsets[c][j]);
      out(r, c) = determinant(minor);
    }
  return out;
}

}  // namespace resnil
