#include "resnil/lattice.hpp"

#include "resnil/error.hpp"

#include <algorithm>

namespace resnil {

namespace {

// Extended gcd with g >= 0 and x*a + y*b = g.
void ext_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
}

// Columns (c1, c2) <- (x*c1 + y*c2, -b/g*c1 + a/g*c2): determinant 1.
// Unimodular 2x2 step (x y; u v) sending (a, b) to (g, 0). When a | b this is a
// plain elimination that leaves the pivot line untouched; mpz_gcdext may
// otherwise swap the two lines when |a| = |b|, which would let the Smith loop
// cycle.
void reduction_step(const Int& a, const Int& b, Int& x, Int& y, Int& u, Int& v) {
  if (a != 0 && divides(a, b)) {
    x = 1;
    y = 0;
    u = -divexact(b, a);
    v = 1;
    return;
  }
  Int g;
  ext_gcd(a, b, g, x, y);
  u = -divexact(b, g);
  v = divexact(a, g);
}

void combine_columns(IntMatrix& m, std::size_t c1, std::size_t c2, const Int& x, const Int& y, const Int& u,
                     const Int& v) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int p = m(i, c1), q = m(i, c2);
    m(i, c1) = x * p + y * q;
    m(i, c2) = u * p + v * q;
  }
}

void combine_rows(IntMatrix& m, std::size_t r1, std::size_t r2, const Int& x, const Int& y, const Int& u,
                  const Int& v) {
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Int p = m(r1, j), q = m(r2, j);
    m(r1, j) = x * p + y * q;
    m(r2, j) = u * p + v * q;
  }
}

void swap_columns(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t i = 0; i < m.rows(); ++i) std::swap(m(i, a), m(i, b));
}

void swap_rows(IntMatrix& m, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

}  // namespace

HermiteResult hermite_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.cols());
  std::size_t pc = 0;
  for (std::size_t r = 0; r < h.rows() && pc < h.cols(); ++r) {
    for (std::size_t j = pc + 1; j < h.cols(); ++j) {
      if (h(r, j) == 0) continue;
      Int a = h(r, pc), b = h(r, j), g, x, y;
      ext_gcd(a, b, g, x, y);
      Int cu = -divexact(b, g), cv = divexact(a, g);
      combine_columns(h, pc, j, x, y, cu, cv);
      combine_columns(u, pc, j, x, y, cu, cv);
    }
    if (h(r, pc) == 0) continue;
    if (h(r, pc) < 0) {
      for (std::size_t i = 0; i < h.rows(); ++i) h(i, pc) = -h(i, pc);
      for (std::size_t i = 0; i < u.rows(); ++i) u(i, pc) = -u(i, pc);
    }
    const Int pivot = h(r, pc);
    for (std::size_t j = 0; j < pc; ++j) {
      Int q;
      mpz_fdiv_q(q.get_mpz_t(), h(r, j).get_mpz_t(), pivot.get_mpz_t());
      if (q == 0) continue;
      for (std::size_t i = 0; i < h.rows(); ++i) h(i, j) -= q * h(i, pc);
      for (std::size_t i = 0; i < u.rows(); ++i) u(i, j) -= q * u(i, pc);
    }
    ++pc;
  }
  return {std::move(h), std::move(u)};
}

SmithForm smith_form(const IntMatrix& m) {
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t steps = std::min(rows, cols);
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      // Move a nonzero entry of least magnitude to (t, t).
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (bi == rows || abs_int(d(i, j)) < abs_int(d(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) break;
      if (bi != t) {
        swap_rows(d, t, bi);
        swap_rows(u, t, bi);
      }
      if (bj != t) {
        swap_columns(d, t, bj);
        swap_columns(v, t, bj);
      }
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int x, y, cu, cv;
        reduction_step(d(t, t), d(i, t), x, y, cu, cv);
        combine_rows(d, t, i, x, y, cu, cv);
        combine_rows(u, t, i, x, y, cu, cv);
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int x, y, cu, cv;
        reduction_step(d(t, t), d(t, j), x, y, cu, cv);
        combine_columns(d, t, j, x, y, cu, cv);
        combine_columns(v, t, j, x, y, cu, cv);
      }
      for (std::size_t i = t + 1; i < rows && clean; ++i)
        if (d(i, t) != 0) clean = false;
      if (!clean) continue;
      // Enforce d(t,t) | every remaining entry by folding an offending row in.
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (!divides(d(t, t), d(i, j))) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      for (std::size_t j = 0; j < cols; ++j) d(t, j) += d(bad, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) += u(bad, j);
    }
    if (d(t, t) < 0) {
      for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
      for (std::size_t j = 0; j < rows; ++j) u(t, j) = -u(t, j);
    }
  }
  SmithForm out{d, u, v, {}};
  for (std::size_t t = 0; t < steps; ++t) out.elementary_divisors.push_back(d(t, t));
  return out;
}

SubLattice SubLattice::generated_by(const IntMatrix& generators) {
  SubLattice l;
  l.ambient_rank_ = generators.rows();
  IntMatrix h = hermite_form(generators).H;
  std::size_t r = 0;
  while (r < h.cols()) {
    bool zero = true;
    for (std::size_t i = 0; i < h.rows() && zero; ++i)
      if (h(i, r) != 0) zero = false;
    if (zero) break;
    ++r;
  }
  l.basis_ = IntMatrix(h.rows(), r);
  for (std::size_t i = 0; i < h.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j) l.basis_(i, j) = h(i, j);
  for (std::size_t j = 0; j < r; ++j) {
    std::size_t i = 0;
    while (l.basis_(i, j) == 0) ++i;
    l.pivot_rows_.push_back(i);
  }
  if (r > 0) {
    for (const Int& e : smith_form(l.basis_).elementary_divisors)
      if (e != 0) l.divisors_.push_back(e);
  }
  return l;
}

bool SubLattice::is_full() const {
  if (rank() != ambient_rank_) return false;
  for (const Int& d : divisors_)
    if (d != 1) return false;
  return true;
}

std::optional<Int> SubLattice::index() const {
  if (rank() != ambient_rank_) return std::nullopt;
  Int idx = 1;
  for (std::size_t j = 0; j < rank(); ++j) idx *= basis_(pivot_rows_[j], j);
  return idx;
}

bool SubLattice::contains(const std::vector<Int>& v) const {
  if (v.size() != ambient_rank_) throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient rank");
  std::vector<Int> rest = v;
  std::size_t next_pivot = 0;
  for (std::size_t i = 0; i < ambient_rank_; ++i) {
    if (next_pivot < rank() && pivot_rows_[next_pivot] == i) {
      const std::size_t j = next_pivot++;
      const Int& p = basis_(i, j);
      if (!divides(p, rest[i])) return false;
      Int q = divexact(rest[i], p);
      for (std::size_t r = i; r < ambient_rank_; ++r) rest[r] -= q * basis_(r, j);
    } else if (rest[i] != 0) {
      return false;
    }
  }
  return true;
}

bool lattice_contains(const SubLattice& lattice, const std::vector<Int>& v) { return lattice.contains(v); }

std::vector<SubLattice> lattice_chain(const IntMatrix& a, unsigned bound) {
  if (!is_unimodular(a)) throw Error(ErrorKind::NotUnimodular, "lattice chain needs |det A| = 1");
  const IntMatrix step = a - IntMatrix::identity(a.rows());
  std::vector<SubLattice> chain;
  IntMatrix power = IntMatrix::identity(a.rows());
  for (unsigned k = 2; k <= bound + 1; ++k) {
    power = step * power;
    chain.push_back(SubLattice::generated_by(power));
  }
  return chain;
}

}  // namespace resnil
