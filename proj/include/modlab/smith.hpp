#pragma once

#include <optional>
#include <stdexcept>

#include "modlab/check.hpp"
#include "modlab/matrix.hpp"

namespace modlab {

struct SmithResult {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // rows x cols, diagonal with d1 | d2 | ...
  IntMatrix v;  // cols x cols, unimodular
};

namespace detail {

// Pivot choice: smallest nonzero absolute value in the trailing block,
// ties broken by lowest row index, then lowest column index.
inline bool find_pivot(const IntMatrix& d, std::size_t t, std::size_t& pi, std::size_t& pj) {
  bool found = false;
  Int best = 0;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const Int& x = d.at(i, j);
      if (x == 0) continue;
      Int a = int_abs(x);
      if (!found || a < best) {
        found = true;
        best = a;
        pi = i;
        pj = j;
      }
    }
  return found;
}

inline bool is_lone(const IntMatrix& d, std::size_t t) {
  for (std::size_t i = t + 1; i < d.rows(); ++i)
    if (d.at(i, t) != 0) return false;
  for (std::size_t j = t + 1; j < d.cols(); ++j)
    if (d.at(t, j) != 0) return false;
  return true;
}

}  // namespace detail

/// Smith normal form: returns U, D, V with U*A*V = D, U and V unimodular,
/// D diagonal with non-negative entries satisfying d1 | d2 | ...
inline SmithResult smith_normal_form(const IntMatrix& a) {
  const std::size_t m = a.rows(), n = a.cols();
  SmithResult r{IntMatrix::identity(m), a, IntMatrix::identity(n)};
  IntMatrix& d = r.d;
  IntMatrix& u = r.u;
  IntMatrix& v = r.v;

  const std::size_t steps = m < n ? m : n;
  for (std::size_t t = 0; t < steps; ++t) {
    for (;;) {
      std::size_t pi = t, pj = t;
      if (!detail::find_pivot(d, t, pi, pj)) break;
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      // Clear the pivot column and row; repeat while remainders appear.
      for (std::size_t i = t + 1; i < m; ++i) {
        if (d.at(i, t) == 0) continue;
        Int q = floor_div(d.at(i, t), d.at(t, t));
        d.add_row_multiple(i, t, -q);
        u.add_row_multiple(i, t, -q);
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (d.at(t, j) == 0) continue;
        Int q = floor_div(d.at(t, j), d.at(t, t));
        d.add_col_multiple(j, t, -q);
        v.add_col_multiple(j, t, -q);
      }
      if (!detail::is_lone(d, t)) continue;

      // Divisibility sweep: d[t][t] must divide the trailing block.
      bool divides_all = true;
      for (std::size_t i = t + 1; i < m && divides_all; ++i)
        for (std::size_t j = t + 1; j < n && divides_all; ++j)
          if (!divides(d.at(t, t), d.at(i, j))) {
            d.add_row_multiple(t, i, 1);
            u.add_row_multiple(t, i, 1);
            divides_all = false;
          }
      if (divides_all) break;
    }
    if (d.at(t, t) < 0) {
      d.negate_row(t);
      u.negate_row(t);
    }
  }

  MODLAB_CHECK(u * a * v == d, "smith transform mismatch");
  return r;
}

/// Row Hermite normal form of the lattice spanned by the rows of g.
/// Unique: pivots positive, entries above a pivot reduced into [0, pivot),
/// zero rows dropped. Two generating sets span the same row lattice iff
/// their forms are identical.
inline IntMatrix hnf_rows(IntMatrix g) {
  const std::size_t m = g.rows(), n = g.cols();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    for (;;) {
      // pivot: smallest nonzero absolute value in this column at rows >= r
      std::size_t pi = r;
      bool found = false;
      Int best = 0;
      for (std::size_t i = r; i < m; ++i) {
        if (g.at(i, col) == 0) continue;
        Int a = int_abs(g.at(i, col));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
        }
      }
      if (!found) break;
      g.swap_rows(r, pi);
      if (g.at(r, col) < 0) g.negate_row(r);
      bool clean = true;
      for (std::size_t i = r + 1; i < m; ++i) {
        if (g.at(i, col) == 0) continue;
        Int q = floor_div(g.at(i, col), g.at(r, col));
        g.add_row_multiple(i, r, -q);
        if (g.at(i, col) != 0) clean = false;
      }
      if (clean) {
        for (std::size_t i = 0; i < r; ++i) {
          Int q = floor_div(g.at(i, col), g.at(r, col));
          if (q != 0) g.add_row_multiple(i, r, -q);
        }
        ++r;
        break;
      }
    }
  }
  return g.submatrix_rows(0, r);
}

/// Basis of {z : A z = 0} as rows of the returned matrix (vectors in Z^cols).
inline IntMatrix kernel_basis(const IntMatrix& a) {
  SmithResult s = smith_normal_form(a);
  const std::size_t n = a.cols();
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < n; ++j) {
    bool free_dir = j >= a.rows() || s.d.at(j, j) == 0;
    if (free_dir) basis.push_back(s.v.col(j));
  }
  return hnf_rows(IntMatrix::from_rows(basis, n));
}

/// Inverse of a unimodular matrix (throws if not unimodular).
inline IntMatrix inverse_unimodular(const IntMatrix& v) {
  SmithResult s = smith_normal_form(v);
  if (!s.d.is_identity()) throw std::invalid_argument("matrix is not unimodular");
  return s.v * s.u;
}

}  // namespace modlab
