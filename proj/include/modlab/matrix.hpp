#pragma once

#include <cassert>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

#include "modlab/ints.hpp"

namespace modlab {

/// Dense matrix of arbitrary-precision integers, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, Int(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<Vec>& rows, std::size_t cols) {
    IntMatrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Int& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  Vec row(std::size_t i) const {
    Vec r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
    return r;
  }

  Vec col(std::size_t j) const {
    Vec c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
    return c;
  }

  std::vector<Vec> row_list() const {
    std::vector<Vec> rs;
    rs.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) rs.push_back(row(i));
    return rs;
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < cols_; ++k) std::swap(at(i, k), at(j, k));
  }

  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t k = 0; k < rows_; ++k) std::swap(at(k, i), at(k, j));
  }

  void negate_row(std::size_t i) {
    for (std::size_t k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
  }

  void negate_col(std::size_t j) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
  }

  /// row[dst] += c * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < cols_; ++k) at(dst, k) += c * at(src, k);
  }

  /// col[dst] += c * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& c) {
    for (std::size_t k = 0; k < rows_; ++k) at(k, dst) += c * at(k, src);
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix operator*(const IntMatrix& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    IntMatrix r(rows_, b.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const Int& a = at(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += a * b.at(k, j);
      }
    return r;
  }

  IntMatrix operator+(const IntMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw std::invalid_argument("matrix sum dimension mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] + b.e_[i];
    return r;
  }

  IntMatrix operator-(const IntMatrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw std::invalid_argument("matrix difference dimension mismatch");
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i] - b.e_[i];
    return r;
  }

  IntMatrix operator-() const {
    IntMatrix r(rows_, cols_);
    for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = -e_[i];
    return r;
  }

  /// Column-vector application: y = A x.
  Vec apply(const Vec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("apply dimension mismatch");
    Vec y(rows_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != 0) y[i] += at(i, j) * x[j];
    return y;
  }

  /// Row-vector application: y = x A.
  Vec apply_row(const Vec& x) const {
    if (x.size() != rows_) throw std::invalid_argument("apply_row dimension mismatch");
    Vec y(cols_, Int(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < cols_; ++j) y[j] += x[i] * at(i, j);
    }
    return y;
  }

  bool operator==(const IntMatrix& b) const {
    return rows_ == b.rows_ && cols_ == b.cols_ && e_ == b.e_;
  }
  bool operator!=(const IntMatrix& b) const { return !(*this == b); }

  bool operator<(const IntMatrix& b) const {
    if (rows_ != b.rows_) return rows_ < b.rows_;
    if (cols_ != b.cols_) return cols_ < b.cols_;
    for (std::size_t i = 0; i < e_.size(); ++i)
      if (e_[i] != b.e_[i]) return e_[i] < b.e_[i];
    return false;
  }

  bool is_zero() const {
    for (const Int& x : e_)
      if (x != 0) return false;
    return true;
  }

  bool is_identity() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
  }

  IntMatrix submatrix_rows(std::size_t first, std::size_t count) const {
    IntMatrix r(count, cols_);
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(first + i, j);
    return r;
  }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i) s += ", ";
      s += vec_to_string(row(i));
    }
    return s + "]";
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Int> e_;
};

/// Exact determinant via fraction-free (Bareiss) elimination.
inline Int determinant(IntMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a.at(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j);
        assert(divides(prev, num));
        a.at(i, j) = num / prev;
      }
      a.at(i, k) = 0;
    }
    prev = a.at(k, k);
  }
  return sign * a.at(n - 1, n - 1);
}

/// Reduce every entry of row i modulo moduli[i] (0 = no reduction).
inline IntMatrix reduce_rows_mod(IntMatrix m, const Vec& row_moduli) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m.at(i, j) = reduce_coord(m.at(i, j), row_moduli[i]);
  return m;
}

}  // namespace modlab
