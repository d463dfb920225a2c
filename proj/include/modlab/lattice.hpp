#pragma once

#include <optional>

#include "modlab/solve.hpp"

namespace modlab {

/// Rows of the relation lattice of a moduli profile: m_i * e_i for m_i >= 1.
inline std::vector<Vec> relation_rows(const Vec& moduli) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < moduli.size(); ++i)
    if (moduli[i] != 0) rows.push_back(scale_vec(moduli[i], unit_vec(moduli.size(), i)));
  return rows;
}

/// Canonical basis (HNF rows) of the sublattice generated by the given
/// vectors together with the relation lattice of the moduli profile.
/// Two generating sets yield identical output iff they generate the same
/// subgroup of the presented group.
inline IntMatrix canonical_lattice(const std::vector<Vec>& generators, const Vec& moduli) {
  std::vector<Vec> rows = generators;
  for (Vec& rel : relation_rows(moduli)) rows.push_back(std::move(rel));
  return hnf_rows(IntMatrix::from_rows(rows, moduli.size()));
}

inline bool lattice_contains(const IntMatrix& hnf, const Vec& v) {
  Vec w = v;
  for (std::size_t i = 0; i < hnf.rows(); ++i) {
    std::size_t p = 0;
    while (p < hnf.cols() && hnf.at(i, p) == 0) ++p;
    if (p == hnf.cols()) continue;
    if (!divides(hnf.at(i, p), w[p])) return false;
    Int q = w[p] / hnf.at(i, p);
    if (q != 0)
      for (std::size_t j = 0; j < hnf.cols(); ++j) w[j] -= q * hnf.at(i, j);
  }
  return is_zero_vec(w);
}

inline IntMatrix lattice_sum(const IntMatrix& a, const IntMatrix& b) {
  std::vector<Vec> rows = a.row_list();
  for (Vec& r : b.row_list()) rows.push_back(std::move(r));
  return hnf_rows(IntMatrix::from_rows(rows, a.cols()));
}

/// Intersection of two row lattices in Z^n.
inline IntMatrix lattice_intersect(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.cols();
  const std::size_t ra = a.rows(), rb = b.rows();
  // Solve u A = w B: column-kernel of the n x (ra+rb) matrix [A^T | -B^T].
  IntMatrix stacked(n, ra + rb);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked.at(j, i) = a.at(i, j);
  for (std::size_t i = 0; i < rb; ++i)
    for (std::size_t j = 0; j < n; ++j) stacked.at(j, ra + i) = -b.at(i, j);
  IntMatrix ker = kernel_basis(stacked);
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < ker.rows(); ++k) {
    Vec full = ker.row(k);
    Vec u(full.begin(), full.begin() + ra);
    rows.push_back(a.apply_row(u));
  }
  return hnf_rows(IntMatrix::from_rows(rows, n));
}

inline bool lattices_equal(const IntMatrix& a, const IntMatrix& b) { return a == b; }

/// Exponent of Z^n / L when L has full rank: the least d >= 1 with d*Z^n
/// contained in L. Returns nullopt when rank(L) < n.
inline std::optional<Int> full_rank_exponent(const IntMatrix& hnf, std::size_t n) {
  if (n == 0) return Int(1);
  if (hnf.rows() < n) return std::nullopt;
  SmithResult s = smith_normal_form(hnf);
  Int d = s.d.at(n - 1, n - 1);
  if (d == 0) return std::nullopt;
  return d;
}

}  // namespace modlab
