#pragma once

#include <optional>
#include <stdexcept>
#include <utility>

#include "modlab/smith.hpp"

namespace modlab {

/// Particular solution plus kernel lattice of an integer linear system.
struct IntegerSolution {
  Vec particular;     // one solution of M z = b
  IntMatrix kernel;   // rows span {z : M z = 0}
};

/// Complete solution of M z = b over the integers, or nullopt if none exists.
inline std::optional<IntegerSolution> integer_solve(const IntMatrix& m, const Vec& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("integer_solve dimension mismatch");
  SmithResult s = smith_normal_form(m);
  Vec ub = s.u.apply(b);
  const std::size_t ncols = m.cols();
  Vec w(ncols, Int(0));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int di = (i < ncols) ? s.d.at(i, i) : Int(0);
    if (di == 0) {
      if (ub[i] != 0) return std::nullopt;
    } else {
      if (!divides(di, ub[i])) return std::nullopt;
      w[i] = ub[i] / di;
    }
  }
  IntegerSolution sol;
  sol.particular = s.v.apply(w);
  std::vector<Vec> hom;
  for (std::size_t j = 0; j < ncols; ++j)
    if (j >= m.rows() || s.d.at(j, j) == 0) hom.push_back(s.v.col(j));
  sol.kernel = hnf_rows(IntMatrix::from_rows(hom, ncols));
  return sol;
}

/// Solution set of a congruence system A x == b (componentwise modulo
/// target_moduli, 0 meaning exact equality over Z). Mixed moduli are lifted
/// to one integer system by adjoining a slack column per finite congruence,
/// then solved with a single Smith reduction.
struct SolutionSet {
  enum class Status { Empty, Affine };
  Status status = Status::Empty;
  Vec particular;                 // reduced mod source moduli when compatible
  IntMatrix homogeneous_basis;    // rows span {x : A x == 0 mod target}
  bool torsion_compatible = false;  // source relations lie in the homogeneous lattice

  bool empty() const { return status == Status::Empty; }
};

inline SolutionSet solve_affine(const IntMatrix& a, const Vec& b, const Vec& source_moduli,
                                const Vec& target_moduli) {
  if (a.cols() != source_moduli.size() || a.rows() != target_moduli.size() ||
      b.size() != a.rows())
    throw std::invalid_argument("solve_affine dimension mismatch");
  const std::size_t s = a.cols(), t = a.rows();

  std::size_t slacks = 0;
  for (const Int& m : target_moduli)
    if (m != 0) ++slacks;
  IntMatrix lifted(t, s + slacks);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < s; ++j) lifted.at(i, j) = a.at(i, j);
  std::size_t sc = s;
  for (std::size_t i = 0; i < t; ++i)
    if (target_moduli[i] != 0) lifted.at(i, sc++) = target_moduli[i];

  SolutionSet out;
  auto sol = integer_solve(lifted, b);
  if (!sol) return out;
  out.status = SolutionSet::Status::Affine;
  out.particular = Vec(sol->particular.begin(), sol->particular.begin() + s);

  std::vector<Vec> hom;
  for (std::size_t i = 0; i < sol->kernel.rows(); ++i) {
    Vec row = sol->kernel.row(i);
    hom.emplace_back(row.begin(), row.begin() + s);
  }
  out.homogeneous_basis = hnf_rows(IntMatrix::from_rows(hom, s));

  // The solution set descends to the source group iff the source relations
  // are themselves homogeneous solutions.
  out.torsion_compatible = true;
  for (std::size_t j = 0; j < s && out.torsion_compatible; ++j) {
    if (source_moduli[j] == 0) continue;
    Vec rel = scale_vec(source_moduli[j], unit_vec(s, j));
    Vec probe = a.apply(rel);
    for (std::size_t i = 0; i < t; ++i)
      if (reduce_coord(probe[i], target_moduli[i]) != 0) out.torsion_compatible = false;
  }
  if (out.torsion_compatible) out.particular = reduce_vec(out.particular, source_moduli);
  return out;
}

/// Finitely generated abelian group presented as L / K where L is a lattice
/// in Z^n (rows of `basis`, in HNF) and K a sublattice. Gives invariant
/// factors, canonical coordinates and enumeration.
class AbelianQuotient {
 public:
  AbelianQuotient() = default;

  /// basis: HNF rows spanning L. sub_rows: vectors spanning K, each a member of L.
  AbelianQuotient(IntMatrix basis, const std::vector<Vec>& sub_rows) : b_(std::move(basis)) {
    const std::size_t r = b_.rows();
    std::vector<Vec> coords_rows;
    for (const Vec& v : sub_rows) {
      auto c = basis_coords(v);
      if (!c) throw std::invalid_argument("sublattice generator outside the lattice");
      coords_rows.push_back(*c);
    }
    IntMatrix c = IntMatrix::from_rows(coords_rows, r);
    SmithResult s = smith_normal_form(c);
    v_ = s.v;
    vinv_ = inverse_unimodular(v_);
    d_ = Vec(r, Int(0));
    for (std::size_t k = 0; k < r && k < c.rows(); ++k) d_[k] = s.d.at(k, k);
  }

  const Vec& invariant_factors() const { return d_; }
  std::size_t rank() const { return b_.rows(); }
  const IntMatrix& lattice_basis() const { return b_; }

  bool finite() const { return all_finite(d_); }
  Int size() const { return product(d_); }

  /// Ambient vector of the element with canonical coordinates y.
  Vec element(const Vec& y) const {
    Vec c = vinv_.apply_row(y);
    return b_.apply_row(c);
  }

  /// Canonical coordinates of an ambient vector (must lie in L).
  Vec coords(const Vec& v) const {
    auto c = basis_coords(v);
    if (!c) throw std::invalid_argument("vector outside the lattice");
    Vec y = v_.apply_row(*c);
    for (std::size_t k = 0; k < y.size(); ++k) y[k] = reduce_coord(y[k], d_[k]);
    return y;
  }

  bool lattice_contains(const Vec& v) const { return basis_coords(v).has_value(); }

  /// All canonical coordinate tuples (finite case only).
  std::vector<Vec> enumerate_coords() const {
    if (!finite()) throw std::logic_error("enumerate_coords on infinite quotient");
    std::vector<Vec> out;
    Vec y(d_.size(), Int(0));
    for (;;) {
      out.push_back(y);
      std::size_t k = d_.size();
      while (k > 0) {
        --k;
        y[k] += 1;
        if (y[k] < d_[k]) break;
        y[k] = 0;
        if (k == 0) return out;
      }
      if (d_.empty()) return out;
    }
  }

  /// Coefficients of v over the HNF rows of the lattice basis, if v lies in it.
  std::optional<Vec> basis_coords(Vec v) const {
    Vec c(b_.rows(), Int(0));
    for (std::size_t i = 0; i < b_.rows(); ++i) {
      std::size_t p = 0;
      while (p < b_.cols() && b_.at(i, p) == 0) ++p;
      if (p == b_.cols()) continue;
      if (!divides(b_.at(i, p), v[p])) return std::nullopt;
      Int q = v[p] / b_.at(i, p);
      c[i] = q;
      if (q != 0)
        for (std::size_t j = 0; j < b_.cols(); ++j) v[j] -= q * b_.at(i, j);
    }
    if (!is_zero_vec(v)) return std::nullopt;
    return c;
  }

 private:
  IntMatrix b_;
  IntMatrix v_, vinv_;
  Vec d_;
};

}  // namespace modlab
