#pragma once

#include <memory>
#include <optional>
#include <string>

#include "modlab/check.hpp"
#include "modlab/lattice.hpp"

namespace modlab {

/// Finite-rank associative ring with identity, given by additive moduli and
/// multiplication structure constants on the additive basis.
/// table[i][j] is the basis expansion of b_i * b_j.
struct RingPresentation {
  std::string name;
  Vec moduli;
  std::vector<std::vector<Vec>> table;
  Vec one;

  std::size_t dim() const { return moduli.size(); }
  bool finite() const { return all_finite(moduli); }
  Int order() const { return product(moduli); }

  Vec reduce(const Vec& v) const { return reduce_vec(v, moduli); }

  Vec mult(const Vec& x, const Vec& y) const {
    Vec r(dim(), Int(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < dim(); ++j) {
        if (y[j] == 0) continue;
        Int c = x[i] * y[j];
        for (std::size_t k = 0; k < dim(); ++k) r[k] += c * table[i][j][k];
      }
    }
    return reduce(r);
  }

  /// Matrix of left multiplication by x (column convention: y -> x*y).
  IntMatrix left_mult_matrix(const Vec& x) const {
    IntMatrix m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j) {
      Vec prod = mult(x, unit_vec(dim(), j));
      for (std::size_t k = 0; k < dim(); ++k) m.at(k, j) = prod[k];
    }
    return m;
  }

  /// Matrix of right multiplication by y (column convention: x -> x*y).
  IntMatrix right_mult_matrix(const Vec& y) const {
    IntMatrix m(dim(), dim());
    for (std::size_t i = 0; i < dim(); ++i) {
      Vec prod = mult(unit_vec(dim(), i), y);
      for (std::size_t k = 0; k < dim(); ++k) m.at(k, i) = prod[k];
    }
    return m;
  }

  Vec power(Vec a, unsigned long n) const {
    Vec r = reduce(one);
    while (n) {
      if (n & 1) r = mult(r, a);
      a = mult(a, a);
      n >>= 1;
    }
    return r;
  }

  std::vector<Vec> enumerate_elements() const {
    if (!finite()) throw std::logic_error("enumerating an infinite ring");
    std::vector<Vec> out;
    Vec x(dim(), Int(0));
    for (;;) {
      out.push_back(x);
      std::size_t k = dim();
      while (k > 0) {
        --k;
        x[k] += 1;
        if (x[k] < moduli[k]) break;
        x[k] = 0;
        if (k == 0) return out;
      }
      if (dim() == 0) return out;
    }
  }

  bool operator==(const RingPresentation& o) const {
    return moduli == o.moduli && table == o.table && one == o.one;
  }
};

using RingHandle = std::shared_ptr<const RingPresentation>;

struct ValidationIssue {
  std::string what;
};

/// Accepts iff torsion compatibility, unit laws and associativity hold on all
/// basis pairs/triples. Reports the first violated identity with witnesses.
inline std::optional<ValidationIssue> validate_ring(const RingPresentation& r) {
  const std::size_t d = r.dim();
  if (r.table.size() != d) return ValidationIssue{"table has wrong outer size"};
  for (std::size_t i = 0; i < d; ++i) {
    if (r.table[i].size() != d) return ValidationIssue{"table row " + std::to_string(i) + " has wrong size"};
    for (std::size_t j = 0; j < d; ++j)
      if (r.table[i][j].size() != d)
        return ValidationIssue{"table entry (" + std::to_string(i) + "," + std::to_string(j) +
                               ") has wrong length"};
  }
  if (r.one.size() != d) return ValidationIssue{"unit vector has wrong length"};
  for (const Int& m : r.moduli)
    if (m < 0) return ValidationIssue{"negative modulus"};

  // bilinearity over the additive relations: m_i * (b_i b_j) = 0 etc.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      for (const Int& side : {r.moduli[i], r.moduli[j]}) {
        if (side == 0) continue;
        Vec scaled = r.reduce(scale_vec(side, r.table[i][j]));
        if (!is_zero_vec(scaled))
          return ValidationIssue{"product b" + std::to_string(i) + "*b" + std::to_string(j) +
                                 " is incompatible with the additive relations"};
      }
    }

  // unit laws on basis elements
  for (std::size_t j = 0; j < d; ++j) {
    Vec e = unit_vec(d, j);
    if (r.mult(r.one, e) != r.reduce(e))
      return ValidationIssue{"one*b" + std::to_string(j) + " != b" + std::to_string(j)};
    if (r.mult(e, r.one) != r.reduce(e))
      return ValidationIssue{"b" + std::to_string(j) + "*one != b" + std::to_string(j)};
  }

  // associativity on basis triples
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        Vec left = r.mult(r.table[i][j], unit_vec(d, k));
        Vec right = r.mult(unit_vec(d, i), r.table[j][k]);
        if (left != right)
          return ValidationIssue{"associativity fails on triple (" + std::to_string(i) + "," +
                                 std::to_string(j) + "," + std::to_string(k) + ")"};
      }
  return std::nullopt;
}

/// Right module over a presented ring: additive moduli plus one action matrix
/// per ring basis element (column convention, m*b_k = A_k x).
struct ModulePresentation {
  std::string name;
  RingHandle ring;
  Vec moduli;
  std::vector<IntMatrix> action;

  std::size_t ngens() const { return moduli.size(); }
  bool finite() const { return all_finite(moduli); }
  Int order() const { return product(moduli); }

  Vec reduce(const Vec& v) const { return reduce_vec(v, moduli); }

  /// x * r for a ring element r: sum of r_k * A_k applied to x.
  Vec act(const Vec& x, const Vec& r) const {
    Vec y(ngens(), Int(0));
    for (std::size_t k = 0; k < action.size(); ++k) {
      if (r[k] == 0) continue;
      Vec part = action[k].apply(x);
      for (std::size_t i = 0; i < ngens(); ++i) y[i] += r[k] * part[i];
    }
    return reduce(y);
  }

  IntMatrix action_of(const Vec& r) const {
    IntMatrix m(ngens(), ngens());
    for (std::size_t k = 0; k < action.size(); ++k) {
      if (r[k] == 0) continue;
      for (std::size_t i = 0; i < ngens(); ++i)
        for (std::size_t j = 0; j < ngens(); ++j) m.at(i, j) += r[k] * action[k].at(i, j);
    }
    return m;
  }

  /// HNF rows of the relation lattice (the zero submodule).
  IntMatrix zero_lattice() const { return canonical_lattice({}, moduli); }

  /// HNF rows of the full lattice (the module itself): always the identity.
  IntMatrix full_lattice() const {
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < ngens(); ++i) rows.push_back(unit_vec(ngens(), i));
    return canonical_lattice(rows, moduli);
  }

  std::vector<Vec> enumerate_elements() const {
    if (!finite()) throw std::logic_error("enumerating an infinite module");
    std::vector<Vec> out;
    Vec x(ngens(), Int(0));
    for (;;) {
      out.push_back(x);
      std::size_t k = ngens();
      while (k > 0) {
        --k;
        x[k] += 1;
        if (x[k] < moduli[k]) break;
        x[k] = 0;
        if (k == 0) return out;
      }
      if (ngens() == 0) return out;
    }
  }

  bool operator==(const ModulePresentation& o) const {
    return moduli == o.moduli && action == o.action && *ring == *o.ring;
  }
};

using ModuleHandle = std::shared_ptr<const ModulePresentation>;

/// Two integer matrices act identically on the presented group iff all
/// entries of row i agree modulo moduli[i].
inline bool matrices_act_equal(const IntMatrix& a, const IntMatrix& b, const Vec& row_moduli) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (reduce_coord(a.at(i, j) - b.at(i, j), row_moduli[i]) != 0) return false;
  return true;
}

inline std::optional<ValidationIssue> validate_module(const ModulePresentation& m) {
  const std::size_t n = m.ngens();
  const std::size_t d = m.ring->dim();
  if (m.action.size() != d) return ValidationIssue{"need one action matrix per ring basis element"};
  for (std::size_t k = 0; k < d; ++k)
    if (m.action[k].rows() != n || m.action[k].cols() != n)
      return ValidationIssue{"action matrix " + std::to_string(k) + " has wrong shape"};
  for (const Int& mm : m.moduli)
    if (mm < 0) return ValidationIssue{"negative modulus"};

  // module torsion: m_j * g_j = 0 forces m_j * (g_j b_k) = 0
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t j = 0; j < n; ++j) {
      if (m.moduli[j] == 0) continue;
      Vec img = m.reduce(scale_vec(m.moduli[j], m.action[k].col(j)));
      if (!is_zero_vec(img))
        return ValidationIssue{"action of b" + std::to_string(k) +
                               " breaks the order of generator " + std::to_string(j)};
    }

  // ring torsion: r_k * b_k = 0 in R forces x * (r_k b_k) = 0
  for (std::size_t k = 0; k < d; ++k) {
    if (m.ring->moduli[k] == 0) continue;
    IntMatrix scaled(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) scaled.at(i, j) = m.ring->moduli[k] * m.action[k].at(i, j);
    if (!matrices_act_equal(scaled, IntMatrix(n, n), m.moduli))
      return ValidationIssue{"action of b" + std::to_string(k) +
                             " ignores the additive order of the ring basis element"};
  }

  // unitarity: action(one) = identity
  if (!matrices_act_equal(m.action_of(m.ring->one), IntMatrix::identity(n), m.moduli))
    return ValidationIssue{"action of the ring identity is not the identity map"};

  // associativity of the action: x*(b_i b_j) = (x*b_i)*b_j
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      IntMatrix lhs = m.action_of(m.ring->table[i][j]);
      IntMatrix rhs = m.action[j] * m.action[i];
      if (!matrices_act_equal(lhs, rhs, m.moduli))
        return ValidationIssue{"action is not associative on ring basis pair (" +
                               std::to_string(i) + "," + std::to_string(j) + ")"};
    }
  return std::nullopt;
}

inline RingHandle make_ring(RingPresentation r) {
  if (auto issue = validate_ring(r))
    throw std::invalid_argument("invalid ring '" + r.name + "': " + issue->what);
  return std::make_shared<const RingPresentation>(std::move(r));
}

inline ModuleHandle make_module(ModulePresentation m) {
  if (auto issue = validate_module(m))
    throw std::invalid_argument("invalid module '" + m.name + "': " + issue->what);
  return std::make_shared<const ModulePresentation>(std::move(m));
}

/// The ring as a right module over itself (right regular action).
inline ModuleHandle ring_as_module(const RingHandle& r) {
  if (r->dim() == 0) throw std::invalid_argument("ring with empty basis has no identity");
  ModulePresentation m;
  m.name = r->name + "-regular";
  m.ring = r;
  m.moduli = r->moduli;
  for (std::size_t j = 0; j < r->dim(); ++j)
    m.action.push_back(r->right_mult_matrix(unit_vec(r->dim(), j)));
  return make_module(std::move(m));
}

struct DirectSum {
  ModuleHandle module;
  IntMatrix embed1, embed2;   // columns embed the summand generators
  IntMatrix project1, project2;
};

inline DirectSum direct_sum(const ModuleHandle& m1, const ModuleHandle& m2) {
  if (!(*m1->ring == *m2->ring)) throw std::invalid_argument("direct sum over different rings");
  const std::size_t n1 = m1->ngens(), n2 = m2->ngens();
  ModulePresentation m;
  m.name = m1->name + "+" + m2->name;
  m.ring = m1->ring;
  m.moduli = m1->moduli;
  m.moduli.insert(m.moduli.end(), m2->moduli.begin(), m2->moduli.end());
  for (std::size_t k = 0; k < m1->ring->dim(); ++k) {
    IntMatrix a(n1 + n2, n1 + n2);
    for (std::size_t i = 0; i < n1; ++i)
      for (std::size_t j = 0; j < n1; ++j) a.at(i, j) = m1->action[k].at(i, j);
    for (std::size_t i = 0; i < n2; ++i)
      for (std::size_t j = 0; j < n2; ++j) a.at(n1 + i, n1 + j) = m2->action[k].at(i, j);
    m.action.push_back(std::move(a));
  }
  DirectSum out;
  out.module = make_module(std::move(m));
  out.embed1 = IntMatrix(n1 + n2, n1);
  out.embed2 = IntMatrix(n1 + n2, n2);
  out.project1 = IntMatrix(n1, n1 + n2);
  out.project2 = IntMatrix(n2, n1 + n2);
  for (std::size_t i = 0; i < n1; ++i) {
    out.embed1.at(i, i) = 1;
    out.project1.at(i, i) = 1;
  }
  for (std::size_t i = 0; i < n2; ++i) {
    out.embed2.at(n1 + i, i) = 1;
    out.project2.at(i, n1 + i) = 1;
  }
  return out;
}

/// Canonical-form sublattice of a module, closed under the ring action.
struct Submodule {
  ModuleHandle ambient;
  IntMatrix basis;  // HNF rows, contains the relation lattice

  bool contains(const Vec& v) const { return lattice_contains(basis, v); }
  bool operator==(const Submodule& o) const { return basis == o.basis; }
  bool operator<(const Submodule& o) const { return basis < o.basis; }
  bool is_zero() const { return basis == ambient->zero_lattice(); }
  bool is_full() const { return basis == ambient->full_lattice(); }
};

inline bool lattice_closed_under_action(const ModulePresentation& m, const IntMatrix& hnf) {
  for (std::size_t i = 0; i < hnf.rows(); ++i)
    for (const IntMatrix& a : m.action)
      if (!lattice_contains(hnf, a.apply(hnf.row(i)))) return false;
  return true;
}

/// Smallest submodule containing the given vectors. Since products of action
/// matrices expand linearly through the structure constants, one round of
/// basis actions already closes the span.
inline Submodule submodule_from_generators(const ModuleHandle& m, const std::vector<Vec>& gens) {
  std::vector<Vec> rows;
  for (const Vec& g : gens) {
    rows.push_back(g);
    for (const IntMatrix& a : m->action) rows.push_back(a.apply(g));
  }
  Submodule s{m, canonical_lattice(rows, m->moduli)};
  MODLAB_CHECK(lattice_closed_under_action(*m, s.basis), "generated span not action-closed");
  return s;
}

inline Submodule zero_submodule(const ModuleHandle& m) { return Submodule{m, m->zero_lattice()}; }
inline Submodule full_submodule(const ModuleHandle& m) { return Submodule{m, m->full_lattice()}; }

inline Submodule cyclic_submodule(const ModuleHandle& m, const Vec& g) {
  return submodule_from_generators(m, {g});
}

/// Number of elements of a submodule (finite case), via the quotient by the
/// relation lattice.
inline Int submodule_order(const Submodule& s) {
  AbelianQuotient q(s.basis, relation_rows(s.ambient->moduli));
  if (!q.finite()) throw std::logic_error("submodule is infinite");
  return q.size();
}

inline bool submodule_is_finite(const Submodule& s) {
  AbelianQuotient q(s.basis, relation_rows(s.ambient->moduli));
  return q.finite();
}

/// All elements of a finite submodule, as reduced ambient vectors.
inline std::vector<Vec> submodule_elements(const Submodule& s) {
  AbelianQuotient q(s.basis, relation_rows(s.ambient->moduli));
  std::vector<Vec> out;
  for (const Vec& y : q.enumerate_coords()) out.push_back(s.ambient->reduce(q.element(y)));
  return out;
}

/// Presentation of a submodule as a module in its own right.
struct RealizedModule {
  ModuleHandle module;
  IntMatrix inclusion;  // ambient_gens x new_gens: columns are generator images
  AbelianQuotient quotient;
  std::vector<std::size_t> kept;  // quotient coordinates with modulus != 1

  /// Ambient vector -> coordinates in the realized presentation.
  Vec to_coords(const Vec& ambient_vec) const {
    Vec y = quotient.coords(ambient_vec);
    Vec out;
    for (std::size_t k : kept) out.push_back(y[k]);
    return out;
  }
};

inline RealizedModule realize_submodule(const Submodule& s) {
  const ModuleHandle& amb = s.ambient;
  AbelianQuotient q(s.basis, relation_rows(amb->moduli));
  const Vec& d = q.invariant_factors();
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != 1) kept.push_back(k);

  ModulePresentation p;
  p.name = amb->name + "-sub";
  p.ring = amb->ring;
  for (std::size_t k : kept) p.moduli.push_back(d[k]);

  std::vector<Vec> gen_vectors;
  for (std::size_t k : kept) gen_vectors.push_back(q.element(unit_vec(d.size(), k)));

  for (const IntMatrix& a : amb->action) {
    IntMatrix na(kept.size(), kept.size());
    for (std::size_t c = 0; c < kept.size(); ++c) {
      Vec y = q.coords(a.apply(gen_vectors[c]));
      for (std::size_t r2 = 0; r2 < kept.size(); ++r2) na.at(r2, c) = y[kept[r2]];
    }
    p.action.push_back(std::move(na));
  }

  RealizedModule out;
  out.module = make_module(std::move(p));
  out.inclusion = IntMatrix(amb->ngens(), kept.size());
  for (std::size_t c = 0; c < kept.size(); ++c) {
    Vec v = amb->reduce(gen_vectors[c]);
    for (std::size_t i = 0; i < amb->ngens(); ++i) out.inclusion.at(i, c) = v[i];
  }
  out.quotient = std::move(q);
  out.kept = std::move(kept);
  return out;
}

/// Presentation of M/N together with the projection map.
struct QuotientModule {
  ModuleHandle module;
  IntMatrix projection;  // new_gens x ambient_gens
  AbelianQuotient quotient;
  std::vector<std::size_t> kept;

  Vec project(const Vec& ambient_vec) const { return module->reduce(projection.apply(ambient_vec)); }
};

inline QuotientModule quotient_module(const ModuleHandle& m, const Submodule& n) {
  const std::size_t ng = m->ngens();
  std::vector<Vec> id_rows;
  for (std::size_t i = 0; i < ng; ++i) id_rows.push_back(unit_vec(ng, i));
  AbelianQuotient q(IntMatrix::from_rows(id_rows, ng), n.basis.row_list());
  const Vec& d = q.invariant_factors();
  std::vector<std::size_t> kept;
  for (std::size_t k = 0; k < d.size(); ++k)
    if (d[k] != 1) kept.push_back(k);

  ModulePresentation p;
  p.name = m->name + "-quot";
  p.ring = m->ring;
  for (std::size_t k : kept) p.moduli.push_back(d[k]);

  std::vector<Vec> lifts;
  for (std::size_t k : kept) lifts.push_back(q.element(unit_vec(d.size(), k)));

  for (const IntMatrix& a : m->action) {
    IntMatrix na(kept.size(), kept.size());
    for (std::size_t c = 0; c < kept.size(); ++c) {
      Vec y = q.coords(a.apply(lifts[c]));
      for (std::size_t r2 = 0; r2 < kept.size(); ++r2) na.at(r2, c) = y[kept[r2]];
    }
    p.action.push_back(std::move(na));
  }

  QuotientModule out;
  out.module = make_module(std::move(p));
  out.projection = IntMatrix(kept.size(), ng);
  for (std::size_t j = 0; j < ng; ++j) {
    Vec y = q.coords(unit_vec(ng, j));
    for (std::size_t r2 = 0; r2 < kept.size(); ++r2) out.projection.at(r2, j) = y[kept[r2]];
  }
  out.quotient = std::move(q);
  out.kept = std::move(kept);
  return out;
}

}  // namespace modlab
