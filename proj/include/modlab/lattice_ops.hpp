#pragma once

#include <map>
#include <set>

#include "modlab/hom.hpp"

namespace modlab {

inline Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  MODLAB_CHECK(*a.ambient == *b.ambient, "sum of submodules of different modules");
  return Submodule{a.ambient, lattice_sum(a.basis, b.basis)};
}

inline Submodule submodule_intersect(const Submodule& a, const Submodule& b) {
  MODLAB_CHECK(*a.ambient == *b.ambient, "intersection of submodules of different modules");
  return Submodule{a.ambient, lattice_intersect(a.basis, b.basis)};
}

inline bool submodules_equal(const Submodule& a, const Submodule& b) {
  MODLAB_CHECK(*a.ambient == *b.ambient, "comparing submodules of different modules");
  return a.basis == b.basis;
}

/// Certificate for the direct-summand decision.
struct SummandCertificate {
  bool yes = false;
  Homomorphism idempotent;  // e with e*e = e and image(e) = N (when yes)
};

/// Decide whether N is a direct summand of its ambient module by solving for
/// a retraction h with h restricted to N the identity and image inside N, as
/// one affine system over the endomorphism lattice. Complete and exact, also
/// on modules with free rank.
inline SummandCertificate is_direct_summand(const HomLattice& end_lattice, const Submodule& n) {
  const ModuleHandle& m = n.ambient;
  MODLAB_CHECK(*end_lattice.source() == *m, "summand test against a foreign lattice");
  const std::size_t ng = m->ngens();
  const std::size_t r = end_lattice.rank();
  const std::size_t w = n.basis.rows();  // membership witnesses per generator column

  // unknowns: r lattice coefficients, then ng*w integer witnesses
  const std::size_t unknowns = r + ng * w;
  std::vector<Vec> rows;
  Vec rhs, tmod;

  // (1) h fixes the submodule generators: h(v) == v (mod ambient moduli)
  for (std::size_t vrow = 0; vrow < n.basis.rows(); ++vrow) {
    Vec v = n.basis.row(vrow);
    std::vector<Vec> gv;
    for (std::size_t k = 0; k < r; ++k) gv.push_back(end_lattice.generators()[k].mat.apply(v));
    for (std::size_t i = 0; i < ng; ++i) {
      Vec row(unknowns, Int(0));
      for (std::size_t k = 0; k < r; ++k) row[k] = gv[k][i];
      rows.push_back(std::move(row));
      rhs.push_back(v[i]);
      tmod.push_back(m->moduli[i]);
    }
  }

  // (2) every generator image lands in N: h(e_j) = sum of witness multiples
  // of the basis rows of N, exactly over Z
  for (std::size_t j = 0; j < ng; ++j)
    for (std::size_t i = 0; i < ng; ++i) {
      Vec row(unknowns, Int(0));
      for (std::size_t k = 0; k < r; ++k) row[k] = end_lattice.generators()[k].mat.at(i, j);
      for (std::size_t t = 0; t < w; ++t) row[r + j * w + t] = -n.basis.at(t, i);
      rows.push_back(std::move(row));
      rhs.push_back(Int(0));
      tmod.push_back(Int(0));
    }

  Vec smod(unknowns, Int(0));
  for (std::size_t k = 0; k < r; ++k) smod[k] = end_lattice.coeff_moduli()[k];

  SolutionSet sol = solve_affine(IntMatrix::from_rows(rows, unknowns), rhs, smod, tmod);
  SummandCertificate cert;
  if (sol.empty()) return cert;

  Vec coeffs(sol.particular.begin(), sol.particular.begin() + r);
  Homomorphism e = end_lattice.combine(coeffs);
  MODLAB_CHECK(compose(e, e) == e, "retraction certificate is not idempotent");
  MODLAB_CHECK(image(e) == n, "retraction certificate has the wrong image");
  Submodule ker = kernel(e);
  MODLAB_CHECK(submodule_sum(n, ker).is_full() &&
                   submodule_intersect(n, ker).is_zero(),
               "summand certificate does not split the module");
  cert.yes = true;
  cert.idempotent = e;
  return cert;
}

struct TooLarge {
  Int needed;
};

/// All R-submodules of a finite module via worklist saturation of cyclic
/// submodule sums. Deterministic order (canonical bases sorted).
inline std::optional<std::vector<Submodule>> enumerate_submodules(const ModuleHandle& m,
                                                                  const Int& cap) {
  if (!m->finite()) return std::nullopt;
  std::set<IntMatrix> seen;
  std::vector<IntMatrix> cyclics;
  seen.insert(m->zero_lattice());
  for (const Vec& x : m->enumerate_elements()) {
    IntMatrix c = cyclic_submodule(m, x).basis;
    if (seen.insert(c).second) cyclics.push_back(c);
  }
  std::vector<IntMatrix> work(seen.begin(), seen.end());
  for (std::size_t head = 0; head < work.size(); ++head) {
    for (const IntMatrix& c : cyclics) {
      IntMatrix s = lattice_sum(work[head], c);
      if (seen.insert(s).second) {
        work.push_back(s);
        if (Int(work.size()) > cap) return std::nullopt;
      }
    }
  }
  std::vector<Submodule> out;
  for (const IntMatrix& b : seen) out.push_back(Submodule{m, b});
  return out;
}

/// Minimal (simple) submodules of a finite module.
inline std::vector<Submodule> minimal_submodules(const std::vector<Submodule>& all) {
  std::vector<Submodule> out;
  for (const Submodule& n : all) {
    if (n.is_zero()) continue;
    bool minimal = true;
    for (const Submodule& p : all) {
      if (p.is_zero() || p == n) continue;
      bool contained = true;
      for (std::size_t i = 0; i < p.basis.rows() && contained; ++i)
        if (!lattice_contains(n.basis, p.basis.row(i))) contained = false;
      if (contained && !(p == n)) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(n);
  }
  return out;
}

/// Socle of a finite module: sum of its minimal submodules.
inline Submodule socle(const ModuleHandle& m, const std::vector<Submodule>& all) {
  Submodule acc = zero_submodule(m);
  for (const Submodule& n : minimal_submodules(all)) acc = submodule_sum(acc, n);
  return acc;
}

enum class Essentiality { Essential, NotEssential, Inconclusive };

/// Essentiality for finite modules: N is essential iff it contains the socle.
inline Essentiality is_essential_finite(const Submodule& n, const std::vector<Submodule>& all) {
  Submodule soc = socle(n.ambient, all);
  for (std::size_t i = 0; i < soc.basis.rows(); ++i)
    if (!lattice_contains(n.basis, soc.basis.row(i))) return Essentiality::NotEssential;
  return Essentiality::Essential;
}

/// Elements of a coordinate box: torsion coordinates run over their full
/// range, free coordinates over [-box, box].
inline std::vector<Vec> box_elements(const ModulePresentation& m, long box) {
  std::vector<Vec> out;
  Vec lo(m.ngens()), hi(m.ngens());
  for (std::size_t i = 0; i < m.ngens(); ++i) {
    if (m.moduli[i] == 0) {
      lo[i] = Int(-box);
      hi[i] = Int(box);
    } else {
      lo[i] = 0;
      hi[i] = m.moduli[i] - 1;
    }
  }
  Vec x = lo;
  for (;;) {
    out.push_back(x);
    std::size_t k = x.size();
    bool done = x.empty();
    while (k > 0) {
      --k;
      x[k] += 1;
      if (x[k] <= hi[k]) break;
      x[k] = lo[k];
      if (k == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

/// Torsion elements of the presented group: all free coordinates zero.
inline std::vector<Vec> torsion_elements(const ModulePresentation& m) {
  std::vector<Vec> out;
  Vec x(m.ngens(), Int(0));
  for (;;) {
    out.push_back(x);
    std::size_t k = m.ngens();
    bool done = m.ngens() == 0;
    while (k > 0) {
      --k;
      if (m.moduli[k] == 0) {
        if (k == 0) done = true;
        continue;
      }
      x[k] += 1;
      if (x[k] < m.moduli[k]) break;
      x[k] = 0;
      if (k == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

/// Exact essentiality on modules with free rank:
///  - if the sublattice has full rank with exponent d, then d*m is a nonzero
///    member of N for every non-torsion m, so only the finitely many torsion
///    elements need the cyclic intersection test;
///  - otherwise hunt for a disjoint cyclic submodule inside a coordinate box.
inline Essentiality is_essential_infinite(const Submodule& n, long box) {
  const ModuleHandle& m = n.ambient;
  auto expo = full_rank_exponent(n.basis, m->ngens());
  if (expo.has_value()) {
    for (const Vec& t : torsion_elements(*m)) {
      if (is_zero_vec(m->reduce(t))) continue;
      Submodule cyc = cyclic_submodule(m, t);
      if (submodule_intersect(cyc, n).is_zero()) return Essentiality::NotEssential;
    }
    return Essentiality::Essential;
  }
  // box hunt for a witness against essentiality
  for (const Vec& x : box_elements(*m, box)) {
    if (is_zero_vec(m->reduce(x))) continue;
    Submodule cyc = cyclic_submodule(m, x);
    if (submodule_intersect(cyc, n).is_zero()) return Essentiality::NotEssential;
  }
  return Essentiality::Inconclusive;
}

inline Essentiality is_essential(const Submodule& n, const std::vector<Submodule>* all_submodules,
                                 long box) {
  if (n.ambient->finite() && all_submodules) return is_essential_finite(n, *all_submodules);
  if (n.ambient->finite()) {
    auto all = enumerate_submodules(n.ambient, Int(100000));
    MODLAB_CHECK(all.has_value(), "submodule enumeration overflow in essentiality test");
    return is_essential_finite(n, *all);
  }
  return is_essential_infinite(n, box);
}

/// Search Hom(N, P) for a bijective map between two finite modules.
inline std::optional<Homomorphism> find_isomorphism(const ModuleHandle& na,
                                                    const ModuleHandle& pa, const Int& cap) {
  if (!na->finite() || !pa->finite()) return std::nullopt;
  if (na->order() != pa->order()) return std::nullopt;
  HomLattice homs = hom_basis(na, pa);
  auto all = homs.enumerate(cap);
  if (!all.has_value()) return std::nullopt;
  for (const Homomorphism& h : *all) {
    if (!kernel(h).is_zero()) continue;
    if (image(h).is_full()) return h;
  }
  return std::nullopt;
}

/// Trace of U in a submodule L of M: the sum of the images of all
/// homomorphisms U -> M landing inside L. The basis homs of the constrained
/// lattice suffice because images of combinations lie in the sum of images.
inline Submodule trace(const ModuleHandle& u, const Submodule& l) {
  const ModuleHandle& m = l.ambient;
  HomLattice homs = hom_basis(u, m);
  const std::size_t r = homs.rank();
  const std::size_t nu = u->ngens(), nm = m->ngens();
  const std::size_t w = l.basis.rows();

  // constrain every generator image into L, exactly as in the summand test
  const std::size_t unknowns = r + nu * w;
  std::vector<detail::CongruenceRow> rows;
  for (std::size_t j = 0; j < nu; ++j)
    for (std::size_t i = 0; i < nm; ++i) {
      detail::CongruenceRow row{zero_vec(unknowns), Int(0)};
      for (std::size_t k = 0; k < r; ++k) row.coeffs[k] = homs.generators()[k].mat.at(i, j);
      for (std::size_t t = 0; t < w; ++t) row.coeffs[r + j * w + t] = -l.basis.at(t, i);
      rows.push_back(std::move(row));
    }
  IntMatrix ker = detail::congruence_kernel(rows, unknowns);

  Submodule acc = zero_submodule(m);
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Vec full = ker.row(i);
    Vec coeffs(full.begin(), full.begin() + r);
    Homomorphism h = homs.combine(coeffs);
    acc = submodule_sum(acc, image(h));
  }
  // coefficient congruences map to zero homs; nothing further to add
  MODLAB_CHECK(lattice_closed_under_action(*m, acc.basis), "trace not action-closed");
  for (std::size_t i = 0; i < acc.basis.rows(); ++i)
    MODLAB_CHECK(l.contains(acc.basis.row(i)), "trace escapes the target submodule");
  return acc;
}

/// Test oracle: brute-force summand decision by idempotent image enumeration.
inline std::optional<bool> summand_oracle_by_idempotents(const EndoRing& s, const Submodule& n,
                                                         const Int& cap) {
  auto& all = s.enumerate(cap);
  if (!all.has_value()) return std::nullopt;
  for (const Homomorphism& e : *all)
    if (compose(e, e) == e && image(e) == n) return true;
  return false;
}

}  // namespace modlab
