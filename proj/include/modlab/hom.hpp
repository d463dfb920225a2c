#pragma once

#include <algorithm>
#include <optional>

#include "modlab/presentation.hpp"

namespace modlab {

/// R-linear map between presented modules. The matrix columns are the images
/// of the source generators; row i is kept reduced modulo the i-th target
/// modulus, which makes equality of maps equality of matrices.
struct Homomorphism {
  ModuleHandle source, target;
  IntMatrix mat;

  Vec apply(const Vec& x) const { return target->reduce(mat.apply(x)); }
  bool is_zero() const { return mat.is_zero(); }
  bool is_identity() const { return mat.is_identity(); }
  bool operator==(const Homomorphism& o) const { return mat == o.mat; }
  bool operator!=(const Homomorphism& o) const { return mat != o.mat; }
  bool operator<(const Homomorphism& o) const { return mat < o.mat; }
};

inline bool is_valid_hom(const ModulePresentation& src, const ModulePresentation& tgt,
                         const IntMatrix& f) {
  if (f.rows() != tgt.ngens() || f.cols() != src.ngens()) return false;
  for (std::size_t j = 0; j < src.ngens(); ++j) {
    if (src.moduli[j] == 0) continue;
    Vec img = tgt.reduce(scale_vec(src.moduli[j], f.col(j)));
    if (!is_zero_vec(img)) return false;
  }
  for (std::size_t k = 0; k < src.action.size(); ++k)
    if (!matrices_act_equal(f * src.action[k], tgt.action[k] * f, tgt.moduli)) return false;
  return true;
}

inline std::optional<Homomorphism> make_hom(const ModuleHandle& src, const ModuleHandle& tgt,
                                            const IntMatrix& f) {
  if (!is_valid_hom(*src, *tgt, f)) return std::nullopt;
  return Homomorphism{src, tgt, reduce_rows_mod(f, tgt->moduli)};
}

inline Homomorphism identity_hom(const ModuleHandle& m) {
  return Homomorphism{m, m, IntMatrix::identity(m->ngens())};
}

inline Homomorphism zero_hom(const ModuleHandle& src, const ModuleHandle& tgt) {
  return Homomorphism{src, tgt, IntMatrix(tgt->ngens(), src->ngens())};
}

/// f after g.
inline Homomorphism compose(const Homomorphism& f, const Homomorphism& g) {
  MODLAB_CHECK(*f.source == *g.target, "compose source/target mismatch");
  return Homomorphism{g.source, f.target, reduce_rows_mod(f.mat * g.mat, f.target->moduli)};
}

inline Homomorphism add(const Homomorphism& f, const Homomorphism& g) {
  MODLAB_CHECK(*f.source == *g.source && *f.target == *g.target, "add shape mismatch");
  return Homomorphism{f.source, f.target, reduce_rows_mod(f.mat + g.mat, f.target->moduli)};
}

inline Homomorphism negate(const Homomorphism& f) {
  return Homomorphism{f.source, f.target, reduce_rows_mod(-f.mat, f.target->moduli)};
}

inline Homomorphism power(const Homomorphism& f, unsigned long n) {
  MODLAB_CHECK(*f.source == *f.target, "power of a non-endomorphism");
  Homomorphism r = identity_hom(f.source);
  Homomorphism base = f;
  while (n) {
    if (n & 1) r = compose(r, base);
    n >>= 1;
    if (n) base = compose(base, base);
  }
  return r;
}

namespace detail {

struct CongruenceRow {
  Vec coeffs;
  Int modulus;
};

/// Kernel (in the unknowns only) of a stack of congruences, each taken
/// modulo its own modulus; one Smith reduction after adjoining slack columns.
inline IntMatrix congruence_kernel(const std::vector<CongruenceRow>& rows, std::size_t unknowns) {
  std::size_t slacks = 0;
  for (const auto& r : rows)
    if (r.modulus != 0) ++slacks;
  IntMatrix m(rows.size(), unknowns + slacks);
  std::size_t sc = unknowns;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < unknowns; ++j) m.at(i, j) = rows[i].coeffs[j];
    if (rows[i].modulus != 0) m.at(i, sc++) = rows[i].modulus;
  }
  IntMatrix ker = kernel_basis(m);
  std::vector<Vec> proj;
  for (std::size_t i = 0; i < ker.rows(); ++i) {
    Vec full = ker.row(i);
    proj.emplace_back(full.begin(), full.begin() + unknowns);
  }
  return hnf_rows(IntMatrix::from_rows(proj, unknowns));
}

}  // namespace detail

/// The group Hom_R(src, tgt) as a lattice of matrices: an integer lattice in
/// Z^(nt*ns) (row-major flattening) containing the congruence lattice of zero
/// maps, plus the quotient structure that enumerates distinct homomorphisms.
class HomLattice {
 public:
  HomLattice() = default;

  HomLattice(ModuleHandle src, ModuleHandle tgt) : src_(std::move(src)), tgt_(std::move(tgt)) {
    const std::size_t ns = src_->ngens(), nt = tgt_->ngens();
    const std::size_t nu = nt * ns;
    auto idx = [&](std::size_t i, std::size_t j) { return i * ns + j; };

    std::vector<detail::CongruenceRow> rows;
    for (std::size_t j = 0; j < ns; ++j) {
      if (src_->moduli[j] == 0) continue;
      for (std::size_t i = 0; i < nt; ++i) {
        detail::CongruenceRow r{zero_vec(nu), tgt_->moduli[i]};
        r.coeffs[idx(i, j)] = src_->moduli[j];
        rows.push_back(std::move(r));
      }
    }
    for (std::size_t k = 0; k < src_->action.size(); ++k) {
      const IntMatrix& as = src_->action[k];
      const IntMatrix& at = tgt_->action[k];
      for (std::size_t i = 0; i < nt; ++i)
        for (std::size_t j = 0; j < ns; ++j) {
          detail::CongruenceRow r{zero_vec(nu), tgt_->moduli[i]};
          for (std::size_t l = 0; l < ns; ++l) r.coeffs[idx(i, l)] += as.at(l, j);
          for (std::size_t l = 0; l < nt; ++l) r.coeffs[idx(l, j)] -= at.at(i, l);
          rows.push_back(std::move(r));
        }
    }
    lattice_ = detail::congruence_kernel(rows, nu);

    std::vector<Vec> congruence;
    for (std::size_t i = 0; i < nt; ++i) {
      if (tgt_->moduli[i] == 0) continue;
      for (std::size_t j = 0; j < ns; ++j) {
        Vec c = zero_vec(nu);
        c[idx(i, j)] = tgt_->moduli[i];
        congruence.push_back(std::move(c));
      }
    }
    for (const Vec& c : congruence)
      MODLAB_CHECK(lattice_contains(lattice_, c), "zero-map congruences escape the hom lattice");
    quo_ = AbelianQuotient(lattice_, congruence);
    const Vec& d = quo_.invariant_factors();
    for (std::size_t k = 0; k < d.size(); ++k)
      if (d[k] != 1) kept_.push_back(k);
    for (std::size_t k : kept_) {
      coeff_moduli_.push_back(d[k]);
      gens_.push_back(unflatten(quo_.element(unit_vec(d.size(), k))));
    }
  }

  const ModuleHandle& source() const { return src_; }
  const ModuleHandle& target() const { return tgt_; }
  const IntMatrix& lattice() const { return lattice_; }
  const std::vector<Homomorphism>& generators() const { return gens_; }
  const Vec& coeff_moduli() const { return coeff_moduli_; }
  std::size_t rank() const { return gens_.size(); }

  bool finite() const { return all_finite(coeff_moduli_); }
  Int group_order() const { return product(coeff_moduli_); }

  /// Free rank of the hom group (number of infinite coefficient directions).
  std::size_t free_rank() const {
    std::size_t r = 0;
    for (const Int& d : coeff_moduli_)
      if (d == 0) ++r;
    return r;
  }

  Homomorphism combine(const Vec& coeffs) const {
    MODLAB_CHECK(coeffs.size() == kept_.size(), "coefficient arity mismatch");
    IntMatrix m(tgt_->ngens(), src_->ngens());
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      if (coeffs[k] == 0) continue;
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
          m.at(i, j) += coeffs[k] * gens_[k].mat.at(i, j);
    }
    return Homomorphism{src_, tgt_, reduce_rows_mod(m, tgt_->moduli)};
  }

  /// Canonical coefficients of a homomorphism over the generators.
  Vec coords(const Homomorphism& h) const {
    Vec y = quo_.coords(flatten(h.mat));
    Vec out;
    for (std::size_t k : kept_) out.push_back(y[k]);
    return out;
  }

  bool contains_matrix(const IntMatrix& m) const { return lattice_contains(lattice_, flatten(m)); }

  /// All homomorphisms when the group is finite with at most cap elements.
  std::optional<std::vector<Homomorphism>> enumerate(const Int& cap) const {
    if (!finite() || group_order() > cap) return std::nullopt;
    std::vector<Homomorphism> out;
    Vec y(coeff_moduli_.size(), Int(0));
    for (;;) {
      out.push_back(combine(y));
      std::size_t k = y.size();
      while (k > 0) {
        --k;
        y[k] += 1;
        if (y[k] < coeff_moduli_[k]) break;
        y[k] = 0;
        if (k == 0) return out;
      }
      if (y.empty()) return out;
    }
  }

  /// Deterministic bounded sample: torsion coefficients run over their full
  /// range, free coefficients over [-b, b], ordered by max-norm shells so
  /// small witnesses surface first.
  std::vector<Homomorphism> box_candidates(long b) const {
    std::vector<Vec> tuples = box_tuples(b);
    std::vector<Homomorphism> out;
    out.reserve(tuples.size());
    for (const Vec& y : tuples) out.push_back(combine(y));
    return out;
  }

  std::vector<Vec> box_tuples(long b) const {
    std::vector<Vec> tuples;
    Vec lo(coeff_moduli_.size()), hi(coeff_moduli_.size());
    for (std::size_t k = 0; k < coeff_moduli_.size(); ++k) {
      if (coeff_moduli_[k] == 0) {
        lo[k] = Int(-b);
        hi[k] = Int(b);
      } else {
        lo[k] = 0;
        hi[k] = coeff_moduli_[k] - 1;
      }
    }
    Vec y = lo;
    for (;;) {
      tuples.push_back(y);
      std::size_t k = y.size();
      bool done = y.empty();
      while (k > 0) {
        --k;
        y[k] += 1;
        if (y[k] <= hi[k]) break;
        y[k] = lo[k];
        if (k == 0) done = true;
      }
      if (done) break;
    }
    std::stable_sort(tuples.begin(), tuples.end(), [&](const Vec& a, const Vec& bb) {
      Int sa = 0, sb = 0;
      for (std::size_t k = 0; k < a.size(); ++k)
        if (coeff_moduli_[k] == 0) {
          sa = std::max(sa, int_abs(a[k]));
          sb = std::max(sb, int_abs(bb[k]));
        }
      return sa < sb;
    });
    return tuples;
  }

  /// Count of box candidates without materializing them.
  Int box_size(long b) const {
    Int total = 1;
    for (const Int& d : coeff_moduli_) total *= (d == 0) ? Int(2 * b + 1) : d;
    return total;
  }

  Vec flatten(const IntMatrix& m) const {
    Vec v;
    v.reserve(m.rows() * m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    return v;
  }

  Homomorphism unflatten(const Vec& v) const {
    IntMatrix m(tgt_->ngens(), src_->ngens());
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m.at(i, j) = v[i * m.cols() + j];
    return Homomorphism{src_, tgt_, reduce_rows_mod(m, tgt_->moduli)};
  }

 private:
  ModuleHandle src_, tgt_;
  IntMatrix lattice_;
  AbelianQuotient quo_;
  std::vector<std::size_t> kept_;
  Vec coeff_moduli_;
  std::vector<Homomorphism> gens_;
};

inline HomLattice hom_basis(const ModuleHandle& src, const ModuleHandle& tgt) {
  MODLAB_CHECK(*src->ring == *tgt->ring, "hom between modules over different rings");
  return HomLattice(src, tgt);
}

/// Kernel of f as a canonical submodule of the source.
inline Submodule kernel(const Homomorphism& f) {
  const std::size_t ns = f.source->ngens(), nt = f.target->ngens();
  std::vector<detail::CongruenceRow> rows;
  for (std::size_t i = 0; i < nt; ++i) rows.push_back({f.mat.row(i), f.target->moduli[i]});
  IntMatrix ker = detail::congruence_kernel(rows, ns);
  std::vector<Vec> gens = ker.row_list();
  Submodule s{f.source, canonical_lattice(gens, f.source->moduli)};
  MODLAB_CHECK(lattice_closed_under_action(*f.source, s.basis), "kernel not action-closed");
  return s;
}

/// Image of f as a canonical submodule of the target.
inline Submodule image(const Homomorphism& f) {
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < f.mat.cols(); ++j) gens.push_back(f.mat.col(j));
  Submodule s{f.target, canonical_lattice(gens, f.target->moduli)};
  MODLAB_CHECK(lattice_closed_under_action(*f.target, s.basis), "image not action-closed");
  return s;
}

struct KernelChain {
  std::vector<Submodule> chain;  // kernels of f^1, f^2, ... up to stabilization
  std::size_t n_star = 0;        // least n with ker f^n = ker f^(n+1)
  bool ceiling_hit = false;
};

/// Ascending kernel chain of an endomorphism. Guaranteed to stabilize on any
/// presented module; the ceiling only guards runaway powers on free parts.
inline KernelChain kernel_chain(const Homomorphism& f, std::size_t ceiling) {
  KernelChain out;
  Homomorphism p = f;
  Submodule prev = kernel(p);
  out.chain.push_back(prev);
  for (std::size_t n = 1;; ++n) {
    Homomorphism next = compose(f, p);
    Submodule k = kernel(next);
    if (k == prev) {
      out.n_star = n;
      return out;
    }
    out.chain.push_back(k);
    prev = k;
    p = next;
    if (n >= ceiling) {
      out.ceiling_hit = true;
      out.n_star = out.chain.size();
      return out;
    }
  }
}

struct NilpotencyResult {
  bool decided = false;
  bool nilpotent = false;
  std::size_t index = 0;  // least n with f^n = 0, when nilpotent
};

/// Exact nilpotency via the kernel chain: f is nilpotent iff the stabilized
/// kernel is the whole module.
inline NilpotencyResult is_nilpotent(const Homomorphism& f, std::size_t ceiling) {
  NilpotencyResult r;
  KernelChain kc = kernel_chain(f, ceiling);
  if (kc.ceiling_hit) return r;
  r.decided = true;
  r.nilpotent = kc.chain.back().is_full();
  if (r.nilpotent) {
    for (std::size_t n = 0; n < kc.chain.size(); ++n)
      if (kc.chain[n].is_full()) {
        r.index = n + 1;
        break;
      }
  }
  return r;
}

inline bool is_injective(const Homomorphism& f) { return kernel(f).is_zero(); }

/// Lattice of a subgroup of Hom(src, tgt) inside the matrix space, always
/// containing the zero-map congruences; supports canonical equality and
/// enumeration.
struct HomSpaceLattice {
  ModuleHandle src, tgt;
  IntMatrix lat;  // HNF rows in Z^(nt*ns)

  bool operator==(const HomSpaceLattice& o) const { return lat == o.lat; }

  bool contains(const Homomorphism& h) const {
    Vec v;
    for (std::size_t i = 0; i < h.mat.rows(); ++i)
      for (std::size_t j = 0; j < h.mat.cols(); ++j) v.push_back(h.mat.at(i, j));
    return lattice_contains(lat, v);
  }

  /// Quotient generators of the subgroup (reduced matrices) and their moduli.
  std::pair<std::vector<Homomorphism>, Vec> quotient_generators(const HomLattice& parent) const {
    std::vector<Vec> congruence;
    const std::size_t ns = src->ngens(), nt = tgt->ngens();
    for (std::size_t i = 0; i < nt; ++i) {
      if (tgt->moduli[i] == 0) continue;
      for (std::size_t j = 0; j < ns; ++j) {
        Vec c = zero_vec(nt * ns);
        c[i * ns + j] = tgt->moduli[i];
        congruence.push_back(std::move(c));
      }
    }
    AbelianQuotient q(lat, congruence);
    const Vec& d = q.invariant_factors();
    std::vector<Homomorphism> gens;
    Vec moduli;
    for (std::size_t k = 0; k < d.size(); ++k) {
      if (d[k] == 1) continue;
      moduli.push_back(d[k]);
      gens.push_back(parent.unflatten(q.element(unit_vec(d.size(), k))));
    }
    return {gens, moduli};
  }
};

/// Zero-map congruence rows for Hom(src, tgt).
inline std::vector<Vec> hom_congruence_rows(const ModuleHandle& src, const ModuleHandle& tgt) {
  std::vector<Vec> rows;
  const std::size_t ns = src->ngens(), nt = tgt->ngens();
  for (std::size_t i = 0; i < nt; ++i) {
    if (tgt->moduli[i] == 0) continue;
    for (std::size_t j = 0; j < ns; ++j) {
      Vec c = zero_vec(nt * ns);
      c[i * ns + j] = tgt->moduli[i];
      rows.push_back(std::move(c));
    }
  }
  return rows;
}

/// l_S(N) = {f in S : f(N) = 0} as a lattice in the matrix space.
inline HomSpaceLattice left_annihilator(const HomLattice& s, const Submodule& n) {
  const std::size_t nt = s.target()->ngens();
  std::vector<detail::CongruenceRow> rows;
  for (std::size_t v = 0; v < n.basis.rows(); ++v) {
    Vec vertex = n.basis.row(v);
    for (std::size_t i = 0; i < nt; ++i) {
      detail::CongruenceRow r{zero_vec(s.rank()), s.target()->moduli[i]};
      for (std::size_t k = 0; k < s.rank(); ++k)
        r.coeffs[k] = s.generators()[k].mat.apply(vertex)[i];
      rows.push_back(std::move(r));
    }
  }
  IntMatrix coeff_ker = detail::congruence_kernel(rows, s.rank());
  std::vector<Vec> hom_rows;
  for (std::size_t i = 0; i < coeff_ker.rows(); ++i) {
    Homomorphism h = s.combine(coeff_ker.row(i));
    hom_rows.push_back(s.flatten(h.mat));
  }
  for (std::size_t k = 0; k < s.rank(); ++k)
    if (s.coeff_moduli()[k] != 0) {
      Vec c(s.rank(), Int(0));
      c[k] = s.coeff_moduli()[k];
      hom_rows.push_back(s.flatten(s.combine(c).mat));
    }
  for (Vec& c : hom_congruence_rows(s.source(), s.target())) hom_rows.push_back(std::move(c));
  return HomSpaceLattice{s.source(), s.target(),
                         hnf_rows(IntMatrix::from_rows(hom_rows, s.source()->ngens() * s.target()->ngens()))};
}

/// r_S(f) = {g in S : f o g = 0} as a lattice in the matrix space.
inline HomSpaceLattice right_annihilator(const HomLattice& s, const Homomorphism& f) {
  const std::size_t ns = s.source()->ngens(), nt = s.target()->ngens();
  std::vector<detail::CongruenceRow> rows;
  std::vector<IntMatrix> fg;
  for (std::size_t k = 0; k < s.rank(); ++k) fg.push_back(f.mat * s.generators()[k].mat);
  for (std::size_t i = 0; i < nt; ++i)
    for (std::size_t j = 0; j < ns; ++j) {
      detail::CongruenceRow r{zero_vec(s.rank()), s.target()->moduli[i]};
      for (std::size_t k = 0; k < s.rank(); ++k) r.coeffs[k] = fg[k].at(i, j);
      rows.push_back(std::move(r));
    }
  IntMatrix coeff_ker = detail::congruence_kernel(rows, s.rank());
  std::vector<Vec> hom_rows;
  for (std::size_t i = 0; i < coeff_ker.rows(); ++i)
    hom_rows.push_back(s.flatten(s.combine(coeff_ker.row(i)).mat));
  for (std::size_t k = 0; k < s.rank(); ++k)
    if (s.coeff_moduli()[k] != 0) {
      Vec c(s.rank(), Int(0));
      c[k] = s.coeff_moduli()[k];
      hom_rows.push_back(s.flatten(s.combine(c).mat));
    }
  for (Vec& c : hom_congruence_rows(s.source(), s.target())) hom_rows.push_back(std::move(c));
  return HomSpaceLattice{s.source(), s.target(),
                         hnf_rows(IntMatrix::from_rows(hom_rows, ns * nt))};
}

/// Principal one-sided ideals as matrix-space lattices.
inline HomSpaceLattice left_ideal(const HomLattice& s, const Homomorphism& e) {
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < s.rank(); ++k)
    rows.push_back(s.flatten(compose(s.generators()[k], e).mat));
  for (Vec& c : hom_congruence_rows(s.source(), s.target())) rows.push_back(std::move(c));
  return HomSpaceLattice{s.source(), s.target(),
                         hnf_rows(IntMatrix::from_rows(rows, e.mat.rows() * e.mat.cols()))};
}

inline HomSpaceLattice right_ideal(const HomLattice& s, const Homomorphism& e) {
  std::vector<Vec> rows;
  for (std::size_t k = 0; k < s.rank(); ++k)
    rows.push_back(s.flatten(compose(e, s.generators()[k]).mat));
  for (Vec& c : hom_congruence_rows(s.source(), s.target())) rows.push_back(std::move(c));
  return HomSpaceLattice{s.source(), s.target(),
                         hnf_rows(IntMatrix::from_rows(rows, e.mat.rows() * e.mat.cols()))};
}

/// Intersection of kernels of a set of endomorphisms.
inline Submodule common_kernel(const ModuleHandle& m, const std::vector<Homomorphism>& fs) {
  Submodule acc = full_submodule(m);
  for (const Homomorphism& f : fs)
    acc = Submodule{m, lattice_intersect(acc.basis, kernel(f).basis)};
  MODLAB_CHECK(lattice_closed_under_action(*m, acc.basis), "common kernel not action-closed");
  return acc;
}

/// Endomorphism ring S = End(M): the hom lattice plus cached enumeration.
class EndoRing {
 public:
  explicit EndoRing(const ModuleHandle& m) : mod_(m), lat_(hom_basis(m, m)) {
    MODLAB_CHECK(lat_.contains_matrix(IntMatrix::identity(m->ngens())),
                 "identity missing from the endomorphism lattice");
  }

  const ModuleHandle& module() const { return mod_; }
  const HomLattice& lattice() const { return lat_; }

  Homomorphism identity() const { return identity_hom(mod_); }
  Homomorphism zero() const { return zero_hom(mod_, mod_); }

  bool finite() const { return lat_.finite(); }
  Int order() const { return lat_.group_order(); }

  /// Exact element list when |S| <= cap; nullopt signals TooLarge.
  const std::optional<std::vector<Homomorphism>>& enumerate(const Int& cap) const {
    if (!enum_done_ || (!elems_.has_value() && cap > enum_cap_)) {
      elems_ = lat_.enumerate(cap);
      enum_cap_ = cap;
      enum_done_ = true;
    }
    return elems_;
  }

  std::vector<Homomorphism> idempotents(const Int& cap) const {
    auto& all = enumerate(cap);
    MODLAB_CHECK(all.has_value(), "idempotent enumeration needs a finite endomorphism ring");
    std::vector<Homomorphism> out;
    for (const Homomorphism& e : *all)
      if (compose(e, e) == e) out.push_back(e);
    return out;
  }

  std::vector<Homomorphism> nilpotents(const Int& cap, std::size_t ceiling) const {
    auto& all = enumerate(cap);
    MODLAB_CHECK(all.has_value(), "nilpotent enumeration needs a finite endomorphism ring");
    std::vector<Homomorphism> out;
    for (const Homomorphism& f : *all) {
      NilpotencyResult r = is_nilpotent(f, ceiling);
      MODLAB_CHECK(r.decided, "nilpotency undecided on a finite module");
      if (r.nilpotent) out.push_back(f);
    }
    return out;
  }

  /// Exact commutativity certificate: it suffices to test the generators.
  bool commutative() const {
    for (std::size_t a = 0; a < lat_.rank(); ++a)
      for (std::size_t b = a + 1; b < lat_.rank(); ++b) {
        const Homomorphism& f = lat_.generators()[a];
        const Homomorphism& g = lat_.generators()[b];
        if (compose(f, g) != compose(g, f)) return false;
      }
    return true;
  }

  /// Centrality of one element is exact: test against the generators.
  bool central(const Homomorphism& e) const {
    for (const Homomorphism& g : lat_.generators())
      if (compose(e, g) != compose(g, e)) return false;
    return true;
  }

 private:
  ModuleHandle mod_;
  HomLattice lat_;
  mutable bool enum_done_ = false;
  mutable Int enum_cap_ = 0;
  mutable std::optional<std::vector<Homomorphism>> elems_;
};

/// The endomorphism ring as a ring presentation (exact also for infinite S),
/// with coordinate maps between homomorphisms and ring elements.
struct EndoRingPresentation {
  RingHandle ring;
  const HomLattice* lattice;

  Vec to_ring(const Homomorphism& h) const { return lattice->coords(h); }
  Homomorphism to_hom(const Vec& coords) const { return lattice->combine(coords); }
};

/// Decide whether the subgroup I (a left ideal of S) equals S*e for an
/// idempotent e: such an e exists iff some member of I acts as a right
/// identity on I, which is one affine solve over I's quotient generators.
inline std::optional<Homomorphism> left_ideal_idempotent_generator(const HomLattice& s,
                                                                   const HomSpaceLattice& ideal) {
  auto [gens, moduli] = ideal.quotient_generators(s);
  const std::size_t q = gens.size();
  const std::size_t nt = s.target()->ngens(), ns = s.source()->ngens();
  if (q == 0) return zero_hom(s.source(), s.target());  // I = 0 = S*0

  std::vector<Vec> rows;
  Vec rhs, tmod;
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<IntMatrix> prods;
    for (std::size_t k = 0; k < q; ++k) prods.push_back(gens[i].mat * gens[k].mat);
    for (std::size_t a = 0; a < nt; ++a)
      for (std::size_t b = 0; b < ns; ++b) {
        Vec row(q);
        for (std::size_t k = 0; k < q; ++k) row[k] = prods[k].at(a, b);
        rows.push_back(std::move(row));
        rhs.push_back(gens[i].mat.at(a, b));
        tmod.push_back(s.target()->moduli[a]);
      }
  }
  SolutionSet sol = solve_affine(IntMatrix::from_rows(rows, q), rhs, moduli, tmod);
  if (sol.empty()) return std::nullopt;
  IntMatrix m(nt, ns);
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t a = 0; a < nt; ++a)
      for (std::size_t b = 0; b < ns; ++b) m.at(a, b) += sol.particular[k] * gens[k].mat.at(a, b);
  Homomorphism e{s.source(), s.target(), reduce_rows_mod(m, s.target()->moduli)};
  MODLAB_CHECK(compose(e, e) == e, "ideal generator is not idempotent");
  MODLAB_CHECK(ideal.contains(e), "ideal generator escapes the ideal");
  MODLAB_CHECK(left_ideal(s, e) == ideal, "S*e does not match the ideal");
  return e;
}

/// Mirror image for right ideals: I = e*S iff some member of I acts as a
/// left identity on I.
inline std::optional<Homomorphism> right_ideal_idempotent_generator(const HomLattice& s,
                                                                    const HomSpaceLattice& ideal) {
  auto [gens, moduli] = ideal.quotient_generators(s);
  const std::size_t q = gens.size();
  const std::size_t nt = s.target()->ngens(), ns = s.source()->ngens();
  if (q == 0) return zero_hom(s.source(), s.target());

  std::vector<Vec> rows;
  Vec rhs, tmod;
  for (std::size_t i = 0; i < q; ++i) {
    std::vector<IntMatrix> prods;
    for (std::size_t k = 0; k < q; ++k) prods.push_back(gens[k].mat * gens[i].mat);
    for (std::size_t a = 0; a < nt; ++a)
      for (std::size_t b = 0; b < ns; ++b) {
        Vec row(q);
        for (std::size_t k = 0; k < q; ++k) row[k] = prods[k].at(a, b);
        rows.push_back(std::move(row));
        rhs.push_back(gens[i].mat.at(a, b));
        tmod.push_back(s.target()->moduli[a]);
      }
  }
  SolutionSet sol = solve_affine(IntMatrix::from_rows(rows, q), rhs, moduli, tmod);
  if (sol.empty()) return std::nullopt;
  IntMatrix m(nt, ns);
  for (std::size_t k = 0; k < q; ++k)
    for (std::size_t a = 0; a < nt; ++a)
      for (std::size_t b = 0; b < ns; ++b) m.at(a, b) += sol.particular[k] * gens[k].mat.at(a, b);
  Homomorphism e{s.source(), s.target(), reduce_rows_mod(m, s.target()->moduli)};
  MODLAB_CHECK(compose(e, e) == e, "ideal generator is not idempotent");
  MODLAB_CHECK(ideal.contains(e), "ideal generator escapes the ideal");
  MODLAB_CHECK(right_ideal(s, e) == ideal, "e*S does not match the ideal");
  return e;
}

inline EndoRingPresentation endo_ring_presentation(const EndoRing& s, std::string name = "") {
  const HomLattice& lat = s.lattice();
  RingPresentation r;
  r.name = name.empty() ? ("end-" + s.module()->name) : std::move(name);
  r.moduli = lat.coeff_moduli();
  const std::size_t d = lat.rank();
  r.table.assign(d, std::vector<Vec>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      r.table[i][j] = lat.coords(compose(lat.generators()[i], lat.generators()[j]));
  r.one = lat.coords(identity_hom(s.module()));
  return EndoRingPresentation{make_ring(std::move(r)), &lat};
}

}  // namespace modlab
