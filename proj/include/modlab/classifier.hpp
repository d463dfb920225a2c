#pragma once

#include "modlab/ring_battery.hpp"

namespace modlab {

inline json hom_witness(const Homomorphism& f) { return to_json(f.mat); }

/// Shared per-module state: the endomorphism ring, enumerations and caches a
/// classification run needs. Queries are read-only once built.
class ModuleContext {
 public:
  ModuleContext(ModuleHandle m, RunConfig cfg) : m_(std::move(m)), cfg_(std::move(cfg)), endo_(m_) {
    cfg_.validate();
  }

  const ModuleHandle& module() const { return m_; }
  const RunConfig& config() const { return cfg_; }
  const EndoRing& endo() const { return endo_; }
  const HomLattice& lattice() const { return endo_.lattice(); }

  bool exact_endos() const { return endo_.finite() && endo_.order() <= cfg_.enum_cap; }

  /// Endomorphism scan: the full ring in exact mode, otherwise a box sample
  /// whose bound is downshifted to fit the scan budget (and recorded).
  struct Scan {
    bool exact;
    long bound;  // meaningful when !exact
    const std::vector<Homomorphism>* fs;
  };

  Scan endo_scan() {
    if (exact_endos()) {
      exact_list_ = *endo_.enumerate(cfg_.enum_cap);
      return {true, 0, &exact_list_};
    }
    long b = cfg_.box;
    while (b > 1 && lattice().box_size(b) > cfg_.scan_budget) --b;
    if (box_bound_ != b) {
      box_list_ = lattice().box_candidates(b);
      box_bound_ = b;
    }
    return {false, b, &box_list_};
  }

  const std::vector<Vec>& module_elements() {
    if (!elements_done_) {
      if (m_->finite() && m_->order() <= cfg_.enum_cap) mod_elems_ = m_->enumerate_elements();
      elements_done_ = true;
    }
    return mod_elems_;
  }

  /// Submodule family: exact enumeration on finite modules, box-generated
  /// cyclic sums otherwise.
  struct SubmoduleFamily {
    bool exact;
    long bound;
    std::vector<Submodule> subs;
  };

  const SubmoduleFamily& submodules() {
    if (subs_done_) return subs_;
    subs_done_ = true;
    if (m_->finite()) {
      auto all = enumerate_submodules(m_, cfg_.submodule_cap);
      MODLAB_CHECK(all.has_value(), "submodule enumeration exceeded the cap");
      subs_ = {true, 0, *all};
      return subs_;
    }
    long b = std::min(cfg_.box, 3L);
    const Int family_budget = std::min(cfg_.submodule_cap, Int(500));
    std::set<IntMatrix> seen;
    std::vector<Submodule> family;
    auto push = [&](const Submodule& s) {
      if (seen.insert(s.basis).second) family.push_back(s);
    };
    push(zero_submodule(m_));
    push(full_submodule(m_));
    std::vector<Submodule> cyclics;
    for (const Vec& x : box_elements(*m_, b)) {
      Submodule c = cyclic_submodule(m_, x);
      if (seen.insert(c.basis).second) {
        cyclics.push_back(c);
        family.push_back(c);
      }
      if (Int(family.size()) > family_budget) break;
    }
    std::size_t first_order = family.size();
    for (std::size_t i = 0; i < first_order && Int(family.size()) <= family_budget; ++i)
      for (const Submodule& c : cyclics) {
        if (Int(family.size()) > family_budget) break;
        push(submodule_sum(family[i], c));
      }
    subs_ = {false, b, std::move(family)};
    return subs_;
  }

  /// Number of module elements in a coordinate box.
  Int box_element_count(long b) const {
    Int total = 1;
    for (const Int& mm : m_->moduli) total *= (mm == 0) ? Int(2 * b + 1) : mm;
    return total;
  }

  /// Largest bound <= maxb keeping element x endomorphism pairs in budget.
  long pair_bound(long maxb) const {
    for (long b = maxb; b > 1; --b)
      if (box_element_count(b) * lattice().box_size(b) <= cfg_.pair_budget) return b;
    return 1;
  }

  /// Summand decision with memoization and fault injection.
  bool summand(const Submodule& n, Homomorphism* idem = nullptr) {
    if (cfg_.fault == Fault::SummandAlwaysYes) {
      if (idem) *idem = identity_hom(m_);
      return true;
    }
    auto it = summand_cache_.find(n.basis);
    if (it == summand_cache_.end()) {
      SummandCertificate c = is_direct_summand(lattice(), n);
      it = summand_cache_.emplace(n.basis, std::move(c)).first;
    }
    if (idem && it->second.yes) *idem = it->second.idempotent;
    return it->second.yes;
  }

  const RingBattery& endo_battery() {
    if (!battery_) {
      if (!sring_) sring_ = endo_ring_presentation(endo_);
      battery_ = ring_battery(sring_->ring, cfg_);
    }
    return *battery_;
  }

  const EndoRingPresentation& endo_as_ring() {
    if (!sring_) sring_ = endo_ring_presentation(endo_);
    return *sring_;
  }

  /// Kernel chain honoring the configured ceiling.
  KernelChain chain(const Homomorphism& f) { return kernel_chain(f, cfg_.power_ceiling); }

 private:
  ModuleHandle m_;
  RunConfig cfg_;
  EndoRing endo_;
  std::vector<Homomorphism> exact_list_, box_list_;
  long box_bound_ = -1;
  std::vector<Vec> mod_elems_;
  bool elements_done_ = false;
  SubmoduleFamily subs_;
  bool subs_done_ = false;
  std::map<IntMatrix, SummandCertificate> summand_cache_;
  std::optional<EndoRingPresentation> sring_;
  std::optional<RingBattery> battery_;
};

/// One endomorphism's annihilator story: stabilization index, the exponent
/// that worked and its certificate, or the proof that no exponent can.
struct AnnihilatorDossier {
  bool ceiling_hit = false;
  std::size_t n_star = 0;
  std::optional<std::size_t> witness_exponent;  // least n with ker f^n a summand
  Homomorphism idempotent;                      // certificate when found
  std::vector<Submodule> chain;
};

inline AnnihilatorDossier annihilator_dossier(ModuleContext& ctx, const Homomorphism& f,
                                              std::size_t max_exponent) {
  AnnihilatorDossier d;
  KernelChain kc = ctx.chain(f);
  d.ceiling_hit = kc.ceiling_hit;
  d.n_star = kc.n_star;
  d.chain = kc.chain;
  std::size_t limit = std::min(max_exponent, kc.chain.size());
  for (std::size_t n = 1; n <= limit; ++n) {
    Homomorphism e;
    if (ctx.summand(kc.chain[n - 1], &e)) {
      d.witness_exponent = n;
      d.idempotent = e;
      break;
    }
  }
  return d;
}

/// pi-Rickart: every f admits n with ker f^n a direct summand. Exponents
/// beyond the stabilization index are redundant, so the search stops there.
inline Verdict check_pi_rickart(ModuleContext& ctx, std::size_t max_exponent = SIZE_MAX) {
  auto scan = ctx.endo_scan();
  Verdict v = scan.exact ? Verdict::proven() : Verdict::no_counterexample(scan.bound);
  json per_f = json::array();
  bool truncated = false;
  for (const Homomorphism& f : *scan.fs) {
    AnnihilatorDossier d = annihilator_dossier(ctx, f, max_exponent);
    if (!d.witness_exponent && d.ceiling_hit) {
      truncated = true;
      continue;
    }
    if (!d.witness_exponent) {
      // kernels of higher powers repeat the stabilized one, so failure at
      // every n <= n* refutes every exponent
      Verdict r = Verdict::refuted(
          json{{"witness", hom_witness(f)}, {"n_star", d.n_star}}, scan.exact ? "exact" : "bounded");
      return r;
    }
    if (scan.exact && scan.fs->size() <= 64)
      per_f.push_back(json{{"f", hom_witness(f)},
                           {"exponent", *d.witness_exponent},
                           {"n_star", d.n_star},
                           {"idempotent", hom_witness(d.idempotent)}});
  }
  if (!per_f.empty()) v.evidence["certificates"] = per_f;
  v.truncated = truncated;
  if (truncated) v.note = "power ceiling reached on some candidates";
  if (v.status == Status::Proven && !scan.exact) v.status = Status::NoCounterexampleUpTo;
  return v;
}

inline Verdict check_rickart(ModuleContext& ctx) { return check_pi_rickart(ctx, 1); }

/// Baer: every submodule's left annihilator in S is generated by an
/// idempotent. Each submodule is decided exactly by one affine solve.
inline Verdict check_baer(ModuleContext& ctx) {
  const auto& fam = ctx.submodules();
  Verdict v = fam.exact ? Verdict::proven() : Verdict::no_counterexample(fam.bound);
  for (const Submodule& n : fam.subs) {
    HomSpaceLattice ann = left_annihilator(ctx.lattice(), n);
    auto e = left_ideal_idempotent_generator(ctx.lattice(), ann);
    if (!e)
      return Verdict::refuted(json{{"submodule", to_json(n.basis)}},
                              fam.exact ? "exact" : "bounded");
  }
  return v;
}

struct FittingOutcome {
  enum class Kind { Split, RefutedForever, Undecided } kind;
  std::size_t index = 0;  // least exponent achieving the split
};

/// Fitting behavior of one endomorphism: M = ker f^n + im f^n for some n.
inline FittingOutcome fitting_outcome(ModuleContext& ctx, const Homomorphism& f) {
  KernelChain kc = ctx.chain(f);
  Homomorphism p = f;
  for (std::size_t n = 1; n <= kc.chain.size(); ++n) {
    if (n > 1) p = compose(f, p);
    const Submodule& ker_n = kc.chain[n - 1];
    Submodule im_n = image(p);
    if (submodule_sum(ker_n, im_n).is_full() && submodule_intersect(ker_n, im_n).is_zero())
      return {FittingOutcome::Kind::Split, n};
  }
  if (kc.ceiling_hit) return {FittingOutcome::Kind::Undecided, 0};
  // stabilized chain with no split at n*; deeper exponents keep the kernel
  // and shrink the image, so the sum can only get smaller
  const Submodule& ker_star = kc.chain.back();
  Submodule im_star = image(power(f, kc.n_star));
  if (!submodule_sum(ker_star, im_star).is_full()) return {FittingOutcome::Kind::RefutedForever, 0};
  // injective but not surjective also refutes every exponent
  if (ker_star.is_zero() && !image(f).is_full()) return {FittingOutcome::Kind::RefutedForever, 0};
  return {FittingOutcome::Kind::Undecided, 0};
}

inline Verdict check_fitting(ModuleContext& ctx) {
  auto scan = ctx.endo_scan();
  Verdict v = scan.exact ? Verdict::proven() : Verdict::no_counterexample(scan.bound);
  std::size_t max_index = 0;
  bool truncated = false;
  for (const Homomorphism& f : *scan.fs) {
    FittingOutcome o = fitting_outcome(ctx, f);
    if (o.kind == FittingOutcome::Kind::Split) {
      max_index = std::max(max_index, o.index);
      continue;
    }
    if (o.kind == FittingOutcome::Kind::RefutedForever)
      return Verdict::refuted(json{{"witness", hom_witness(f)}}, scan.exact ? "exact" : "bounded");
    truncated = true;
  }
  if (scan.exact && !truncated) {
    MODLAB_CHECK(v.status == Status::Proven, "fitting bookkeeping");
    v.evidence["max_index"] = max_index;
  } else {
    if (v.status == Status::Proven) v.status = Status::NoCounterexampleUpTo;
    v.evidence["max_index_observed"] = max_index;
  }
  v.truncated = truncated;
  if (truncated) v.note = "power ceiling reached on some candidates";
  return v;
}

/// Strongly Hopfian holds for every presented module (finitely generated
/// additive group, so kernel chains stabilize); the scan reports indexes.
inline Verdict check_strongly_hopfian(ModuleContext& ctx) {
  auto scan = ctx.endo_scan();
  Verdict v = Verdict::proven(scan.exact ? "exact" : "certificate");
  std::size_t max_index = 0;
  for (const Homomorphism& f : *scan.fs) {
    KernelChain kc = ctx.chain(f);
    if (kc.ceiling_hit) {
      v.truncated = true;
      v.note = "power ceiling reached on a candidate";
      continue;
    }
    max_index = std::max(max_index, kc.n_star);
  }
  v.evidence["max_stabilization_index"] = max_index;
  if (!scan.exact)
    v.note = "finitely generated additive group: every kernel chain stabilizes";
  return v;
}

/// Reduced module: f m = 0 forces fM and Sm to meet trivially.
inline Verdict check_reduced(ModuleContext& ctx) {
  auto scan = ctx.endo_scan();
  bool exact = scan.exact && ctx.module()->finite() &&
               ctx.module()->order() <= ctx.config().enum_cap;
  long bound = exact ? 0 : ctx.pair_bound(std::min(ctx.config().box, 3L));
  std::vector<Vec> elems =
      exact ? ctx.module_elements() : box_elements(*ctx.module(), bound);
  const std::vector<Homomorphism>* fs = scan.fs;
  std::vector<Homomorphism> limited;
  if (!exact) {
    limited = ctx.lattice().box_candidates(bound);
    fs = &limited;
  }
  for (const Homomorphism& f : *fs) {
    Submodule fm = image(f);
    for (const Vec& m : elems) {
      if (!is_zero_vec(f.apply(m))) continue;
      std::vector<Vec> sm_gens;
      for (const Homomorphism& g : ctx.lattice().generators()) sm_gens.push_back(g.apply(m));
      IntMatrix sm = canonical_lattice(sm_gens, ctx.module()->moduli);
      IntMatrix meet = lattice_intersect(fm.basis, sm);
      if (meet != ctx.module()->zero_lattice())
        return Verdict::refuted(json{{"f", hom_witness(f)}, {"m", to_json(m)}},
                                exact ? "exact" : "bounded");
    }
  }
  return exact ? Verdict::proven() : Verdict::no_counterexample(bound);
}

/// Abelian: all idempotents central. Commutative lattices are certified
/// outright; centrality of a single idempotent is exact via the generators.
inline Verdict check_abelian(ModuleContext& ctx) {
  if (ctx.endo().commutative()) {
    Verdict v = Verdict::proven("certificate");
    v.note = "endomorphism lattice generators commute";
    return v;
  }
  auto scan = ctx.endo_scan();
  for (const Homomorphism& e : *scan.fs) {
    if (compose(e, e) != e) continue;
    if (!ctx.endo().central(e))
      return Verdict::refuted(json{{"idempotent", hom_witness(e)}},
                              scan.exact ? "exact" : "bounded");
  }
  return scan.exact ? Verdict::proven() : Verdict::no_counterexample(scan.bound);
}

/// Duo: every submodule fully invariant.
inline Verdict check_duo(ModuleContext& ctx) {
  const auto& fam = ctx.submodules();
  auto scan = ctx.endo_scan();
  bool exact = fam.exact && scan.exact;
  const std::vector<Homomorphism>* fs = scan.fs;
  std::vector<Homomorphism> limited;
  long bound = scan.bound;
  if (!exact) {
    bound = ctx.pair_bound(std::min(ctx.config().box, 3L));
    limited = ctx.lattice().box_candidates(bound);
    fs = &limited;
  }
  for (const Submodule& n : fam.subs)
    for (const Homomorphism& f : *fs)
      for (std::size_t i = 0; i < n.basis.rows(); ++i)
        if (!n.contains(f.apply(n.basis.row(i))))
          return Verdict::refuted(json{{"submodule", to_json(n.basis)}, {"f", hom_witness(f)}},
                                  exact ? "exact" : "bounded");
  return exact ? Verdict::proven() : Verdict::no_counterexample(std::max(fam.bound, bound));
}

/// C2: submodules isomorphic to direct summands are direct summands.
inline Verdict check_c2(ModuleContext& ctx) {
  if (!ctx.module()->finite())
    return Verdict::inapplicable("isomorphism search requires a finite module");
  const auto& fam = ctx.submodules();
  std::vector<std::pair<Submodule, RealizedModule>> summands;
  for (const Submodule& d : fam.subs)
    if (ctx.summand(d)) summands.push_back({d, realize_submodule(d)});
  for (const Submodule& n : fam.subs) {
    if (ctx.summand(n)) continue;
    RealizedModule rn = realize_submodule(n);
    for (auto& [d, rd] : summands) {
      if (submodule_order(n) != submodule_order(d)) continue;
      if (find_isomorphism(rn.module, rd.module, ctx.config().enum_cap))
        return Verdict::refuted(
            json{{"submodule", to_json(n.basis)}, {"summand", to_json(d.basis)}});
    }
  }
  return Verdict::proven();
}

/// D2: submodules whose quotient embeds as a summand are summands.
inline Verdict check_d2(ModuleContext& ctx) {
  if (!ctx.module()->finite())
    return Verdict::inapplicable("isomorphism search requires a finite module");
  const auto& fam = ctx.submodules();
  std::vector<std::pair<Submodule, RealizedModule>> summands;
  for (const Submodule& d : fam.subs)
    if (ctx.summand(d)) summands.push_back({d, realize_submodule(d)});
  for (const Submodule& n : fam.subs) {
    if (ctx.summand(n)) continue;
    QuotientModule q = quotient_module(ctx.module(), n);
    for (auto& [d, rd] : summands) {
      if (q.module->order() != submodule_order(d)) continue;
      if (find_isomorphism(q.module, rd.module, ctx.config().enum_cap))
        return Verdict::refuted(
            json{{"submodule", to_json(n.basis)}, {"summand", to_json(d.basis)}});
    }
  }
  return Verdict::proven();
}

/// Generalized K-nonsingularity: essential kernels force nilpotency.
inline Verdict check_gen_k_nonsingular(ModuleContext& ctx) {
  auto scan = ctx.endo_scan();
  bool inconclusive = false;
  const std::vector<Submodule>* all = nullptr;
  if (ctx.module()->finite()) all = &ctx.submodules().subs;
  for (const Homomorphism& f : *scan.fs) {
    Submodule ker = kernel(f);
    Essentiality ess = ctx.module()->finite() ? is_essential_finite(ker, *all)
                                              : is_essential_infinite(ker, ctx.config().box);
    if (ess == Essentiality::Inconclusive) {
      inconclusive = true;
      continue;
    }
    if (ess != Essentiality::Essential) continue;
    NilpotencyResult nr = is_nilpotent(f, ctx.config().power_ceiling);
    if (!nr.decided) {
      inconclusive = true;
      continue;
    }
    if (!nr.nilpotent)
      return Verdict::refuted(json{{"witness", hom_witness(f)}}, scan.exact ? "exact" : "bounded");
  }
  Verdict v = scan.exact && !inconclusive ? Verdict::proven() : Verdict::no_counterexample(scan.bound);
  if (scan.exact && inconclusive) {
    v = Verdict::no_counterexample(ctx.config().box);
    v.truncated = true;
    v.note = "essentiality or nilpotency undecided on some candidates";
  }
  return v;
}

/// Dual pi-Rickart: some image power is a direct summand.
inline Verdict check_dual_pi_rickart(ModuleContext& ctx) {
  auto scan = ctx.endo_scan();
  bool truncated = false;
  for (const Homomorphism& f : *scan.fs) {
    // descending image chain; equality propagates forward
    std::vector<Submodule> images;
    Homomorphism p = f;
    bool stabilized = false;
    for (std::size_t n = 1; n <= ctx.config().power_ceiling; ++n) {
      if (n > 1) p = compose(f, p);
      Submodule im = image(p);
      if (!images.empty() && im == images.back()) {
        stabilized = true;
        break;
      }
      images.push_back(im);
    }
    bool found = false;
    for (const Submodule& im : images)
      if (ctx.summand(im)) {
        found = true;
        break;
      }
    if (found) continue;
    if (stabilized)
      return Verdict::refuted(json{{"witness", hom_witness(f)}}, scan.exact ? "exact" : "bounded");
    truncated = true;
  }
  Verdict v =
      scan.exact && !truncated ? Verdict::proven() : Verdict::no_counterexample(scan.bound);
  v.truncated = truncated;
  if (truncated) v.note = "image chain did not stabilize within the power ceiling";
  return v;
}

/// Multiples of the identity only?
inline bool scalar_lattice(const HomLattice& lat) {
  for (const Homomorphism& g : lat.generators()) {
    for (std::size_t i = 0; i < g.mat.rows(); ++i)
      for (std::size_t j = 0; j < g.mat.cols(); ++j)
        if (i != j && g.mat.at(i, j) != 0) return false;
    for (std::size_t i = 1; i < g.mat.rows(); ++i)
      if (g.mat.at(i, i) != g.mat.at(0, 0)) return false;
  }
  return true;
}

/// Torsion elements of M with respect to S, and whether they form a
/// submodule. For scalar endomorphism lattices this is exactly the additive
/// torsion subgroup.
inline Verdict check_torsion_set(ModuleContext& ctx) {
  auto member = [&](const Vec& m) {
    // some nonzero f with f(m) = 0: the annihilator of the single element m
    // has a nonzero quotient generator
    Submodule single{ctx.module(), canonical_lattice({m}, ctx.module()->moduli)};
    HomSpaceLattice ann = left_annihilator(ctx.lattice(), single);
    auto [gens, moduli] = ann.quotient_generators(ctx.lattice());
    return !gens.empty();
  };

  json evidence;
  if (ctx.module()->finite() && ctx.exact_endos()) {
    std::vector<Vec> torsion;
    for (const Vec& m : ctx.module_elements())
      if (member(m)) torsion.push_back(m);
    std::vector<Vec> nonzero;
    for (const Vec& m : torsion)
      if (!is_zero_vec(m)) nonzero.push_back(m);
    IntMatrix closure = canonical_lattice(torsion, ctx.module()->moduli);
    AbelianQuotient q(closure, relation_rows(ctx.module()->moduli));
    bool is_submodule =
        q.finite() && q.size() == Int(torsion.size()) &&
        lattice_closed_under_action(*ctx.module(), closure);
    evidence["size"] = torsion.size();
    evidence["is_submodule"] = is_submodule;
    evidence["is_zero"] = nonzero.empty();
    Verdict v = Verdict::proven();
    v.evidence = evidence;
    return v;
  }
  if (scalar_lattice(ctx.lattice())) {
    // f = a*id: a*m = 0 with a nonzero exactly on additive torsion
    std::vector<Vec> torsion = torsion_elements(*ctx.module());
    IntMatrix closure = canonical_lattice(torsion, ctx.module()->moduli);
    Verdict v = Verdict::proven("certificate");
    v.note = "scalar endomorphism lattice: torsion set equals the additive torsion subgroup";
    v.evidence["is_zero"] = closure == ctx.module()->zero_lattice();
    v.evidence["is_submodule"] = true;
    return v;
  }
  long bound = std::min(ctx.config().box, 3L);
  std::vector<Vec> found;
  for (const Vec& m : box_elements(*ctx.module(), bound))
    if (member(m)) found.push_back(m);
  Verdict v = Verdict::no_counterexample(bound);
  bool all_zero = true;
  for (const Vec& m : found)
    if (!is_zero_vec(ctx.module()->reduce(m))) all_zero = false;
  v.evidence["box_members"] = found.size();
  v.evidence["is_zero_in_box"] = all_zero;
  return v;
}

/// Every endomorphism is injective or nilpotent.
inline Verdict check_mono_or_nilpotent(ModuleContext& ctx) {
  if (!ctx.exact_endos() && scalar_lattice(ctx.lattice())) {
    // scalar maps on a torsion-free module: a != 0 is injective, a = 0 is zero
    bool torsion_free = true;
    for (const Int& m : ctx.module()->moduli)
      if (m != 0) torsion_free = false;
    if (torsion_free) {
      Verdict v = Verdict::proven("certificate");
      v.note = "scalar endomorphism lattice on a torsion-free module";
      return v;
    }
  }
  auto scan = ctx.endo_scan();
  bool truncated = false;
  for (const Homomorphism& f : *scan.fs) {
    if (kernel(f).is_zero()) continue;
    NilpotencyResult nr = is_nilpotent(f, ctx.config().power_ceiling);
    if (!nr.decided) {
      truncated = true;
      continue;
    }
    if (!nr.nilpotent)
      return Verdict::refuted(json{{"witness", hom_witness(f)}}, scan.exact ? "exact" : "bounded");
  }
  Verdict v =
      scan.exact && !truncated ? Verdict::proven() : Verdict::no_counterexample(scan.bound);
  v.truncated = truncated;
  return v;
}

/// Regular in the sense of element-splitting: every m admits a functional
/// with m * phi(m) = m.
inline Verdict check_regular_module(ModuleContext& ctx) {
  if (!ctx.module()->finite() || !ctx.module()->ring->finite())
    return Verdict::inapplicable("needs a finite module over a finite ring");
  auto rr = ring_as_module(ctx.module()->ring);
  HomLattice functionals = hom_basis(ctx.module(), rr);
  auto all = functionals.enumerate(ctx.config().enum_cap);
  if (!all.has_value()) return Verdict::inapplicable("functional enumeration exceeded the cap");
  for (const Vec& m : ctx.module_elements()) {
    bool ok = false;
    for (const Homomorphism& phi : *all) {
      Vec r = phi.apply(m);
      if (ctx.module()->act(m, r) == ctx.module()->reduce(m)) {
        ok = true;
        break;
      }
    }
    if (!ok) return Verdict::refuted(json{{"witness", to_json(m)}});
  }
  return Verdict::proven();
}

/// 1-epiretractable: every cyclic submodule is an endomorphic image.
inline Verdict check_one_epiretractable(ModuleContext& ctx) {
  if (!ctx.module()->finite()) return Verdict::inapplicable("needs a finite module");
  if (!ctx.exact_endos()) return Verdict::inapplicable("endomorphism enumeration exceeded the cap");
  std::set<IntMatrix> images;
  for (const Homomorphism& g : *ctx.endo().enumerate(ctx.config().enum_cap))
    images.insert(image(g).basis);
  for (const Vec& m : ctx.module_elements()) {
    Submodule c = cyclic_submodule(ctx.module(), m);
    if (!images.count(c.basis))
      return Verdict::refuted(json{{"generator", to_json(m)}, {"cyclic", to_json(c.basis)}});
  }
  return Verdict::proven();
}

/// Indecomposable: no idempotents besides zero and the identity.
inline Verdict check_indecomposable(ModuleContext& ctx) {
  auto scan = ctx.endo_scan();
  for (const Homomorphism& e : *scan.fs) {
    if (compose(e, e) != e) continue;
    if (!e.is_zero() && !e.is_identity())
      return Verdict::refuted(json{{"idempotent", hom_witness(e)}},
                              scan.exact ? "exact" : "bounded");
  }
  return scan.exact ? Verdict::proven() : Verdict::no_counterexample(scan.bound);
}

struct ClassificationReport {
  std::string id;
  bool degenerate = false;
  json endo_summary;
  std::map<std::string, Verdict> properties;

  json to_json() const {
    json j;
    j["module"] = id;
    j["degenerate"] = degenerate;
    j["endomorphism_ring"] = endo_summary;
    json props;
    for (const auto& [k, v] : properties) props[k] = v.to_json();
    j["properties"] = props;
    j["schema"] = "modlab-classification-v1";
    return j;
  }

  std::string to_markdown() const {
    std::string s = "# Classification: " + id + "\n\n";
    if (degenerate) s += "_Degenerate (zero module): positive properties hold vacuously._\n\n";
    s += "## Endomorphism ring\n\n```\n" + endo_summary.dump(2) + "\n```\n\n## Properties\n\n";
    s += "| property | status | mode | detail |\n|---|---|---|---|\n";
    for (const auto& [k, v] : properties) {
      std::string detail;
      if (v.status == Status::NoCounterexampleUpTo) detail = "bound " + std::to_string(v.bound);
      if (!v.note.empty()) detail += (detail.empty() ? "" : "; ") + v.note;
      s += "| " + k + " | " + status_name(v.status) + " | " + v.mode + " | " + detail + " |\n";
    }
    return s;
  }

  bool any_refuted() const {
    for (const auto& [k, v] : properties)
      if (v.status == Status::Refuted) return true;
    return false;
  }

  bool any_truncated() const {
    for (const auto& [k, v] : properties)
      if (v.truncated) return true;
    return false;
  }
};

/// Cross-verdict implications that every report must satisfy.
inline std::vector<std::string> report_consistency_issues(const ClassificationReport& r) {
  std::vector<std::string> out;
  auto get = [&](const std::string& k) -> const Verdict* {
    auto it = r.properties.find(k);
    return it == r.properties.end() ? nullptr : &it->second;
  };
  const Verdict* rick = get("rickart");
  const Verdict* pi = get("pi_rickart");
  const Verdict* fit = get("fitting");
  if (rick && pi && rick->status == Status::Proven && pi->status == Status::Refuted)
    out.push_back("rickart proven but pi_rickart refuted");
  if (fit && pi && fit->status == Status::Proven && pi->status != Status::Proven)
    out.push_back("fitting proven but pi_rickart not proven");
  return out;
}

inline json endo_summary_json(ModuleContext& ctx) {
  json j;
  j["finite"] = ctx.endo().finite();
  j["lattice_rank"] = ctx.lattice().rank();
  j["free_rank"] = ctx.lattice().free_rank();
  j["commutative"] = ctx.endo().commutative();
  if (ctx.exact_endos()) {
    const RingBattery& b = ctx.endo_battery();
    j["order"] = to_json(ctx.endo().order());
    j["idempotent_count"] = b.idempotents.size();
    j["nilpotent_count"] = b.nilpotents.size();
    j["jacobson_radical_size"] = b.jacobson.size();
    j["singular_ideal_size"] = b.singular.size();
    j["ring"] = ring_battery_to_json(b);
  } else {
    j["coefficient_moduli"] = to_json(ctx.lattice().coeff_moduli());
    j["ring"] = ring_battery_to_json(ctx.endo_battery());
  }
  return j;
}

inline ClassificationReport classify_with(ModuleContext& ctx, const std::string& id = "") {
  const ModuleHandle& m = ctx.module();
  ClassificationReport rep;
  rep.id = id.empty() ? m->name : id;
  rep.degenerate = m->ngens() == 0 || m->order() == 1;

  rep.properties["pi_rickart"] = check_pi_rickart(ctx);
  rep.properties["rickart"] = check_rickart(ctx);
  rep.properties["baer"] = check_baer(ctx);
  rep.properties["fitting"] = check_fitting(ctx);
  rep.properties["strongly_hopfian"] = check_strongly_hopfian(ctx);
  rep.properties["reduced"] = check_reduced(ctx);
  rep.properties["abelian"] = check_abelian(ctx);
  rep.properties["duo"] = check_duo(ctx);
  rep.properties["c2"] = check_c2(ctx);
  rep.properties["d2"] = check_d2(ctx);
  rep.properties["generalized_k_nonsingular"] = check_gen_k_nonsingular(ctx);
  rep.properties["dual_pi_rickart"] = check_dual_pi_rickart(ctx);
  rep.properties["torsion_set"] = check_torsion_set(ctx);
  rep.properties["mono_or_nilpotent"] = check_mono_or_nilpotent(ctx);
  rep.properties["regular"] = check_regular_module(ctx);
  rep.properties["one_epiretractable"] = check_one_epiretractable(ctx);
  rep.properties["indecomposable"] = check_indecomposable(ctx);

  rep.endo_summary = endo_summary_json(ctx);

  if (ctx.config().fault == Fault::None) {
    auto issues = report_consistency_issues(rep);
    if (!issues.empty()) throw internal_error("report inconsistency: " + issues.front());
  }
  return rep;
}

inline ClassificationReport classify(const ModuleHandle& m, const RunConfig& cfg,
                                     const std::string& id = "") {
  ModuleContext ctx(m, cfg);
  return classify_with(ctx, id);
}

}  // namespace modlab
