#pragma once

#include <map>
#include <set>

#include "modlab/config.hpp"
#include "modlab/jsonutil.hpp"
#include "modlab/lattice_ops.hpp"

namespace modlab {

enum class Status { Proven, Refuted, NoCounterexampleUpTo, Inapplicable };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Proven: return "proven";
    case Status::Refuted: return "refuted";
    case Status::NoCounterexampleUpTo: return "no_counterexample_up_to";
    case Status::Inapplicable: return "inapplicable";
  }
  return "?";
}

struct Verdict {
  Status status = Status::Inapplicable;
  std::string mode;  // "exact" | "bounded" | "certificate" | "witness"
  long bound = 0;    // box bound actually scanned, for bounded verdicts
  json evidence = json::object();
  std::string note;
  bool truncated = false;  // a cap or ceiling forced a weaker mode

  static Verdict proven(std::string mode = "exact") {
    Verdict v;
    v.status = Status::Proven;
    v.mode = std::move(mode);
    return v;
  }
  static Verdict refuted(json witness, std::string mode = "exact") {
    Verdict v;
    v.status = Status::Refuted;
    v.mode = std::move(mode);
    v.evidence = std::move(witness);
    return v;
  }
  static Verdict no_counterexample(long bound) {
    Verdict v;
    v.status = Status::NoCounterexampleUpTo;
    v.mode = "bounded";
    v.bound = bound;
    return v;
  }
  static Verdict inapplicable(std::string why) {
    Verdict v;
    v.status = Status::Inapplicable;
    v.note = std::move(why);
    return v;
  }

  json to_json() const {
    json j;
    j["status"] = status_name(status);
    j["mode"] = mode;
    if (status == Status::NoCounterexampleUpTo) j["bound"] = bound;
    if (!evidence.empty()) j["evidence"] = evidence;
    if (!note.empty()) j["note"] = note;
    if (truncated) j["truncated"] = true;
    return j;
  }
};

/// True for the canonical presentation of the integers: one free basis
/// element squaring to itself. Backs the exact magnitude arguments below.
inline bool ring_is_integer_scalars(const RingPresentation& r) {
  return r.dim() == 1 && r.moduli[0] == 0 && r.table[0][0] == Vec{Int(1)} && r.one == Vec{Int(1)};
}

/// Elements of a box in a presented ring (torsion coordinates full range,
/// free coordinates within [-box, box]).
inline std::vector<Vec> ring_box_elements(const RingPresentation& r, long box) {
  std::vector<Vec> out;
  Vec lo(r.dim()), hi(r.dim());
  for (std::size_t i = 0; i < r.dim(); ++i) {
    if (r.moduli[i] == 0) {
      lo[i] = Int(-box);
      hi[i] = Int(box);
    } else {
      lo[i] = 0;
      hi[i] = r.moduli[i] - 1;
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
  // small free coordinates first so witnesses come out small
  std::stable_sort(out.begin(), out.end(), [&](const Vec& a, const Vec& bv) {
    Int sa = 0, sb = 0;
    for (std::size_t k = 0; k < a.size(); ++k)
      if (r.moduli[k] == 0) {
        sa = std::max(sa, int_abs(a[k]));
        sb = std::max(sb, int_abs(bv[k]));
      }
    return sa < sb;
  });
  return out;
}

/// Solve a = a*x*a style equations: x -> l*x*r linearized as one matrix.
inline std::optional<Vec> solve_sandwich(const RingPresentation& r, const Vec& left,
                                         const Vec& right, const Vec& rhs) {
  IntMatrix m = r.left_mult_matrix(left) * r.right_mult_matrix(right);
  SolutionSet s = solve_affine(m, rhs, r.moduli, r.moduli);
  if (s.empty()) return std::nullopt;
  return r.reduce(s.particular);
}

/// Distinct power values a, a^2, ... of a ring element until the value set
/// closes (finite rings always close; a ceiling guards the free case).
inline std::vector<Vec> power_values(const RingPresentation& r, const Vec& a,
                                     std::size_t ceiling, bool& closed) {
  std::vector<Vec> vals;
  std::set<Vec> seen;
  Vec p = r.reduce(a);
  closed = false;
  for (std::size_t n = 1; n <= ceiling; ++n) {
    if (!seen.insert(p).second) {
      closed = true;
      break;
    }
    vals.push_back(p);
    p = r.mult(p, a);
  }
  if (!closed && seen.count(p)) closed = true;
  return vals;
}

/// Exhaustive battery of ring-level properties for a finite presented ring,
/// plus bounded/certificate modes for lattice-presented infinite rings.
struct RingBattery {
  bool finite = false;
  Int order = 0;
  std::vector<Vec> units, jacobson, idempotents, nilpotents, singular;
  std::size_t orthogonal_family = 0;
  Verdict von_neumann_regular, pi_regular, strongly_pi_regular, reduced, abelian,
      gen_right_pp, local_nil_jacobson;
};

namespace detail {

inline bool ring_is_unit(const RingPresentation& r, const std::vector<Vec>& elems, const Vec& x) {
  Vec one = r.reduce(r.one);
  for (const Vec& y : elems)
    if (r.mult(x, y) == one && r.mult(y, x) == one) return true;
  return false;
}

}  // namespace detail

/// Right annihilator {x : a*x = 0} of a ring element, as a lattice of
/// coordinate vectors (works for infinite rings too).
inline IntMatrix ring_right_annihilator(const RingPresentation& r, const Vec& a) {
  std::vector<detail::CongruenceRow> rows;
  IntMatrix la = r.left_mult_matrix(a);
  for (std::size_t i = 0; i < r.dim(); ++i) rows.push_back({la.row(i), r.moduli[i]});
  IntMatrix ker = detail::congruence_kernel(rows, r.dim());
  return canonical_lattice(ker.row_list(), r.moduli);
}

/// Does an idempotent e generate the right ideal given by `lat` (e*x = x on
/// the ideal, e inside it)? One affine solve; exact for infinite rings.
inline std::optional<Vec> right_ideal_idempotent_generator_ring(const RingPresentation& r,
                                                                const IntMatrix& lat) {
  AbelianQuotient q(lat, relation_rows(r.moduli));
  const Vec& d = q.invariant_factors();
  std::vector<Vec> gens;
  Vec moduli;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (d[k] == 1) continue;
    moduli.push_back(d[k]);
    gens.push_back(q.element(unit_vec(d.size(), k)));
  }
  if (gens.empty()) return r.reduce(zero_vec(r.dim()));  // zero ideal = 0*R

  std::vector<Vec> rows;
  Vec rhs, tmod;
  for (const Vec& g : gens) {
    // e * g = g, linear in e through right multiplication by g
    IntMatrix rg = r.right_mult_matrix(g);
    for (std::size_t i = 0; i < r.dim(); ++i) {
      Vec row(gens.size());
      for (std::size_t k = 0; k < gens.size(); ++k) {
        // e = sum y_k gens[k]; coefficient of y_k in (e*g)_i
        Vec col = rg.apply(gens[k]);
        row[k] = col[i];
      }
      rows.push_back(std::move(row));
      rhs.push_back(g[i]);
      tmod.push_back(r.moduli[i]);
    }
  }
  SolutionSet sol = solve_affine(IntMatrix::from_rows(rows, gens.size()), rhs, moduli, tmod);
  if (sol.empty()) return std::nullopt;
  Vec e = zero_vec(r.dim());
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::size_t i = 0; i < r.dim(); ++i) e[i] += sol.particular[k] * gens[k][i];
  e = r.reduce(e);
  MODLAB_CHECK(r.mult(e, e) == e, "ring ideal generator is not idempotent");
  MODLAB_CHECK(lattice_contains(lat, e), "ring ideal generator escapes the ideal");
  return e;
}

inline RingBattery ring_battery(const RingHandle& r, const RunConfig& cfg) {
  RingBattery b;
  b.finite = r->finite();

  if (!b.finite) {
    // lattice-presented infinite ring: per-element questions stay exact,
    // universal quantifiers run over a box (downshifted to a fixed budget)
    long box = cfg.box;
    auto count = [&](long bb) {
      Int total = 1;
      for (const Int& m : r->moduli) total *= (m == 0) ? Int(2 * bb + 1) : m;
      return total;
    };
    while (box > 1 && count(box) > 1000) --box;
    auto elems = ring_box_elements(*r, box);
    Vec one = r->reduce(r->one);
    bool scalars = ring_is_integer_scalars(*r);

    b.von_neumann_regular = Verdict::no_counterexample(box);
    b.pi_regular = Verdict::no_counterexample(box);
    b.strongly_pi_regular = Verdict::no_counterexample(box);
    b.reduced = Verdict::no_counterexample(box);
    b.gen_right_pp = Verdict::no_counterexample(box);
    b.abelian = Verdict::no_counterexample(box);
    b.local_nil_jacobson = Verdict::inapplicable("jacobson radical needs a finite ring");

    for (const Vec& a : elems) {
      if (b.von_neumann_regular.status != Status::Refuted &&
          !solve_sandwich(*r, a, a, a).has_value())
        b.von_neumann_regular = Verdict::refuted(json{{"witness", to_json(a)}});
      if (b.pi_regular.status != Status::Refuted) {
        bool closed = false;
        auto powers = power_values(*r, a, cfg.power_ceiling, closed);
        bool ok = false;
        for (const Vec& v : powers)
          if (solve_sandwich(*r, v, v, v).has_value()) {
            ok = true;
            break;
          }
        if (!ok && closed)
          b.pi_regular = Verdict::refuted(json{{"witness", to_json(a)}});
        else if (!ok && scalars && int_abs(a[0]) >= 2) {
          // over the integers |a^n x a^n| is 0 or at least |a|^2n > |a|^n
          b.pi_regular = Verdict::refuted(json{{"witness", to_json(a)}}, "certificate");
          b.pi_regular.note = "magnitude argument over the integer scalar ring";
        } else if (!ok) {
          b.pi_regular.truncated = true;
          b.pi_regular.note = "power ceiling reached on a candidate";
        }
      }
      if (b.reduced.status != Status::Refuted && !is_zero_vec(a)) {
        bool closed = false;
        auto powers = power_values(*r, a, cfg.power_ceiling, closed);
        for (const Vec& v : powers)
          if (is_zero_vec(v)) {
            b.reduced = Verdict::refuted(json{{"witness", to_json(a)}});
            break;
          }
      }
      if (b.gen_right_pp.status != Status::Refuted) {
        bool closed = false;
        auto powers = power_values(*r, a, cfg.power_ceiling, closed);
        bool ok = false;
        for (const Vec& v : powers)
          if (right_ideal_idempotent_generator_ring(*r, ring_right_annihilator(*r, v))) {
            ok = true;
            break;
          }
        if (!ok && closed)
          b.gen_right_pp = Verdict::refuted(json{{"witness", to_json(a)}});
        else if (!ok && scalars) {
          // r(a^n) is 0 for a != 0 and R for a = 0; both idempotent-generated
          b.gen_right_pp = Verdict::proven("certificate");
        } else if (!ok) {
          b.gen_right_pp.truncated = true;
          b.gen_right_pp.note = "power ceiling reached on a candidate";
        }
      }
      if (b.strongly_pi_regular.status != Status::Refuted) {
        bool ok = false;
        Vec p = r->reduce(a);
        for (std::size_t n = 1; n <= cfg.power_ceiling && !ok; ++n) {
          Vec pnext = r->mult(p, a);
          // a^n = a^(n+1) x: linear in x
          SolutionSet s = solve_affine(r->left_mult_matrix(pnext), p, r->moduli, r->moduli);
          if (!s.empty()) ok = true;
          p = pnext;
        }
        if (!ok && scalars && int_abs(a[0]) >= 2)
          b.strongly_pi_regular = Verdict::refuted(json{{"witness", to_json(a)}}, "certificate");
        else if (!ok) {
          b.strongly_pi_regular.truncated = true;
          b.strongly_pi_regular.note = "power ceiling reached on a candidate";
        }
      }
    }
    // commutative presentations are abelian outright
    bool comm = true;
    for (std::size_t i = 0; i < r->dim() && comm; ++i)
      for (std::size_t j = 0; j < r->dim() && comm; ++j)
        if (r->table[i][j] != r->table[j][i]) comm = false;
    if (comm) b.abelian = Verdict::proven("certificate");
    // over the integer scalars right annihilators are 0 or everything
    if (scalars && b.gen_right_pp.status == Status::NoCounterexampleUpTo) {
      b.gen_right_pp = Verdict::proven("certificate");
      b.gen_right_pp.note = "integer scalar ring: annihilators are trivial ideals";
    }
    return b;
  }

  auto elems = r->enumerate_elements();
  b.order = r->order();
  Vec one = r->reduce(r->one);
  Vec zero = zero_vec(r->dim());

  std::set<Vec> unit_set;
  for (const Vec& x : elems)
    if (detail::ring_is_unit(*r, elems, x)) {
      b.units.push_back(x);
      unit_set.insert(x);
    }

  for (const Vec& x : elems) {
    bool in_j = true;
    for (const Vec& s : elems) {
      Vec probe = r->reduce(sub_vec(one, r->mult(s, x)));
      if (!unit_set.count(probe)) {
        in_j = false;
        break;
      }
    }
    if (in_j) b.jacobson.push_back(x);
  }

  for (const Vec& x : elems) {
    if (r->mult(x, x) == x) b.idempotents.push_back(x);
    bool closed = false;
    auto powers = power_values(*r, x, 1000000, closed);
    MODLAB_CHECK(closed, "power cycle did not close on a finite ring");
    for (const Vec& v : powers)
      if (is_zero_vec(v)) {
        b.nilpotents.push_back(x);
        break;
      }
  }

  // right singular ideal: elements whose right annihilator is an essential
  // right ideal, decided through the regular module
  if (r->dim() == 0) {
    b.singular = elems;  // the zero ring: vacuously essential
  } else {
    auto rr = ring_as_module(r);
    auto subs = enumerate_submodules(rr, cfg.submodule_cap);
    MODLAB_CHECK(subs.has_value(), "right ideal enumeration overflow");
    for (const Vec& x : elems) {
      IntMatrix ann = ring_right_annihilator(*r, x);
      Submodule s{rr, ann};
      if (is_essential_finite(s, *subs) == Essentiality::Essential) b.singular.push_back(x);
    }
  }

  // greedy maximal family of nonzero orthogonal idempotents
  {
    std::vector<Vec> family;
    for (const Vec& e : b.idempotents) {
      if (is_zero_vec(e)) continue;
      bool ortho = true;
      for (const Vec& f : family)
        if (!is_zero_vec(r->mult(e, f)) || !is_zero_vec(r->mult(f, e))) {
          ortho = false;
          break;
        }
      if (ortho) family.push_back(e);
    }
    b.orthogonal_family = family.size();
  }

  auto refute = [&](const Vec& w) { return Verdict::refuted(json{{"witness", to_json(w)}}); };

  b.von_neumann_regular = Verdict::proven();
  for (const Vec& a : elems) {
    bool ok = false;
    for (const Vec& x : elems)
      if (r->mult(r->mult(a, x), a) == a) {
        ok = true;
        break;
      }
    if (!ok) {
      b.von_neumann_regular = refute(a);
      break;
    }
  }

  b.pi_regular = Verdict::proven();
  {
    std::map<Vec, bool> value_regular;  // v -> exists x with v x v = v
    auto regular_value = [&](const Vec& v) {
      auto it = value_regular.find(v);
      if (it != value_regular.end()) return it->second;
      bool ok = false;
      for (const Vec& x : elems)
        if (r->mult(r->mult(v, x), v) == v) {
          ok = true;
          break;
        }
      value_regular[v] = ok;
      return ok;
    };
    for (const Vec& a : elems) {
      bool closed = false;
      auto powers = power_values(*r, a, 1000000, closed);
      bool ok = false;
      for (const Vec& v : powers)
        if (regular_value(v)) {
          ok = true;
          break;
        }
      if (!ok) {
        b.pi_regular = refute(a);
        break;
      }
    }
  }

  b.strongly_pi_regular = Verdict::proven();
  {
    std::map<std::pair<Vec, Vec>, bool> pair_cache;  // (a^n, a^(n+1)) solvable
    for (const Vec& a : elems) {
      bool ok = false;
      Vec p = r->reduce(a);
      std::set<Vec> seen;
      while (seen.insert(p).second && !ok) {
        Vec pnext = r->mult(p, a);
        auto key = std::make_pair(p, pnext);
        auto it = pair_cache.find(key);
        if (it == pair_cache.end()) {
          bool solvable = false;
          for (const Vec& x : elems)
            if (r->mult(pnext, x) == p) {
              solvable = true;
              break;
            }
          it = pair_cache.emplace(key, solvable).first;
        }
        ok = it->second;
        p = pnext;
      }
      if (!ok) {
        b.strongly_pi_regular = refute(a);
        break;
      }
    }
  }

  b.reduced = Verdict::proven();
  for (const Vec& x : b.nilpotents)
    if (!is_zero_vec(x)) {
      b.reduced = refute(x);
      break;
    }

  b.abelian = Verdict::proven();
  for (const Vec& e : b.idempotents) {
    for (const Vec& s : elems)
      if (r->mult(e, s) != r->mult(s, e)) {
        b.abelian = Verdict::refuted(json{{"idempotent", to_json(e)}, {"witness", to_json(s)}});
        break;
      }
    if (b.abelian.status == Status::Refuted) break;
  }

  b.gen_right_pp = Verdict::proven();
  {
    std::map<Vec, bool> value_gpp;  // v -> r(v) idempotent-generated
    auto gpp_value = [&](const Vec& v) {
      auto it = value_gpp.find(v);
      if (it != value_gpp.end()) return it->second;
      bool ok =
          right_ideal_idempotent_generator_ring(*r, ring_right_annihilator(*r, v)).has_value();
      value_gpp[v] = ok;
      return ok;
    };
    for (const Vec& a : elems) {
      bool closed = false;
      auto powers = power_values(*r, a, 1000000, closed);
      bool ok = false;
      for (const Vec& v : powers)
        if (gpp_value(v)) {
          ok = true;
          break;
        }
      if (!ok) {
        b.gen_right_pp = refute(a);
        break;
      }
    }
  }

  // local iff the non-units are additively closed; then nil radical check
  {
    bool local = b.order > 1;
    for (const Vec& x : elems) {
      if (!local) break;
      if (unit_set.count(x)) continue;
      for (const Vec& y : elems) {
        if (unit_set.count(y)) continue;
        if (unit_set.count(r->reduce(add_vec(x, y)))) {
          local = false;
          break;
        }
      }
    }
    if (!local)
      b.local_nil_jacobson = Verdict::refuted(json{{"reason", "not local"}});
    else {
      std::set<Vec> nil_set(b.nilpotents.begin(), b.nilpotents.end());
      bool nil_j = true;
      for (const Vec& x : b.jacobson)
        if (!nil_set.count(x)) {
          nil_j = false;
          break;
        }
      b.local_nil_jacobson =
          nil_j ? Verdict::proven()
                : Verdict::refuted(json{{"reason", "jacobson radical is not nil"}});
    }
  }

  return b;
}

inline json ring_battery_to_json(const RingBattery& b) {
  json j;
  j["finite"] = b.finite;
  if (b.finite) {
    j["order"] = to_json(b.order);
    j["unit_count"] = b.units.size();
    j["jacobson_radical_size"] = b.jacobson.size();
    j["idempotent_count"] = b.idempotents.size();
    j["nilpotent_count"] = b.nilpotents.size();
    j["singular_ideal_size"] = b.singular.size();
    j["orthogonal_idempotent_family"] = b.orthogonal_family;
  }
  j["von_neumann_regular"] = b.von_neumann_regular.to_json();
  j["pi_regular"] = b.pi_regular.to_json();
  j["strongly_pi_regular"] = b.strongly_pi_regular.to_json();
  j["reduced"] = b.reduced.to_json();
  j["abelian"] = b.abelian.to_json();
  j["gen_right_pp"] = b.gen_right_pp.to_json();
  j["local_nil_jacobson"] = b.local_nil_jacobson.to_json();
  return j;
}

}  // namespace modlab
