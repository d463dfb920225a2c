#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "modlab/catalog.hpp"
#include "modlab/hom.hpp"
#include "modlab/lattice_ops.hpp"

using namespace modlab;

namespace {

Vec vec(const std::vector<long>& xs) {
  Vec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}

IntMatrix mat(const std::vector<std::vector<long>>& rows, std::size_t cols) {
  std::vector<Vec> rs;
  for (const auto& r : rows) rs.push_back(vec(r));
  return IntMatrix::from_rows(rs, cols);
}

// Independent oracle: every additive map given by generator images with the
// right additive orders, filtered by commutation with the ring action.
std::set<IntMatrix> brute_hom_set(const ModuleHandle& src, const ModuleHandle& tgt) {
  REQUIRE(tgt->finite());
  std::vector<Vec> tgt_elems = tgt->enumerate_elements();
  std::vector<std::vector<Vec>> candidates(src->ngens());
  for (std::size_t j = 0; j < src->ngens(); ++j)
    for (const Vec& y : tgt_elems) {
      if (src->moduli[j] != 0 && !is_zero_vec(tgt->reduce(scale_vec(src->moduli[j], y)))) continue;
      candidates[j].push_back(y);
    }
  std::set<IntMatrix> out;
  std::vector<std::size_t> pick(src->ngens(), 0);
  for (;;) {
    IntMatrix f(tgt->ngens(), src->ngens());
    for (std::size_t j = 0; j < src->ngens(); ++j)
      for (std::size_t i = 0; i < tgt->ngens(); ++i) f.at(i, j) = candidates[j][pick[j]][i];
    if (is_valid_hom(*src, *tgt, f)) out.insert(reduce_rows_mod(f, tgt->moduli));
    std::size_t k = pick.size();
    bool done = pick.empty();
    while (k > 0) {
      --k;
      ++pick[k];
      if (pick[k] < candidates[k].size()) break;
      pick[k] = 0;
      if (k == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

}  // namespace

TEST_CASE("endomorphisms of Z+Z2 form a rank-one lattice with Z2 x Z2 torsion") {
  auto m = find_fixture("example-2.3");
  HomLattice s = hom_basis(m, m);
  CHECK(s.rank() == 3);
  CHECK(s.free_rank() == 1);
  int twos = 0;
  for (const Int& d : s.coeff_moduli())
    if (d == 2) ++twos;
  CHECK(twos == 2);
  CHECK(!s.finite());
  CHECK(s.contains_matrix(IntMatrix::identity(2)));
  CHECK(s.contains_matrix(IntMatrix(2, 2)));
}

TEST_CASE("hom group between coprime cyclics is zero") {
  auto z6 = ring_zn(6);
  auto a = module_cyclics(z6, {2}, "z2");
  auto b = module_cyclics(z6, {3}, "z3");
  HomLattice h = hom_basis(a, b);
  CHECK(h.rank() == 0);
  CHECK(h.group_order() == 1);
  CHECK(brute_hom_set(a, b).size() == 1);
}

TEST_CASE("endomorphism counts on small fixtures") {
  auto z = ring_z();
  auto v = module_cyclics(z, {2, 2}, "z2+z2");
  EndoRing s(v);
  REQUIRE(s.finite());
  CHECK(s.order() == 16);

  auto m = find_fixture("example-2.3");
  EndoRing sm(m);
  CHECK(!sm.finite());
  CHECK(!sm.enumerate(Int(100000)).has_value());

  auto z4 = ring_as_module(ring_zn(4));
  EndoRing s4(z4);
  CHECK(s4.order() == 4);
}

TEST_CASE("ring as module over itself has End isomorphic to the ring") {
  for (auto ring : {ring_zn(4), ring_z2xz2()}) {
    auto m = ring_as_module(ring);
    EndoRing s(m);
    REQUIRE(s.finite());
    CHECK(s.order() == ring->order());
    // every endomorphism is a left multiplication, and conversely
    auto elems = s.enumerate(Int(1000));
    REQUIRE(elems.has_value());
    std::set<IntMatrix> got;
    for (const Homomorphism& h : *elems) got.insert(h.mat);
    std::set<IntMatrix> lmults;
    for (const Vec& x : ring->enumerate_elements())
      lmults.insert(reduce_rows_mod(ring->left_mult_matrix(x), m->moduli));
    CHECK(got == lmults);
  }
}

TEST_CASE("idempotents and nilpotents of End(Z4)") {
  auto m = ring_as_module(ring_zn(4));
  EndoRing s(m);
  auto idem = s.idempotents(Int(1000));
  auto nil = s.nilpotents(Int(1000), 16);
  std::set<IntMatrix> idem_set, nil_set;
  for (auto& h : idem) idem_set.insert(h.mat);
  for (auto& h : nil) nil_set.insert(h.mat);
  CHECK(idem_set == std::set<IntMatrix>{mat({{0}}, 1), mat({{1}}, 1)});
  CHECK(nil_set == std::set<IntMatrix>{mat({{0}}, 1), mat({{2}}, 1)});
}

TEST_CASE("the square-zero endomorphism of Z+Z2") {
  auto m = find_fixture("example-2.3");
  auto f = make_hom(m, m, mat({{0, 0}, {1, 0}}, 2));
  REQUIRE(f.has_value());
  CHECK(power(*f, 2).is_zero());
  NilpotencyResult r = is_nilpotent(*f, 16);
  CHECK(r.decided);
  CHECK(r.nilpotent);
  CHECK(r.index == 2);

  CHECK(kernel(*f).basis == mat({{2, 0}, {0, 1}}, 2));
  CHECK(kernel(power(*f, 2)).is_full());
  CHECK(image(*f).basis == mat({{0, 1}}, 2));

  KernelChain kc = kernel_chain(*f, 16);
  CHECK(kc.n_star == 2);
  CHECK(!kc.ceiling_hit);
  CHECK(kc.chain.size() == 2);
  CHECK(kc.chain.back().is_full());

  // identity is idempotent and not nilpotent
  auto id = identity_hom(m);
  CHECK(compose(id, id) == id);
  NilpotencyResult ri = is_nilpotent(id, 16);
  CHECK(ri.decided);
  CHECK(!ri.nilpotent);
}

TEST_CASE("kernel of the rank-two annihilator fixture") {
  auto m = find_fixture("example-2.9");
  auto f = make_hom(m, m, mat({{2, 0, 3, 0}, {0, 2, 0, 3}, {0, 0, 0, 0}, {0, 0, 0, 0}}, 4));
  REQUIRE(f.has_value());
  IntMatrix k = kernel(*f).basis;
  REQUIRE(k.rows() == 2);
  CHECK(k.row(0) == vec({3, 0, -2, 0}));
  CHECK(k.row(1) == vec({0, 3, 0, -2}));

  KernelChain kc = kernel_chain(*f, 16);
  CHECK(kc.n_star == 1);
  CHECK(kernel(power(*f, 2)) == kernel(*f));
  CHECK(kernel(power(*f, 5)) == kernel(*f));
}

TEST_CASE("kernel and image of trivial maps") {
  auto m = find_fixture("example-2.3");
  CHECK(kernel(identity_hom(m)).is_zero());
  CHECK(image(identity_hom(m)).is_full());
  CHECK(image(zero_hom(m, m)).is_zero());
  CHECK(kernel_chain(identity_hom(m), 16).n_star == 1);
}

TEST_CASE("hom arithmetic") {
  auto m = find_fixture("example-2.3");
  auto f = *make_hom(m, m, mat({{3, 0}, {1, 1}}, 2));
  CHECK(compose(f, identity_hom(m)) == f);
  CHECK(add(f, negate(f)).is_zero());
  CHECK(power(f, 2) == compose(f, f));
  CHECK(power(f, 0) == identity_hom(m));
}

TEST_CASE("left annihilator lattices") {
  auto m = ring_as_module(ring_zn(4));
  EndoRing s(m);
  HomSpaceLattice ann_full = left_annihilator(s.lattice(), full_submodule(m));
  auto [gens_full, mod_full] = ann_full.quotient_generators(s.lattice());
  CHECK(gens_full.empty());  // l_S(M) = 0

  HomSpaceLattice ann_zero = left_annihilator(s.lattice(), zero_submodule(m));
  CHECK(ann_zero.lat == s.lattice().lattice());  // l_S(0) = S

  // l_S(2Z4) = {0, 2} is not generated by an idempotent
  Submodule two = cyclic_submodule(m, vec({2}));
  HomSpaceLattice ann_two = left_annihilator(s.lattice(), two);
  CHECK(ann_two.contains(*make_hom(m, m, mat({{2}}, 1))));
  CHECK(!ann_two.contains(*make_hom(m, m, mat({{1}}, 1))));
  CHECK(!left_ideal_idempotent_generator(s.lattice(), ann_two).has_value());

  // but l_S(0) = S = S*1
  auto e = left_ideal_idempotent_generator(s.lattice(), ann_zero);
  REQUIRE(e.has_value());
  CHECK(e->is_identity());
}

TEST_CASE("right annihilators in End(Z4)") {
  auto m = ring_as_module(ring_zn(4));
  EndoRing s(m);
  auto two = *make_hom(m, m, mat({{2}}, 1));
  HomSpaceLattice r2 = right_annihilator(s.lattice(), two);
  // r_S(2) = {0,2} = 2S, not idempotent-generated
  CHECK(r2 == right_ideal(s.lattice(), two));
  CHECK(!right_ideal_idempotent_generator(s.lattice(), r2).has_value());
  // r_S(2^2) = r_S(0) = S = 1*S
  HomSpaceLattice r4 = right_annihilator(s.lattice(), power(two, 2));
  auto e = right_ideal_idempotent_generator(s.lattice(), r4);
  REQUIRE(e.has_value());
  CHECK(e->is_identity());
}

TEST_CASE("lattice enumeration matches brute force on finite pairs", "[property]") {
  auto z6 = ring_zn(6);
  auto z4r = ring_zn(4);
  std::vector<std::pair<ModuleHandle, ModuleHandle>> pairs;
  auto za = module_cyclics(z6, {2}, "a");
  auto zb = module_cyclics(z6, {3}, "b");
  auto zc = module_cyclics(z6, {6, 2}, "c");
  pairs.push_back({za, zb});
  pairs.push_back({zc, zc});
  pairs.push_back({za, zc});
  auto m42 = module_cyclics(z4r, {4, 2}, "z4+z2");
  pairs.push_back({m42, m42});
  auto t2 = ring_t2(2);
  auto row = module_t2_row(t2, 2, "row");
  pairs.push_back({row, row});
  pairs.push_back({row, ring_as_module(t2)});

  for (auto& [src, tgt] : pairs) {
    HomLattice h = hom_basis(src, tgt);
    auto all = h.enumerate(Int(100000));
    REQUIRE(all.has_value());
    std::set<IntMatrix> got;
    for (const Homomorphism& f : *all) got.insert(f.mat);
    CHECK(got == brute_hom_set(src, tgt));
  }
}

TEST_CASE("idempotents split the module", "[property]") {
  for (const auto& inst : catalog_instances()) {
    if (!inst.finite) continue;
    if (inst.module->order() > 20) continue;
    EndoRing s(inst.module);
    auto idem = s.idempotents(Int(100000));
    for (const Homomorphism& e : idem) {
      Submodule im = image(e), ker = kernel(e);
      INFO(inst.name);
      CHECK(submodule_sum(im, ker).is_full());
      CHECK(submodule_intersect(im, ker).is_zero());
    }
  }
}

TEST_CASE("endomorphism ring as a ring presentation") {
  auto m42 = module_cyclics(ring_zn(4), {4, 2}, "z4+z2");
  EndoRing s(m42);
  EndoRingPresentation rp = endo_ring_presentation(s);
  CHECK(!validate_ring(*rp.ring).has_value());
  CHECK(rp.ring->order() == s.order());
  // coordinate maps invert each other
  auto elems = s.enumerate(Int(100000));
  REQUIRE(elems.has_value());
  for (const Homomorphism& h : *elems) CHECK(rp.to_hom(rp.to_ring(h)) == h);

  // infinite case stays exact
  auto m = find_fixture("example-2.3");
  EndoRing sm(m);
  EndoRingPresentation rpm = endo_ring_presentation(sm);
  CHECK(!validate_ring(*rpm.ring).has_value());
  CHECK(!rpm.ring->finite());
}

TEST_CASE("commutativity certificates") {
  EndoRing s6(ring_as_module(ring_zn(6)));
  CHECK(s6.commutative());
  EndoRing s22(module_cyclics(ring_zn(2), {2, 2}, "z2+z2"));
  CHECK(!s22.commutative());
  auto m = find_fixture("example-2.3");
  EndoRing sm(m);
  CHECK(!sm.commutative());
  // the second-coordinate projection is not central
  auto e = *make_hom(m, m, mat({{0, 0}, {0, 1}}, 2));
  CHECK(!sm.central(e));
}
