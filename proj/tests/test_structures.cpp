#include <catch2/catch_amalgamated.hpp>

#include "modlab/catalog.hpp"

using namespace modlab;

namespace {
Vec vec(const std::vector<long>& xs) {
  Vec v;
  for (long x : xs) v.push_back(Int(x));
  return v;
}
}  // namespace

TEST_CASE("every catalog entry validates") {
  for (const auto& inst : catalog_instances()) {
    INFO(inst.name);
    CHECK(!validate_ring(*inst.module->ring).has_value());
    CHECK(!validate_module(*inst.module).has_value());
  }
}

TEST_CASE("z6 presentation is a valid ring") {
  auto r = ring_zn(6);
  CHECK(!validate_ring(*r).has_value());
  CHECK(r->mult(vec({4}), vec({5})) == vec({2}));
}

TEST_CASE("non-associative table is rejected with its witness triple") {
  RingPresentation r;
  r.name = "broken";
  r.moduli = {Int(4), Int(4)};
  // b0 acts as identity, b1*b1 = b0 while b1*b0 = 0 breaks (b1 b1) b1 = b1 (b1 b1)
  r.table = {{vec({1, 0}), vec({0, 1})}, {vec({0, 1}), vec({1, 0})}};
  r.table[1][0] = vec({0, 0});
  r.one = vec({1, 0});
  auto issue = validate_ring(r);
  REQUIRE(issue.has_value());
}

TEST_CASE("upper triangular ring over Z2 validates") {
  auto t = ring_t2(2);
  CHECK(!validate_ring(*t).has_value());
  // E12 * E12 = 0, E11 * E12 = E12
  CHECK(t->mult(vec({0, 1, 0}), vec({0, 1, 0})) == vec({0, 0, 0}));
  CHECK(t->mult(vec({1, 0, 0}), vec({0, 1, 0})) == vec({0, 1, 0}));
}

TEST_CASE("module validation catches a broken unit action") {
  auto z4 = ring_zn(4);
  ModulePresentation p;
  p.name = "bad";
  p.ring = z4;
  p.moduli = {Int(4)};
  IntMatrix a(1, 1);
  a.at(0, 0) = 2;  // identity of the ring must act as identity
  p.action = {a};
  CHECK(validate_module(p).has_value());
}

TEST_CASE("module torsion violations are rejected") {
  auto z4 = ring_zn(4);
  ModulePresentation p;
  p.name = "bad-torsion";
  p.ring = z4;
  p.moduli = {Int(2)};  // 4 does not kill Z2 under a unit action? it does; break shape instead
  p.action = {IntMatrix::identity(1)};
  CHECK(!validate_module(p).has_value());

  // Z3 cannot be a Z4-module under the scalar action: 4*x = x != 0
  ModulePresentation q;
  q.name = "z3-over-z4";
  q.ring = z4;
  q.moduli = {Int(3)};
  q.action = {IntMatrix::identity(1)};
  CHECK(validate_module(q).has_value());
}

TEST_CASE("ring as module over itself validates") {
  for (long n : {4L, 6L}) {
    auto m = ring_as_module(ring_zn(n));
    CHECK(!validate_module(*m).has_value());
  }
  auto t = ring_as_module(ring_t2(2));
  CHECK(!validate_module(*t).has_value());
  auto m2 = ring_as_module(ring_m2(2));
  CHECK(!validate_module(*m2).has_value());
}

TEST_CASE("direct sum builds a block action with embeddings") {
  auto z6 = ring_zn(6);
  auto a = module_cyclics(z6, {2}, "z2");
  auto b = module_cyclics(z6, {3}, "z3");
  DirectSum s = direct_sum(a, b);
  CHECK(s.module->order() == 6);
  CHECK(!validate_module(*s.module).has_value());
  CHECK(s.module->moduli == vec({2, 3}));

  auto zero = module_zero(z6);
  DirectSum s2 = direct_sum(a, zero);
  CHECK(s2.module->moduli == a->moduli);
  CHECK(s2.module->action == a->action);

  auto z4 = ring_zn(4);
  CHECK_THROWS(direct_sum(a, module_cyclics(z4, {2}, "x")));
}

TEST_CASE("quotient by the full module is zero and by zero is the module") {
  auto z = ring_z();
  auto m = module_z_plus_z2(z);
  QuotientModule q1 = quotient_module(m, full_submodule(m));
  CHECK(q1.module->ngens() == 0);
  CHECK(q1.module->order() == 1);

  QuotientModule q2 = quotient_module(m, zero_submodule(m));
  CHECK(q2.module->order() == m->order());
  CHECK(q2.module->moduli.size() == 2);
}

TEST_CASE("quotient of Z+Z2 by 2Z+Z2 is Z2") {
  auto z = ring_z();
  auto m = module_z_plus_z2(z);
  Submodule n = submodule_from_generators(m, {vec({2, 0}), vec({0, 1})});
  QuotientModule q = quotient_module(m, n);
  REQUIRE(q.module->moduli == vec({2}));
  // projection is onto and kills exactly N
  CHECK(q.project(vec({2, 0})) == vec({0}));
  CHECK(q.project(vec({0, 1})) == vec({0}));
  CHECK(q.project(vec({1, 0})) == vec({1}));
}

TEST_CASE("realized submodule presents the subgroup with its induced action") {
  auto z = ring_z();
  auto m = module_z_plus_z2(z);
  Submodule n = submodule_from_generators(m, {vec({2, 0}), vec({0, 1})});
  RealizedModule r = realize_submodule(n);
  CHECK(!validate_module(*r.module).has_value());
  CHECK(r.module->moduli == vec({2, 0}));
  // inclusion maps generators onto lattice members
  for (std::size_t c = 0; c < r.inclusion.cols(); ++c) CHECK(n.contains(r.inclusion.col(c)));
}

TEST_CASE("submodule element enumeration and order") {
  auto z4 = ring_zn(4);
  auto m = ring_as_module(z4);
  Submodule two = cyclic_submodule(m, vec({2}));
  CHECK(submodule_order(two) == 2);
  auto elems = submodule_elements(two);
  REQUIRE(elems.size() == 2);
  CHECK(elems[0] == vec({0}));
  CHECK(elems[1] == vec({2}));
}

TEST_CASE("zero ring is rejected as a module base") {
  RingPresentation r;
  r.name = "null";
  CHECK(!validate_ring(r).has_value());  // the empty ring presentation is consistent
  auto h = std::make_shared<const RingPresentation>(r);
  CHECK_THROWS(ring_as_module(h));
}
