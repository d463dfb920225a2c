#pragma once

#include <functional>
#include <map>

#include "modlab/presentation.hpp"

namespace modlab {

/// Z/nZ for n >= 2, or Z itself for n = 0, as a rank-one ring.
inline RingHandle ring_zn(long n, std::string name = "") {
  RingPresentation r;
  r.name = name.empty() ? (n == 0 ? "z" : "z" + std::to_string(n)) : std::move(name);
  r.moduli = {Int(n)};
  r.table = {{{Int(1)}}};
  r.one = {Int(1)};
  return make_ring(std::move(r));
}

inline RingHandle ring_z() { return ring_zn(0); }

/// Product ring Z2 x Z2 (componentwise operations).
inline RingHandle ring_z2xz2() {
  RingPresentation r;
  r.name = "z2xz2";
  r.moduli = {Int(2), Int(2)};
  r.table = {{{Int(1), Int(0)}, {Int(0), Int(0)}}, {{Int(0), Int(0)}, {Int(0), Int(1)}}};
  r.one = {Int(1), Int(1)};
  return make_ring(std::move(r));
}

/// Upper triangular 2x2 matrices over Z/mZ (m = 0 gives Z); basis E11, E12, E22.
inline RingHandle ring_t2(long m) {
  RingPresentation r;
  r.name = m == 0 ? "t2z" : "t2z" + std::to_string(m);
  r.moduli = {Int(m), Int(m), Int(m)};
  auto z = [] { return Vec{Int(0), Int(0), Int(0)}; };
  auto e = [](int k) {
    Vec v{Int(0), Int(0), Int(0)};
    v[k] = 1;
    return v;
  };
  // E11*E11=E11, E11*E12=E12, E12*E22=E12, E22*E22=E22, rest zero
  r.table = {{e(0), e(1), z()}, {z(), z(), e(1)}, {z(), z(), e(2)}};
  r.one = {Int(1), Int(0), Int(1)};
  return make_ring(std::move(r));
}

/// Full 2x2 matrix ring over Z/mZ (m = 0 gives Z); basis E11, E12, E21, E22.
inline RingHandle ring_m2(long m) {
  RingPresentation r;
  r.name = m == 0 ? "m2z" : "m2z" + std::to_string(m);
  r.moduli = Vec(4, Int(m));
  auto idx = [](int i, int j) { return 2 * i + j; };
  r.table.assign(4, std::vector<Vec>(4, Vec(4, Int(0))));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          if (j == k) r.table[idx(i, j)][idx(k, l)][idx(i, l)] = 1;
  r.one = {Int(1), Int(0), Int(0), Int(1)};
  return make_ring(std::move(r));
}

/// Direct sum of cyclic groups with the scalar action of a rank-one ring.
/// Every listed order must annihilate compatibly with the ring modulus.
inline ModuleHandle module_cyclics(const RingHandle& r, const std::vector<long>& orders,
                                   std::string name) {
  if (r->dim() != 1) throw std::invalid_argument("module_cyclics needs a rank-one ring");
  ModulePresentation m;
  m.name = std::move(name);
  m.ring = r;
  for (long d : orders) m.moduli.push_back(Int(d));
  m.action = {IntMatrix::identity(orders.size())};
  return make_module(std::move(m));
}

/// The zero module over any ring.
inline ModuleHandle module_zero(const RingHandle& r, std::string name = "zero") {
  ModulePresentation m;
  m.name = std::move(name);
  m.ring = r;
  m.action.assign(r->dim(), IntMatrix(0, 0));
  return make_module(std::move(m));
}

/// Row module (x, y) over a triangular ring T2: (x,y)*E11=(x,0),
/// (x,y)*E12=(0,x), (x,y)*E22=(0,y).
inline ModuleHandle module_t2_row(const RingHandle& t2, long m, std::string name) {
  ModulePresentation p;
  p.name = std::move(name);
  p.ring = t2;
  p.moduli = {Int(m), Int(m)};
  IntMatrix a11(2, 2), a12(2, 2), a22(2, 2);
  a11.at(0, 0) = 1;
  a12.at(1, 0) = 1;
  a22.at(1, 1) = 1;
  p.action = {a11, a12, a22};
  return make_module(std::move(p));
}

/// One-generator module over T2 on which only E22 acts (the corner column).
inline ModuleHandle module_t2_corner(const RingHandle& t2, long m, std::string name) {
  ModulePresentation p;
  p.name = std::move(name);
  p.ring = t2;
  p.moduli = {Int(m)};
  IntMatrix a11(1, 1), a12(1, 1), a22(1, 1);
  a22.at(0, 0) = 1;
  p.action = {a11, a12, a22};
  return make_module(std::move(p));
}

/// Row module (x, y) over a full matrix ring M2.
inline ModuleHandle module_m2_row(const RingHandle& m2, long m, std::string name) {
  ModulePresentation p;
  p.name = std::move(name);
  p.ring = m2;
  p.moduli = {Int(m), Int(m)};
  IntMatrix a11(2, 2), a12(2, 2), a21(2, 2), a22(2, 2);
  a11.at(0, 0) = 1;   // (x,y)E11 = (x,0)
  a12.at(1, 0) = 1;   // (x,y)E12 = (0,x)
  a21.at(0, 1) = 1;   // (x,y)E21 = (y,0)
  a22.at(1, 1) = 1;   // (x,y)E22 = (0,y)
  p.action = {a11, a12, a21, a22};
  return make_module(std::move(p));
}

/// Full 2x2 integer matrices as a right module over the upper triangular
/// integer ring; generators E11, E12, E21, E22 in that order.
inline ModuleHandle module_m2z_over_t2z(const RingHandle& t2z) {
  ModulePresentation p;
  p.name = "m2z-over-t2z";
  p.ring = t2z;
  p.moduli = Vec(4, Int(0));
  IntMatrix a11(4, 4), a12(4, 4), a22(4, 4);
  // column c holds the image of generator c
  a11.at(0, 0) = 1;  // E11*E11 = E11
  a11.at(2, 2) = 1;  // E21*E11 = E21
  a12.at(1, 0) = 1;  // E11*E12 = E12
  a12.at(3, 2) = 1;  // E21*E12 = E22
  a22.at(1, 1) = 1;  // E12*E22 = E12
  a22.at(3, 3) = 1;  // E22*E22 = E22
  p.action = {a11, a12, a22};
  return make_module(std::move(p));
}

/// Z + Z2 with the scalar integer action.
inline ModuleHandle module_z_plus_z2(const RingHandle& z) {
  ModulePresentation p;
  p.name = "z+z2";
  p.ring = z;
  p.moduli = {Int(0), Int(2)};
  p.action = {IntMatrix::identity(2)};
  return make_module(std::move(p));
}

struct CatalogInstance {
  std::string name;
  ModuleHandle module;
  bool finite;  // finite module with finite base ring
};

/// Deterministic list of shipped (ring, module) instances.
inline std::vector<CatalogInstance> catalog_instances() {
  std::vector<CatalogInstance> out;
  std::map<long, RingHandle> zn;
  for (long n : {2L, 3L, 4L, 6L, 8L, 9L, 12L}) zn[n] = ring_zn(n);

  auto add = [&](const std::string& name, ModuleHandle m) {
    bool fin = m->finite() && m->ring->finite();
    out.push_back({name, std::move(m), fin});
  };

  // rings as modules over themselves
  for (long n : {2L, 3L, 4L, 6L, 8L, 9L, 12L}) {
    auto m = ring_as_module(zn[n]);
    add("z" + std::to_string(n), m);
  }

  // proper cyclic quotients Z_d over Z_n
  const std::vector<std::pair<long, long>> cyclics = {
      {4, 2}, {6, 2}, {6, 3}, {8, 2}, {8, 4}, {9, 3}, {12, 2}, {12, 3}, {12, 4}, {12, 6}};
  for (auto [n, d] : cyclics)
    add("z" + std::to_string(d) + "-over-z" + std::to_string(n),
        module_cyclics(zn[n], {d}, "z" + std::to_string(d) + "-over-z" + std::to_string(n)));

  // two-factor sums
  const std::vector<std::pair<long, std::vector<long>>> sums = {
      {4, {4, 2}}, {2, {2, 2}}, {3, {3, 3}}, {8, {8, 2}}, {8, {8, 4}},
      {9, {9, 3}}, {12, {12, 2}}, {4, {2, 2}}, {6, {2, 3}}, {2, {2, 2, 2}}};
  for (auto& [n, orders] : sums) {
    std::string nm = "z" + std::to_string(orders[0]);
    for (std::size_t i = 1; i < orders.size(); ++i) nm += "+z" + std::to_string(orders[i]);
    nm += "-over-z" + std::to_string(n);
    add(nm, module_cyclics(zn[n], orders, nm));
  }

  // triangular and full matrix territory
  auto t2z2 = ring_t2(2);
  add("t2z2", ring_as_module(t2z2));
  add("t2z2-row", module_t2_row(t2z2, 2, "t2z2-row"));
  add("t2z2-corner", module_t2_corner(t2z2, 2, "t2z2-corner"));
  add("t2z2-row+corner",
      direct_sum(module_t2_row(t2z2, 2, "t2z2-row"), module_t2_corner(t2z2, 2, "t2z2-corner"))
          .module);
  auto m2z2 = ring_m2(2);
  add("m2z2", ring_as_module(m2z2));
  add("m2z2-row", module_m2_row(m2z2, 2, "m2z2-row"));
  add("m2z2-row+row",
      direct_sum(module_m2_row(m2z2, 2, "m2z2-row"), module_m2_row(m2z2, 2, "m2z2-row")).module);

  add("zero-over-z4", module_zero(zn[4], "zero-over-z4"));

  // infinite fixtures
  auto z = ring_z();
  add("example-2.3", module_z_plus_z2(z));
  auto t2z = ring_t2(0);
  add("example-2.9", module_m2z_over_t2z(t2z));
  add("example-2.9-N", module_t2_row(t2z, 0, "example-2.9-N"));
  add("example-2.9-K", module_t2_row(t2z, 0, "example-2.9-K"));
  add("example-3.11", module_cyclics(z, {0}, "example-3.11"));
  add("zero", module_zero(z, "zero"));

  return out;
}

inline ModuleHandle find_fixture(const std::string& name) {
  for (auto& inst : catalog_instances())
    if (inst.name == name) return inst.module;
  throw std::invalid_argument("unknown fixture '" + name + "'");
}

}  // namespace modlab
