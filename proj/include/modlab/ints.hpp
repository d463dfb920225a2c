#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace modlab {

/// Arbitrary-precision integer. All arithmetic in the library is exact.
using Int = mpz_class;

using Vec = std::vector<Int>;

inline Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int int_lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

inline Int int_abs(const Int& a) { return a < 0 ? Int(-a) : a; }

/// Floor division (rounds toward negative infinity).
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Canonical residue in [0, m) for m >= 1.
inline Int floor_mod(const Int& a, const Int& m) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

inline bool divides(const Int& d, const Int& a) {
  if (d == 0) return a == 0;
  return mpz_divisible_p(a.get_mpz_t(), d.get_mpz_t()) != 0;
}

/// Reduce a coordinate into the canonical range of its modulus.
/// Modulus 0 encodes Z (no reduction), m >= 1 encodes Z/mZ.
inline Int reduce_coord(const Int& x, const Int& modulus) {
  if (modulus == 0) return x;
  return floor_mod(x, modulus);
}

inline Vec reduce_vec(Vec v, const Vec& moduli) {
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = reduce_coord(v[i], moduli[i]);
  return v;
}

inline bool is_zero_vec(const Vec& v) {
  for (const Int& x : v)
    if (x != 0) return false;
  return true;
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Int(0)); }

inline Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Int(0));
  v[i] = 1;
  return v;
}

inline Vec add_vec(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec sub_vec(const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec scale_vec(const Int& c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline std::string vec_to_string(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + "]";
}

/// True when every listed modulus is positive, i.e. the group they present
/// is finite.
inline bool all_finite(const Vec& moduli) {
  for (const Int& m : moduli)
    if (m == 0) return false;
  return true;
}

inline Int product(const Vec& moduli) {
  Int p = 1;
  for (const Int& m : moduli) p *= m;
  return p;
}

}  // namespace modlab
