#pragma once

// 1-spaces of a 2-dimensional space over a finite field, acted on by
// semilinear maps. Internal to the core library.

#include "saxl/gf.hpp"

namespace saxl::detail {

using gf::Elem;
using gf::Field;
using gf::Log;
using gf::ZERO;

// Row-vector convention: (x, y) M = (x a + y c, x b + y d).
struct Mat {
  Elem a, b, c, d;

  Elem det() const { return a * d - b * c; }
  Mat inverse() const {
    const Elem k = det().inv();
    return {d * k, -b * k, -c * k, a * k};
  }
};

inline Mat diag(const Elem& x, const Elem& y) {
  const Field& F = x.field();
  return {x, Elem::zero(F), Elem::zero(F), y};
}

// <(1, z)> for finite z, or <(0, 1)>.
struct Line {
  bool infinite = false;
  Log z = ZERO;
};

inline Line apply(const Field& F, const Mat& m, const Line& l) {
  Elem x, y;
  if (l.infinite) {
    x = m.c;
    y = m.d;
  } else {
    const Elem z(F, l.z);
    x = m.a + z * m.c;
    y = m.b + z * m.d;
  }
  if (x.is_zero()) return {true, ZERO};
  return {false, (y / x).log()};
}

inline Line frob(const Field& F, const Line& l, std::uint32_t k) {
  if (l.infinite) return l;
  return {false, F.frobenius(l.z, k)};
}

// Matrix followed by a power of the Frobenius.
struct Semilinear {
  Mat m;
  std::uint32_t frob = 0;
};

inline Line apply(const Field& F, const Semilinear& s, const Line& l) {
  return frob(F, apply(F, s.m, l), s.frob);
}

}  // namespace saxl::detail
