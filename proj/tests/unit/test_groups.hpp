#pragma once

// Small hand-built groups shared by the unit tests.

#include <numeric>
#include <string>
#include <vector>

#include "saxl/actions.hpp"
#include "saxl/perm_group.hpp"

namespace saxl::test {

inline PermGroup symmetric(std::size_t n) {
  std::vector<Point> cyc(n);
  for (std::size_t i = 0; i < n; ++i) cyc[i] = static_cast<Point>((i + 1) % n);
  return build_chain(n, {Permutation(cyc), Permutation::from_cycles("(1,2)", n)});
}

// PSL2(p) on the projective line: points 0..p-1 and infinity = p; mu is a
// primitive root mod p.
inline PermGroup psl2_prime_line(Point p, Point mu) {
  auto inv = [p](Point x) {
    for (Point y = 1; y < p; ++y) {
      if ((x * y) % p == 1) return y;
    }
    return Point{0};
  };
  std::vector<Point> t(p + 1), d(p + 1), w(p + 1);
  for (Point x = 0; x < p; ++x) {
    t[x] = (x + 1) % p;
    d[x] = (mu * mu * x) % p;
    w[x] = x == 0 ? p : (p - inv(x)) % p;
  }
  t[p] = p;
  d[p] = p;
  w[p] = 0;
  return build_chain(p + 1, {Permutation(t), Permutation(d), Permutation(w)});
}

// ASL2(3) on F_3^2, point (x, y) has index x + 3y.
inline PermGroup asl23() {
  auto idx = [](int x, int y) {
    return static_cast<Point>(((x % 3) + 3) % 3 + 3 * (((y % 3) + 3) % 3));
  };
  std::vector<Point> tr(9), a(9), b(9);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      tr[idx(x, y)] = idx(x + 1, y);
      a[idx(x, y)] = idx(x + y, y);
      b[idx(x, y)] = idx(-y, x);
    }
  }
  return build_chain(9, {Permutation(tr), Permutation(a), Permutation(b)});
}

inline PermGroup m11() {
  return build_chain(11, {Permutation::from_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 11),
                          Permutation::from_cycles("(3,7,11,8)(4,10,5,6)", 11)});
}


// The natural action of a transitive group, points labelled by index.
inline LabelledAction natural(const PermGroup& g, const std::string& name = "natural") {
  std::vector<OmegaPoint> labels;
  std::vector<std::string> text;
  for (std::size_t i = 0; i < g.degree(); ++i) {
    labels.push_back({OmegaPoint::Kind::CosetIndex, {static_cast<std::int64_t>(i)}});
    text.push_back(std::to_string(i + 1));
  }
  return LabelledAction(name, g, std::move(labels), std::move(text));
}

}  // namespace saxl::test
