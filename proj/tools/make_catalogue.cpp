// Regenerates data/catalogue.txt: permutation generators for the desk-scale
// table fixtures. Subgroups are located by deterministic search and each
// fixture is checked to have a maximal stabiliser before it is written.
//
//   make_catalogue <output path>

#include <array>
#include <fstream>
#include <iostream>
#include <map>
#include <numeric>
#include <vector>

#include "saxl/actions.hpp"
#include "saxl/engine.hpp"
#include "saxl/subgroups.hpp"

using saxl::CatalogueEntry;
using saxl::PermGroup;
using saxl::Permutation;
using saxl::Point;

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) { return ((a % m) + m) % m; }

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  for (std::int64_t y = 1; y < p; ++y) {
    if (mod(a * y, p) == 1) return y;
  }
  throw std::invalid_argument("not invertible");
}

// x -> (a x + c) / (b x + d) on the projective line over GF(p), infinity = p.
// Row-vector convention: (x, 1) [[a, b], [c, d]].
Permutation mobius(std::int64_t p, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  std::vector<Point> img(static_cast<std::size_t>(p + 1));
  const auto map = [&](std::int64_t x, std::int64_t y) -> Point {
    const std::int64_t u = mod(x * a + y * c, p), v = mod(x * b + y * d, p);
    if (v == 0) return static_cast<Point>(p);
    return static_cast<Point>(mod(u * inv_mod(v, p), p));
  };
  for (std::int64_t x = 0; x < p; ++x) img[static_cast<std::size_t>(x)] = map(x, 1);
  img[static_cast<std::size_t>(p)] = map(1, 0);
  return Permutation(std::move(img));
}

std::int64_t primitive_root(std::int64_t p) {
  for (std::int64_t g = 2; g < p; ++g) {
    std::int64_t x = 1, k = 0;
    do {
      x = mod(x * g, p);
      ++k;
    } while (x != 1);
    if (k == p - 1) return g;
  }
  throw std::invalid_argument("no primitive root");
}

PermGroup line_group(std::int64_t p, bool pgl) {
  const std::int64_t mu = primitive_root(p);
  std::vector<Permutation> gens{mobius(p, mu, 0, 0, inv_mod(mu, p)), mobius(p, 1, 0, 1, 1),
                                mobius(p, 0, 1, p - 1, 0)};
  if (pgl) gens.push_back(mobius(p, mu, 0, 0, 1));
  return saxl::build_chain(static_cast<std::size_t>(p + 1), gens);
}

// PSL3(3) on the 13 points of PG(2, 3); a point is its normalised vector.
using Vec = std::array<int, 3>;
using Mat3 = std::array<Vec, 3>;

std::vector<Vec> pg23_points() {
  std::vector<Vec> pts;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        const Vec v{a, b, c};
        const int lead = a != 0 ? a : b != 0 ? b : c;
        if (lead == 1) pts.push_back(v);
      }
    }
  }
  return pts;
}

Permutation pg23_perm(const std::vector<Vec>& pts, const Mat3& m) {
  std::map<Vec, Point> index;
  for (std::size_t i = 0; i < pts.size(); ++i) index[pts[i]] = static_cast<Point>(i);
  std::vector<Point> img(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    Vec w{};
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 3; ++k) w[j] += pts[i][k] * m[k][j];
    }
    for (int& x : w) x %= 3;
    const int lead = w[0] != 0 ? w[0] : w[1] != 0 ? w[1] : w[2];
    for (int& x : w) x = (x * lead) % 3;  // lead is its own inverse mod 3
    img[i] = index.at(w);
  }
  return Permutation(std::move(img));
}

Mat3 transvection(int r, int c) {
  Mat3 m{};
  for (int i = 0; i < 3; ++i) m[i][i] = 1;
  m[r][c] = 1;
  return m;
}

void require_maximal(const CatalogueEntry& e) {
  if (!saxl::is_primitive(saxl::catalogue_action(e))) {
    throw std::logic_error(e.name + ": stabiliser is not maximal");
  }
}

CatalogueEntry entry(std::string name, PermGroup g, PermGroup h) {
  CatalogueEntry e{std::move(name), g.degree(), std::move(g), std::move(h)};
  require_maximal(e);
  return e;
}

CatalogueEntry two_generator(std::string name, PermGroup g, saxl::SubgroupSpec::TwoGenerator spec) {
  PermGroup h = saxl::find_subgroup(g, {spec});
  return entry(std::move(name), std::move(g), std::move(h));
}

std::vector<CatalogueEntry> build_catalogue() {
  std::vector<CatalogueEntry> out;
  const auto cyc = [](const char* c, std::size_t n) { return Permutation::from_cycles(c, n); };

  out.push_back(entry("S7_AGL17", saxl::build_chain(7, {cyc("(1,2,3,4,5,6,7)", 7), cyc("(1,2)", 7)}),
                      saxl::build_chain(7, {cyc("(1,2,3,4,5,6,7)", 7), cyc("(2,4,3,7,5,6)", 7)})));

  // AG(2, 3) with (x, y) at index x + 3y.
  std::vector<Point> tr(9), shear(9), rot(9);
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      const auto idx = [](int a, int b) { return static_cast<Point>(mod(a, 3) + 3 * mod(b, 3)); };
      tr[idx(x, y)] = idx(x + 1, y);
      shear[idx(x, y)] = idx(x + y, y);
      rot[idx(x, y)] = idx(-y, x);
    }
  }
  out.push_back(entry("A9_ASL23", saxl::build_chain(9, {cyc("(1,2,3)", 9), cyc("(1,2,3,4,5,6,7,8,9)", 9)}),
                      saxl::build_chain(9, {Permutation(tr), Permutation(shear), Permutation(rot)})));

  const PermGroup m11 = saxl::build_chain(11, {cyc("(1,2,3,4,5,6,7,8,9,10,11)", 11), cyc("(3,7,11,8)(4,10,5,6)", 11)});
  out.push_back(CatalogueEntry{"M11", 11, m11, std::nullopt});
  out.push_back(two_generator("M11_2S4", m11, {48, 8, 3, std::nullopt}));

  // S4 = <a, b | a^4 = b^3 = (ab)^2 = 1>.
  const saxl::SubgroupSpec::TwoGenerator s4{24, 4, 3, 2};
  out.push_back(two_generator("L2_17_S4", line_group(17, false), s4));
  out.push_back(two_generator("L2_13_2_S4", line_group(13, true), s4));
  out.push_back(two_generator("L2_11_2_S4", line_group(11, true), s4));

  const auto pts = pg23_points();
  std::vector<Permutation> sl3;
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      if (r != c) sl3.push_back(pg23_perm(pts, transvection(r, c)));
    }
  }
  const PermGroup l33 = saxl::build_chain(pts.size(), sl3);
  out.push_back(two_generator("L3_3_GL1_27", l33, {39, 13, 3, std::nullopt}));
  // SO3(3) for x^2 + y^2 + z^2: the signed permutation matrices of determinant 1.
  const Mat3 cycle{{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}};
  const Mat3 swap_neg{{{0, 1, 0}, {1, 0, 0}, {0, 0, 2}}};
  const Mat3 signs{{{2, 0, 0}, {0, 2, 0}, {0, 0, 1}}};
  out.push_back(entry("L3_3_O3", l33,
                      saxl::build_chain(pts.size(), {pg23_perm(pts, cycle), pg23_perm(pts, swap_neg),
                                                     pg23_perm(pts, signs)})));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: make_catalogue <output path>\n";
    return 1;
  }
  try {
    std::ofstream file(argv[1]);
    if (!file) throw std::runtime_error(std::string("cannot write ") + argv[1]);
    file << "# Desk-scale fixtures, generated by tools/make_catalogue.\n";
    for (const auto& e : build_catalogue()) {
      file << '\n';
      saxl::write_catalogue_entry(file, e);
    }
  } catch (const std::exception& ex) {
    std::cerr << "make_catalogue: " << ex.what() << '\n';
    return 1;
  }
  return 0;
}
