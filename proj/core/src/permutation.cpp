#include "saxl/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "saxl/errors.hpp"

namespace saxl {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point x : images_) {
    if (x >= images_.size() || seen[x]) {
      throw std::invalid_argument("image array is not a bijection");
    }
    seen[x] = true;
  }
}

Permutation::Permutation(std::initializer_list<Point> images)
    : Permutation(std::vector<Point>(images)) {}

Permutation Permutation::from_cycles(const std::vector<std::vector<Point>>& cycles,
                                     std::size_t degree) {
  std::vector<Point> img(degree);
  std::iota(img.begin(), img.end(), Point{0});
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Point a = cycle[i];
      Point b = cycle[(i + 1) % cycle.size()];
      if (a >= degree || b >= degree) throw std::invalid_argument("cycle point out of range");
      if (used[a]) throw std::invalid_argument("point repeated in cycle notation");
      used[a] = true;
      img[a] = b;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<Point>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<Point> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      skip_ws();
      std::size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw ParseError("expected point number in cycle notation");
      unsigned long v = std::stoul(std::string(text.substr(start, i - start)));
      if (v == 0 || v > degree) throw ParseError("point " + std::to_string(v) + " out of range");
      cycle.push_back(static_cast<Point>(v - 1));
      skip_ws();
      if (i < text.size() && text[i] == ',') ++i;
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }
  try {
    return from_cycles(cycles, degree);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv.images_[images_[i]] = static_cast<Point>(i);
  return inv;
}

std::vector<std::size_t> Permutation::cycle_type() const {
  std::vector<std::size_t> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    if (len > 1) lengths.push_back(len);
  }
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (std::size_t len : cycle_type()) result = std::lcm(result, static_cast<std::uint64_t>(len));
  return result;
}

std::size_t Permutation::fixed_point_count() const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) n += (images_[i] == i);
  return n;
}

Point Permutation::first_moved_point() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return static_cast<Point>(i);
  }
  return static_cast<Point>(images_.size());
}

std::string Permutation::to_cycle_string() const {
  std::ostringstream out;
  std::vector<bool> seen(images_.size(), false);
  bool any = false;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    any = true;
    out << '(';
    bool first = true;
    for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (!first) out << ',';
      out << (j + 1);
      first = false;
    }
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

void compose_into(const Permutation& p, const Permutation& q, Permutation& out) {
  const std::size_t n = p.images_.size();
  out.images_.resize(n);
  const Point* src = p.images_.data();
  const Point* qi = q.images_.data();
  Point* dst = out.images_.data();
  for (std::size_t i = 0; i < n; ++i) dst[i] = qi[src[i]];
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree()) throw std::invalid_argument("degree mismatch in compose");
  Permutation out;
  compose_into(p, q, out);
  return out;
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  if (x.degree() != g.degree()) throw std::invalid_argument("degree mismatch in conjugate");
  // (i^g)^(x^g) = (i^x)^g
  std::vector<Point> img(x.degree());
  for (std::size_t i = 0; i < img.size(); ++i) img[g[static_cast<Point>(i)]] = g[x[static_cast<Point>(i)]];
  return Permutation::unchecked(std::move(img));
}

Permutation power(const Permutation& p, std::uint64_t e) {
  Permutation result(p.degree());
  Permutation base = p;
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  std::size_t h = 1469598103934665603ULL;
  for (Point x : p.images()) {
    h ^= x;
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace saxl
