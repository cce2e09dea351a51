#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace saxl {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1} stored as its image array.
///
/// Action convention (project-wide): points are acted on from the right, so
/// the product p * q first applies p and then q, i.e. i^(pq) = (i^p)^q.
/// Conjugation follows the same convention: x^g = g^-1 x g.
class Permutation {
 public:
  Permutation() = default;
  /// Identity of the given degree.
  explicit Permutation(std::size_t degree);
  /// Takes ownership of an image array; throws std::invalid_argument unless
  /// it is a bijection on {0..n-1}.
  explicit Permutation(std::vector<Point> images);
  Permutation(std::initializer_list<Point> images);

  static Permutation identity(std::size_t degree) { return Permutation(degree); }
  /// Wraps an image array without the bijection check; the caller guarantees
  /// validity (e.g. products of known permutations).
  static Permutation unchecked(std::vector<Point> images) {
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Parses cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
  /// "()" denotes the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);
  /// 0-based cycle lists.
  static Permutation from_cycles(const std::vector<std::vector<Point>>& cycles, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](Point i) const noexcept { return images_[i]; }
  Point image(Point i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;

  /// Order as an element (lcm of cycle lengths).
  std::uint64_t order() const;
  std::size_t fixed_point_count() const noexcept;
  /// Cycle lengths of the non-trivial cycles, in order of smallest point.
  std::vector<std::size_t> cycle_type() const;
  /// Smallest moved point, or degree() for the identity.
  Point first_moved_point() const noexcept;

  /// Cycle notation with 1-based points; identity prints as "()".
  std::string to_cycle_string() const;

  friend void compose_into(const Permutation& p, const Permutation& q, Permutation& out);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

/// Left-to-right product: result maps i to q(p(i)).
/// Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// In-place variant: out = p * q. out must not alias p or q.
void compose_into(const Permutation& p, const Permutation& q, Permutation& out);

/// x^g = g^-1 x g.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// p^e for e >= 0.
Permutation power(const Permutation& p, std::uint64_t e);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

}  // namespace saxl
