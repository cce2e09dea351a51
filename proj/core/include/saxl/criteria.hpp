#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "saxl/actions.hpp"
#include "saxl/gf.hpp"
#include "saxl/rational.hpp"

namespace saxl {

// Closed-form base criteria for the C2 and C3 actions of groups with socle
// L2(q). Scalars are logs (gf::Log). Every witness is re-checked against the
// raw conditions before it is returned; a failed check throws
// std::logic_error.

enum class Psl2Model { C2, C3 };

// ---------------------------------------------------------------------------
// C2: alpha = {<e1>, <e2>}, beta = {<e1 + b e2>, <e1 + c e2>}.

/// {alpha, beta} is a base for PSigmaL2(q): bc != 0, -b/c is a non-square,
/// and b^(p^k - 1) != c^(p^k - 1) for every 0 < k < f. q odd, b != c.
bool c2_base_psigma(const gf::Field& fq, gf::Log b, gf::Log c);
/// Same predicate with the last condition tested only on maximal proper
/// subfields (b/c outside each of them).
bool c2_base_psigma_divisors(const gf::Field& fq, gf::Log b, gf::Log c);

/// Image {b', c'} of {<e1 + d e2>, <e1 + e e2>} under the map taking alpha
/// to beta. Needs d, e != b - c.
std::pair<gf::Log, gf::Log> c2_neighbour_transfer(const gf::Field& fq, gf::Log b, gf::Log c, gf::Log d,
                                                  gf::Log e);

struct C2Witness {
  gf::Log gamma_b, gamma_c;  // gamma = {<e1 - b e2>, <e1 - c e2>}
  gf::Log d, e;
};
/// Common neighbour of alpha and beta. Throws std::invalid_argument unless
/// {alpha, beta} is a base.
C2Witness c2_common_neighbour_witness(const gf::Field& fq, gf::Log b, gf::Log c);

struct C2Counts {
  std::uint64_t m = 0;  // non-squares outside every proper subfield
  std::uint64_t valency = 0;
  std::uint64_t regular = 0;
};
/// Valency m(q-1)/2 and r = m/(2f) for PSigmaL2(q), q odd with f >= 2.
/// Throws UnsupportedError for f = 1.
C2Counts c2_counts(const gf::Field& fq);

// ---------------------------------------------------------------------------
// C3: alpha = {<u>, <v>}, omega_b = {<u + b v>, <u - b^-q v>}, over GF(q^2).

enum class C3Group { Socle, PSigmaL };

/// {alpha, omega_b} is a base: b a non-square for the socle; for PSigmaL2(q)
/// b^((q+1)(p^k-1)/2) != 1 for all 0 < k < 2f.
bool c3_base(const gf::Field& fq2, C3Group group, gf::Log b);

/// Least-log a with a^(q+1) = 1 + b^(q+1).
gf::Log c3_unit_scalar(const gf::Field& fq2, gf::Log b);

struct C3Witness {
  gf::Log c;  // -b
  gf::Log a1;
  gf::Log d;
};
/// Common neighbour omega_{-b} of alpha and omega_b for PSigmaL2(q).
C3Witness c3_common_neighbour_witness(const gf::Field& fq2, gf::Log b);

/// {alpha} together with omega_{bx} for x in GF(q)^*, as labels. b must be a
/// non-square; the result is a clique for the socle.
std::vector<OmegaPoint> c3_clique(const gf::Field& fq2, gf::Log b);

/// (q - l)/4 with q = l mod 4, for primes q >= 11.
std::uint64_t c3_regular_count_prime(std::uint64_t q);

// ---------------------------------------------------------------------------
// Closed forms for Q.

enum class ClosedForm { DqMinus1, DqPlus1, PglDqMinus1 };
/// L2(q) with H = D_{q-1} or D_{q+1} (q odd), or PGL2(q) with H = D_{2(q-1)}.
Rational q_closed_form(std::uint64_t q, ClosedForm form);

// ---------------------------------------------------------------------------
// Base relation on labelled points.

/// The base relation on the labels of psl2_c2_action / psl2_c3_action,
/// evaluated in field arithmetic. Pairs are moved to pairs containing alpha
/// by an element of PGL2(q), which normalises every supported group.
class CriteriaBaseRelation {
 public:
  /// Supported: C2 for PGL2(q) (and L2(q) when q is even), PSigmaL2(q) and,
  /// for prime q, L2(q); C3 for L2(q) and PSigmaL2(q) with q odd. Throws
  /// UnsupportedError otherwise.
  CriteriaBaseRelation(Psl2Model model, const GroupVariant& variant);

  static bool supported(Psl2Model model, const GroupVariant& variant);

  /// Throws std::invalid_argument for equal labels.
  bool is_base(const OmegaPoint& x, const OmegaPoint& y) const;

 private:
  bool c2_with_alpha(std::uint32_t code_a, std::uint32_t code_b) const;
  bool c3_with_alpha(std::optional<gf::Log> b) const;

  Psl2Model model_;
  GroupVariant variant_;
  bool johnson_ = false;
  const gf::Field* field_ = nullptr;  // GF(q) for C2, GF(q^2) for C3
};

/// Clique of `target` points containing alpha, searched over the labels with
/// the closed-form relation (no permutation group is built).
std::optional<std::vector<OmegaPoint>> criteria_clique(Psl2Model model, const GroupVariant& variant,
                                                       std::size_t target);

// ---------------------------------------------------------------------------
// Number-theoretic scans. Each returns the first failing value, if any.

/// phi(n) > n / (e^gamma log log n + 3 / log log n) for 3 <= n <= n_max.
std::optional<std::uint64_t> first_euler_bound_failure(std::uint64_t n_max);
/// phi(q - 1) >= 4f for odd non-prime prime powers 27 < q < q_end.
std::optional<std::uint64_t> first_c2_euler_failure(std::uint64_t q_end);
/// phi(q^2 - 1) >= 4f(q + 1) for odd prime powers 27 < q < q_end.
std::optional<std::uint64_t> first_c3_euler_failure(std::uint64_t q_end);

}  // namespace saxl
