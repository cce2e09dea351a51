#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "saxl/gf.hpp"
#include "saxl/limits.hpp"
#include "saxl/perm_group.hpp"

namespace saxl {

/// Label of a point of a named action.
///
/// KSubset:    sorted 0-based elements.
/// ProjPair:   two projective point codes, sorted; code c < q is <(1, x)>
///             with x the field element of log c - 1 (code 0 is x = 0),
///             code q is <(0, 1)>.
/// C3Point:    empty for alpha, otherwise the log of the canonical scalar b.
/// CosetIndex: the coset number.
struct OmegaPoint {
  enum class Kind { KSubset, ProjPair, C3Point, CosetIndex };
  Kind kind = Kind::CosetIndex;
  std::vector<std::int64_t> data;

  friend bool operator==(const OmegaPoint&, const OmegaPoint&) = default;
  friend auto operator<=>(const OmegaPoint&, const OmegaPoint&) = default;
};

enum class Family { PSL2, PGL2, PSigmaL2, PGammaL2, DeltaPhi };

/// An almost simple group with socle L2(q). DeltaPhi(j) is <G0, delta phi^j>,
/// which needs 0 < j < f and f / gcd(f, j) even.
struct GroupVariant {
  Family family = Family::PSL2;
  std::uint32_t q = 0;
  std::uint32_t j = 0;

  /// Throws std::invalid_argument for an invalid combination.
  void validate() const;
  /// |G| as a function of q and the variant.
  std::uint64_t order() const;
  /// |G : G0|.
  std::uint64_t outer_index() const;
  std::string name() const;
  /// True when G meets PGL2(q) in G0 (q odd, no delta in G) or q is even.
  bool meets_pgl_in_socle() const;
};

/// One representative per distinct group among the families for this q:
/// L2(q), PGL2(q) and PGammaL2(q) for odd q, PSigmaL2(q) for f > 1, and
/// DeltaPhi(j) for j | f with f/j even (other j give the same groups). The
/// groups <G0, phi^j> with 1 < j < f are not included.
std::vector<GroupVariant> distinct_variants(std::uint32_t q);

/// Parses "psl" | "pgl" | "psigmal" | "pgammal" | "deltaphi".
Family parse_family(const std::string& text);
std::string family_name(Family family);

class LabelledAction {
 public:
  LabelledAction(std::string name, PermGroup group, std::vector<OmegaPoint> labels,
                 std::vector<std::string> label_text);

  const std::string& name() const noexcept { return name_; }
  const PermGroup& group() const noexcept { return group_; }
  std::size_t degree() const noexcept { return labels_.size(); }
  const std::vector<OmegaPoint>& labels() const noexcept { return labels_; }
  const OmegaPoint& label(Point i) const { return labels_.at(i); }
  const std::string& label_text(Point i) const { return label_text_.at(i); }
  /// Throws NotFoundError for an unknown label.
  Point index_of(const OmegaPoint& label) const;

  /// Free-form notes recorded during construction (e.g. non-maximality).
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }
  void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

 private:
  std::string name_;
  PermGroup group_;
  std::vector<OmegaPoint> labels_;
  std::vector<std::string> label_text_;
  std::map<OmegaPoint, Point> index_;
  std::vector<std::string> warnings_;
};

/// S_n (or A_n) on k-subsets of {0..n-1}, points in lexicographic order.
LabelledAction ksubset_action(std::uint32_t n, std::uint32_t k, bool even_only,
                              const Limits& limits = default_limits());

/// Right cosets H g of H in G. Coset 0 is H itself.
class CosetSpace {
 public:
  CosetSpace(const PermGroup& g, const PermGroup& h, const Limits& limits = default_limits());

  std::size_t size() const noexcept { return reps_.size(); }
  const Permutation& representative(std::size_t i) const { return reps_.at(i); }
  /// Index of the coset H x for x in G.
  std::size_t coset_of(const Permutation& x) const;
  /// Permutation induced by x in G on the cosets.
  Permutation induced(const Permutation& x) const;

 private:
  std::string key(const Permutation& x) const;

  std::vector<Point> base_;
  std::vector<std::vector<Point>> h_images_;  // base images of each h in H
  std::vector<Permutation> reps_;
  std::map<std::string, std::size_t> index_;
};

/// Action of G on the right cosets of H; faithful when H is core-free.
/// Throws std::invalid_argument if H is not a subgroup of G.
LabelledAction coset_action(const PermGroup& g, const PermGroup& h, const std::string& name = "coset",
                            const Limits& limits = default_limits());

/// Pairs of distinct points of PG(1, q). Point 0 is alpha = {<e1>, <e2>}.
LabelledAction psl2_c2_action(const GroupVariant& variant, const Limits& limits = default_limits());

/// Orthogonal pairs of nondegenerate 1-spaces in the unitary model. Point 0
/// is alpha = {<u>, <v>}; the others are omega_b labelled by the canonical
/// scalar min(b, -b^-q) in log order over GF(q^2).
LabelledAction psl2_c3_action(const GroupVariant& variant, const Limits& limits = default_limits());

/// Projective point code for the C2 model (see OmegaPoint).
std::uint32_t c2_point_code(const gf::Field& fq, gf::Log x);
inline std::uint32_t c2_infinity_code(const gf::Field& fq) { return fq.q(); }
/// Field element of a finite point code, or nullopt for infinity.
std::optional<gf::Log> c2_point_value(const gf::Field& fq, std::uint32_t code);
/// Label of {<(1, b)>, <(1, c)>} (with ZERO for x = 0) or pairs involving infinity.
OmegaPoint c2_pair_label(std::uint32_t code_a, std::uint32_t code_b);

/// Point labels of the C2 and C3 actions in point order, without building
/// the group.
std::vector<OmegaPoint> c2_point_labels(std::uint32_t q);
std::vector<OmegaPoint> c3_point_labels(std::uint32_t q);

/// Canonical C3 scalar: the smaller of b and -b^-q in log order.
gf::Log c3_canonical(const gf::Field& fq2, gf::Log b);
OmegaPoint c3_label(const gf::Field& fq2, std::optional<gf::Log> b);

/// One catalogue record: a group and optionally a subgroup of it.
struct CatalogueEntry {
  std::string name;
  std::size_t degree = 0;
  PermGroup group;
  std::optional<PermGroup> subgroup;
};

/// Reads the catalogue text format. Verifies every declared order; throws
/// ParseError (with line number) or CorruptDataError.
std::vector<CatalogueEntry> load_catalogue(std::istream& in, const Limits& limits = default_limits());
std::vector<CatalogueEntry> load_catalogue_file(const std::string& path,
                                                const Limits& limits = default_limits());
/// Writes entries in the catalogue format.
void write_catalogue_entry(std::ostream& out, const CatalogueEntry& entry);

/// Coset action of a catalogue entry with a subgroup.
LabelledAction catalogue_action(const CatalogueEntry& entry, const Limits& limits = default_limits());

}  // namespace saxl
