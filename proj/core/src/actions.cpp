#include "saxl/actions.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "saxl/errors.hpp"
#include "saxl/number_theory.hpp"
#include "line_model.hpp"

namespace saxl {

// ---------------------------------------------------------------------------
// Variants

void GroupVariant::validate() const {
  auto [p, f] = prime_power(q);
  if (p == 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (family == Family::DeltaPhi) {
    if (p == 2) throw std::invalid_argument("DeltaPhi needs odd q");
    if (j == 0 || j >= f) throw std::invalid_argument("DeltaPhi(j) needs 0 < j < f");
    if ((f / std::gcd(f, j)) % 2 != 0) throw std::invalid_argument("DeltaPhi(j) needs f/gcd(f,j) even");
  }
}

std::uint64_t GroupVariant::outer_index() const {
  auto [p, f] = prime_power(q);
  const std::uint64_t h = p == 2 ? 1 : 2;
  switch (family) {
    case Family::PSL2: return 1;
    case Family::PGL2: return h;
    case Family::PSigmaL2: return f;
    case Family::PGammaL2: return h * f;
    case Family::DeltaPhi: return f / std::gcd<std::uint64_t>(f, j);
  }
  return 1;
}

std::uint64_t GroupVariant::order() const {
  const std::uint64_t qq = q;
  const std::uint64_t h = qq % 2 == 0 ? 1 : 2;
  return qq * (qq * qq - 1) / h * outer_index();
}

bool GroupVariant::meets_pgl_in_socle() const {
  if (q % 2 == 0) return true;
  return family == Family::PSL2 || family == Family::PSigmaL2 || family == Family::DeltaPhi;
}

std::string family_name(Family family) {
  switch (family) {
    case Family::PSL2: return "psl";
    case Family::PGL2: return "pgl";
    case Family::PSigmaL2: return "psigmal";
    case Family::PGammaL2: return "pgammal";
    case Family::DeltaPhi: return "deltaphi";
  }
  return "?";
}

Family parse_family(const std::string& text) {
  for (Family f : {Family::PSL2, Family::PGL2, Family::PSigmaL2, Family::PGammaL2, Family::DeltaPhi}) {
    if (family_name(f) == text) return f;
  }
  throw std::invalid_argument("unknown group variant '" + text + "'");
}

std::string GroupVariant::name() const {
  std::string s = family_name(family) + "(" + std::to_string(q) + ")";
  if (family == Family::DeltaPhi) s += "[j=" + std::to_string(j) + "]";
  return s;
}

std::vector<GroupVariant> distinct_variants(std::uint32_t q) {
  const auto [p, f] = prime_power(q);
  if (p == 0) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  std::vector<GroupVariant> out{{Family::PSL2, q}};
  if (p != 2) out.push_back({Family::PGL2, q});
  if (f > 1) out.push_back({Family::PSigmaL2, q});
  if (p != 2 && f > 1) out.push_back({Family::PGammaL2, q});
  for (std::uint32_t j = 1; p != 2 && j < f; ++j) {
    if (f % j == 0 && (f / j) % 2 == 0) out.push_back({Family::DeltaPhi, q, j});
  }
  return out;
}

// ---------------------------------------------------------------------------
// LabelledAction

LabelledAction::LabelledAction(std::string name, PermGroup group, std::vector<OmegaPoint> labels,
                               std::vector<std::string> label_text)
    : name_(std::move(name)),
      group_(std::move(group)),
      labels_(std::move(labels)),
      label_text_(std::move(label_text)) {
  if (group_.degree() != labels_.size() || label_text_.size() != labels_.size()) {
    throw std::invalid_argument("label count does not match group degree");
  }
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (!index_.emplace(labels_[i], static_cast<Point>(i)).second) {
      throw std::invalid_argument("duplicate point label");
    }
  }
}

Point LabelledAction::index_of(const OmegaPoint& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) throw NotFoundError("no point with the given label");
  return it->second;
}

// ---------------------------------------------------------------------------
// k-subsets

LabelledAction ksubset_action(std::uint32_t n, std::uint32_t k, bool even_only, const Limits& limits) {
  if (k < 1 || k >= n) throw std::invalid_argument("ksubset_action needs 1 <= k < n");
  if (even_only && n < 3) throw std::invalid_argument("alternating group needs n >= 3");
  BigInt count = 1;
  for (std::uint32_t i = 0; i < k; ++i) count = count * (n - i) / (i + 1);
  if (count > limits.point_cap) throw UnsupportedError("C(n,k) exceeds point cap");

  std::vector<OmegaPoint> labels;
  std::vector<std::string> text;
  std::vector<std::int64_t> cur(k);
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    labels.push_back({OmegaPoint::Kind::KSubset, cur});
    std::string s = "{";
    for (std::size_t i = 0; i < cur.size(); ++i) s += (i ? "," : "") + std::to_string(cur[i] + 1);
    text.push_back(s + "}");
    std::int64_t i = static_cast<std::int64_t>(k) - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == static_cast<std::int64_t>(n - k) + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (std::size_t t = static_cast<std::size_t>(i) + 1; t < k; ++t) cur[t] = cur[t - 1] + 1;
  }
  std::map<std::vector<std::int64_t>, Point> index;
  for (std::size_t i = 0; i < labels.size(); ++i) index[labels[i].data] = static_cast<Point>(i);

  std::vector<Permutation> base_gens;
  std::vector<Point> cyc(n);
  for (std::uint32_t i = 0; i < n; ++i) cyc[i] = (i + 1) % n;
  if (!even_only) {
    base_gens.push_back(Permutation(cyc));
    base_gens.push_back(Permutation::from_cycles("(1,2)", n));
  } else {
    base_gens.push_back(Permutation::from_cycles("(1,2,3)", n));
    if (n % 2 == 1) {
      base_gens.push_back(Permutation(cyc));
    } else {
      // (2,3,...,n) is even when n is even.
      std::vector<Point> c2(n);
      c2[0] = 0;
      for (std::uint32_t i = 1; i < n; ++i) c2[i] = i + 1 < n ? i + 1 : 1;
      base_gens.push_back(Permutation(c2));
    }
  }
  std::vector<Permutation> gens;
  for (const auto& g : base_gens) {
    std::vector<Point> img(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      std::vector<std::int64_t> s;
      for (auto x : labels[i].data) s.push_back(g[static_cast<Point>(x)]);
      std::sort(s.begin(), s.end());
      img[i] = index.at(s);
    }
    gens.push_back(Permutation(std::move(img)));
  }
  BigInt order = 1;
  for (std::uint32_t i = 2; i <= n; ++i) order *= i;
  if (even_only) order /= 2;
  std::string name = std::string(even_only ? "A" : "S") + std::to_string(n) + " on " +
                     std::to_string(k) + "-subsets";
  PermGroup group(labels.size(), std::move(gens), order, {}, limits);
  return LabelledAction(name, std::move(group), std::move(labels), std::move(text));
}

// ---------------------------------------------------------------------------
// Cosets

CosetSpace::CosetSpace(const PermGroup& g, const PermGroup& h, const Limits& limits) : base_(g.base()) {
  if (h.degree() != g.degree() || !g.contains_group(h)) {
    throw std::invalid_argument("coset action needs H to be a subgroup of G");
  }
  const BigInt index = g.order() / h.order();
  if (index > limits.point_cap) {
    throw UnsupportedError("index " + index.str() + " exceeds point cap " + std::to_string(limits.point_cap));
  }
  h.for_each_element([&](const Permutation& x) {
    std::vector<Point> img(base_.size());
    for (std::size_t i = 0; i < base_.size(); ++i) img[i] = x[base_[i]];
    h_images_.push_back(std::move(img));
    return true;
  }, limits);
  const Permutation id(g.degree());
  reps_.push_back(id);
  index_.emplace(key(id), 0);
  for (std::size_t i = 0; i < reps_.size(); ++i) {
    for (const auto& s : g.generators()) {
      Permutation y = reps_[i] * s;
      if (index_.emplace(key(y), reps_.size()).second) reps_.push_back(std::move(y));
    }
  }
}

// Smallest base-image tuple over the coset H x.
std::string CosetSpace::key(const Permutation& x) const {
  const std::size_t k = base_.size();
  std::vector<Point> best;
  std::vector<Point> cur(k);
  for (const auto& img : h_images_) {
    for (std::size_t i = 0; i < k; ++i) cur[i] = x[img[i]];
    if (best.empty() || cur < best) best = cur;
  }
  std::string out(k * sizeof(Point), '\0');
  if (k > 0) std::memcpy(out.data(), best.data(), k * sizeof(Point));
  return out;
}

std::size_t CosetSpace::coset_of(const Permutation& x) const {
  auto it = index_.find(key(x));
  if (it == index_.end()) throw std::invalid_argument("element is not in G");
  return it->second;
}

Permutation CosetSpace::induced(const Permutation& x) const {
  std::vector<Point> img(reps_.size());
  for (std::size_t i = 0; i < reps_.size(); ++i) img[i] = static_cast<Point>(coset_of(reps_[i] * x));
  return Permutation(std::move(img));
}

LabelledAction coset_action(const PermGroup& g, const PermGroup& h, const std::string& name,
                            const Limits& limits) {
  CosetSpace space(g, h, limits);
  std::vector<Permutation> gens;
  for (const auto& s : g.generators()) gens.push_back(space.induced(s));
  std::vector<OmegaPoint> labels;
  std::vector<std::string> text;
  for (std::size_t i = 0; i < space.size(); ++i) {
    labels.push_back({OmegaPoint::Kind::CosetIndex, {static_cast<std::int64_t>(i)}});
    text.push_back("H" + std::to_string(i));
  }
  // The hint equals |G|; with a nontrivial core the build runs to the true order.
  PermGroup group(space.size(), std::move(gens), g.order(), {}, limits);
  return LabelledAction(name, std::move(group), std::move(labels), std::move(text));
}

// ---------------------------------------------------------------------------
// L2(q) models

namespace {

using detail::Elem;
using detail::Field;
using detail::Line;
using detail::Log;
using detail::Mat;
using detail::Semilinear;
using detail::ZERO;
using detail::apply;
using detail::diag;

void check_cap(std::uint64_t n, const Limits& limits) {
  if (n > limits.point_cap) {
    throw UnsupportedError("action degree " + std::to_string(n) + " exceeds point cap " +
                           std::to_string(limits.point_cap));
  }
}

PermGroup finish_group(std::size_t degree, std::vector<Permutation> gens, std::uint64_t expected,
                       const Limits& limits) {
  PermGroup g(degree, std::move(gens), BigInt(expected), {}, limits);
  if (g.order() != expected) {
    throw std::logic_error("constructed group has order " + g.order().str() + ", expected " +
                           std::to_string(expected));
  }
  return g;
}

void maximality_warnings(LabelledAction& a, const GroupVariant& v, bool c2) {
  const bool socle_only = v.family == Family::PSL2;
  const bool sigma = v.family == Family::PSigmaL2;
  bool non_maximal = false;
  if (c2) {
    non_maximal = v.q == 5 || ((v.q == 7 || v.q == 11) && socle_only) || (v.q == 9 && (socle_only || sigma));
  } else {
    non_maximal = (v.q == 7 && socle_only) || (v.q == 9 && (socle_only || sigma));
  }
  if (v.q < 4) non_maximal = true;
  if (non_maximal) a.add_warning("point stabiliser is not maximal for " + v.name());
}

}  // namespace

std::uint32_t c2_point_code(const gf::Field& fq, gf::Log x) {
  (void)fq;
  return x == gf::ZERO ? 0 : static_cast<std::uint32_t>(x) + 1;
}

std::optional<gf::Log> c2_point_value(const gf::Field& fq, std::uint32_t code) {
  if (code == fq.q()) return std::nullopt;
  if (code > fq.q()) throw std::invalid_argument("projective point code out of range");
  return code == 0 ? gf::ZERO : static_cast<gf::Log>(code - 1);
}

OmegaPoint c2_pair_label(std::uint32_t code_a, std::uint32_t code_b) {
  if (code_a == code_b) throw std::invalid_argument("pair needs two distinct points");
  if (code_a > code_b) std::swap(code_a, code_b);
  return {OmegaPoint::Kind::ProjPair, {code_a, code_b}};
}

std::vector<OmegaPoint> c2_point_labels(std::uint32_t q) {
  std::vector<OmegaPoint> labels{c2_pair_label(0, q)};
  for (std::uint32_t i = 0; i <= q; ++i) {
    for (std::uint32_t k = i + 1; k <= q; ++k) {
      if (i == 0 && k == q) continue;
      labels.push_back(c2_pair_label(i, k));
    }
  }
  return labels;
}

std::vector<OmegaPoint> c3_point_labels(std::uint32_t q) {
  const Field& Fq = gf::field_of_order(q);
  const Field& F = gf::field(Fq.p(), 2 * Fq.f());
  std::vector<OmegaPoint> labels{c3_label(F, std::nullopt)};
  for (Log b = 0; b < static_cast<Log>(F.q1()); ++b) {
    if (F.pow(b, static_cast<std::int64_t>(q) + 1) == F.minus_one()) continue;
    if (c3_canonical(F, b) == b) labels.push_back(c3_label(F, b));
  }
  return labels;
}

LabelledAction psl2_c2_action(const GroupVariant& variant, const Limits& limits) {
  variant.validate();
  const std::uint32_t q = variant.q;
  if (q < 4) throw std::invalid_argument("C2 action needs q >= 4");
  const std::uint64_t n = static_cast<std::uint64_t>(q) * (q + 1) / 2;
  check_cap(n, limits);
  const Field& F = gf::field_of_order(q);

  auto code_of = [&](const Line& l) { return l.infinite ? q : c2_point_code(F, l.z); };
  auto line_of = [&](std::uint32_t code) {
    auto v = c2_point_value(F, code);
    return v ? Line{false, *v} : Line{true, ZERO};
  };

  std::vector<OmegaPoint> labels;
  std::vector<std::string> text;
  auto point_text = [&](std::uint32_t code) {
    auto v = c2_point_value(F, code);
    return v ? "<1," + F.to_string(*v) + ">" : std::string("<0,1>");
  };
  labels = c2_point_labels(q);
  for (const auto& l : labels) {
    text.push_back("{" + point_text(static_cast<std::uint32_t>(l.data[0])) + "," +
                   point_text(static_cast<std::uint32_t>(l.data[1])) + "}");
  }
  std::map<std::pair<std::uint32_t, std::uint32_t>, Point> index;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    index[{static_cast<std::uint32_t>(labels[i].data[0]), static_cast<std::uint32_t>(labels[i].data[1])}] =
        static_cast<Point>(i);
  }

  const Elem mu(F, 1), one = Elem::one(F), zero = Elem::zero(F);
  const std::uint32_t f = F.f();
  std::vector<Semilinear> elems = {
      {diag(mu, mu.inv()), 0},
      {Mat{one, one, zero, one}, 0},
      {Mat{zero, one, -one, zero}, 0},
  };
  const Semilinear delta{diag(mu, one), 0};
  const Semilinear phi{diag(one, one), 1 % f};
  switch (variant.family) {
    case Family::PSL2: break;
    case Family::PGL2: elems.push_back(delta); break;
    case Family::PSigmaL2: elems.push_back(phi); break;
    case Family::PGammaL2:
      elems.push_back(delta);
      elems.push_back(phi);
      break;
    case Family::DeltaPhi: elems.push_back({diag(mu, one), variant.j}); break;
  }
  std::vector<Permutation> gens;
  for (const auto& s : elems) {
    std::vector<Point> img(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const auto a = code_of(apply(F, s, line_of(static_cast<std::uint32_t>(labels[i].data[0]))));
      const auto b = code_of(apply(F, s, line_of(static_cast<std::uint32_t>(labels[i].data[1]))));
      img[i] = index.at({std::min(a, b), std::max(a, b)});
    }
    gens.push_back(Permutation(std::move(img)));
  }
  PermGroup group = finish_group(labels.size(), std::move(gens), variant.order(), limits);
  LabelledAction action("C2 " + variant.name(), std::move(group), std::move(labels), std::move(text));
  maximality_warnings(action, variant, true);
  return action;
}

gf::Log c3_canonical(const gf::Field& fq2, gf::Log b) {
  if (b == gf::ZERO) throw std::invalid_argument("C3 scalar must be nonzero");
  if (fq2.f() % 2 != 0) throw std::invalid_argument("C3 labels live in GF(q^2)");
  const std::int64_t q = static_cast<std::int64_t>(ipow(fq2.p(), fq2.f() / 2));
  const gf::Log partner = fq2.neg(fq2.pow(b, -q));
  if (partner == b) throw std::invalid_argument("b^(q+1) = -1 is not a point");
  return std::min(b, partner);
}

OmegaPoint c3_label(const gf::Field& fq2, std::optional<gf::Log> b) {
  if (!b) return {OmegaPoint::Kind::C3Point, {}};
  return {OmegaPoint::Kind::C3Point, {c3_canonical(fq2, *b)}};
}

LabelledAction psl2_c3_action(const GroupVariant& variant, const Limits& limits) {
  variant.validate();
  const std::uint32_t q = variant.q;
  if (q < 3) throw std::invalid_argument("C3 action needs q >= 3");
  const std::uint64_t n = static_cast<std::uint64_t>(q) * (q - 1) / 2;
  check_cap(n, limits);
  const Field& Fq = gf::field_of_order(q);
  const Field& F = gf::field(Fq.p(), 2 * Fq.f());
  const std::int64_t qi = q;

  std::vector<OmegaPoint> labels = c3_point_labels(q);
  std::vector<std::string> text{"alpha"};
  std::map<Log, Point> index;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    const auto b = static_cast<Log>(labels[i].data[0]);
    index[b] = static_cast<Point>(i);
    text.push_back("w(" + F.to_string(b) + ")");
  }
  if (labels.size() != n) throw std::logic_error("C3 point count mismatch");

  auto image = [&](const Semilinear& s, std::size_t i) -> Point {
    Line l = labels[i].data.empty() ? Line{false, ZERO} : Line{false, static_cast<Log>(labels[i].data[0])};
    Line r = apply(F, s, l);
    if (r.infinite || r.z == ZERO) return 0;
    return index.at(c3_canonical(F, r.z));
  };
  auto to_perm = [&](const Semilinear& s) {
    std::vector<Point> img(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) img[i] = image(s, i);
    return Permutation(std::move(img));
  };

  const Elem one = Elem::one(F), zero = Elem::zero(F);
  const Elem zeta(F, static_cast<Log>(q - 1));  // order q + 1
  std::vector<Permutation> gens{to_perm({diag(zeta, zeta.pow(qi)), 0}),
                                to_perm({Mat{zero, one, -one, zero}, 0})};
  // Elements [[a, b], [-b^q, a^q]] with a^(q+1) + b^(q+1) = 1, both entries
  // nonzero, added in order of log a until SU2(q) is generated.
  const std::uint64_t socle = static_cast<std::uint64_t>(q) * (static_cast<std::uint64_t>(q) * q - 1) /
                              (q % 2 == 0 ? 1 : 2);
  for (Log a = 0; a < static_cast<Log>(F.q1()); ++a) {
    const Elem ea(F, a);
    const Elem t = one - ea.pow(qi + 1);
    if (t.is_zero()) continue;
    // t lies in GF(q), so its log is a multiple of q + 1.
    const Log b = static_cast<Log>((t.log() / (qi + 1)) % (qi - 1));
    const Elem eb(F, b);
    if (ea.pow(qi + 1) + eb.pow(qi + 1) != one) throw std::logic_error("norm equation failed");
    gens.push_back(to_perm({Mat{ea, eb, -eb.pow(qi), ea.pow(qi)}, 0}));
    PermGroup trial(labels.size(), gens, BigInt(socle), {}, limits);
    if (trial.order() == socle) break;
  }
  const Semilinear delta{diag(Elem(F, static_cast<Log>(q - 1)), one), 0};
  const Semilinear phi{diag(one, one), 1};
  switch (variant.family) {
    case Family::PSL2: break;
    case Family::PGL2: gens.push_back(to_perm(delta)); break;
    case Family::PSigmaL2: gens.push_back(to_perm(phi)); break;
    case Family::PGammaL2:
      gens.push_back(to_perm(delta));
      gens.push_back(to_perm(phi));
      break;
    case Family::DeltaPhi: gens.push_back(to_perm({delta.m, variant.j})); break;
  }
  PermGroup group = finish_group(labels.size(), std::move(gens), variant.order(), limits);
  LabelledAction action("C3 " + variant.name(), std::move(group), std::move(labels), std::move(text));
  maximality_warnings(action, variant, false);
  return action;
}

// ---------------------------------------------------------------------------
// Catalogue

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

struct PendingEntry {
  std::string name;
  std::size_t name_line = 0;
  std::size_t degree = 0;
  std::vector<Permutation> gens;
  std::vector<Permutation> sub_gens;
  std::optional<BigInt> order;
  std::optional<BigInt> suborder;
};

CatalogueEntry finish_entry(PendingEntry& p, const Limits& limits) {
  if (p.degree == 0) throw ParseError("entry '" + p.name + "' has no degree", p.name_line);
  if (!p.order) throw ParseError("entry '" + p.name + "' has no expect line", p.name_line);
  CatalogueEntry e;
  e.name = p.name;
  e.degree = p.degree;
  e.group = PermGroup(p.degree, p.gens, *p.order, {}, limits);
  if (e.group.order() != *p.order) {
    throw CorruptDataError("entry '" + p.name + "': group order " + e.group.order().str() +
                           " does not match declared " + p.order->str());
  }
  if (!p.sub_gens.empty() || p.suborder) {
    if (!p.suborder) throw ParseError("entry '" + p.name + "' has sub gens but no suborder", p.name_line);
    PermGroup h(p.degree, p.sub_gens, *p.suborder, {}, limits);
    if (h.order() != *p.suborder) {
      throw CorruptDataError("entry '" + p.name + "': subgroup order " + h.order().str() +
                             " does not match declared " + p.suborder->str());
    }
    if (!e.group.contains_group(h)) {
      throw CorruptDataError("entry '" + p.name + "': subgroup is not contained in the group");
    }
    e.subgroup = std::move(h);
  }
  return e;
}

BigInt parse_bigint(const std::string& s, std::size_t line) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("expected a positive integer, got '" + s + "'", line);
  }
  return BigInt(s);
}

}  // namespace

std::vector<CatalogueEntry> load_catalogue(std::istream& in, const Limits& limits) {
  std::vector<CatalogueEntry> out;
  std::optional<PendingEntry> cur;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    std::istringstream words(line);
    std::string kw;
    words >> kw;
    std::string rest = trim(line.substr(kw.size()));
    if (kw == "name") {
      if (cur) out.push_back(finish_entry(*cur, limits));
      if (rest.empty() || rest.find_first_of(" \t") != std::string::npos) {
        throw ParseError("name must be a single word", line_no);
      }
      cur = PendingEntry{};
      cur->name = rest;
      cur->name_line = line_no;
      continue;
    }
    if (!cur) throw ParseError("record must start with 'name'", line_no);
    try {
      if (kw == "degree") {
        BigInt d = parse_bigint(rest, line_no);
        if (d == 0 || d > limits.point_cap) throw ParseError("degree out of range", line_no);
        cur->degree = static_cast<std::size_t>(d);
      } else if (kw == "gen" || kw == "sub") {
        if (cur->degree == 0) throw ParseError("'degree' must precede generators", line_no);
        std::string cycles = rest;
        bool sub = kw == "sub";
        if (sub) {
          if (rest.rfind("gen", 0) != 0) throw ParseError("expected 'sub gen'", line_no);
          cycles = trim(rest.substr(3));
        }
        Permutation g = Permutation::from_cycles(cycles, cur->degree);
        (sub ? cur->sub_gens : cur->gens).push_back(std::move(g));
      } else if (kw == "expect") {
        std::string w1, v1, w2, v2;
        std::istringstream r(rest);
        r >> w1 >> v1 >> w2 >> v2;
        if (w1 != "order") throw ParseError("expected 'expect order <N>'", line_no);
        cur->order = parse_bigint(v1, line_no);
        if (!w2.empty()) {
          if (w2 != "suborder") throw ParseError("expected 'suborder <M>'", line_no);
          cur->suborder = parse_bigint(v2, line_no);
        }
      } else {
        throw ParseError("unknown keyword '" + kw + "'", line_no);
      }
    } catch (const ParseError& e) {
      if (e.line() != 0) throw;
      throw ParseError(e.what(), line_no);
    }
  }
  if (cur) out.push_back(finish_entry(*cur, limits));
  return out;
}

std::vector<CatalogueEntry> load_catalogue_file(const std::string& path, const Limits& limits) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalogue file " + path);
  return load_catalogue(in, limits);
}

void write_catalogue_entry(std::ostream& out, const CatalogueEntry& entry) {
  out << "name " << entry.name << "\n";
  out << "degree " << entry.degree << "\n";
  for (const auto& g : entry.group.generators()) out << "gen " << g.to_cycle_string() << "\n";
  if (entry.subgroup) {
    for (const auto& g : entry.subgroup->generators()) out << "sub gen " << g.to_cycle_string() << "\n";
  }
  out << "expect order " << entry.group.order().str();
  if (entry.subgroup) out << " suborder " << entry.subgroup->order().str();
  out << "\n";
}

LabelledAction catalogue_action(const CatalogueEntry& entry, const Limits& limits) {
  if (!entry.subgroup) throw std::invalid_argument("catalogue entry '" + entry.name + "' has no subgroup");
  return coset_action(entry.group, *entry.subgroup, entry.name, limits);
}

}  // namespace saxl
