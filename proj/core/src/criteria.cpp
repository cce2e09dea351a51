#include "saxl/criteria.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "saxl/engine.hpp"
#include "saxl/errors.hpp"
#include "saxl/number_theory.hpp"
#include "line_model.hpp"

namespace saxl {

using detail::Elem;
using detail::Line;
using detail::Mat;
using gf::Field;
using gf::Log;
using gf::ZERO;

namespace {

void require_odd(const Field& F) {
  if (!F.odd()) throw std::invalid_argument("criterion needs odd characteristic");
}

std::int64_t p_pow(const Field& F, std::uint32_t k) { return static_cast<std::int64_t>(ipow(F.p(), k)); }

// q for a field GF(q^2).
std::int64_t half_order(const Field& F2) {
  if (F2.f() % 2 != 0) throw std::invalid_argument("expected a field of square order");
  return p_pow(F2, F2.f() / 2);
}

bool c2_square_conditions(const Field& F, Log b, Log c) {
  if (b == ZERO || c == ZERO) return false;
  return !F.is_square(F.neg(F.div(b, c)));
}

}  // namespace

// ---------------------------------------------------------------------------
// C2

bool c2_base_psigma(const Field& F, Log b, Log c) {
  require_odd(F);
  if (b == c) throw std::invalid_argument("c2_base_psigma needs b != c");
  if (!c2_square_conditions(F, b, c)) return false;
  for (std::uint32_t k = 1; k < F.f(); ++k) {
    const std::int64_t e = p_pow(F, k) - 1;
    if (F.pow(b, e) == F.pow(c, e)) return false;
  }
  return true;
}

bool c2_base_psigma_divisors(const Field& F, Log b, Log c) {
  require_odd(F);
  if (b == c) throw std::invalid_argument("c2_base_psigma needs b != c");
  if (!c2_square_conditions(F, b, c)) return false;
  return !F.in_proper_subfield_divisors(F.div(b, c));
}

std::pair<Log, Log> c2_neighbour_transfer(const Field& F, Log b, Log c, Log d, Log e) {
  const Elem eb(F, b), ec(F, c), ed(F, d), ee(F, e);
  if (ed == eb - ec || ee == eb - ec) throw std::invalid_argument("transfer needs d, e != b - c");
  const Elem shift = eb * (ec - eb);
  const Elem b2 = (shift + ed * ec) / (ec - eb + ed);
  const Elem c2 = (shift + ee * ec) / (ec - eb + ee);
  return {b2.log(), c2.log()};
}

C2Witness c2_common_neighbour_witness(const Field& F, Log b, Log c) {
  if (!c2_base_psigma(F, b, c)) throw std::invalid_argument("{alpha, beta} is not a base");
  const Elem eb(F, b), ec(F, c), two = Elem::from_int(F, 2);
  const Elem d = two * eb * (eb - ec) / (eb + ec);
  const Elem e = (eb * eb - ec * ec) / (two * ec);
  C2Witness w{(-eb).log(), (-ec).log(), d.log(), e.log()};
  if (d == eb - ec || e == eb - ec) throw std::logic_error("C2 witness hits the excluded value b - c");
  if (d == e || !c2_base_psigma(F, w.d, w.e)) throw std::logic_error("C2 witness {d, e} is not a base");
  auto [x, y] = c2_neighbour_transfer(F, b, c, w.d, w.e);
  if (std::minmax(x, y) != std::minmax(w.gamma_b, w.gamma_c)) throw std::logic_error("C2 witness transfer mismatch");
  if (!c2_base_psigma(F, w.gamma_b, w.gamma_c)) throw std::logic_error("{alpha, gamma} is not a base");
  return w;
}

C2Counts c2_counts(const Field& F) {
  require_odd(F);
  if (F.f() < 2) throw UnsupportedError("c2_counts needs f >= 2");
  C2Counts out;
  out.m = gf::count_nonsquare_nonsubfield(F);
  out.valency = out.m * (F.q() - 1) / 2;
  if (out.m % (2 * F.f()) != 0) throw std::logic_error("m is not divisible by 2f");
  out.regular = out.m / (2 * F.f());
  return out;
}

// ---------------------------------------------------------------------------
// C3

bool c3_base(const Field& F2, C3Group group, Log b) {
  require_odd(F2);
  const std::int64_t q = half_order(F2);
  if (b == ZERO) throw std::invalid_argument("c3_base needs b != 0");
  if (F2.pow(b, q + 1) == F2.minus_one()) throw std::invalid_argument("b^(q+1) = -1 is not a point");
  if (group == C3Group::Socle) return !F2.is_square(b);
  for (std::uint32_t k = 1; k < F2.f(); ++k) {
    const std::int64_t e = (q + 1) * (p_pow(F2, k) - 1) / 2;
    if (F2.pow(b, e) == F2.one()) return false;
  }
  return true;
}

Log c3_unit_scalar(const Field& F2, Log b) {
  const std::int64_t q = half_order(F2);
  const Elem t = Elem::one(F2) + Elem(F2, b).pow(q + 1);
  if (t.is_zero()) throw std::invalid_argument("1 + b^(q+1) = 0");
  // t lies in GF(q), so its log is a multiple of q + 1.
  if (t.log() % (q + 1) != 0) throw std::logic_error("norm is not in the subfield");
  const auto a = static_cast<Log>((t.log() / (q + 1)) % (q - 1));
  if (Elem(F2, a).pow(q + 1) != t) throw std::logic_error("norm equation failed");
  return a;
}

namespace {

// a1^-2 (b + b^-q), the recurring factor of the C3 transfer formulas.
Elem c3_kappa(const Field& F2, Log b, Log a1) {
  const std::int64_t q = half_order(F2);
  const Elem eb(F2, b);
  return Elem(F2, a1).pow(-2) * (eb + eb.pow(-q));
}

}  // namespace

C3Witness c3_common_neighbour_witness(const Field& F2, Log b) {
  if (!c3_base(F2, C3Group::PSigmaL, b)) throw std::invalid_argument("{alpha, omega_b} is not a base");
  const std::int64_t q = half_order(F2);
  const Elem eb(F2, b), bq = eb.pow(-q), two = Elem::from_int(F2, 2);
  const Log a1 = c3_unit_scalar(F2, b);
  const Elem kappa = c3_kappa(F2, b, a1);
  const Elem d = two * eb * kappa / (eb - bq);
  C3Witness w{(-eb).log(), a1, d.log()};

  // d must name a point and avoid the two values excluded by the transfer.
  if (d.is_zero() || d.pow(q + 1) == Elem(F2, F2.minus_one())) throw std::logic_error("C3 witness: d^(q+1) = -1");
  if (d == kappa || d == -(eb.pow(q + 1) * kappa)) throw std::logic_error("C3 witness: d hits an excluded value");
  if (!c3_base(F2, C3Group::PSigmaL, w.d)) throw std::logic_error("C3 witness: d fails the subfield condition");
  // The transferred point is omega_c.
  const Elem image = (eb * kappa + bq * d) / (kappa - d);
  if (c3_canonical(F2, image.log()) != c3_canonical(F2, w.c)) throw std::logic_error("C3 witness transfer mismatch");
  if (!c3_base(F2, C3Group::PSigmaL, w.c)) throw std::logic_error("{alpha, omega_c} is not a base");
  return w;
}

std::vector<OmegaPoint> c3_clique(const Field& F2, Log b) {
  require_odd(F2);
  const std::int64_t q = half_order(F2);
  if (b == ZERO || F2.is_square(b)) throw std::invalid_argument("c3_clique needs a non-square b");
  std::vector<Log> members;
  for (std::int64_t k = 0; k < q - 1; ++k) {
    const Log x = static_cast<Log>(k * (q + 1));  // runs over GF(q)^*
    const Log bx = F2.mul(b, x);
    if (F2.pow(bx, q + 1) == F2.minus_one()) continue;
    members.push_back(c3_canonical(F2, bx));
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  std::vector<OmegaPoint> out{c3_label(F2, std::nullopt)};
  for (Log m : members) out.push_back(c3_label(F2, m));
  if (2 * out.size() < static_cast<std::size_t>(q - 1)) throw std::logic_error("C3 clique is too small");

  const CriteriaBaseRelation rel(Psl2Model::C3, {Family::PSL2, static_cast<std::uint32_t>(q)});
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (std::size_t j = i + 1; j < out.size(); ++j) {
      if (!rel.is_base(out[i], out[j])) throw std::logic_error("C3 clique contains a non-base pair");
    }
  }
  return out;
}

std::uint64_t c3_regular_count_prime(std::uint64_t q) {
  if (q < 11 || !is_prime(q)) throw std::invalid_argument("c3_regular_count_prime needs a prime q >= 11");
  return (q - q % 4) / 4;
}

// ---------------------------------------------------------------------------
// Closed forms

Rational q_closed_form(std::uint64_t q, ClosedForm form) {
  if (prime_power(q).first == 0) throw std::invalid_argument("q must be a prime power");
  const BigInt Q = q;
  if (form == ClosedForm::PglDqMinus1) return 1 - Rational(4 * (Q - 1), Q * (Q + 1));
  if (q % 2 == 0) throw std::invalid_argument("closed form needs odd q");
  const bool one_mod_four = q % 4 == 1;
  if (form == ClosedForm::DqMinus1) {
    const BigInt a = one_mod_four ? 7 : 5;
    return 1 - Rational((Q - 1) * (Q + a), 2 * Q * (Q + 1));
  }
  const BigInt b = one_mod_four ? 1 : 3;
  return 1 - Rational((Q + 1) * (Q - b), 2 * Q * (Q - 1));
}

// ---------------------------------------------------------------------------
// Base relation on labels

bool CriteriaBaseRelation::supported(Psl2Model model, const GroupVariant& variant) {
  variant.validate();
  const auto [p, f] = prime_power(variant.q);
  if (model == Psl2Model::C2) {
    if (variant.q < 4) return false;
    if (variant.family == Family::PGL2) return true;
    if (p == 2) return variant.family == Family::PSL2;
    return variant.family == Family::PSigmaL2 || (variant.family == Family::PSL2 && f == 1);
  }
  if (p == 2 || variant.q < 3) return false;
  return variant.family == Family::PSL2 || variant.family == Family::PSigmaL2;
}

CriteriaBaseRelation::CriteriaBaseRelation(Psl2Model model, const GroupVariant& variant)
    : model_(model), variant_(variant) {
  if (!supported(model, variant)) {
    throw UnsupportedError("no closed-form base criterion for " + variant.name());
  }
  const Field& fq = gf::field_of_order(variant.q);
  if (model == Psl2Model::C2) {
    field_ = &fq;
    johnson_ = variant.family == Family::PGL2 || fq.p() == 2;
  } else {
    field_ = &gf::field(fq.p(), 2 * fq.f());
  }
}

bool CriteriaBaseRelation::c2_with_alpha(std::uint32_t a, std::uint32_t b) const {
  const std::uint32_t inf = variant_.q;
  const auto on_alpha = [&](std::uint32_t x) { return x == 0 || x == inf; };
  const int shared = (on_alpha(a) ? 1 : 0) + (on_alpha(b) ? 1 : 0);
  if (johnson_) return shared == 1;
  if (shared == 2) return false;
  // Pairs meeting alpha are fixed by diag(a, a^-1) phi when f >= 2.
  if (shared == 1) return field_->f() == 1;
  return c2_base_psigma(*field_, *c2_point_value(*field_, a), *c2_point_value(*field_, b));
}

bool CriteriaBaseRelation::c3_with_alpha(std::optional<Log> b) const {
  if (!b) return false;
  return c3_base(*field_, variant_.family == Family::PSL2 ? C3Group::Socle : C3Group::PSigmaL, *b);
}

bool CriteriaBaseRelation::is_base(const OmegaPoint& x, const OmegaPoint& y) const {
  if (x == y) throw std::invalid_argument("is_base needs two distinct points");
  const Field& F = *field_;
  if (model_ == Psl2Model::C2) {
    const auto code = [](const OmegaPoint& p, int i) { return static_cast<std::uint32_t>(p.data.at(i)); };
    const std::uint32_t inf = variant_.q;
    const auto line_of = [&](std::uint32_t c) {
      auto v = c2_point_value(F, c);
      return v ? Line{false, *v} : Line{true, ZERO};
    };
    const auto code_of = [&](const Line& l) { return l.infinite ? inf : c2_point_code(F, l.z); };
    if (code(x, 0) == 0 && code(x, 1) == inf) return c2_with_alpha(code(y, 0), code(y, 1));
    if (code(y, 0) == 0 && code(y, 1) == inf) return c2_with_alpha(code(x, 0), code(x, 1));
    // Send x = {s, t} to alpha: z -> (z - s)/(z - t), or z -> z - s when t is infinite.
    const Elem one = Elem::one(F), zero = Elem::zero(F);
    const Elem s(F, *c2_point_value(F, code(x, 0)));
    Mat m;
    if (code(x, 1) == inf) {
      m = {one, -s, zero, one};
    } else {
      const Elem t(F, *c2_point_value(F, code(x, 1)));
      m = {-t, -s, one, one};
    }
    return c2_with_alpha(code_of(detail::apply(F, m, line_of(code(y, 0)))),
                         code_of(detail::apply(F, m, line_of(code(y, 1)))));
  }

  if (x.data.empty()) return c3_with_alpha(static_cast<Log>(y.data.at(0)));
  if (y.data.empty()) return c3_with_alpha(static_cast<Log>(x.data.at(0)));
  // Unitary map taking alpha to omega_b, inverted.
  const std::int64_t q = half_order(F);
  const Log b = static_cast<Log>(x.data[0]);
  const Elem eb(F, b), bq = eb.pow(-q);
  const Elem a1(F, c3_unit_scalar(F, b));
  const Elem a2 = -(eb + bq) / a1;
  const Mat m{a1.inv(), eb / a1, a2.inv(), -bq / a2};
  const Line image = detail::apply(F, m.inverse(), Line{false, static_cast<Log>(y.data[0])});
  if (image.infinite || image.z == ZERO) return false;
  return c3_with_alpha(image.z);
}

std::optional<std::vector<OmegaPoint>> criteria_clique(Psl2Model model, const GroupVariant& variant,
                                                       std::size_t target) {
  const CriteriaBaseRelation rel(model, variant);
  const auto labels = model == Psl2Model::C2 ? c2_point_labels(variant.q) : c3_point_labels(variant.q);
  std::vector<Point> cand;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (rel.is_base(labels[0], labels[i])) cand.push_back(static_cast<Point>(i));
  }
  auto found = find_clique(0, cand, target, [&](Point a, Point b) { return rel.is_base(labels[a], labels[b]); });
  if (!found) return std::nullopt;
  std::vector<OmegaPoint> out;
  for (Point i : *found) out.push_back(labels[i]);
  return out;
}

// ---------------------------------------------------------------------------
// Scans

namespace {

std::vector<std::uint64_t> totients(std::uint64_t n_max) {
  std::vector<std::uint64_t> phi(n_max + 1);
  std::iota(phi.begin(), phi.end(), 0);
  for (std::uint64_t p = 2; p <= n_max; ++p) {
    if (phi[p] != p) continue;
    for (std::uint64_t k = p; k <= n_max; k += p) phi[k] -= phi[k] / p;
  }
  return phi;
}

}  // namespace

std::optional<std::uint64_t> first_euler_bound_failure(std::uint64_t n_max) {
  const auto phi = totients(n_max);
  for (std::uint64_t n = 3; n <= n_max; ++n) {
    if (!gf::euler_bound_holds(n, phi[n])) return n;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> first_c2_euler_failure(std::uint64_t q_end) {
  for (std::uint64_t q = 29; q < q_end; q += 2) {
    const auto [p, f] = prime_power(q);
    if (p == 0 || f == 1) continue;
    if (euler_phi(q - 1) < 4 * f) return q;
  }
  return std::nullopt;
}

std::optional<std::uint64_t> first_c3_euler_failure(std::uint64_t q_end) {
  for (std::uint64_t q = 29; q < q_end; q += 2) {
    const auto [p, f] = prime_power(q);
    if (p == 0) continue;
    if (euler_phi(q * q - 1) < 4 * f * (q + 1)) return q;
  }
  return std::nullopt;
}

}  // namespace saxl
