#include "saxl_cli/sweeps.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "saxl/criteria.hpp"
#include "saxl/engine.hpp"
#include "saxl/errors.hpp"
#include "saxl/number_theory.hpp"
#include "saxl_cli/action_spec.hpp"

namespace saxl::cli {

std::string status_name(Check::Status status) {
  switch (status) {
    case Check::Status::Pass: return "pass";
    case Check::Status::Fail: return "fail";
    case Check::Status::Skip: return "skip";
  }
  return "fail";
}

std::vector<TableRow> load_table_rows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::vector<TableRow> rows;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    TableRow row;
    std::string q;
    if (!(fields >> row.id)) continue;
    const auto slash = [&] { return q.find('/'); };
    if (!(fields >> row.regular_count >> q) || slash() == std::string::npos) {
      throw ParseError("expected '<id> <r> <num>/<den>'", number);
    }
    try {
      row.q = make_rational(BigInt(q.substr(0, slash())), BigInt(q.substr(slash() + 1)));
    } catch (const std::exception&) {
      throw ParseError("bad rational '" + q + "'", number);
    }
    std::string extra;
    if (fields >> extra) throw ParseError("trailing text '" + extra + "'", number);
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

using Status = Check::Status;
namespace gf = saxl::gf;

Check pass(std::string name, std::string detail = {}) { return {std::move(name), Status::Pass, std::move(detail)}; }
Check fail(std::string name, std::string detail) { return {std::move(name), Status::Fail, std::move(detail)}; }
Check skip(std::string name, std::string detail) { return {std::move(name), Status::Skip, std::move(detail)}; }
Check verdict(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail)};
}

std::uint32_t or_default(std::uint32_t value, std::uint32_t fallback) { return value == 0 ? fallback : value; }

bool is_prime_power(std::uint64_t q) { return prime_power(q).first != 0; }
bool odd_non_prime(std::uint64_t q) {
  const auto [p, f] = prime_power(q);
  return p > 2 && f > 1;
}

std::string model_name(Psl2Model model) { return model == Psl2Model::C2 ? "C2" : "C3"; }

LabelledAction psl2_action(Psl2Model model, const GroupVariant& v, const Limits& limits) {
  return model == Psl2Model::C2 ? psl2_c2_action(v, limits) : psl2_c3_action(v, limits);
}

// ---------------------------------------------------------------------------

std::vector<Check> table_rows(const SweepOptions& o) {
  const auto entries = load_catalogue_file(o.catalogue_path, o.limits);
  std::vector<Check> out;
  for (const auto& row : load_table_rows(o.rows_path)) {
    const auto it = std::find_if(entries.begin(), entries.end(), [&](const auto& e) { return e.name == row.id; });
    if (it == entries.end() || !it->subgroup) {
      out.push_back(fail(row.id, "no catalogue entry with a subgroup"));
      continue;
    }
    const BaseNeighbourhood nb(catalogue_action(*it, o.limits), o.limits);
    const Rational q = q_exact(nb);
    std::ostringstream detail;
    detail << "r=" << nb.regular_count() << " Q=" << to_string(q) << " expected r=" << row.regular_count
           << " Q=" << to_string(row.q);
    out.push_back(verdict(row.id, nb.regular_count() == row.regular_count && q == row.q, detail.str()));
  }
  return out;
}

// Closed-form relation against the suborbit rows on every pair, and against
// the pointwise stabiliser on every pair through point 0.
Check oracle_check(Psl2Model model, const GroupVariant& v, const Limits& limits) {
  const std::string name = model_name(model) + " " + v.name();
  const auto action = psl2_action(model, v, limits);
  const BaseNeighbourhood nb(action, limits);
  const CriteriaBaseRelation rel(model, v);
  std::uint64_t pairs = 0, row_mismatch = 0, stab_mismatch = 0;
  for (Point x = 0; x < action.degree(); ++x) {
    for (Point y = x + 1; y < action.degree(); ++y) {
      ++pairs;
      const bool closed = rel.is_base(action.label(x), action.label(y));
      if (closed != nb.adjacent(x, y)) ++row_mismatch;
      if (x == 0 && closed != is_base_pair(action, x, y, limits)) ++stab_mismatch;
    }
  }
  std::ostringstream detail;
  detail << "pairs=" << pairs << " row_mismatches=" << row_mismatch << " stabiliser_mismatches=" << stab_mismatch;
  return verdict(name, row_mismatch == 0 && stab_mismatch == 0, detail.str());
}

std::vector<Check> oracle(Psl2Model model, const SweepOptions& o) {
  std::vector<Check> out;
  const std::uint32_t qmax = or_default(o.qmax, 27);
  for (std::uint32_t q = or_default(o.qmin, model == Psl2Model::C2 ? 4 : 5); q <= qmax; ++q) {
    if (!is_prime_power(q)) continue;
    for (const auto& v : distinct_variants(q)) {
      if (CriteriaBaseRelation::supported(model, v)) out.push_back(oracle_check(model, v, o.limits));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::uint32_t code(const gf::Field& F, gf::Log x) { return c2_point_code(F, x); }

Check c2_witnesses(std::uint32_t q, const Limits& limits) {
  const auto& F = gf::field_of_order(q);
  std::optional<LabelledAction> action;
  std::optional<BaseNeighbourhood> nb;
  if (q <= 27) {
    action.emplace(psl2_c2_action({Family::PSigmaL2, q}, limits));
    nb.emplace(*action, limits);
  }
  // Beyond engine range the edges are rechecked through the transported relation.
  const CriteriaBaseRelation rel(Psl2Model::C2, {Family::PSigmaL2, q});
  std::uint64_t inputs = 0, engine_checked = 0;
  std::string failure;
  for (gf::Log b = 0; b < static_cast<gf::Log>(F.q1()) && failure.empty(); ++b) {
    for (gf::Log c = 0; c < static_cast<gf::Log>(F.q1()); ++c) {
      if (b == c || !c2_base_psigma(F, b, c)) continue;
      ++inputs;
      try {
        const auto w = c2_common_neighbour_witness(F, b, c);
        const auto alpha_label = c2_pair_label(code(F, gf::ZERO), c2_infinity_code(F));
        const auto beta_label = c2_pair_label(code(F, b), code(F, c));
        const auto gamma_label = c2_pair_label(code(F, w.gamma_b), code(F, w.gamma_c));
        if (!rel.is_base(alpha_label, gamma_label) || !rel.is_base(beta_label, gamma_label)) {
          failure = "relation rejects witness for b=" + F.to_string(b) + " c=" + F.to_string(c);
          break;
        }
        if (nb) {
          const Point alpha = action->index_of(alpha_label);
          const Point beta = action->index_of(beta_label);
          const Point gamma = action->index_of(gamma_label);
          if (!nb->adjacent(alpha, gamma) || !nb->adjacent(beta, gamma)) {
            failure = "engine rejects witness for b=" + F.to_string(b) + " c=" + F.to_string(c);
            break;
          }
          ++engine_checked;
        }
      } catch (const std::exception& ex) {
        failure = ex.what();
        break;
      }
    }
  }
  std::ostringstream detail;
  detail << "inputs=" << inputs << " engine_checked=" << engine_checked;
  if (!failure.empty()) detail << " failure: " << failure;
  return verdict("C2 q=" + std::to_string(q), failure.empty() && inputs > 0, detail.str());
}

Check c3_witnesses(std::uint32_t q, const Limits& limits) {
  const auto& Fq = gf::field_of_order(q);
  const auto& F = gf::field(Fq.p(), 2 * Fq.f());
  std::optional<LabelledAction> action;
  std::optional<BaseNeighbourhood> nb;
  const Family family = Fq.f() > 1 ? Family::PSigmaL2 : Family::PSL2;
  if (q <= 27) {
    action.emplace(psl2_c3_action({family, q}, limits));
    nb.emplace(*action, limits);
  }
  const CriteriaBaseRelation rel(Psl2Model::C3, {family, q});
  std::uint64_t inputs = 0, engine_checked = 0;
  std::string failure;
  for (gf::Log b = 0; b < static_cast<gf::Log>(F.q1()); ++b) {
    if (F.pow(b, static_cast<std::int64_t>(q) + 1) == F.minus_one()) continue;
    if (!c3_base(F, C3Group::PSigmaL, b)) continue;
    ++inputs;
    try {
      const auto w = c3_common_neighbour_witness(F, b);
      const auto gamma_label = c3_label(F, w.c);
      if (!rel.is_base(c3_label(F, std::nullopt), gamma_label) || !rel.is_base(c3_label(F, b), gamma_label)) {
        failure = "relation rejects witness for b=" + F.to_string(b);
        break;
      }
      if (nb) {
        const Point beta = action->index_of(c3_label(F, b));
        const Point gamma = action->index_of(c3_label(F, w.c));
        if (!nb->adjacent(0, gamma) || !nb->adjacent(beta, gamma)) {
          failure = "engine rejects witness for b=" + F.to_string(b);
          break;
        }
        ++engine_checked;
      }
    } catch (const std::exception& ex) {
      failure = ex.what();
      break;
    }
  }
  std::ostringstream detail;
  detail << "inputs=" << inputs << " engine_checked=" << engine_checked;
  if (!failure.empty()) detail << " failure: " << failure;
  return verdict("C3 q=" + std::to_string(q), failure.empty() && inputs > 0, detail.str());
}

std::vector<Check> witnesses(const SweepOptions& o) {
  std::vector<Check> out;
  const std::uint32_t qmin = or_default(o.qmin, 7), qmax = or_default(o.qmax, 199);
  for (std::uint32_t q = qmin; q <= qmax; ++q) {
    if (odd_non_prime(q)) out.push_back(c2_witnesses(q, o.limits));
  }
  for (std::uint32_t q = qmin; q <= qmax; ++q) {
    const auto [p, f] = prime_power(q);
    if (p > 2) out.push_back(c3_witnesses(q, o.limits));
  }
  return out;
}

// ---------------------------------------------------------------------------

std::vector<Check> counts(const SweepOptions& o) {
  std::vector<Check> out;
  for (std::uint32_t q : {9u, 25u, 49u}) {
    const auto formula = c2_counts(gf::field_of_order(q));
    const BaseNeighbourhood nb(psl2_c2_action({Family::PSigmaL2, q}, o.limits), o.limits);
    std::ostringstream detail;
    detail << "valency=" << nb.valency() << "/" << formula.valency << " r=" << nb.regular_count() << "/"
           << formula.regular;
    out.push_back(verdict("c2_counts q=" + std::to_string(q),
                          nb.valency() == formula.valency && nb.regular_count() == formula.regular, detail.str()));
  }
  for (std::uint32_t q : {11u, 13u, 17u, 19u}) {
    const BaseNeighbourhood nb(psl2_c3_action({Family::PSL2, q}, o.limits), o.limits);
    const auto formula = c3_regular_count_prime(q);
    out.push_back(verdict("c3_regular_count_prime q=" + std::to_string(q), nb.regular_count() == formula,
                          "r=" + std::to_string(nb.regular_count()) + "/" + std::to_string(formula)));
  }
  // For prime q the pairs meeting alpha in one point are bases as well.
  {
    const std::uint32_t q = 13;
    const auto m = gf::count_nonsquare_nonsubfield(gf::field_of_order(q));
    const std::uint64_t expected = m * (q - 1) / 2 + 2 * (q - 1);
    const BaseNeighbourhood nb(psl2_c2_action({Family::PSL2, q}, o.limits), o.limits);
    out.push_back(verdict("c2 f=1 valency q=13", nb.valency() == expected,
                          "valency=" + std::to_string(nb.valency()) + " m(q-1)/2+2(q-1)=" + std::to_string(expected)));
  }
  return out;
}

std::vector<Check> euler(const SweepOptions& o) {
  const auto describe = [](const std::optional<std::uint64_t>& failure) {
    return failure ? "first failure at " + std::to_string(*failure) : std::string("no failure");
  };
  const auto lemma = first_euler_bound_failure(o.nmax);
  const auto c2 = first_c2_euler_failure(o.qend);
  const auto c3 = first_c3_euler_failure(o.qend);
  return {verdict("totient lower bound n<=" + std::to_string(o.nmax), !lemma, describe(lemma)),
          verdict("phi(q-1)>=4f q<" + std::to_string(o.qend), !c2, describe(c2)),
          verdict("phi(q^2-1)>=4f(q+1) q<" + std::to_string(o.qend), !c3, describe(c3))};
}

// ---------------------------------------------------------------------------

Check star_check(const std::string& name, const LabelledAction& action, const Limits& limits) {
  if (!action.warnings().empty()) return skip(name, action.warnings().front());
  const BaseNeighbourhood nb(action, limits);
  if (nb.regular_count() == 0) return skip(name, "not base-two");
  const auto star = check_star(nb, limits);
  std::string detail = "witnesses=" + std::to_string(star.witnesses.size());
  if (star.failing_rep) detail += " failing_rep=" + std::to_string(*star.failing_rep);
  return verdict(name, star.holds, detail);
}

std::vector<Check> star(const SweepOptions& o) {
  std::vector<Check> out;
  const std::uint32_t qmax = or_default(o.qmax, 27);
  for (Psl2Model model : {Psl2Model::C2, Psl2Model::C3}) {
    for (std::uint32_t q = or_default(o.qmin, 4); q <= qmax; ++q) {
      if (!is_prime_power(q)) continue;
      for (const auto& v : distinct_variants(q)) {
        out.push_back(star_check(model_name(model) + " " + v.name(), psl2_action(model, v, o.limits), o.limits));
      }
    }
  }
  for (const auto& entry : load_catalogue_file(o.catalogue_path, o.limits)) {
    if (entry.subgroup) out.push_back(star_check(entry.name, catalogue_action(entry, o.limits), o.limits));
  }
  return out;
}

std::vector<Check> cliques(const SweepOptions& o) {
  std::vector<Check> out;
  const std::uint32_t qmax = or_default(o.qmax, 199);
  for (std::uint32_t q = or_default(o.qmin, 28); q <= qmax; ++q) {
    if (!odd_non_prime(q)) continue;
    for (Psl2Model model : {Psl2Model::C2, Psl2Model::C3}) {
      const GroupVariant v{Family::PSigmaL2, q};
      const auto clique = criteria_clique(model, v, 5);
      out.push_back(verdict(model_name(model) + " " + v.name() + " clique>=5", clique.has_value(),
                            clique ? "found" : "no clique of size 5 through alpha"));
    }
  }
  return out;
}

using SweepFn = std::function<std::vector<Check>(const SweepOptions&)>;

const std::map<std::string, SweepFn>& registry() {
  static const std::map<std::string, SweepFn> sweeps{
      {"table-rows", table_rows},
      {"c2-oracle", [](const SweepOptions& o) { return oracle(Psl2Model::C2, o); }},
      {"c3-oracle", [](const SweepOptions& o) { return oracle(Psl2Model::C3, o); }},
      {"witnesses", witnesses},
      {"counts", counts},
      {"euler", euler},
      {"star", star},
      {"cliques", cliques},
  };
  return sweeps;
}

}  // namespace

const std::vector<std::string>& sweep_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<Check> run_sweep(const std::string& name, const SweepOptions& options) {
  const auto it = registry().find(name);
  if (it == registry().end()) throw NotFoundError("unknown sweep " + name);
  SweepOptions o = options;
  if (o.catalogue_path.empty()) o.catalogue_path = default_catalogue_path();
  if (o.rows_path.empty()) o.rows_path = default_table_rows_path();
  return it->second(o);
}

}  // namespace saxl::cli
