#include "saxl_cli/json_report.hpp"

#include <limits>

namespace saxl::cli {

using nlohmann::json;

json integer_json(const BigInt& n) {
  if (n >= std::numeric_limits<std::int64_t>::min() && n <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(n);
  }
  return n.str();
}

json rational_json(const Rational& q) {
  return {{"num", integer_json(numerator_of(q))},
          {"den", integer_json(denominator_of(q))}};
}

namespace {

template <class T, class F>
json optional_json(const std::optional<T>& value, F&& convert) {
  return value ? convert(*value) : json(nullptr);
}

json clique_json(const CliqueResult& c) { return {{"size", c.size}, {"vertices", c.vertices}}; }

}  // namespace

json report_json(const SaxlReport& r) {
  json suborbits = json::array();
  for (const auto& s : r.suborbits) suborbits.push_back({{"rep", s.rep}, {"length", s.length}});

  json out;
  out["schema"] = kSchemaVersion;
  out["action"] = r.name;
  out["degree"] = r.degree;
  out["group_order"] = integer_json(r.group_order);
  out["stab_order"] = integer_json(r.stab_order);
  out["suborbits"] = std::move(suborbits);
  out["regular_count"] = r.regular_count;
  out["valency"] = r.valency;
  out["q_exact"] = rational_json(r.q_exact);
  out["q_by_pairs"] = optional_json(r.q_by_pairs, rational_json);
  out["q_hat"] = optional_json(r.q_hat, rational_json);
  out["q_hat_by_fixed_points"] = optional_json(r.q_hat_by_fixed_points, rational_json);
  out["q_tilde"] = optional_json(r.q_tilde, rational_json);
  out["t"] = optional_json(r.t, [](const TValue& t) { return json{{"value", t.value}, {"unbounded", t.unbounded}}; });
  out["star"] = optional_json(r.star, [](const StarResult& s) {
    json witnesses = json::array();
    for (const auto& w : s.witnesses) witnesses.push_back({{"rep", w.rep}, {"common", w.common}});
    return json{{"holds", s.holds},
                {"failing_rep", s.failing_rep ? json(*s.failing_rep) : json(nullptr)},
                {"witnesses", std::move(witnesses)}};
  });
  out["clique"] = optional_json(r.clique, clique_json);
  out["independence"] = optional_json(r.independent, clique_json);
  out["warnings"] = r.warnings;
  out["skipped"] = r.skipped;
  return out;
}

}  // namespace saxl::cli
