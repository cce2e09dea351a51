#include "saxl_cli/app.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>

#include "saxl/engine.hpp"
#include "saxl/errors.hpp"
#include "saxl_cli/action_spec.hpp"
#include "saxl_cli/json_report.hpp"
#include "saxl_cli/sweeps.hpp"

namespace saxl::cli {

namespace {

using nlohmann::json;

struct RunConfig {
  // Action spec: exactly one of the three groups is set.
  std::string catalogue_id;
  std::string psl2_model;
  std::uint32_t q = 0;
  std::string variant = "psl";
  std::uint32_t j = 0;
  std::vector<std::uint32_t> ksubsets;
  bool alternating = false;

  std::string catalogue_path = default_catalogue_path();
  std::string output_path;
  Limits limits;
  bool cross_check = false;
  bool no_qhat = false;
  bool no_star = false;
  bool no_cliques = false;

  std::string format = "dot";

  std::string sweep;
  SweepOptions sweep_options;
};

ActionSpec action_spec(const RunConfig& cfg) {
  const int given = (cfg.catalogue_id.empty() ? 0 : 1) + (cfg.psl2_model.empty() ? 0 : 1) + (cfg.ksubsets.empty() ? 0 : 1);
  if (given != 1) throw std::invalid_argument("give exactly one of --catalogue, --psl2, --ksubsets");
  if (!cfg.catalogue_id.empty()) return CatalogueSpec{cfg.catalogue_id};
  if (!cfg.ksubsets.empty()) return KSubsetSpec{cfg.ksubsets[0], cfg.ksubsets[1], cfg.alternating};
  if (cfg.q == 0) throw std::invalid_argument("--psl2 needs --q");
  GroupVariant v{parse_family(cfg.variant), cfg.q, cfg.j};
  v.validate();
  return Psl2Spec{cfg.psl2_model == "c2" ? Psl2Model::C2 : Psl2Model::C3, v};
}

// Applies SAXL_THREADS (0 = one thread per core).
void apply_thread_env(Limits& limits) {
  if (const char* env = std::getenv("SAXL_THREADS")) {
    try {
      limits.threads = static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("SAXL_THREADS is not a number: ") + env);
    }
  }
}

// Writes to the output file when one is configured, else to `out`.
template <class Writer>
void emit(const RunConfig& cfg, std::ostream& out, Writer&& write) {
  if (cfg.output_path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(cfg.output_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + cfg.output_path);
  write(file);
}

void add_action_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--catalogue", cfg.catalogue_id, "Catalogue entry id");
  cmd.add_option("--psl2", cfg.psl2_model, "L2(q) action model")->check(CLI::IsMember({"c2", "c3"}));
  cmd.add_option("--q", cfg.q, "Field order for --psl2");
  cmd.add_option("--variant", cfg.variant, "Group over L2(q)")
      ->check(CLI::IsMember({"psl", "pgl", "psigmal", "pgammal", "deltaphi"}));
  cmd.add_option("--j", cfg.j, "Frobenius power for --variant deltaphi");
  cmd.add_option("--ksubsets", cfg.ksubsets, "S_n or A_n on k-subsets: N K")->expected(2);
  cmd.add_flag("--alternating", cfg.alternating, "Use A_n with --ksubsets");
}

void add_common_options(CLI::App& cmd, RunConfig& cfg) {
  cmd.add_option("--catalogue-file", cfg.catalogue_path, "Catalogue path")->capture_default_str();
  cmd.add_option("--point-cap", cfg.limits.point_cap, "Largest action degree")->check(CLI::PositiveNumber);
  cmd.add_option("--group-cap", cfg.limits.group_cap, "Largest enumerated group order")->check(CLI::PositiveNumber);
  cmd.add_option("--graph-cap", cfg.limits.graph_cap, "Largest degree for a full graph")->check(CLI::PositiveNumber);
  cmd.add_option("--exact-cap", cfg.limits.exact_cap, "Largest degree for exact clique search")
      ->check(CLI::PositiveNumber);
  cmd.add_option("-o,--output", cfg.output_path, "Output file (default stdout)");
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const auto action = build_action(action_spec(cfg), cfg.catalogue_path, cfg.limits);
  AnalyzeOptions options;
  options.q_hat = !cfg.no_qhat;
  options.star = !cfg.no_star;
  options.exact_cliques = !cfg.no_cliques;
  options.cross_check = cfg.cross_check;
  json report = report_json(analyze(action, options, cfg.limits));
  report["command"] = "analyze";
  emit(cfg, out, [&](std::ostream& o) { o << report.dump(2) << '\n'; });
  return kExitOk;
}

int cmd_graph(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const auto action = build_action(action_spec(cfg), cfg.catalogue_path, cfg.limits);
  for (const auto& w : action.warnings()) err << "warning: " << w << '\n';
  const auto graph = SaxlGraph::build(BaseNeighbourhood(action, cfg.limits), cfg.limits);
  emit(cfg, out, [&](std::ostream& o) {
    if (cfg.format == "dot") {
      graph.write_dot(o);
    } else {
      graph.write_edge_list(o);
    }
  });
  return kExitOk;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  SweepOptions options = cfg.sweep_options;
  options.catalogue_path = cfg.catalogue_path;
  options.limits = cfg.limits;
  const auto checks = run_sweep(cfg.sweep, options);
  bool ok = true;
  json list = json::array();
  for (const auto& c : checks) {
    ok = ok && c.status != Check::Status::Fail;
    list.push_back({{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}});
  }
  const json summary{{"schema", kSchemaVersion},
                     {"command", "verify"},
                     {"sweep", cfg.sweep},
                     {"passed", ok},
                     {"checks", std::move(list)}};
  emit(cfg, out, [&](std::ostream& o) { o << summary.dump(2) << '\n'; });
  return ok ? kExitOk : kExitError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Saxl graphs of base-two permutation groups", "saxl"};
  app.require_subcommand(1);

  auto* analyze_cmd = app.add_subcommand("analyze", "Analyse an action and print a JSON report");
  add_action_options(*analyze_cmd, cfg);
  add_common_options(*analyze_cmd, cfg);
  analyze_cmd->add_flag("--cross-check", cfg.cross_check, "Recompute Q and Q-hat by a second route");
  analyze_cmd->add_flag("--no-qhat", cfg.no_qhat, "Skip the class-fusion sums");
  analyze_cmd->add_flag("--no-star", cfg.no_star, "Skip the common-neighbour check");
  analyze_cmd->add_flag("--no-cliques", cfg.no_cliques, "Skip exact clique and independence numbers");

  auto* graph_cmd = app.add_subcommand("graph", "Write the Saxl graph");
  add_action_options(*graph_cmd, cfg);
  add_common_options(*graph_cmd, cfg);
  graph_cmd->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"dot", "edges"}))->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "Run a verification sweep");
  verify_cmd->add_option("sweep", cfg.sweep, "Sweep name")->required()->check(CLI::IsMember(sweep_names()));
  add_common_options(*verify_cmd, cfg);
  verify_cmd->add_option("--qmin", cfg.sweep_options.qmin, "Smallest field order");
  verify_cmd->add_option("--qmax", cfg.sweep_options.qmax, "Largest field order");
  verify_cmd->add_option("--nmax", cfg.sweep_options.nmax, "Range of the totient scan")->capture_default_str();
  verify_cmd->add_option("--qend", cfg.sweep_options.qend, "Exclusive bound of the field scans")->capture_default_str();
  verify_cmd->add_option("--rows-file", cfg.sweep_options.rows_path, "Table expectations path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    apply_thread_env(cfg.limits);
    if (*analyze_cmd) return cmd_analyze(cfg, out);
    if (*graph_cmd) return cmd_graph(cfg, out, err);
    return cmd_verify(cfg, out);
  } catch (const UnsupportedError& e) {
    err << "saxl: cap exceeded: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const std::exception& e) {
    err << "saxl: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace saxl::cli
