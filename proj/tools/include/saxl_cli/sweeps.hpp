#pragma once

#include <string>
#include <vector>

#include "saxl/limits.hpp"
#include "saxl/rational.hpp"

namespace saxl::cli {

struct Check {
  enum class Status { Pass, Fail, Skip };
  std::string name;
  Status status = Status::Pass;
  std::string detail;
};
std::string status_name(Check::Status status);

/// Range parameters of the sweeps; 0 selects the sweep's own default.
struct SweepOptions {
  std::uint32_t qmin = 0;
  std::uint32_t qmax = 0;
  std::uint64_t nmax = 1'000'000;
  std::uint64_t qend = 10'000;
  std::string catalogue_path;
  std::string rows_path;
  Limits limits;
};

/// Expected (r, Q) for a catalogue fixture.
struct TableRow {
  std::string id;
  std::size_t regular_count = 0;
  Rational q;
};
/// Lines "<id> <r> <num>/<den>"; '#' starts a comment. Throws ParseError.
std::vector<TableRow> load_table_rows(const std::string& path);

/// table-rows, c2-oracle, c3-oracle, witnesses, counts, euler, star, cliques.
const std::vector<std::string>& sweep_names();
/// Throws NotFoundError for an unknown sweep.
std::vector<Check> run_sweep(const std::string& name, const SweepOptions& options);

}  // namespace saxl::cli
