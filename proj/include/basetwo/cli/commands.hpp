#pragma once

#include "basetwo/cli/construct.hpp"
#include "basetwo/cli/report.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace basetwo::cli {

struct RunOptions {
  std::uint64_t bound = 50'000;
  /// Recorded in reports; every computation is deterministic without it.
  std::uint64_t seed = 0;
  std::optional<std::string> cache_dir;
  std::string format = "json";
  std::optional<std::string> theorem;
  unsigned jobs = 1;
  bool timing = false;
};

/// Either a class index of the lattice or explicit generators in cycle notation.
struct SubgroupSelector {
  std::optional<std::size_t> cls;
  std::vector<std::string> generators;
};

Report analyze(const GroupSpec& spec, const RunOptions& opts);
Report alpha_command(const GroupSpec& spec, const RunOptions& opts);
Report certify_command(const GroupSpec& spec, const RunOptions& opts);
Report basesize_command(const GroupSpec& spec, const SubgroupSelector& sel, const RunOptions& opts);

/// Sweep document: {"version": 1, "specs": [...]} or
/// {"version": 1, "base": spec, "vary": {field: [values], ...}} (Cartesian product).
SweepReport sweep_command(const nlohmann::json& doc, const RunOptions& opts);

struct SelftestLine {
  std::string name;
  bool pass = false;
  std::string detail;
};
std::vector<SelftestLine> selftest(const RunOptions& opts);

/// Exit status: 0 success, 1 consistency mismatch or failed check,
/// 2 invalid input, 3 bound exceeded or lattice incomplete, 4 internal error.
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace basetwo::cli
