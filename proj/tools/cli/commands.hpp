#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "cli/table.hpp"
#include "multicut/hilbert.hpp"
#include "multicut/monomial.hpp"
#include "multicut/probability.hpp"

namespace multicut::cli {

enum class SystemKindArg { kKofn, kCons, kCustom };

/// Which system to analyse and with which component failure probabilities.
struct SystemSpec {
  SystemKindArg kind = SystemKindArg::kKofn;
  int k = 0;
  int n = 0;
  std::vector<std::vector<int>> cuts;  // custom systems, 1-based indices
  std::optional<double> p;             // i.i.d. components
  std::vector<double> per_component;   // independent, non-identical

  /// Minimal failure ideal; custom cuts are minimalized.
  MonomialIdeal base_ideal() const;
  /// Closed-form tag for kofn/cons; empty for custom systems.
  std::optional<SystemTag> tag() const;
  /// Throws ParameterError when no probabilities were given.
  ProbabilityVector probabilities() const;
};

/// Reads a custom system document: {"n": <int>, "cuts": [[1, 2], [2, 3], ...]}.
SystemSpec read_custom_system(std::istream& in);
SystemSpec load_custom_system(const std::string& path);

struct CommandOptions {
  SystemSpec spec;
  std::optional<std::size_t> level;      // -i
  std::optional<std::size_t> max_level;  // --imax
  std::optional<std::size_t> depth;      // --depth
  std::string grid;                      // --grid a:b:step
  bool force_general = false;            // lcm_fold instead of closed forms
};

/// gens -> (index, components, degree)
Table cmd_gens(const CommandOptions& options);
/// count -> (i, binomial, generators)
Table cmd_count(const CommandOptions& options);
/// survivor -> (i, F)
Table cmd_survivor(const CommandOptions& options);
/// unrel -> (p, f)
Table cmd_unrel(const CommandOptions& options);
/// bounds -> (d, value, direction, exact, method)
Table cmd_bounds(const CommandOptions& options);
/// bench -> (i, count, t_naive_s, t_formula_s)
Table cmd_bench(const CommandOptions& options);

/// Grid points a, a + step, ..., up to b, parsed from "a:b:step".
std::vector<double> parse_grid(const std::string& grid);

/// Exit codes of the command-line tool.
inline constexpr int kExitOk = 0;
inline constexpr int kExitBadArguments = 2;
inline constexpr int kExitCapacity = 3;
inline constexpr int kExitCrossCheck = 4;

/// Full command-line entry point; diagnostics go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace multicut::cli
