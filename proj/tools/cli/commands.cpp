#include "cli/commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <new>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "multicut/binomial.hpp"
#include "multicut/consecutive.hpp"
#include "multicut/errors.hpp"
#include "multicut/kofn.hpp"
#include "multicut/lcm_filtration.hpp"
#include "multicut/oracle.hpp"

namespace multicut::cli {

namespace {

// Above this many generators the consecutive count is not re-derived by
// enumeration.
constexpr BigCount kCountCrossCheckLimit = 10'000'000;

Cell count_cell(BigCount value) {
  if (value <= std::numeric_limits<std::uint64_t>::max()) {
    return static_cast<std::uint64_t>(value);
  }
  return to_string(value);
}

std::string join_components(const SquarefreeMonomial& m) {
  std::string out;
  for (int index : m.indices()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(index);
  }
  return out;
}

bool uses_closed_form(const CommandOptions& options) {
  return !options.force_general && options.spec.kind != SystemKindArg::kCustom;
}

std::optional<SystemTag> active_tag(const CommandOptions& options) {
  return options.force_general ? std::nullopt : options.spec.tag();
}

std::size_t require_level(const CommandOptions& options, const char* command) {
  if (!options.level) throw ParameterError(std::string(command) + " needs -i <level>");
  if (*options.level == 0) throw ParameterError("-i must be at least 1");
  return *options.level;
}

std::size_t to_size(BigCount value) {
  if (value > std::numeric_limits<std::size_t>::max()) {
    throw CapacityError("level count does not fit in a machine word");
  }
  return static_cast<std::size_t>(value);
}

// Total number of minimal cuts, without materializing the k-out-of-n ideal.
BigCount cut_count(const SystemSpec& spec) {
  switch (spec.kind) {
    case SystemKindArg::kKofn:
      return binomial(spec.n, spec.k);
    case SystemKindArg::kCons:
      return static_cast<BigCount>(spec.n - spec.k + 1);
    case SystemKindArg::kCustom:
      break;
  }
  return spec.base_ideal().size();
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void check_system_parameters(const SystemSpec& spec) {
  if (spec.kind == SystemKindArg::kCustom) return;
  check_variable_count(spec.n);
  if (spec.k < 1 || spec.k > spec.n) {
    throw ParameterError("-k must satisfy 1 <= k <= n");
  }
}

}  // namespace

MonomialIdeal SystemSpec::base_ideal() const {
  switch (kind) {
    case SystemKindArg::kKofn:
      return kofn_ideal(k, n);
    case SystemKindArg::kCons:
      return cons_ideal(k, n);
    case SystemKindArg::kCustom:
      break;
  }
  check_variable_count(n);
  if (cuts.empty()) throw ParameterError("custom system has no cuts");
  std::vector<SquarefreeMonomial> monomials;
  monomials.reserve(cuts.size());
  for (const auto& cut : cuts) {
    if (cut.empty()) throw ParameterError("custom system has an empty cut");
    monomials.push_back(SquarefreeMonomial::from_indices(n, cut));
  }
  return minimalize(n, monomials);
}

std::optional<SystemTag> SystemSpec::tag() const {
  switch (kind) {
    case SystemKindArg::kKofn:
      return SystemTag{SystemKind::kKofn, k, n};
    case SystemKindArg::kCons:
      return SystemTag{SystemKind::kConsecutive, k, n};
    case SystemKindArg::kCustom:
      break;
  }
  return std::nullopt;
}

ProbabilityVector SystemSpec::probabilities() const {
  if (p) return ProbabilityVector::iid(n, *p);
  if (per_component.empty()) throw ParameterError("component probabilities needed: -p or -P");
  if (per_component.size() != static_cast<std::size_t>(n)) {
    throw ParameterError("-P lists " + std::to_string(per_component.size()) +
                         " probabilities for " + std::to_string(n) + " components");
  }
  return ProbabilityVector(per_component);
}

SystemSpec read_custom_system(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("custom system file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("cuts")) {
    throw ParameterError("custom system file needs fields 'n' and 'cuts'");
  }
  SystemSpec spec;
  spec.kind = SystemKindArg::kCustom;
  try {
    spec.n = doc.at("n").get<int>();
    spec.cuts = doc.at("cuts").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("malformed custom system: ") + e.what());
  }
  check_variable_count(spec.n);
  for (const auto& cut : spec.cuts) {
    if (cut.empty()) throw ParameterError("custom system has an empty cut");
    for (int index : cut) {
      if (index < 1 || index > spec.n) {
        throw ParameterError("cut component " + std::to_string(index) + " outside 1.." +
                             std::to_string(spec.n));
      }
    }
  }
  return spec;
}

SystemSpec load_custom_system(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open custom system file '" + path + "'");
  return read_custom_system(in);
}

std::vector<double> parse_grid(const std::string& grid) {
  double a = 0.0, b = 0.0, step = 0.0;
  char colon1 = 0, colon2 = 0;
  std::istringstream in(grid);
  in.imbue(std::locale::classic());
  if (!(in >> a >> colon1 >> b >> colon2 >> step) || colon1 != ':' || colon2 != ':' ||
      !(in >> std::ws).eof()) {
    throw ParameterError("--grid expects a:b:step, got '" + grid + "'");
  }
  if (!(a >= 0.0 && a <= b && b <= 1.0 && step > 0.0)) {
    throw ParameterError("--grid needs 0 <= a <= b <= 1 and step > 0");
  }
  auto count = static_cast<std::size_t>(std::floor((b - a) / step + 1e-9)) + 1;
  std::vector<double> points;
  points.reserve(count);
  for (std::size_t t = 0; t < count; ++t) points.push_back(std::min(b, a + step * static_cast<double>(t)));
  return points;
}

Table cmd_gens(const CommandOptions& options) {
  std::size_t i = require_level(options, "gens");
  MonomialIdeal base = options.spec.base_ideal();
  MonomialIdeal level = multicut_level(base, i, active_tag(options));
  Table table{"gens", {"index", "components", "degree"}, {}};
  for (std::size_t t = 0; t < level.size(); ++t) {
    SquarefreeMonomial m = level.generator(t);
    table.rows.push_back({static_cast<std::int64_t>(t + 1), join_components(m),
                          static_cast<std::int64_t>(m.degree())});
  }
  return table;
}

Table cmd_count(const CommandOptions& options) {
  const SystemSpec& spec = options.spec;
  check_system_parameters(spec);
  const BigCount r = cut_count(spec);
  const std::size_t top = options.max_level ? *options.max_level : to_size(r);
  Table table{"count", {"i", "binomial", "generators"}, {}};

  std::optional<MonomialIdeal> base;
  if (!uses_closed_form(options)) base = spec.base_ideal();

  for (std::size_t i = 1; i <= top; ++i) {
    BigCount generators = 0;
    if (i <= r) {
      if (base) {
        generators = lcm_fold(*base, i).size();
      } else if (spec.kind == SystemKindArg::kKofn) {
        generators = binomial(spec.n, staircase_level(spec.k, spec.n, i).j);
      } else {
        generators = count_generators(spec.k, spec.n, static_cast<int>(i));
        if (generators <= kCountCrossCheckLimit) {
          BigCount enumerated = 0;
          for_each_admissible(spec.k, spec.n, static_cast<int>(i),
                              [&](const GeneratorSubset&) { ++enumerated; });
          if (enumerated != generators) {
            throw ConsistencyError("closed-form count " + to_string(generators) + " at i = " +
                                   std::to_string(i) + " disagrees with enumeration (" +
                                   to_string(enumerated) + ")");
          }
        }
      }
    }
    table.rows.push_back({static_cast<std::int64_t>(i),
                          count_cell(binomial(static_cast<std::int64_t>(r),
                                              static_cast<std::int64_t>(i))),
                          count_cell(generators)});
  }
  return table;
}

Table cmd_survivor(const CommandOptions& options) {
  ProbabilityVector p = options.spec.probabilities();
  MonomialIdeal base = options.spec.base_ideal();
  SurvivorSeries series = survivor(base, p, active_tag(options), options.max_level);
  Table table{"survivor", {"i", "F"}, {}};
  for (std::size_t i = 0; i <= series.max_level(); ++i) {
    table.rows.push_back({static_cast<std::int64_t>(i), series.at(i)});
  }
  return table;
}

Table cmd_unrel(const CommandOptions& options) {
  if (options.grid.empty()) throw ParameterError("unrel needs --grid a:b:step");
  std::vector<double> grid = parse_grid(options.grid);
  const std::size_t i = options.level.value_or(1);
  if (i == 0) throw ParameterError("-i must be at least 1");
  const SystemSpec& spec = options.spec;
  Table table{"unrel", {"p", "f"}, {}};

  if (uses_closed_form(options) && spec.kind == SystemKindArg::kKofn) {
    check_system_parameters(spec);
    const BigCount r = binomial(spec.n, spec.k);
    std::optional<UnivariatePolynomial> poly;
    if (i <= r) poly = unreliability_poly_iid(staircase_level(spec.k, spec.n, i).j, spec.n);
    for (double p : grid) table.rows.push_back({p, poly ? (*poly)(p) : 0.0});
    return table;
  }

  MonomialIdeal base = spec.base_ideal();
  ReliabilityPolynomial numerator = hilbert_numerator(multicut_level(base, i, active_tag(options)));
  for (double p : grid) {
    table.rows.push_back({p, evaluate(numerator, ProbabilityVector::iid(base.n(), p))});
  }
  return table;
}

Table cmd_bounds(const CommandOptions& options) {
  const SystemSpec& spec = options.spec;
  ProbabilityVector p = spec.probabilities();
  const std::size_t i = options.level.value_or(1);
  MonomialIdeal base = spec.base_ideal();
  MonomialIdeal level = multicut_level(base, i, active_tag(options));
  if (level.is_zero()) {
    throw ParameterError("level " + std::to_string(i) + " exceeds the number of minimal cuts");
  }
  const bool betti = uses_closed_form(options) && spec.kind == SystemKindArg::kKofn;
  const int j = betti ? staircase_level(spec.k, spec.n, i).j : 0;

  double exact = 0.0;
  std::size_t depth = level.size();
  if (betti) {
    exact = kofn_bounds(j, spec.n, p, spec.n - j).value;
    depth = std::min<std::size_t>(depth, static_cast<std::size_t>(spec.n - j + 1));
  } else {
    exact = evaluate(hilbert_numerator(level), p);
  }
  if (options.depth) depth = *options.depth;
  if (depth < 1 || depth > level.size()) {
    throw ParameterError("--depth must be in 1.." + std::to_string(level.size()));
  }

  Table table{"bounds", {"d", "value", "direction", "exact", "method"}, {}};
  // The deepest truncation goes first: it is the one that can exceed capacity.
  std::vector<Bound> truncations(depth + 1);
  for (std::size_t d = depth; d >= 1; --d) truncations[d] = bonferroni(level, p, d);
  for (std::size_t d = 1; d <= depth; ++d) {
    table.rows.push_back({static_cast<std::int64_t>(d), truncations[d].value,
                          std::string(to_string(truncations[d].direction)), exact, "bonferroni"});
  }
  if (betti) {
    const int last = std::min(static_cast<int>(depth) - 1, spec.n - j);
    for (int t = 0; t <= last; ++t) {
      Bound bound = p.identical() ? kofn_bounds(j, spec.n, p[0], t) : kofn_bounds(j, spec.n, p, t);
      table.rows.push_back({static_cast<std::int64_t>(t), bound.value,
                            std::string(to_string(bound.direction)), exact, "betti"});
    }
  }
  return table;
}

Table cmd_bench(const CommandOptions& options) {
  MonomialIdeal base = options.spec.base_ideal();
  const std::optional<SystemTag> tag = active_tag(options);
  const std::size_t top = options.max_level.value_or(base.size());
  Table table{"bench", {"i", "count", "t_naive_s", "t_formula_s"}, {}};
  for (std::size_t i = 1; i <= top; ++i) {
    auto start = std::chrono::steady_clock::now();
    MonomialIdeal naive = naive_multicut_gens(base, i);
    double t_naive = seconds_since(start);

    start = std::chrono::steady_clock::now();
    MonomialIdeal fast = tag ? multicut_level(base, i, tag) : lcm_fold(base, i);
    double t_fast = seconds_since(start);

    if (!ideal_equals(naive, fast)) {
      throw ConsistencyError("naive and specialized generators differ at i = " + std::to_string(i));
    }
    table.rows.push_back({static_cast<std::int64_t>(i), static_cast<std::uint64_t>(fast.size()),
                          t_naive, t_fast});
  }
  return table;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimal multicut enumeration and multiple-failure probabilities for "
               "k-out-of-n:F, consecutive k-out-of-n:F and custom coherent systems"};
  app.require_subcommand(1);

  bool kofn = false;
  bool cons = false;
  std::string custom_path;
  CommandOptions options;
  std::size_t level = 0, max_level = 0, depth = 0;
  double p = 0.0;
  std::string format_name = "csv";

  auto add_system = [&](CLI::App* sub) {
    auto* kofn_flag = sub->add_flag("--kofn", kofn, "k-out-of-n:F system");
    auto* cons_flag = sub->add_flag("--cons", cons, "consecutive k-out-of-n:F system");
    auto* custom_opt =
        sub->add_option("--custom", custom_path, "custom system file {\"n\": .., \"cuts\": [[..]]}");
    kofn_flag->excludes(cons_flag)->excludes(custom_opt);
    cons_flag->excludes(custom_opt);
    sub->add_option("-k", options.spec.k, "failure threshold");
    sub->add_option("-n", options.spec.n, "number of components");
    sub->add_option("--format", format_name, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_flag("--force-general", options.force_general,
                  "use the general lcm-filtration instead of closed forms");
  };
  auto add_probabilities = [&](CLI::App* sub) {
    auto* iid = sub->add_option("-p", p, "i.i.d. component failure probability");
    auto* vec = sub->add_option("-P", options.spec.per_component,
                                "per-component failure probabilities p1,p2,...,pn")
                    ->delimiter(',');
    iid->excludes(vec);
  };

  auto* gens = app.add_subcommand("gens", "list minimal i-multicuts");
  add_system(gens);
  gens->add_option("-i", level, "number of simultaneous failures")->required();

  auto* count = app.add_subcommand("count", "count minimal i-multicuts for i = 1..imax");
  add_system(count);
  count->add_option("--imax", max_level, "largest level");

  auto* surv = app.add_subcommand("survivor", "prob{Y >= i} for i = 0..imax");
  add_system(surv);
  add_probabilities(surv);
  surv->add_option("--imax", max_level, "largest level");

  auto* unrel = app.add_subcommand("unrel", "probability of >= i failure events on a p grid");
  add_system(unrel);
  unrel->add_option("-i", level, "number of simultaneous failures (default 1)");
  unrel->add_option("--grid", options.grid, "a:b:step")->required();

  auto* bounds = app.add_subcommand("bounds", "truncated inclusion-exclusion bounds");
  add_system(bounds);
  add_probabilities(bounds);
  bounds->add_option("-i", level, "number of simultaneous failures (default 1)");
  bounds->add_option("--depth", depth, "truncation depth");

  auto* bench = app.add_subcommand("bench", "naive vs specialized multicut enumeration timings");
  add_system(bench);
  bench->add_option("--imax", max_level, "largest level");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitBadArguments;
  }

  CLI::App* chosen = app.get_subcommands().front();
  auto given = [&](const char* name) {
    const CLI::Option* option = chosen->get_option_no_throw(name);
    return option != nullptr && option->count() > 0;
  };

  try {
    if (!custom_path.empty()) {
      SystemSpec custom = load_custom_system(custom_path);
      custom.p = options.spec.p;
      custom.per_component = std::move(options.spec.per_component);
      options.spec = std::move(custom);
    } else if (kofn || cons) {
      options.spec.kind = kofn ? SystemKindArg::kKofn : SystemKindArg::kCons;
      if (!given("-k") || !given("-n")) throw ParameterError("--kofn/--cons need -k and -n");
      check_system_parameters(options.spec);
    } else {
      throw ParameterError("choose a system: --kofn, --cons or --custom FILE");
    }
    if (given("-p")) options.spec.p = p;
    if (given("-i")) options.level = level;
    if (given("--imax")) options.max_level = max_level;
    if (given("--depth")) options.depth = depth;
    OutputFormat format = format_name == "json" ? OutputFormat::kJson : OutputFormat::kCsv;

    Table table;
    const std::string name = chosen->get_name();
    if (name == "gens") table = cmd_gens(options);
    else if (name == "count") table = cmd_count(options);
    else if (name == "survivor") table = cmd_survivor(options);
    else if (name == "unrel") table = cmd_unrel(options);
    else if (name == "bounds") table = cmd_bounds(options);
    else table = cmd_bench(options);
    write_table(out, table, format);
    return kExitOk;
  } catch (const CapacityError& e) {
    err << "capacity exceeded: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::bad_alloc&) {
    err << "capacity exceeded: out of memory\n";
    return kExitCapacity;
  } catch (const ConsistencyError& e) {
    err << "cross-check failed: " << e.what() << '\n';
    return kExitCrossCheck;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitBadArguments;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitCrossCheck;
  }
}

}  // namespace multicut::cli
