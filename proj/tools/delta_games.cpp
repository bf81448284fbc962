// Batch front end: every subcommand loads one game file, runs one analysis
// and writes a single table to stdout.
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "deltagames/delta_analysis.hpp"
#include "deltagames/equilibrium.hpp"
#include "deltagames/error.hpp"
#include "deltagames/game_io.hpp"
#include "deltagames/parallel.hpp"
#include "deltagames/report.hpp"
#include "deltagames/variable_rationality.hpp"
#include "deltagames/welfare.hpp"

namespace dg = deltagames;

namespace {

enum Exit { kOk = 0, kUsageExit = 1, kParseExit = 2, kDomainExit = 3 };

int exit_code(dg::ErrorCode code) {
  switch (code) {
    case dg::ErrorCode::kUsage:
      return kUsageExit;
    case dg::ErrorCode::kSyntax:
    case dg::ErrorCode::kShape:
    case dg::ErrorCode::kDeltaRange:
    case dg::ErrorCode::kDuplicateLabel:
    case dg::ErrorCode::kUnknownKey:
    case dg::ErrorCode::kMissingKey:
    case dg::ErrorCode::kBadNumber:
    case dg::ErrorCode::kUnknownParameter:
    case dg::ErrorCode::kSchemaVersion:
    case dg::ErrorCode::kDistribution:
      return kParseExit;
    default:
      return kDomainExit;
  }
}

struct Options {
  std::string game_path;
  std::vector<std::string> params;
  std::string format = "csv";
  std::optional<std::size_t> threads;

  std::string delta;
  std::string delta_bar;
  std::size_t grid = 0;
  std::size_t player = 0;
  std::string strategy;
  std::string delta_bar_grid;
  std::vector<std::string> dists;
  std::size_t samples = 10000;
  std::uint64_t seed = 0;
  std::string profile;
};

std::map<std::string, dg::Rational> parse_overrides(const std::vector<std::string>& params) {
  std::map<std::string, dg::Rational> out;
  for (const auto& item : params) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw dg::Error(dg::ErrorCode::kUsage, "--param expects name=value, got '" + item + "'");
    }
    out[item.substr(0, eq)] = dg::parse_rational(item.substr(eq + 1));
  }
  return out;
}

std::size_t thread_count(const Options& opts) {
  return opts.threads ? *opts.threads : dg::default_thread_count();
}

dg::GameDocument load(const Options& opts) {
  return dg::load_game(opts.game_path, parse_overrides(opts.params));
}

// --delta beats --delta-bar beats the document's own deltas.
dg::RationalityProfile resolve_deltas(const Options& opts, const dg::GameDocument& doc) {
  const std::size_t n = doc.game.num_players();
  if (!opts.delta.empty() && !opts.delta_bar.empty()) {
    throw dg::Error(dg::ErrorCode::kUsage, "give either --delta or --delta-bar, not both");
  }
  if (!opts.delta.empty()) {
    auto values = dg::parse_rational_list(opts.delta);
    if (values.size() != n) {
      throw dg::Error(dg::ErrorCode::kDimension, "--delta has " + std::to_string(values.size()) +
                                                     " values for " + std::to_string(n) +
                                                     " players");
    }
    return dg::RationalityProfile(std::move(values));
  }
  if (!opts.delta_bar.empty()) {
    return dg::RationalityProfile::constant(n, dg::parse_rational(opts.delta_bar));
  }
  if (doc.deltas) return *doc.deltas;
  throw dg::Error(dg::ErrorCode::kUsage, "no deltas: pass --delta or --delta-bar");
}

dg::ResultTable run_solve(const Options& opts) {
  const auto doc = load(opts);
  const auto eqs = dg::solve_game(doc.game, resolve_deltas(opts, doc));
  return dg::solve_table(doc.game, eqs);
}

dg::ResultTable run_regions(const Options& opts) {
  const auto doc = load(opts);
  const auto regions = opts.grid > 0
                           ? dg::region_partition_grid(doc.game, opts.grid, thread_count(opts))
                           : dg::region_partition(doc.game);
  return dg::regions_table(doc.game, regions);
}

dg::ResultTable run_thresholds(const Options& opts) {
  const auto doc = load(opts);
  const auto& game = doc.game;
  if (opts.player == 0 || opts.player > game.num_players()) {
    throw dg::Error(dg::ErrorCode::kIndex, "--player must be between 1 and " +
                                               std::to_string(game.num_players()));
  }
  const std::size_t player = opts.player - 1;
  std::vector<dg::StrategyIndex> strategies;
  if (opts.strategy.empty()) {
    for (std::size_t s = 0; s < game.num_strategies(player); ++s) strategies.push_back(s);
  } else {
    strategies.push_back(game.strategy_index(player, opts.strategy));
  }
  std::vector<dg::ThresholdRow> rows;
  for (auto s : strategies) {
    rows.push_back({player, game.labels(player)[s], dg::dominance_threshold(game, player, s)});
  }
  return dg::thresholds_table(rows);
}

dg::ResultTable run_sweep(const Options& opts) {
  const auto doc = load(opts);
  const auto grid = opts.delta_bar_grid.empty() ? std::vector<dg::Rational>{}
                                                : dg::parse_rational_list(opts.delta_bar_grid);
  return dg::sweep_table(dg::constant_rationality_sweep(doc.game, grid, thread_count(opts)));
}

dg::ResultTable run_sample(const Options& opts) {
  const auto doc = load(opts);
  const std::size_t n = doc.game.num_players();
  std::vector<dg::DeltaDistribution> dists;
  for (const auto& spec : opts.dists) dists.push_back(dg::DeltaDistribution::parse(spec));
  if (dists.empty()) dists = doc.distributions;
  if (dists.empty()) {
    throw dg::Error(dg::ErrorCode::kUsage, "no distributions: pass --dist");
  }
  if (dists.size() == 1 && n > 1) dists.assign(n, dists.front());
  const auto outcome = dg::monte_carlo(doc.game, dists, opts.samples, opts.seed, thread_count(opts));
  return dg::sample_table(outcome, n);
}

dg::ResultTable run_welfare(const Options& opts) {
  const auto doc = load(opts);
  const auto deltas = resolve_deltas(opts, doc);
  const auto eqs = dg::solve_game(doc.game, deltas);
  return dg::welfare_table(doc.game, dg::welfare_report(doc.game, deltas, eqs));
}

dg::ResultTable run_verify(const Options& opts, bool& ok) {
  const auto doc = load(opts);
  const auto tensor = dg::compose(doc.game, resolve_deltas(opts, doc));
  const auto profile = dg::parse_profile(doc.game, opts.profile);
  ok = dg::verify_equilibrium(tensor, profile);
  return dg::verify_table(doc.game, tensor, profile);
}

void add_common(CLI::App* cmd, Options& opts) {
  cmd->add_option("--game", opts.game_path, "Game file (JSON)")->required();
  cmd->add_option("--param", opts.params, "Override a game parameter, name=value");
  cmd->add_option("--format", opts.format, "table, csv or json-lines")
      ->check(CLI::IsMember({"table", "csv", "json-lines", "jsonl"}));
  cmd->add_option("--threads", opts.threads, "Worker threads (0 = all cores)");
}

void add_deltas(CLI::App* cmd, Options& opts) {
  cmd->add_option("--delta", opts.delta, "Per-player rationality indices, e.g. 1/2,3/4");
  cmd->add_option("--delta-bar", opts.delta_bar, "One rationality index shared by all players");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibria, delta regions and welfare for delta-rationality games"};
  app.require_subcommand(1);
  Options opts;

  auto* solve = app.add_subcommand("solve", "Equilibria of the composed game");
  add_common(solve, opts);
  add_deltas(solve, opts);

  auto* regions = app.add_subcommand("regions", "Partition of delta space by equilibrium structure");
  add_common(regions, opts);
  regions->add_option("--grid", opts.grid, "Grid points per axis instead of the exact partition")
      ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));

  auto* thresholds = app.add_subcommand("thresholds", "Delta intervals where a strategy dominates");
  add_common(thresholds, opts);
  thresholds->add_option("--player", opts.player, "Player, 1-based")->required();
  thresholds->add_option("--strategy", opts.strategy, "Strategy label (default: all)");

  auto* sweep = app.add_subcommand("sweep", "Constant-rationality sweep");
  add_common(sweep, opts);
  sweep->add_option("--delta-bar-grid", opts.delta_bar_grid, "Comma-separated delta_bar values");

  auto* sample = app.add_subcommand("sample", "Monte Carlo over random rationality");
  add_common(sample, opts);
  sample->add_option("--dist", opts.dists,
                     "Distribution spec, once for all players or once per player");
  sample->add_option("--samples", opts.samples, "Number of draws")
      ->check(CLI::PositiveNumber);
  sample->add_option("--seed", opts.seed, "Random seed");

  auto* welfare = app.add_subcommand("welfare", "Equilibria judged by the rational payoff");
  add_common(welfare, opts);
  add_deltas(welfare, opts);

  auto* verify = app.add_subcommand("verify", "Check one profile for equilibrium");
  add_common(verify, opts);
  add_deltas(verify, opts);
  verify->add_option("--profile", opts.profile, "e.g. \"D;C\" or \"2/3,1/3;swerve\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsageExit;
  }

  try {
    const auto format = dg::parse_format(opts.format);
    bool verified = true;
    dg::ResultTable table;
    if (*solve) table = run_solve(opts);
    else if (*regions) table = run_regions(opts);
    else if (*thresholds) table = run_thresholds(opts);
    else if (*sweep) table = run_sweep(opts);
    else if (*sample) table = run_sample(opts);
    else if (*welfare) table = run_welfare(opts);
    else table = run_verify(opts, verified);
    std::cout << dg::render(table, format);
    // verify reports a failed check as a domain result, after printing it.
    return verified ? kOk : kDomainExit;
  } catch (const dg::Error& e) {
    std::cerr << dg::code_name(e.code()) << ": " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "INTERNAL: " << e.what() << '\n';
    return kDomainExit;
  }
}
