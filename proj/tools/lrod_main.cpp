// Command-line front end: run a scenario, sweep a parameter, or run the
// Markov grid, writing loss curves and summaries as CSV.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lrod/config.hpp"
#include "lrod/error.hpp"
#include "lrod/experiments.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitIo = 3;

struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_dir = "results";
  unsigned workers = 1;
  std::optional<std::size_t> bins;
};

void add_common(CLI::App& cmd, CommonOptions& opts) {
  cmd.add_option("--config", opts.config_path, "Scenario config file (key = value)");
  cmd.add_option("--seed", opts.seed, "Master seed (overrides the config)");
  cmd.add_option("--out", opts.out_dir, "Output directory for CSV files")->capture_default_str();
  cmd.add_option("--workers", opts.workers, "Worker threads")->check(CLI::PositiveNumber);
  cmd.add_option("--bins", opts.bins, "Quantile bins for g2/g3 threshold grids");
}

lrod::ScenarioConfig resolve_config(const CommonOptions& opts) {
  lrod::ScenarioConfig config;
  if (!opts.config_path.empty()) config = lrod::load_config(opts.config_path);
  if (opts.seed) config.master_seed = *opts.seed;
  if (opts.bins) config.grid.n_bins = *opts.bins;
  config.validate();
  return config;
}

void print_summary(const lrod::SweepResult& result) {
  std::cout << lrod::summary_csv(result.cells);
  for (const auto& message : result.skipped) std::cerr << "skipped " << message << '\n';
}

void emit(const lrod::SweepResult& result, const std::string& out_dir) {
  for (const auto& path : lrod::emit_results(result, out_dir)) {
    std::cerr << "wrote " << path.string() << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Loss-optimised recovery timing for simulated amortising-loan portfolios"};
  app.require_subcommand(1);

  CommonOptions run_opts;
  auto* run = app.add_subcommand("run", "Run one scenario for every configured measure");
  add_common(*run, run_opts);

  CommonOptions sweep_opts;
  std::string sweep_param;
  std::vector<double> sweep_values;
  auto* sweep = app.add_subcommand("sweep", "Sweep k, b or r_a over a list of values");
  add_common(*sweep, sweep_opts);
  sweep->add_option("--param", sweep_param, "Swept parameter")
      ->required()
      ->check(CLI::IsMember({"k", "b", "r_a"}));
  sweep->add_option("--values", sweep_values, "Comma-separated values")->required()->delimiter(',');

  CommonOptions grid_opts;
  std::vector<double> p_pps = lrod::default_grid_p_pp();
  std::vector<double> p_dds = lrod::default_grid_p_dd();
  auto* grid = app.add_subcommand("grid", "Markov-defaults grid over (p_pp, p_dd)");
  add_common(*grid, grid_opts);
  grid->add_option("--p-pp", p_pps, "Comma-separated P->P probabilities")->delimiter(',');
  grid->add_option("--p-dd", p_dds, "Comma-separated D->D probabilities")->delimiter(',');

  CommonOptions curve_opts;
  std::string curve_measure;
  auto* curve = app.add_subcommand("curve", "Loss curve of a single measure");
  add_common(*curve, curve_opts);
  curve->add_option("--measure", curve_measure, "g1, g2 or g3")
      ->required()
      ->check(CLI::IsMember({"g1", "g2", "g3"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitValidation;
  }

  try {
    if (*run) {
      const auto config = resolve_config(run_opts);
      lrod::SweepResult result{"run", {lrod::run_scenario(config, run_opts.workers)}, {}};
      emit(result, run_opts.out_dir);
      print_summary(result);
    } else if (*sweep) {
      const auto base = resolve_config(sweep_opts);
      const auto param = lrod::parse_sweep_param(sweep_param);
      const auto result = param == lrod::SweepParam::K
                              ? lrod::run_truncation_sweep(base, sweep_values, sweep_opts.workers)
                              : lrod::run_sweep({param, sweep_values, base}, sweep_opts.workers);
      emit(result, sweep_opts.out_dir);
      print_summary(result);
    } else if (*grid) {
      auto base = resolve_config(grid_opts);
      base.technique = lrod::Technique::Markov;
      const auto result = lrod::run_markov_grid(base, p_pps, p_dds, grid_opts.workers);
      emit(result, grid_opts.out_dir);
      print_summary(result);
    } else if (*curve) {
      auto config = resolve_config(curve_opts);
      config.measures = {lrod::parse_measure(curve_measure)};
      lrod::SweepResult result{"curve", {lrod::run_scenario(config, curve_opts.workers)}, {}};
      result.cells.front().scenario_id = "curve";
      emit(result, curve_opts.out_dir);
      std::cout << lrod::curve_csv(result.cells.front().curves.front());
    }
  } catch (const lrod::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const lrod::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return kExitOk;
}
