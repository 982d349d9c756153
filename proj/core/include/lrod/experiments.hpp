#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "lrod/config.hpp"
#include "lrod/optimizer.hpp"

namespace lrod {

/// Outcome of one scenario: a loss curve per requested measure (in the
/// config's measure order) and the cross-measure comparison.
struct ScenarioResult {
  std::string scenario_id = "run";
  std::string param_name = "none";
  std::string param_value;
  ScenarioConfig config;
  std::vector<LossCurve> curves;
  MeasureComparison comparison;

  const LossCurve& curve(MeasureId measure) const;
};

/// Generate, measure, sweep, compare.
ScenarioResult run_scenario(const ScenarioConfig& config, unsigned workers = 1);

/// Parameters a one-dimensional sweep may vary.
enum class SweepParam { K, B, RA };

std::string_view to_string(SweepParam param);
SweepParam parse_sweep_param(std::string_view text);

struct SweepSpec {
  SweepParam param = SweepParam::K;
  std::vector<double> values;
  ScenarioConfig base;
};

struct SweepResult {
  std::string name;
  std::vector<ScenarioResult> cells;
  /// Cells that failed validation (Markov grid only), one message each.
  std::vector<std::string> skipped;
};

/// Config of cell `index`: the base with the swept value applied and a seed
/// derived from (base seed, index).
ScenarioConfig sweep_cell_config(const SweepSpec& spec, std::size_t index);

/// Runs every cell; cells are independent and may run concurrently.
SweepResult run_sweep(const SweepSpec& spec, unsigned workers = 1);

/// (k, g1)-truncation sweep over random defaults.
SweepResult run_truncation_sweep(const ScenarioConfig& base, const std::vector<double>& ks,
                                 unsigned workers = 1);
/// Payment-probability sweep; the base should carry the truncation rule.
SweepResult run_payment_prob_sweep(const ScenarioConfig& base, const std::vector<double>& bs,
                                   unsigned workers = 1);
SweepResult run_loss_rate_sweep(const ScenarioConfig& base, const std::vector<double>& r_as,
                                unsigned workers = 1);

/// Every (p_pp, p_dd) pair, row-major in p_pp. Pairs violating the row-sum
/// constraints are skipped and recorded in `skipped`.
SweepResult run_markov_grid(const ScenarioConfig& base, const std::vector<double>& p_pps,
                            const std::vector<double>& p_dds, unsigned workers = 1);

/// Default lattice values for the Markov grid.
std::vector<double> default_grid_p_pp();
std::vector<double> default_grid_p_dd();

inline constexpr std::string_view kCurveHeader = "measure,threshold,total_loss,normalised_loss";
inline constexpr std::string_view kSummaryHeader =
    "scenario_id,param_name,param_value,measure,optimal_threshold,min_loss,"
    "min_normalised_loss,degenerate_flat";

std::string curve_csv(const LossCurve& curve);
std::string summary_csv(const std::vector<ScenarioResult>& cells);

/// Writes `<scenario_id>_<measure>_curve.csv` per cell and measure plus one
/// `<name>_summary.csv`. Returns the paths written, in write order.
std::vector<std::filesystem::path> emit_results(const SweepResult& results,
                                                const std::filesystem::path& destination);

/// Formats a double with the shortest round-trip representation.
std::string format_number(double value);

}  // namespace lrod
