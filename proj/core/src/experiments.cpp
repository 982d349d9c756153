#include "lrod/experiments.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <system_error>

#include "lrod/delinquency.hpp"
#include "lrod/error.hpp"
#include "lrod/parallel.hpp"
#include "lrod/rng.hpp"
#include "lrod/simulation.hpp"

namespace lrod {
namespace {

std::string sweep_name(SweepParam param) { return "sweep_" + std::string(to_string(param)); }

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path.string(), "cannot open for writing");
  out << content;
  out.flush();
  if (!out) throw IoError(path.string(), "write failed");
}

std::vector<ScenarioResult> run_cells(const std::vector<ScenarioResult>& prepared,
                                      unsigned workers) {
  std::vector<ScenarioResult> out(prepared.size());
  const bool cell_parallel = prepared.size() > 1;
  parallel_for(prepared.size(), cell_parallel ? workers : 1, [&](std::size_t i) {
    auto result = run_scenario(prepared[i].config, cell_parallel ? 1 : workers);
    result.scenario_id = prepared[i].scenario_id;
    result.param_name = prepared[i].param_name;
    result.param_value = prepared[i].param_value;
    out[i] = std::move(result);
  });
  return out;
}

}  // namespace

const LossCurve& ScenarioResult::curve(MeasureId measure) const {
  for (const auto& c : curves) {
    if (c.measure == measure) return c;
  }
  throw ValidationError("scenario " + scenario_id + " has no curve for " +
                        std::string(to_string(measure)));
}

ScenarioResult run_scenario(const ScenarioConfig& config, unsigned workers) {
  config.validate();
  const Portfolio portfolio = generate_portfolio(config, workers);

  ScenarioResult result;
  result.config = config;
  for (const MeasureId measure : config.measures) {
    const auto series = portfolio_series(portfolio, measure, config.cd, config.dod, workers);
    const auto grid = build_threshold_grid(measure, portfolio, config.grid, series);
    result.curves.push_back(sweep_loss_curve(portfolio, series, grid, config.rates, workers));
  }
  result.comparison = best_measure(result.curves);
  return result;
}

std::string_view to_string(SweepParam param) {
  switch (param) {
    case SweepParam::K: return "k";
    case SweepParam::B: return "b";
    case SweepParam::RA: return "r_a";
  }
  return "?";
}

SweepParam parse_sweep_param(std::string_view text) {
  if (text == "k") return SweepParam::K;
  if (text == "b") return SweepParam::B;
  if (text == "r_a") return SweepParam::RA;
  throw ValidationError("unknown sweep parameter '" + std::string(text) +
                        "' (expected k, b or r_a)");
}

ScenarioConfig sweep_cell_config(const SweepSpec& spec, std::size_t index) {
  require(index < spec.values.size(), "sweep cell index out of range");
  ScenarioConfig config = spec.base;
  const double value = spec.values[index];
  switch (spec.param) {
    case SweepParam::K: {
      auto rule = config.truncation.value_or(TruncationRule{});
      rule.k = value;
      config.truncation = rule;
      break;
    }
    case SweepParam::B: config.random.b = value; break;
    case SweepParam::RA: config.rates.r_a = value; break;
  }
  config.master_seed = derive_seed(spec.base.master_seed, index);
  return config;
}

SweepResult run_sweep(const SweepSpec& spec, unsigned workers) {
  require(!spec.values.empty(), "sweep needs at least one value");
  SweepResult result;
  result.name = sweep_name(spec.param);
  std::vector<ScenarioResult> prepared(spec.values.size());
  for (std::size_t i = 0; i < spec.values.size(); ++i) {
    prepared[i].config = sweep_cell_config(spec, i);
    prepared[i].config.validate();
    prepared[i].scenario_id = result.name + "_" + std::to_string(i);
    prepared[i].param_name = std::string(to_string(spec.param));
    prepared[i].param_value = format_number(spec.values[i]);
  }
  result.cells = run_cells(prepared, workers);
  return result;
}

SweepResult run_truncation_sweep(const ScenarioConfig& base, const std::vector<double>& ks,
                                 unsigned workers) {
  require(base.technique == Technique::Random, "truncation sweep expects random defaults");
  SweepSpec spec{SweepParam::K, ks, base};
  auto rule = base.truncation.value_or(TruncationRule{});
  rule.measure = MeasureId::G1;
  spec.base.truncation = rule;
  return run_sweep(spec, workers);
}

SweepResult run_payment_prob_sweep(const ScenarioConfig& base, const std::vector<double>& bs,
                                   unsigned workers) {
  require(base.technique == Technique::Random, "payment-probability sweep expects random defaults");
  return run_sweep({SweepParam::B, bs, base}, workers);
}

SweepResult run_loss_rate_sweep(const ScenarioConfig& base, const std::vector<double>& r_as,
                                unsigned workers) {
  require(base.technique == Technique::Random, "loss-rate sweep expects random defaults");
  return run_sweep({SweepParam::RA, r_as, base}, workers);
}

SweepResult run_markov_grid(const ScenarioConfig& base, const std::vector<double>& p_pps,
                            const std::vector<double>& p_dds, unsigned workers) {
  require(!p_pps.empty() && !p_dds.empty(), "markov grid needs p_pp and p_dd values");
  SweepResult result;
  result.name = "grid";
  std::vector<ScenarioResult> prepared;
  std::size_t index = 0;
  for (const double p_pp : p_pps) {
    for (const double p_dd : p_dds) {
      ScenarioConfig config = base;
      config.technique = Technique::Markov;
      config.markov.p_pp = p_pp;
      config.markov.p_dd = p_dd;
      config.master_seed = derive_seed(base.master_seed, index);
      const std::string value = format_number(p_pp) + "/" + format_number(p_dd);
      try {
        config.validate();
        ScenarioResult cell;
        cell.config = config;
        cell.scenario_id = "grid_" + std::to_string(index);
        cell.param_name = "p_pp/p_dd";
        cell.param_value = value;
        prepared.push_back(std::move(cell));
      } catch (const ValidationError& e) {
        result.skipped.push_back("cell " + std::to_string(index) + " (" + value + "): " + e.what());
      }
      ++index;
    }
  }
  result.cells = run_cells(prepared, workers);
  return result;
}

std::vector<double> default_grid_p_pp() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.999};
}

std::vector<double> default_grid_p_dd() {
  return {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.99};
}

std::string format_number(double value) {
  char buffer[64];
  const auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
  if (ec != std::errc{}) throw ValidationError("number formatting failed");
  return std::string(buffer, ptr);
}

std::string curve_csv(const LossCurve& curve) {
  std::string out(kCurveHeader);
  out += '\n';
  const auto measure = std::string(to_string(curve.measure));
  for (const auto& p : curve.points) {
    out += measure + ',' + format_number(p.threshold) + ',' + format_number(p.total_loss) + ',' +
           format_number(p.normalised_loss) + '\n';
  }
  return out;
}

std::string summary_csv(const std::vector<ScenarioResult>& cells) {
  std::string out(kSummaryHeader);
  out += '\n';
  for (const auto& cell : cells) {
    for (const auto& curve : cell.curves) {
      out += cell.scenario_id + ',' + cell.param_name + ',' + cell.param_value + ',' +
             std::string(to_string(curve.measure)) + ',' + format_number(curve.optimum.threshold) +
             ',' + format_number(curve.optimum.total_loss) + ',' +
             format_number(curve.optimum.normalised_loss) + ',' +
             (curve.degenerate_flat ? "true" : "false") + '\n';
    }
  }
  return out;
}

std::vector<std::filesystem::path> emit_results(const SweepResult& results,
                                                const std::filesystem::path& destination) {
  std::error_code ec;
  std::filesystem::create_directories(destination, ec);
  if (ec) throw IoError(destination.string(), ec.message());

  std::vector<std::filesystem::path> written;
  for (const auto& cell : results.cells) {
    for (const auto& curve : cell.curves) {
      const auto path =
          destination / (cell.scenario_id + "_" + std::string(to_string(curve.measure)) + "_curve.csv");
      write_file(path, curve_csv(curve));
      written.push_back(path);
    }
  }
  const auto summary = destination / (results.name + "_summary.csv");
  write_file(summary, summary_csv(results.cells));
  written.push_back(summary);
  return written;
}

}  // namespace lrod
