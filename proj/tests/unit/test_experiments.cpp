#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include "lrod/error.hpp"
#include "lrod/experiments.hpp"

namespace lrod {
namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

fs::path scratch_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("lrod_test_" + name);
  fs::remove_all(dir);
  return dir;
}

ScenarioConfig g1_config(std::size_t n = 2'000) {
  ScenarioConfig config;
  config.n = n;
  config.measures = {MeasureId::G1};
  return config;
}

TEST(Config, DefaultsAreValid) {
  const ScenarioConfig config;
  EXPECT_NO_THROW(config.validate());
  EXPECT_EQ(config.n, 10'000u);
  EXPECT_EQ(config.t_c, 60);
  EXPECT_EQ(config.instalment, 100.0);
  EXPECT_EQ(config.loan_rate, 0.20);
  EXPECT_EQ(config.riskfree_rate, 0.07);
  EXPECT_EQ(config.max_loan_size, 5000.0);
  EXPECT_EQ(config.rates.r_e, 0.40);
  EXPECT_EQ(config.rates.r_a, 0.70);
  EXPECT_EQ(config.random.b, 0.80);
  EXPECT_EQ(config.markov.p_pw, 0.001);
  EXPECT_EQ(config.markov.p_dw, 0.01);
  EXPECT_EQ(config.cd.z, 0.90);
  EXPECT_EQ(config.dod.s, 1.0);
  EXPECT_EQ(config.grid.d_n_proportion, 0.6);
  EXPECT_EQ(config.grid.n_bins, 100u);
  EXPECT_FALSE(config.truncation.has_value());
}

TEST(Config, ParsesKeysCommentsAndTruncation) {
  const auto config = parse_config(R"(
# scenario
n = 500
technique = markov
markov.p_pp = 0.7   # trailing comment
markov.p_dd = 0.4
truncation.k = 6
truncation.measure = g3
measures = g1, g3
master_seed = 12345
max_loan_size = 6000
)");
  EXPECT_EQ(config.n, 500u);
  EXPECT_EQ(config.technique, Technique::Markov);
  EXPECT_EQ(config.markov.p_pp, 0.7);
  ASSERT_TRUE(config.truncation.has_value());
  EXPECT_EQ(config.truncation->k, 6.0);
  EXPECT_EQ(config.truncation->measure, MeasureId::G3);
  EXPECT_EQ(config.measures, (std::vector<MeasureId>{MeasureId::G1, MeasureId::G3}));
  EXPECT_EQ(config.master_seed, 12345u);
  EXPECT_EQ(config.dod.max_loan_size, 6000.0);
  EXPECT_NO_THROW(config.validate());
}

TEST(Config, RejectsUnknownDuplicateAndMalformed) {
  EXPECT_THROW(parse_config("sample_size = 3"), ValidationError);
  EXPECT_THROW(parse_config("n = 3\nn = 4"), ValidationError);
  EXPECT_THROW(parse_config("n = -3"), ValidationError);
  EXPECT_THROW(parse_config("random.b = high"), ValidationError);
  EXPECT_THROW(parse_config("just words"), ValidationError);
  EXPECT_THROW(parse_config("measures = g4"), ValidationError);
  EXPECT_THROW(parse_config("random.b = 1.5").validate(), ValidationError);
  EXPECT_THROW(parse_config("max_loan_size = 1000").validate(), ValidationError);
  EXPECT_THROW(parse_config("markov.p_pp = 0.9995").validate(), ValidationError);
}

TEST(Config, FormatRoundTrips) {
  ScenarioConfig config;
  config.n = 321;
  config.rates.r_a = 0.62;
  config.truncation = TruncationRule{4, MeasureId::G2};
  config.measures = {MeasureId::G2};
  config.master_seed = 0xFFFF'FFFF'FFFF'FFFFULL;
  const auto parsed = parse_config(format_config(config));
  EXPECT_EQ(format_config(parsed), format_config(config));
  EXPECT_FALSE(parse_config(format_config(ScenarioConfig{})).truncation.has_value());
}

TEST(Config, MissingFileIsIoError) {
  EXPECT_THROW(load_config("/nonexistent/lrod.cfg"), IoError);
}

TEST(RunScenario, CertainPaymentHasNoLossAboveZero) {
  auto config = g1_config();
  config.random.b = 1.0;
  const auto result = run_scenario(config);
  const auto& curve = result.curve(MeasureId::G1);
  for (std::size_t i = 1; i < curve.points.size(); ++i) EXPECT_EQ(curve.points[i].total_loss, 0.0);
  EXPECT_TRUE(curve.degenerate_flat);
  EXPECT_THROW(result.curve(MeasureId::G2), ValidationError);
}

TEST(RunScenario, AllMeasuresAndComparison) {
  ScenarioConfig config;
  config.n = 1'000;
  config.truncation = TruncationRule{4, MeasureId::G1};
  const auto result = run_scenario(config, 2);
  ASSERT_EQ(result.curves.size(), 3u);
  double best = result.curves[0].optimum.total_loss;
  for (const auto& curve : result.curves) best = std::min(best, curve.optimum.total_loss);
  EXPECT_EQ(result.curve(result.comparison.best).optimum.total_loss, best);
}

TEST(RunScenario, DodTruncationOptimumNearK) {
  ScenarioConfig config;
  config.truncation = TruncationRule{6, MeasureId::G3};
  config.measures = {MeasureId::G3};
  const auto& curve = run_scenario(config).curve(MeasureId::G3);
  EXPECT_NEAR(curve.optimum.threshold, 6.0, 1.0);
}

TEST(Sweeps, SingleValueGivesSingleRow) {
  const auto result = run_truncation_sweep(g1_config(), {3.0});
  ASSERT_EQ(result.cells.size(), 1u);
  EXPECT_EQ(result.name, "sweep_k");
  EXPECT_EQ(result.cells[0].param_value, "3");
}

TEST(Sweeps, ZeroRatesGiveZeroCurve) {
  auto base = g1_config();
  base.truncation = TruncationRule{6, MeasureId::G1};
  base.rates.r_e = 0.0;
  const auto result = run_loss_rate_sweep(base, {0.0});
  for (const auto& p : result.cells[0].curves[0].points) EXPECT_EQ(p.total_loss, 0.0);
}

TEST(Sweeps, FlatnessGrowsFromLowToHighArrearsRate) {
  auto base = g1_config(10'000);
  base.truncation = TruncationRule{6, MeasureId::G1};
  const auto result = run_loss_rate_sweep(base, {0.2, 1.0});
  EXPECT_LT(result.cells[0].curves[0].flatness(), result.cells[1].curves[0].flatness());
}

TEST(Sweeps, RowsReproduceUnderIndependentReruns) {
  auto base = g1_config(1'500);
  base.truncation = TruncationRule{6, MeasureId::G1};
  const std::vector<double> bs{0.3, 0.5, 0.65, 0.8, 0.9, 0.95};
  const auto sweep = run_payment_prob_sweep(base, bs, 3);
  std::mt19937 gen(5);
  std::uniform_int_distribution<std::size_t> pick(0, bs.size() - 1);
  for (int i = 0; i < 3; ++i) {
    const std::size_t cell = pick(gen);
    const auto rerun = run_scenario(sweep_cell_config({SweepParam::B, bs, base}, cell));
    EXPECT_EQ(rerun.curves[0].optimum.threshold, sweep.cells[cell].curves[0].optimum.threshold);
    EXPECT_EQ(rerun.curves[0].optimum.total_loss, sweep.cells[cell].curves[0].optimum.total_loss);
  }
}

TEST(MarkovGrid, SkipsInvalidCellsWithDiagnostics) {
  auto base = g1_config(100);
  const auto result = run_markov_grid(base, {0.5, 0.9995}, {0.5, 0.995});
  EXPECT_EQ(result.cells.size(), 1u);
  EXPECT_EQ(result.skipped.size(), 3u);
  EXPECT_EQ(result.cells[0].param_value, "0.5/0.5");
  EXPECT_EQ(result.cells[0].config.technique, Technique::Markov);
}

TEST(MarkovGrid, NineByNineGivesEightyOneRows) {
  const std::vector<double> values{0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
  const auto result = run_markov_grid(g1_config(100), values, values, 2);
  EXPECT_EQ(result.cells.size(), 81u);
  const auto csv = summary_csv(result.cells);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 82);
}

TEST(EmitResults, SingleScenarioWritesCurveAndSummary) {
  const auto dir = scratch_dir("single");
  const SweepResult result{"run", {run_scenario(g1_config(300))}, {}};
  const auto paths = emit_results(result, dir);
  ASSERT_EQ(paths.size(), 2u);
  EXPECT_EQ(std::distance(fs::directory_iterator(dir), fs::directory_iterator{}), 2);
  EXPECT_EQ(paths[0].filename(), "run_g1_curve.csv");
  EXPECT_EQ(paths[1].filename(), "run_summary.csv");

  const auto curve = read_file(paths[0]);
  EXPECT_EQ(curve.substr(0, curve.find('\n')), kCurveHeader);
  const auto summary = read_file(paths[1]);
  EXPECT_EQ(summary.substr(0, summary.find('\n')), kSummaryHeader);
}

TEST(EmitResults, SummaryMinimaMatchCurveFiles) {
  const auto dir = scratch_dir("minima");
  auto base = g1_config(800);
  base.measures = {MeasureId::G1, MeasureId::G2};
  const auto sweep = run_truncation_sweep(base, {2, 5});
  const auto paths = emit_results(sweep, dir);
  const auto summary = read_file(dir / "sweep_k_summary.csv");

  std::istringstream rows(summary);
  std::string row;
  std::getline(rows, row);
  int checked = 0;
  while (std::getline(rows, row)) {
    std::vector<std::string> cols;
    std::istringstream fields(row);
    for (std::string f; std::getline(fields, f, ',');) cols.push_back(f);
    ASSERT_EQ(cols.size(), 8u);
    std::istringstream curve(read_file(dir / (cols[0] + "_" + cols[3] + "_curve.csv")));
    std::string line;
    std::getline(curve, line);
    double min_loss = 1e300;
    std::string min_text;
    while (std::getline(curve, line)) {
      const auto last = line.rfind(',');
      const auto prev = line.rfind(',', last - 1);
      const double loss = std::stod(line.substr(prev + 1, last - prev - 1));
      if (loss < min_loss) {
        min_loss = loss;
        min_text = line.substr(prev + 1, last - prev - 1);
      }
    }
    EXPECT_EQ(cols[5], min_text);
    ++checked;
  }
  EXPECT_EQ(checked, 4);
}

TEST(EmitResults, RerunIsByteIdentical) {
  const auto a = scratch_dir("rerun_a");
  const auto b = scratch_dir("rerun_b");
  auto config = g1_config(500);
  config.measures = {MeasureId::G1, MeasureId::G3};
  const auto pa = emit_results({"run", {run_scenario(config, 1)}, {}}, a);
  const auto pb = emit_results({"run", {run_scenario(config, 4)}, {}}, b);
  ASSERT_EQ(pa.size(), pb.size());
  for (std::size_t i = 0; i < pa.size(); ++i) EXPECT_EQ(read_file(pa[i]), read_file(pb[i]));
}

TEST(EmitResults, UnwritableDestinationIsIoError) {
  const auto dir = scratch_dir("blocked");
  fs::create_directories(dir);
  std::ofstream(dir / "file") << "x";
  try {
    emit_results({"run", {run_scenario(g1_config(10))}, {}}, dir / "file" / "sub");
    FAIL() << "expected IoError";
  } catch (const IoError& e) {
    EXPECT_NE(std::string(e.what()).find("file"), std::string::npos);
  }
}

TEST(FormatNumber, ShortestRoundTrip) {
  EXPECT_EQ(format_number(4.0), "4");
  EXPECT_EQ(format_number(0.1), "0.1");
  EXPECT_EQ(std::stod(format_number(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace lrod
