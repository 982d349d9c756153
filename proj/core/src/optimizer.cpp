#include "lrod/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "lrod/error.hpp"
#include "lrod/parallel.hpp"

namespace lrod {

ThresholdGrid build_threshold_grid(MeasureId measure, const Portfolio& portfolio,
                                   const GridOptions& options,
                                   std::span<const DelinquencySeries> series) {
  validate_portfolio(portfolio);
  options.validate();
  ThresholdGrid grid{measure, {}};

  if (measure == MeasureId::G1) {
    int max_term = 0;
    for (const auto& account : portfolio.accounts) {
      max_term = std::max(max_term, account.spec().term_months);
    }
    // The slack keeps 0.6 * 60 at 36 despite representation error.
    const auto last = static_cast<long>(std::ceil(options.d_n_proportion * max_term - 1e-9));
    for (long d = 0; d <= last; ++d) grid.thresholds.push_back(static_cast<double>(d));
    return grid;
  }

  require(series.size() == portfolio.size(),
          "build_threshold_grid: G2/G3 grids need one series per account");
  std::vector<double> pool;
  for (const auto& s : series) pool.insert(pool.end(), s.values.begin(), s.values.end());
  std::sort(pool.begin(), pool.end());

  grid.thresholds.push_back(0.0);
  if (!pool.empty()) {
    const auto count = static_cast<double>(pool.size());
    for (std::size_t j = 1; j <= options.n_bins; ++j) {
      const double q = static_cast<double>(j) / static_cast<double>(options.n_bins);
      const auto rank = static_cast<std::size_t>(std::max(1.0, std::ceil(q * count)));
      grid.thresholds.push_back(pool[std::min(rank, pool.size()) - 1]);
    }
  }
  std::sort(grid.thresholds.begin(), grid.thresholds.end());
  grid.thresholds.erase(std::unique(grid.thresholds.begin(), grid.thresholds.end()),
                        grid.thresholds.end());
  return grid;
}

double LossCurve::flatness() const {
  if (points.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(
      points.begin(), points.end(),
      [](const LossPoint& a, const LossPoint& b) { return a.normalised_loss < b.normalised_loss; });
  return hi->normalised_loss - lo->normalised_loss;
}

LossCurve make_loss_curve(MeasureId measure, std::vector<LossPoint> points) {
  require(!points.empty(), "loss curve needs at least one threshold");
  LossCurve curve{measure, std::move(points), {}, false};
  std::size_t best = 0;
  for (std::size_t i = 1; i < curve.points.size(); ++i) {
    if (curve.points[i].total_loss < curve.points[best].total_loss) best = i;
  }
  curve.optimum = curve.points[best];

  const double floor = curve.optimum.normalised_loss;
  const bool flat_tail = std::all_of(curve.points.begin() + static_cast<std::ptrdiff_t>(best),
                                     curve.points.end(), [&](const LossPoint& p) {
                                       return p.normalised_loss - floor <= kFlatTolerance;
                                     });
  curve.degenerate_flat = flat_tail && curve.points.size() - best >= 2;
  return curve;
}

LossCurve sweep_loss_curve(const Portfolio& portfolio, std::span<const DelinquencySeries> series,
                           const ThresholdGrid& grid, const LossRates& rates, unsigned workers) {
  require(!grid.thresholds.empty(), "threshold grid is empty");
  require(std::is_sorted(grid.thresholds.begin(), grid.thresholds.end()) &&
              std::adjacent_find(grid.thresholds.begin(), grid.thresholds.end()) ==
                  grid.thresholds.end(),
          "threshold grid must be strictly increasing");
  const LossEvaluator evaluator(portfolio, series, rates);
  std::vector<LossPoint> points(grid.thresholds.size());
  parallel_for(points.size(), workers, [&](std::size_t i) {
    const double d = grid.thresholds[i];
    const auto loss = evaluator.evaluate(d);
    points[i] = {d, loss.total, loss.normalised};
  });
  return make_loss_curve(grid.measure, std::move(points));
}

LossCurve sweep_loss_curve(const Portfolio& portfolio, MeasureId measure,
                           const ThresholdGrid& grid, const LossRates& rates, const CdParams& cd,
                           const DodParams& dod) {
  require(grid.measure == measure, "threshold grid belongs to a different measure");
  const auto series = portfolio_series(portfolio, measure, cd, dod);
  return sweep_loss_curve(portfolio, series, grid, rates);
}

MeasureComparison best_measure(std::span<const LossCurve> curves) {
  require(!curves.empty(), "best_measure needs at least one loss curve");
  MeasureComparison out;
  std::size_t best = 0;
  for (std::size_t i = 0; i < curves.size(); ++i) {
    out.optima.push_back(curves[i].optimum);
    out.measures.push_back(curves[i].measure);
    const double loss = curves[i].optimum.total_loss;
    const double best_loss = curves[best].optimum.total_loss;
    if (loss < best_loss || (loss == best_loss && curves[i].measure < curves[best].measure)) {
      best = i;
    }
  }
  out.best = curves[best].measure;
  return out;
}

}  // namespace lrod
