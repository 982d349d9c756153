#pragma once

#include <span>
#include <vector>

#include "lrod/delinquency.hpp"
#include "lrod/lossmodel.hpp"
#include "lrod/types.hpp"

namespace lrod {

/// Candidate recovery thresholds for one measure; strictly increasing.
struct ThresholdGrid {
  MeasureId measure = MeasureId::G1;
  std::vector<double> thresholds;
};

/// G1: the integers 0..ceil(d_n_proportion * max term). G2/G3: 0 plus the
/// empirical quantiles j/n_bins (j = 1..n_bins, nearest rank) of every value
/// in `series`, deduplicated. `series` is ignored for G1.
ThresholdGrid build_threshold_grid(MeasureId measure, const Portfolio& portfolio,
                                   const GridOptions& options,
                                   std::span<const DelinquencySeries> series = {});

struct LossPoint {
  double threshold = 0.0;
  double total_loss = 0.0;
  double normalised_loss = 0.0;
};

/// Normalised-loss tolerance for the flat-curve flag.
inline constexpr double kFlatTolerance = 1e-9;

struct LossCurve {
  MeasureId measure = MeasureId::G1;
  std::vector<LossPoint> points;
  /// Smallest threshold attaining the minimum loss.
  LossPoint optimum;
  /// Set when the curve stays at its minimum over two or more thresholds from
  /// the optimum onwards, i.e. no interior minimum exists.
  bool degenerate_flat = false;

  /// max - min of the normalised losses.
  double flatness() const;
};

/// Locates the optimum and flat flag of already-evaluated points.
LossCurve make_loss_curve(MeasureId measure, std::vector<LossPoint> points);

LossCurve sweep_loss_curve(const Portfolio& portfolio, std::span<const DelinquencySeries> series,
                           const ThresholdGrid& grid, const LossRates& rates,
                           unsigned workers = 1);

/// Convenience overload computing the series itself.
LossCurve sweep_loss_curve(const Portfolio& portfolio, MeasureId measure,
                           const ThresholdGrid& grid, const LossRates& rates,
                           const CdParams& cd = {}, const DodParams& dod = {});

struct MeasureComparison {
  std::vector<LossPoint> optima;  // parallel to the input curves
  std::vector<MeasureId> measures;
  MeasureId best = MeasureId::G1;
};

/// Measure with the least minimum loss; ties resolve in G1 < G2 < G3 order.
MeasureComparison best_measure(std::span<const LossCurve> curves);

}  // namespace lrod
