#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrod/delinquency.hpp"
#include "lrod/portfolio.hpp"
#include "lrod/types.hpp"

namespace lrod {

/// Risk-free-discounted receipts up to and including `at`. Diagnostic only;
/// it does not enter the portfolio objective.
double cum_receipts(const Account& account, std::size_t at);

/// Expected outstanding balance O(i, t): remaining instalments discounted to
/// `at` at the loan rate, then to origination at the risk-free rate.
double expected_balance(const Account& account, std::size_t at);

/// Risk-free-discounted cumulative shortfall A(i, t). Negative when
/// overpayments dominate.
double arrears(const Account& account, std::size_t at);

/// l(i, t) = r_E * O(i, t) + r_A * A(i, t).
double blended_loss(const Account& account, std::size_t at, const LossRates& rates);

struct Defaulter {
  std::size_t account_id = 0;
  std::size_t default_time = 0;

  friend bool operator==(const Defaulter&, const Defaulter&) = default;
};

/// Partition of a portfolio under a (g, d) policy.
struct PolicyClassification {
  std::vector<Defaulter> defaulters;
  std::vector<std::size_t> performers;
};

/// Earliest t in [0, min(last series index, t_c)] with g(t) >= d.
std::optional<std::size_t> default_time(const DelinquencySeries& series, int term_months,
                                        double d);

/// `series` must hold one entry per account in account order.
PolicyClassification classify(const Portfolio& portfolio, double d,
                              std::span<const DelinquencySeries> series);

struct PortfolioLoss {
  double total = 0.0;
  /// total divided by the summed principals.
  double normalised = 0.0;
};

/// L_g(d): defaulters assessed at their default time, performers at t_c.
PortfolioLoss portfolio_loss(const Portfolio& portfolio, MeasureId measure, double d,
                             const LossRates& rates, const CdParams& cd = {},
                             const DodParams& dod = {});

PortfolioLoss portfolio_loss(const Portfolio& portfolio, double d, const LossRates& rates,
                             std::span<const DelinquencySeries> series);

/// Precomputed per-account loss tables and running maxima so L_g(d) costs
/// O(N log T) per threshold. Sums run in account order.
class LossEvaluator {
 public:
  LossEvaluator(const Portfolio& portfolio, std::span<const DelinquencySeries> series,
                const LossRates& rates);

  PortfolioLoss evaluate(double d) const;
  double total_principal() const noexcept { return total_principal_; }

 private:
  struct AccountTable {
    std::vector<double> running_max;  // over the classification domain
    std::vector<double> loss;         // l(i, t) for t = 0..t_c
  };
  std::vector<AccountTable> tables_;
  double total_principal_ = 0.0;
};

}  // namespace lrod
