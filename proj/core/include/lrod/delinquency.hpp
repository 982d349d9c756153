#pragma once

#include <cstddef>
#include <vector>

#include "lrod/portfolio.hpp"
#include "lrod/types.hpp"

namespace lrod {

/// g(i, t) for one account and measure. G1 is defined on t = 0..T, G2 and G3
/// on t = 0..T-1 (the expected duration vanishes at T).
struct DelinquencySeries {
  std::size_t account_id = 0;
  MeasureId measure = MeasureId::G1;
  std::vector<double> values;
};

/// Compounding periods per year in the duration measures.
inline constexpr double kPeriodsPerYear = 12.0;

/// receipt / instalment. The instalment must be positive.
double repayment_ratio(double receipt, double instalment);

/// CD measure: the z-weighted number of payments in arrears.
DelinquencySeries cd_series(const Account& account, const CdParams& params);

/// Remaining Macaulay duration (years) of the contractual instalments from
/// period `at`, discounted at the monthly loan rate and scaled by principal.
double expected_duration(const Account& account, std::size_t at);

/// MD measure: actual over expected duration, with every shortfall carried
/// forward to the last instalment slot. Requires T <= t_c.
DelinquencySeries md_series(const Account& account);

/// DoD measure: the MD ratio inflated by s * L_P / L_M whenever the account
/// carries accrued delinquency. Supports post-maturity tenure (T > t_c).
DelinquencySeries dod_series(const Account& account, const DodParams& params);

DelinquencySeries measure_series(const Account& account, MeasureId measure, const CdParams& cd,
                                 const DodParams& dod);

/// Series for every account of a portfolio, in account order.
std::vector<DelinquencySeries> portfolio_series(const Portfolio& portfolio, MeasureId measure,
                                                const CdParams& cd, const DodParams& dod,
                                                unsigned workers = 1);

}  // namespace lrod
