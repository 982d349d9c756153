#include "lrod/delinquency.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lrod/error.hpp"
#include "lrod/parallel.hpp"

namespace lrod {
namespace {

// Smallest expected duration accepted as a divisor before the endpoint.
constexpr double kDurationFloor = 1e-12;

// floor(h / z) with relative slack so that ratios which are integers in exact
// arithmetic are not rounded down by representation error.
double whole_payments(double h, double z) {
  const double q = h / z;
  return std::floor(q + 1e-12 * std::max(1.0, q));
}

struct DurationProfile {
  std::vector<double> expected;  // f_ED(t), t = 0..T-1
  std::vector<double> actual;    // f_AD(t), t = 0..T-1
};

// Weighted time to recover principal from cash flows `flows[t..horizon]`,
// where flow m is `shift + m - t` periods away.
double duration_sum(std::span<const double> flows, std::size_t t, std::size_t horizon,
                    std::size_t shift, std::span<const double> discount, double principal) {
  double sum = 0.0;
  for (std::size_t m = t; m <= horizon; ++m) {
    const std::size_t periods = m - t + shift;
    sum += (flows[m] * discount[periods] / principal) * (static_cast<double>(periods) / kPeriodsPerYear);
  }
  return sum;
}

// Expected and actual durations. Within the contractual term every shortfall
// is compounded to the last instalment slot; past maturity the horizon moves
// with t and the carried balance rolls forward one period at a time.
DurationProfile duration_profile(const Account& account) {
  const auto& spec = account.spec();
  const std::size_t tenure = account.tenure();
  require(tenure >= 1, "account " + std::to_string(account.id()) +
                           ": duration measures need a tenure of at least one period");
  const auto instalments = account.instalments();
  const auto receipts = account.receipts();
  const double principal = spec.principal;
  const double growth = 1.0 + monthly_rate(spec.loan_rate_annual_eff);

  std::vector<double> discount(tenure + 2);
  std::vector<double> accumulate(tenure + 2);
  for (std::size_t j = 0; j < discount.size(); ++j) {
    discount[j] = std::pow(growth, -static_cast<double>(j));
    accumulate[j] = std::pow(growth, static_cast<double>(j));
  }

  const auto term = static_cast<std::size_t>(spec.term_months);
  std::vector<double> adjusted(instalments.begin(), instalments.end());
  DurationProfile out;
  out.expected.reserve(tenure);
  out.actual.reserve(tenure);

  std::size_t horizon = std::min(tenure, term);
  for (std::size_t t = 0; t < tenure; ++t) {
    const bool within_term = tenure <= term || t < term;
    const std::size_t shift = within_term ? 0 : 1;
    if (within_term) {
      horizon = std::min(tenure, term);
      if (t >= 1) {
        adjusted[horizon] += (instalments[t] - receipts[t]) * accumulate[horizon - t];
      }
    } else {
      const double carried = adjusted[horizon];
      horizon = t;
      adjusted[horizon] = (instalments[t] - receipts[t]) + carried * growth;
    }

    const double expected = duration_sum(instalments, t, horizon, shift, discount, principal);
    if (expected < kDurationFloor) {
      throw ValidationError("account " + std::to_string(account.id()) +
                            ": expected duration vanishes at t=" + std::to_string(t) +
                            " (degenerate schedule)");
    }
    out.expected.push_back(expected);
    out.actual.push_back(t == 0 ? expected
                                : duration_sum(adjusted, t, horizon, shift, discount, principal));
  }
  return out;
}

}  // namespace

double repayment_ratio(double receipt, double instalment) {
  require(instalment > 0.0, "repayment ratio needs a positive instalment (degenerate schedule)");
  return receipt / instalment;
}

DelinquencySeries cd_series(const Account& account, const CdParams& params) {
  params.validate();
  const auto instalments = account.instalments();
  const auto receipts = account.receipts();

  DelinquencySeries series{account.id(), MeasureId::G1, {}};
  series.values.assign(account.tenure() + 1, 0.0);
  for (std::size_t t = 1; t <= account.tenure(); ++t) {
    const double h = repayment_ratio(receipts[t], instalments[t]);
    const double prev = series.values[t - 1];
    const double missed = h < params.z ? 1.0 : 0.0;
    const double was_current = prev == 0.0 ? 1.0 : 0.0;
    const double reduction = whole_payments(h, params.z) * (1.0 - missed) - 1.0;
    series.values[t] =
        std::max(0.0, missed * was_current + (1.0 - was_current) * (prev - reduction));
  }
  return series;
}

double expected_duration(const Account& account, std::size_t at) {
  const std::size_t tenure = account.tenure();
  require(at <= tenure, "expected_duration: period beyond tenure");
  const auto instalments = account.instalments();
  const double growth = 1.0 + monthly_rate(account.spec().loan_rate_annual_eff);
  double sum = 0.0;
  for (std::size_t m = at; m <= tenure; ++m) {
    const auto periods = static_cast<double>(m - at);
    sum += (instalments[m] * std::pow(growth, -periods) / account.spec().principal) *
           (periods / kPeriodsPerYear);
  }
  return sum;
}

DelinquencySeries md_series(const Account& account) {
  require(account.tenure() <= static_cast<std::size_t>(account.spec().term_months),
          "account " + std::to_string(account.id()) +
              ": the MD measure is defined only up to the contractual term");
  const auto profile = duration_profile(account);
  DelinquencySeries series{account.id(), MeasureId::G2, {}};
  series.values.resize(profile.expected.size());
  for (std::size_t t = 0; t < series.values.size(); ++t) {
    series.values[t] = profile.actual[t] / profile.expected[t];
  }
  return series;
}

DelinquencySeries dod_series(const Account& account, const DodParams& params) {
  params.validate();
  const auto& spec = account.spec();
  require(params.max_loan_size == spec.max_loan_size,
          "account " + std::to_string(account.id()) +
              ": DoD max_loan_size differs from the loan's max_loan_size");
  const double l_m = params.max_loan_size;
  const double inflation = params.s * (1.0 - (l_m - spec.principal) / l_m);

  const auto profile = duration_profile(account);
  DelinquencySeries series{account.id(), MeasureId::G3, {}};
  series.values.resize(profile.expected.size());
  for (std::size_t t = 0; t < series.values.size(); ++t) {
    const double ratio = profile.actual[t] / profile.expected[t];
    const double delinquent = profile.actual[t] > profile.expected[t] ? 1.0 : 0.0;
    series.values[t] = ratio * (delinquent * inflation + 1.0);
  }
  return series;
}

DelinquencySeries measure_series(const Account& account, MeasureId measure, const CdParams& cd,
                                 const DodParams& dod) {
  switch (measure) {
    case MeasureId::G1: return cd_series(account, cd);
    case MeasureId::G2: return md_series(account);
    case MeasureId::G3: return dod_series(account, dod);
  }
  throw ValidationError("unknown measure");
}

std::vector<DelinquencySeries> portfolio_series(const Portfolio& portfolio, MeasureId measure,
                                                const CdParams& cd, const DodParams& dod,
                                                unsigned workers) {
  std::vector<DelinquencySeries> out(portfolio.size());
  parallel_for(portfolio.size(), workers, [&](std::size_t i) {
    out[i] = measure_series(portfolio.accounts[i], measure, cd, dod);
  });
  return out;
}

}  // namespace lrod
