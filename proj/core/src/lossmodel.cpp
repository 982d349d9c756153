#include "lrod/lossmodel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "lrod/error.hpp"

namespace lrod {
namespace {

std::size_t term_of(const Account& account) {
  return static_cast<std::size_t>(account.spec().term_months);
}

void require_assessable(const Account& account) {
  require(account.tenure() >= term_of(account),
          "account " + std::to_string(account.id()) +
              ": loss assessment needs the account observed to its contractual term");
}

}  // namespace

double cum_receipts(const Account& account, std::size_t at) {
  require(at <= account.tenure(), "cum_receipts: period beyond tenure");
  const double riskfree = account.spec().riskfree_rate_annual_eff;
  const auto receipts = account.receipts();
  double sum = 0.0;
  for (std::size_t l = 0; l <= at; ++l) {
    sum += receipts[l] * discount_factor(riskfree, static_cast<int>(l));
  }
  return sum;
}

double expected_balance(const Account& account, std::size_t at) {
  const auto& spec = account.spec();
  const std::size_t term = term_of(account);
  require(at <= term, "expected_balance: period beyond the contractual term");
  require_assessable(account);
  const auto instalments = account.instalments();
  double remaining = 0.0;
  for (std::size_t l = at + 1; l <= term; ++l) {
    remaining += instalments[l] * discount_factor(spec.loan_rate_annual_eff, static_cast<int>(l - at));
  }
  return discount_factor(spec.riskfree_rate_annual_eff, static_cast<int>(at)) * remaining;
}

double arrears(const Account& account, std::size_t at) {
  require(at <= account.tenure(), "arrears: period beyond tenure");
  const double riskfree = account.spec().riskfree_rate_annual_eff;
  const auto instalments = account.instalments();
  const auto receipts = account.receipts();
  double sum = 0.0;
  for (std::size_t l = 0; l <= at; ++l) {
    sum += (instalments[l] - receipts[l]) * discount_factor(riskfree, static_cast<int>(l));
  }
  return sum;
}

double blended_loss(const Account& account, std::size_t at, const LossRates& rates) {
  return expected_balance(account, at) * rates.r_e + arrears(account, at) * rates.r_a;
}

std::optional<std::size_t> default_time(const DelinquencySeries& series, int term_months,
                                        double d) {
  if (series.values.empty()) return std::nullopt;
  const std::size_t last = std::min(series.values.size() - 1, static_cast<std::size_t>(term_months));
  for (std::size_t t = 0; t <= last; ++t) {
    if (series.values[t] >= d) return t;
  }
  return std::nullopt;
}

PolicyClassification classify(const Portfolio& portfolio, double d,
                              std::span<const DelinquencySeries> series) {
  require(series.size() == portfolio.size(), "classify: one series per account required");
  PolicyClassification out;
  for (std::size_t i = 0; i < portfolio.size(); ++i) {
    const auto& account = portfolio.accounts[i];
    require(series[i].account_id == account.id(), "classify: series out of account order");
    if (const auto t = default_time(series[i], account.spec().term_months, d)) {
      out.defaulters.push_back({account.id(), *t});
    } else {
      out.performers.push_back(account.id());
    }
  }
  return out;
}

PortfolioLoss portfolio_loss(const Portfolio& portfolio, double d, const LossRates& rates,
                             std::span<const DelinquencySeries> series) {
  validate_portfolio(portfolio);
  rates.validate();
  require(series.size() == portfolio.size(), "portfolio_loss: one series per account required");
  PortfolioLoss out;
  for (std::size_t i = 0; i < portfolio.size(); ++i) {
    const auto& account = portfolio.accounts[i];
    const auto t = default_time(series[i], account.spec().term_months, d);
    out.total += blended_loss(account, t.value_or(term_of(account)), rates);
  }
  out.normalised = out.total / portfolio.total_principal();
  return out;
}

PortfolioLoss portfolio_loss(const Portfolio& portfolio, MeasureId measure, double d,
                             const LossRates& rates, const CdParams& cd, const DodParams& dod) {
  const auto series = portfolio_series(portfolio, measure, cd, dod);
  return portfolio_loss(portfolio, d, rates, series);
}

LossEvaluator::LossEvaluator(const Portfolio& portfolio,
                             std::span<const DelinquencySeries> series, const LossRates& rates) {
  validate_portfolio(portfolio);
  rates.validate();
  require(series.size() == portfolio.size(), "LossEvaluator: one series per account required");
  tables_.reserve(portfolio.size());
  for (std::size_t i = 0; i < portfolio.size(); ++i) {
    const auto& account = portfolio.accounts[i];
    require_assessable(account);
    const auto& spec = account.spec();
    const std::size_t term = term_of(account);
    const auto instalments = account.instalments();
    const auto receipts = account.receipts();
    const double loan_v = discount_factor(spec.loan_rate_annual_eff, 1);

    AccountTable table;
    // O(i, t) = v_a^t * S(t) with S(t) = v_b * (I_{t+1} + S(t+1)), S(t_c) = 0.
    std::vector<double> remaining(term + 1, 0.0);
    for (std::size_t t = term; t-- > 0;) {
      remaining[t] = loan_v * (instalments[t + 1] + remaining[t + 1]);
    }
    table.loss.resize(term + 1);
    double shortfall = 0.0;
    for (std::size_t t = 0; t <= term; ++t) {
      const double riskfree_v = discount_factor(spec.riskfree_rate_annual_eff, static_cast<int>(t));
      shortfall += (instalments[t] - receipts[t]) * riskfree_v;
      table.loss[t] = riskfree_v * remaining[t] * rates.r_e + shortfall * rates.r_a;
    }

    const auto& values = series[i].values;
    const std::size_t domain = values.empty() ? 0 : std::min(values.size() - 1, term) + 1;
    table.running_max.resize(domain);
    for (std::size_t t = 0; t < domain; ++t) {
      table.running_max[t] = t == 0 ? values[0] : std::max(table.running_max[t - 1], values[t]);
    }
    total_principal_ += spec.principal;
    tables_.push_back(std::move(table));
  }
}

PortfolioLoss LossEvaluator::evaluate(double d) const {
  PortfolioLoss out;
  for (const auto& table : tables_) {
    const auto hit = std::lower_bound(table.running_max.begin(), table.running_max.end(), d);
    const std::size_t t = hit == table.running_max.end()
                              ? table.loss.size() - 1
                              : static_cast<std::size_t>(hit - table.running_max.begin());
    out.total += table.loss[t];
  }
  out.normalised = out.total / total_principal_;
  return out;
}

}  // namespace lrod
