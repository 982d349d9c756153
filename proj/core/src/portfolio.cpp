#include "lrod/portfolio.hpp"

#include <cmath>
#include <string>

#include "lrod/error.hpp"

namespace lrod {
namespace {

void check_rate(double annual_effective) {
  require(std::isfinite(annual_effective) && annual_effective >= 0.0 && annual_effective < 1.0,
          "annual effective rate must lie in [0, 1), got " + std::to_string(annual_effective));
}

}  // namespace

double monthly_rate(double annual_effective) {
  check_rate(annual_effective);
  return std::pow(1.0 + annual_effective, 1.0 / 12.0) - 1.0;
}

double discount_factor(double rate_annual_eff, int periods) {
  require(periods >= 0, "discount periods must be non-negative");
  return std::pow(1.0 + monthly_rate(rate_annual_eff), -periods);
}

double principal_for_instalment(double instalment, int term_months, double loan_rate_annual_eff) {
  require(std::isfinite(instalment) && instalment > 0.0, "instalment must be positive");
  require(term_months >= 1, "term must be at least one month");
  const double i_m = monthly_rate(loan_rate_annual_eff);
  if (i_m == 0.0) return instalment * term_months;
  return instalment * (1.0 - std::pow(1.0 + i_m, -term_months)) / i_m;
}

LoanSpec LoanSpec::amortising(int term_months, double instalment, double loan_rate,
                              double riskfree_rate, double max_loan_size) {
  LoanSpec spec;
  spec.term_months = term_months;
  spec.loan_rate_annual_eff = loan_rate;
  spec.riskfree_rate_annual_eff = riskfree_rate;
  spec.instalment = instalment;
  spec.principal = principal_for_instalment(instalment, term_months, loan_rate);
  spec.max_loan_size = max_loan_size;
  return spec;
}

void LoanSpec::validate() const {
  require(term_months >= 1, "term_months must be at least 1");
  require(std::isfinite(instalment) && instalment > 0.0, "instalment must be positive");
  require(std::isfinite(principal) && principal > 0.0, "principal must be positive");
  check_rate(loan_rate_annual_eff);
  check_rate(riskfree_rate_annual_eff);
  require(max_loan_size >= principal, "max_loan_size must be at least the principal");
  const double annuity = principal_for_instalment(instalment, term_months, loan_rate_annual_eff);
  require(std::abs(annuity - principal) <= 1e-9 * principal,
          "principal is not the annuity value of the instalments");
}

Account::Account(std::size_t id, LoanSpec spec, std::vector<double> instalments,
                 std::vector<double> receipts)
    : id_(id), spec_(spec), instalments_(std::move(instalments)), receipts_(std::move(receipts)) {
  spec_.validate();
  require(!receipts_.empty(), "account " + std::to_string(id_) + ": empty receipt vector");
  require(instalments_.size() == receipts_.size(),
          "account " + std::to_string(id_) + ": instalment and receipt lengths differ");
  for (std::size_t t = 0; t < receipts_.size(); ++t) {
    require(std::isfinite(receipts_[t]) && receipts_[t] >= 0.0,
            "account " + std::to_string(id_) + ": negative receipt at t=" + std::to_string(t));
    require(std::isfinite(instalments_[t]) && instalments_[t] >= 0.0,
            "account " + std::to_string(id_) + ": negative instalment at t=" + std::to_string(t));
  }
}

Account build_account(std::size_t id, const LoanSpec& spec, std::vector<double> receipts) {
  const auto length = static_cast<std::size_t>(spec.term_months) + 1;
  require(receipts.size() == length, "account " + std::to_string(id) + ": expected " +
                                         std::to_string(length) + " receipts, got " +
                                         std::to_string(receipts.size()));
  require(receipts.front() == 0.0, "account " + std::to_string(id) + ": receipt at t=0 must be 0");
  std::vector<double> instalments(length, spec.instalment);
  instalments.front() = 0.0;
  return Account(id, spec, std::move(instalments), std::move(receipts));
}

double Portfolio::total_principal() const {
  double total = 0.0;
  for (const auto& account : accounts) total += account.spec().principal;
  return total;
}

void validate_portfolio(const Portfolio& portfolio) {
  require(!portfolio.accounts.empty(), "portfolio must contain at least one account");
}

}  // namespace lrod
