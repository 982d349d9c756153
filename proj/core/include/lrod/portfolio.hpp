#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "lrod/config.hpp"

namespace lrod {

/// Converts an annual effective rate in [0, 1) to the monthly effective rate.
double monthly_rate(double annual_effective);

/// (1 + monthly_rate(rate))^-periods.
double discount_factor(double rate_annual_eff, int periods);

/// Present value of `term_months` level instalments at the monthly loan rate.
double principal_for_instalment(double instalment, int term_months, double loan_rate_annual_eff);

/// Terms of one level-instalment amortising loan.
struct LoanSpec {
  int term_months = 0;
  double loan_rate_annual_eff = 0.0;
  double riskfree_rate_annual_eff = 0.0;
  double instalment = 0.0;
  double principal = 0.0;
  double max_loan_size = 0.0;

  /// Builds a spec whose principal is the annuity value of the instalments.
  static LoanSpec amortising(int term_months, double instalment, double loan_rate,
                             double riskfree_rate, double max_loan_size);

  /// Checks the ranges and the annuity identity (relative 1e-9).
  void validate() const;
};

/// One loan: instalments I_0..I_T and receipts R_0..R_T.
class Account {
 public:
  Account(std::size_t id, LoanSpec spec, std::vector<double> instalments,
          std::vector<double> receipts);

  std::size_t id() const noexcept { return id_; }
  const LoanSpec& spec() const noexcept { return spec_; }
  std::span<const double> instalments() const noexcept { return instalments_; }
  std::span<const double> receipts() const noexcept { return receipts_; }
  /// Tenure T; the vectors have T + 1 elements.
  std::size_t tenure() const noexcept { return receipts_.size() - 1; }

 private:
  std::size_t id_;
  LoanSpec spec_;
  std::vector<double> instalments_;
  std::vector<double> receipts_;
};

/// Account over the contractual term with instalments [0, I, ..., I].
Account build_account(std::size_t id, const LoanSpec& spec, std::vector<double> receipts);

struct Portfolio {
  std::vector<Account> accounts;
  ScenarioConfig provenance{};

  std::size_t size() const noexcept { return accounts.size(); }
  double total_principal() const;
};

/// Throws ValidationError when the portfolio is empty.
void validate_portfolio(const Portfolio& portfolio);

}  // namespace lrod
