#pragma once

// Test-only reference evaluations. These deliberately avoid the library's
// code paths: discounting goes straight from the annual rate, duration sums
// rebuild the modified instalment vector from scratch at every t, and the
// portfolio loss walks every account and period without precomputation.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <optional>
#include <random>
#include <vector>

namespace lrod::oracle {

/// (1 + annual)^(-months / 12), evaluated directly.
inline double discount(double annual, double months) {
  return std::pow(1.0 + annual, -months / 12.0);
}

/// Count of zero receipts among R_1..R_t (binary payment streams).
inline std::vector<double> missed_payment_counter(const std::vector<double>& receipts) {
  std::vector<double> out(receipts.size(), 0.0);
  for (std::size_t t = 1; t < receipts.size(); ++t) {
    out[t] = out[t - 1] + (receipts[t] == 0.0 ? 1.0 : 0.0);
  }
  return out;
}

/// Arrears count for receipts that are whole multiples h of the instalment
/// (h <= 8, so floor(h / 0.9) = h): each period adds one payment due and
/// h payments made, and overpayment credit is never banked.
inline std::vector<double> whole_instalment_counter(const std::vector<int>& multiples) {
  std::vector<double> out(multiples.size(), 0.0);
  for (std::size_t t = 1; t < multiples.size(); ++t) {
    out[t] = std::max(0.0, out[t - 1] + 1.0 - multiples[t]);
  }
  return out;
}

/// Literal evaluation of the CD recursion, first (unsimplified) form of m(t).
inline std::vector<double> cd_literal(const std::vector<double>& receipts,
                                      const std::vector<double>& instalments, double z) {
  std::vector<double> g(receipts.size(), 0.0);
  for (std::size_t t = 1; t < receipts.size(); ++t) {
    const double h = receipts[t] / instalments[t];
    const int d1 = h < z ? 1 : 0;
    const int d2 = g[t - 1] == 0.0 ? 1 : 0;
    const long whole = static_cast<long>(std::floor(h / z + 1e-12));
    const double m = static_cast<double>((whole - 1) * (1 - d1) - d1);
    g[t] = std::max(0.0, d1 * d2 + (1 - d2) * (g[t - 1] - m));
  }
  return g;
}

struct Loan {
  std::vector<double> instalments;
  std::vector<double> receipts;
  int term = 0;
  double loan_rate = 0.0;
  double riskfree_rate = 0.0;
  double principal = 0.0;
  double max_loan_size = 0.0;
};

/// Expected and actual durations at t (T <= term), rebuilding I' from the
/// full shortfall history each time.
struct Durations {
  double expected = 0.0;
  double actual = 0.0;
};

inline Durations durations(const Loan& loan, std::size_t t) {
  const std::size_t T = loan.receipts.size() - 1;
  std::vector<double> modified = loan.instalments;
  for (std::size_t s = 1; s <= t; ++s) {
    const double shortfall = loan.instalments[s] - loan.receipts[s];
    modified[T] += shortfall * std::pow(1.0 + loan.loan_rate, static_cast<double>(T - s) / 12.0);
  }
  Durations out;
  for (std::size_t m = t; m <= T; ++m) {
    const double years = static_cast<double>(m - t) / 12.0;
    const double v = discount(loan.loan_rate, static_cast<double>(m - t));
    out.expected += loan.instalments[m] * v / loan.principal * years;
    out.actual += modified[m] * v / loan.principal * years;
  }
  if (t == 0) out.actual = out.expected;
  return out;
}

inline std::vector<double> md_bruteforce(const Loan& loan) {
  std::vector<double> out;
  for (std::size_t t = 0; t + 1 < loan.receipts.size(); ++t) {
    const auto d = durations(loan, t);
    out.push_back(d.actual / d.expected);
  }
  return out;
}

inline std::vector<double> dod_bruteforce(const Loan& loan, double s) {
  const double lambda = s * loan.principal / loan.max_loan_size;
  std::vector<double> out;
  for (std::size_t t = 0; t + 1 < loan.receipts.size(); ++t) {
    const auto d = durations(loan, t);
    out.push_back(d.actual / d.expected * (d.actual > d.expected ? 1.0 + lambda : 1.0));
  }
  return out;
}

/// Direct l(i, t) from the balance and arrears definitions.
inline double blended_loss(const Loan& loan, std::size_t t, double r_e, double r_a) {
  double balance = 0.0;
  for (std::size_t l = t + 1; l <= static_cast<std::size_t>(loan.term); ++l) {
    balance += loan.instalments[l] * discount(loan.loan_rate, static_cast<double>(l - t));
  }
  balance *= discount(loan.riskfree_rate, static_cast<double>(t));
  double shortfall = 0.0;
  for (std::size_t l = 0; l <= t; ++l) {
    shortfall += (loan.instalments[l] - loan.receipts[l]) * discount(loan.riskfree_rate, static_cast<double>(l));
  }
  return r_e * balance + r_a * shortfall;
}

/// Total portfolio loss: scan each series for the first period (up to the
/// term) where it reaches d; otherwise assess at the term.
inline double portfolio_loss(const std::vector<Loan>& loans,
                             const std::vector<std::vector<double>>& series, double d, double r_e,
                             double r_a) {
  double total = 0.0;
  for (std::size_t i = 0; i < loans.size(); ++i) {
    std::optional<std::size_t> hit;
    for (std::size_t t = 0; t < series[i].size() && t <= static_cast<std::size_t>(loans[i].term); ++t) {
      if (series[i][t] >= d) {
        hit = t;
        break;
      }
    }
    total += blended_loss(loans[i], hit.value_or(static_cast<std::size_t>(loans[i].term)), r_e, r_a);
  }
  return total;
}

/// Annuity principal as an explicit sum of discounted instalments.
inline double annuity_sum(double instalment, int term, double annual) {
  double sum = 0.0;
  for (int l = 1; l <= term; ++l) sum += instalment * discount(annual, l);
  return sum;
}

}  // namespace lrod::oracle
