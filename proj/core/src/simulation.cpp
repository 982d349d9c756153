#include "lrod/simulation.hpp"

#include <string>

#include "lrod/delinquency.hpp"
#include "lrod/error.hpp"
#include "lrod/parallel.hpp"

namespace lrod {

std::vector<double> random_receipts(const LoanSpec& spec, const RandomDefaultsParams& params,
                                    const AccountStream& rng) {
  params.validate();
  std::vector<double> receipts(static_cast<std::size_t>(spec.term_months) + 1, 0.0);
  for (std::size_t t = 1; t < receipts.size(); ++t) {
    if (rng.uniform(t) < params.b) receipts[t] = spec.instalment;
  }
  return receipts;
}

std::vector<MarkovState> markov_path(int term_months, const MarkovParams& params,
                                     const AccountStream& rng) {
  params.validate();
  require(term_months >= 1, "term_months must be at least 1");
  std::vector<MarkovState> path(static_cast<std::size_t>(term_months) + 1, MarkovState::Paying);
  const double p_pd = params.p_pd();
  const double p_dp = params.p_dp();
  for (std::size_t t = 2; t < path.size(); ++t) {
    const double u = rng.uniform(t);
    switch (path[t - 1]) {
      case MarkovState::Paying:
        path[t] = u < params.p_pp          ? MarkovState::Paying
                  : u < params.p_pp + p_pd ? MarkovState::Delinquent
                                           : MarkovState::WrittenOff;
        break;
      case MarkovState::Delinquent:
        path[t] = u < p_dp                 ? MarkovState::Paying
                  : u < p_dp + params.p_dd ? MarkovState::Delinquent
                                           : MarkovState::WrittenOff;
        break;
      case MarkovState::WrittenOff:
        path[t] = MarkovState::WrittenOff;
        break;
    }
  }
  return path;
}

std::vector<double> markov_receipts(const LoanSpec& spec, const MarkovParams& params,
                                    const AccountStream& rng) {
  const auto path = markov_path(spec.term_months, params, rng);
  std::vector<double> receipts(path.size(), 0.0);
  for (std::size_t t = 1; t < path.size(); ++t) {
    if (path[t] == MarkovState::Paying) receipts[t] = spec.instalment;
  }
  return receipts;
}

std::optional<std::size_t> truncation_point(const Account& account, const TruncationRule& rule,
                                            const CdParams& cd, const DodParams& dod) {
  rule.validate();
  const auto series = measure_series(account, rule.measure, cd, dod);
  for (std::size_t j = 0; j < series.values.size(); ++j) {
    if (series.values[j] >= rule.k) return j;
  }
  return std::nullopt;
}

std::vector<double> truncate_receipts(const Account& account, const TruncationRule& rule,
                                      const CdParams& cd, const DodParams& dod) {
  std::vector<double> receipts(account.receipts().begin(), account.receipts().end());
  if (const auto point = truncation_point(account, rule, cd, dod)) {
    std::fill(receipts.begin() + static_cast<std::ptrdiff_t>(*point) + 1, receipts.end(), 0.0);
  }
  return receipts;
}

LoanSpec scenario_loan_spec(const ScenarioConfig& config) {
  auto spec = LoanSpec::amortising(config.t_c, config.instalment, config.loan_rate,
                                   config.riskfree_rate, config.max_loan_size);
  spec.validate();
  return spec;
}

Portfolio generate_portfolio(const ScenarioConfig& config, unsigned workers) {
  config.validate();
  const LoanSpec spec = scenario_loan_spec(config);

  std::vector<std::optional<Account>> slots(config.n);
  parallel_for(config.n, workers, [&](std::size_t i) {
    const AccountStream rng(config.master_seed, i);
    auto receipts = config.technique == Technique::Random
                        ? random_receipts(spec, config.random, rng)
                        : markov_receipts(spec, config.markov, rng);
    Account account = build_account(i, spec, std::move(receipts));
    if (config.truncation) {
      account = build_account(i, spec,
                              truncate_receipts(account, *config.truncation, config.cd, config.dod));
    }
    slots[i].emplace(std::move(account));
  });

  Portfolio portfolio;
  portfolio.provenance = config;
  portfolio.accounts.reserve(config.n);
  for (auto& slot : slots) portfolio.accounts.push_back(std::move(*slot));
  return portfolio;
}

}  // namespace lrod
