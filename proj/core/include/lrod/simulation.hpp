#pragma once

#include <optional>
#include <vector>

#include "lrod/config.hpp"
#include "lrod/portfolio.hpp"
#include "lrod/rng.hpp"

namespace lrod {

/// Receipts R_0..R_tc with R_t = I when u_t < b and 0 otherwise.
std::vector<double> random_receipts(const LoanSpec& spec, const RandomDefaultsParams& params,
                                    const AccountStream& rng);

enum class MarkovState { Paying, Delinquent, WrittenOff };

/// States X_1..X_tc of the three-state chain (index 0 is unused and set to
/// Paying). Every account starts in Paying.
std::vector<MarkovState> markov_path(int term_months, const MarkovParams& params,
                                     const AccountStream& rng);

/// Receipts emitted by markov_path: I in Paying, 0 otherwise.
std::vector<double> markov_receipts(const LoanSpec& spec, const MarkovParams& params,
                                    const AccountStream& rng);

/// Earliest period in the measure's domain with g >= k, if any.
std::optional<std::size_t> truncation_point(const Account& account, const TruncationRule& rule,
                                            const CdParams& cd, const DodParams& dod);

/// Applies (k,g)-truncation: receipts strictly after the truncation point are
/// zeroed. The point is located on the untruncated series.
std::vector<double> truncate_receipts(const Account& account, const TruncationRule& rule,
                                      const CdParams& cd, const DodParams& dod);

LoanSpec scenario_loan_spec(const ScenarioConfig& config);

/// Generates config.n accounts. Output is identical for any worker count.
Portfolio generate_portfolio(const ScenarioConfig& config, unsigned workers = 1);

}  // namespace lrod
