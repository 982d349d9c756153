#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lrod {

/// The three delinquency measures: contractual delinquency (G1), the
/// Macaulay-duration index (G2) and the degree of delinquency (G3).
enum class MeasureId { G1, G2, G3 };

inline constexpr std::array<MeasureId, 3> kAllMeasures = {MeasureId::G1, MeasureId::G2,
                                                          MeasureId::G3};

std::string_view to_string(MeasureId measure);
/// Accepts "g1"/"G1" etc; throws ValidationError otherwise.
MeasureId parse_measure(std::string_view text);

/// Underpayment tolerance for the CD measure: a period with repayment ratio
/// below z counts as a missed payment.
struct CdParams {
  double z = 0.90;

  void validate() const;
};

/// Sensitivity s of the loan-size inflation in the DoD measure, plus the
/// portfolio's maximum loan size L_M.
struct DodParams {
  double s = 1.0;
  double max_loan_size = 5000.0;

  void validate() const;
};

struct LossRates {
  double r_e = 0.40;  // applied to the expected outstanding balance
  double r_a = 0.70;  // applied to discounted arrears

  void validate() const;
};

/// One-period probability of payment for the random-defaults technique.
struct RandomDefaultsParams {
  double b = 0.80;

  void validate() const;
};

/// Three-state chain {Paying, Delinquent, Write-off}; write-off absorbs.
/// The P->D and D->P rates are implied by the row sums.
struct MarkovParams {
  double p_pp = 0.90;
  double p_dd = 0.50;
  double p_pw = 0.001;
  double p_dw = 0.01;

  double p_pd() const;
  double p_dp() const;
  void validate() const;
};

/// (k,g)-truncation: receipts after the first period with g >= k are zeroed.
struct TruncationRule {
  double k = 0.0;
  MeasureId measure = MeasureId::G1;

  void validate() const;
};

enum class Technique { Random, Markov };

std::string_view to_string(Technique technique);
Technique parse_technique(std::string_view text);

struct GridOptions {
  /// G1 grid runs over 0..ceil(d_n_proportion * max term).
  double d_n_proportion = 0.6;
  /// Quantile resolution of the G2/G3 grids.
  std::size_t n_bins = 100;

  void validate() const;
};

}  // namespace lrod
