#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lrod/types.hpp"

namespace lrod {

/// Full parameter set of one simulated scenario. Defaults reproduce the
/// reference testbed: 10,000 five-year loans with a 100 instalment at 20%,
/// discounted at a 7% risk-free rate, defaulting at random with b = 0.8.
struct ScenarioConfig {
  std::size_t n = 10'000;
  int t_c = 60;
  double instalment = 100.0;
  double loan_rate = 0.20;
  double riskfree_rate = 0.07;
  double max_loan_size = 5000.0;
  LossRates rates{};
  Technique technique = Technique::Random;
  RandomDefaultsParams random{};
  MarkovParams markov{};
  std::optional<TruncationRule> truncation{};
  CdParams cd{};
  DodParams dod{};
  std::vector<MeasureId> measures{MeasureId::G1, MeasureId::G2, MeasureId::G3};
  GridOptions grid{};
  std::uint64_t master_seed = 20'200'101;

  /// Checks every component; DodParams::max_loan_size must equal max_loan_size.
  void validate() const;
};

/// Parses the `key = value` config format. Blank lines and `#` comments are
/// ignored; keys are the snake_case field names listed in README.md. Unknown
/// keys, duplicate keys and malformed values raise ValidationError.
ScenarioConfig parse_config(std::string_view text, ScenarioConfig base = {});

/// Reads and parses a config file. Unreadable files raise IoError.
ScenarioConfig load_config(const std::filesystem::path& path, ScenarioConfig base = {});

/// Serialises a config in the same format parse_config reads.
std::string format_config(const ScenarioConfig& config);

}  // namespace lrod
