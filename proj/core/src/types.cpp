#include "lrod/types.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "lrod/error.hpp"

namespace lrod {
namespace {

// Row sums are computed in floating point; treat residues below this as zero.
constexpr double kRowSumSlack = 1e-12;

bool is_probability(double p) { return std::isfinite(p) && p >= 0.0 && p <= 1.0; }

std::string lower(std::string_view text) {
  std::string out(text);
  for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

double implied_rate(double stay, double write_off) {
  const double rest = 1.0 - stay - write_off;
  return std::abs(rest) < kRowSumSlack ? 0.0 : rest;
}

}  // namespace

std::string_view to_string(MeasureId measure) {
  switch (measure) {
    case MeasureId::G1: return "g1";
    case MeasureId::G2: return "g2";
    case MeasureId::G3: return "g3";
  }
  return "?";
}

MeasureId parse_measure(std::string_view text) {
  const auto key = lower(text);
  if (key == "g1") return MeasureId::G1;
  if (key == "g2") return MeasureId::G2;
  if (key == "g3") return MeasureId::G3;
  throw ValidationError("unknown measure '" + std::string(text) + "' (expected g1, g2 or g3)");
}

std::string_view to_string(Technique technique) {
  return technique == Technique::Random ? "random" : "markov";
}

Technique parse_technique(std::string_view text) {
  const auto key = lower(text);
  if (key == "random") return Technique::Random;
  if (key == "markov") return Technique::Markov;
  throw ValidationError("unknown technique '" + std::string(text) + "' (expected random or markov)");
}

void CdParams::validate() const {
  require(std::isfinite(z) && z > 0.0 && z <= 1.0, "cd.z must lie in (0, 1]");
}

void DodParams::validate() const {
  require(is_probability(s), "dod.s must lie in [0, 1]");
  require(std::isfinite(max_loan_size) && max_loan_size > 0.0, "max_loan_size must be positive");
}

void LossRates::validate() const {
  require(is_probability(r_e), "rates.r_e must lie in [0, 1]");
  require(is_probability(r_a), "rates.r_a must lie in [0, 1]");
}

void RandomDefaultsParams::validate() const {
  require(is_probability(b), "random.b must lie in [0, 1]");
}

double MarkovParams::p_pd() const { return implied_rate(p_pp, p_pw); }
double MarkovParams::p_dp() const { return implied_rate(p_dd, p_dw); }

void MarkovParams::validate() const {
  require(is_probability(p_pp) && is_probability(p_dd) && is_probability(p_pw) &&
              is_probability(p_dw),
          "markov transition probabilities must lie in [0, 1]");
  require(p_pd() >= 0.0, "markov row P does not sum to 1: p_pp + p_pw exceeds 1");
  require(p_dp() >= 0.0, "markov row D does not sum to 1: p_dd + p_dw exceeds 1");
}

void TruncationRule::validate() const {
  require(std::isfinite(k) && k >= 0.0, "truncation.k must be non-negative");
}

void GridOptions::validate() const {
  require(std::isfinite(d_n_proportion) && d_n_proportion > 0.0,
          "grid.d_n_proportion must be positive");
  require(n_bins >= 1, "grid.n_bins must be at least 1");
}

}  // namespace lrod
