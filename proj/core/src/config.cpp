#include "lrod/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "lrod/error.hpp"
#include "lrod/portfolio.hpp"

namespace lrod {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double to_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size() || !std::isfinite(out)) {
    throw ValidationError("config key '" + std::string(key) + "': not a number: '" +
                          std::string(value) + "'");
  }
  return out;
}

template <typename Int>
Int to_integer(std::string_view key, std::string_view value) {
  Int out{};
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc{} || ptr != value.data() + value.size()) {
    throw ValidationError("config key '" + std::string(key) + "': not a non-negative integer: '" +
                          std::string(value) + "'");
  }
  return out;
}

std::vector<MeasureId> to_measures(std::string_view value) {
  std::vector<MeasureId> out;
  while (!value.empty()) {
    const auto comma = value.find(',');
    out.push_back(parse_measure(trim(value.substr(0, comma))));
    if (comma == std::string_view::npos) break;
    value.remove_prefix(comma + 1);
  }
  return out;
}

using Setter = std::function<void(ScenarioConfig&, std::string_view key, std::string_view value)>;

const std::map<std::string, Setter, std::less<>>& setters() {
  static const std::map<std::string, Setter, std::less<>> table = {
      {"n", [](auto& c, auto k, auto v) { c.n = to_integer<std::size_t>(k, v); }},
      {"t_c", [](auto& c, auto k, auto v) { c.t_c = to_integer<int>(k, v); }},
      {"instalment", [](auto& c, auto k, auto v) { c.instalment = to_double(k, v); }},
      {"loan_rate", [](auto& c, auto k, auto v) { c.loan_rate = to_double(k, v); }},
      {"riskfree_rate", [](auto& c, auto k, auto v) { c.riskfree_rate = to_double(k, v); }},
      {"max_loan_size", [](auto& c, auto k, auto v) { c.max_loan_size = to_double(k, v); }},
      {"rates.r_e", [](auto& c, auto k, auto v) { c.rates.r_e = to_double(k, v); }},
      {"rates.r_a", [](auto& c, auto k, auto v) { c.rates.r_a = to_double(k, v); }},
      {"technique", [](auto& c, auto, auto v) { c.technique = parse_technique(v); }},
      {"random.b", [](auto& c, auto k, auto v) { c.random.b = to_double(k, v); }},
      {"markov.p_pp", [](auto& c, auto k, auto v) { c.markov.p_pp = to_double(k, v); }},
      {"markov.p_dd", [](auto& c, auto k, auto v) { c.markov.p_dd = to_double(k, v); }},
      {"markov.p_pw", [](auto& c, auto k, auto v) { c.markov.p_pw = to_double(k, v); }},
      {"markov.p_dw", [](auto& c, auto k, auto v) { c.markov.p_dw = to_double(k, v); }},
      {"truncation.k",
       [](auto& c, auto k, auto v) {
         if (v == "none") {
           c.truncation.reset();
           return;
         }
         auto rule = c.truncation.value_or(TruncationRule{});
         rule.k = to_double(k, v);
         c.truncation = rule;
       }},
      {"truncation.measure",
       [](auto& c, auto, auto v) {
         auto rule = c.truncation.value_or(TruncationRule{});
         rule.measure = parse_measure(v);
         c.truncation = rule;
       }},
      {"cd.z", [](auto& c, auto k, auto v) { c.cd.z = to_double(k, v); }},
      {"dod.s", [](auto& c, auto k, auto v) { c.dod.s = to_double(k, v); }},
      {"measures", [](auto& c, auto, auto v) { c.measures = to_measures(v); }},
      {"grid.d_n_proportion",
       [](auto& c, auto k, auto v) { c.grid.d_n_proportion = to_double(k, v); }},
      {"grid.n_bins", [](auto& c, auto k, auto v) { c.grid.n_bins = to_integer<std::size_t>(k, v); }},
      {"master_seed",
       [](auto& c, auto k, auto v) { c.master_seed = to_integer<std::uint64_t>(k, v); }},
  };
  return table;
}

}  // namespace

void ScenarioConfig::validate() const {
  require(n >= 1, "n must be at least 1");
  rates.validate();
  random.validate();
  markov.validate();
  if (truncation) truncation->validate();
  cd.validate();
  dod.validate();
  grid.validate();
  require(!measures.empty(), "measures must name at least one of g1, g2, g3");
  require(std::set<MeasureId>(measures.begin(), measures.end()).size() == measures.size(),
          "measures must not repeat");
  require(dod.max_loan_size == max_loan_size, "dod.max_loan_size must equal max_loan_size");
  LoanSpec::amortising(t_c, instalment, loan_rate, riskfree_rate, max_loan_size).validate();
}

ScenarioConfig parse_config(std::string_view text, ScenarioConfig base) {
  std::set<std::string, std::less<>> seen;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    auto line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("config line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    const auto it = setters().find(key);
    if (it == setters().end()) {
      throw ValidationError("config line " + std::to_string(line_no) + ": unknown key '" +
                            std::string(key) + "'");
    }
    if (!seen.emplace(key).second) {
      throw ValidationError("config line " + std::to_string(line_no) + ": duplicate key '" +
                            std::string(key) + "'");
    }
    it->second(base, key, value);
  }
  base.dod.max_loan_size = base.max_loan_size;
  return base;
}

ScenarioConfig load_config(const std::filesystem::path& path, ScenarioConfig base) {
  std::ifstream in(path);
  if (!in) throw IoError(path.string(), "cannot open config file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError(path.string(), "read failed");
  return parse_config(buffer.str(), std::move(base));
}

std::string format_config(const ScenarioConfig& c) {
  std::ostringstream out;
  out.precision(17);
  out << "n = " << c.n << '\n'
      << "t_c = " << c.t_c << '\n'
      << "instalment = " << c.instalment << '\n'
      << "loan_rate = " << c.loan_rate << '\n'
      << "riskfree_rate = " << c.riskfree_rate << '\n'
      << "max_loan_size = " << c.max_loan_size << '\n'
      << "rates.r_e = " << c.rates.r_e << '\n'
      << "rates.r_a = " << c.rates.r_a << '\n'
      << "technique = " << to_string(c.technique) << '\n'
      << "random.b = " << c.random.b << '\n'
      << "markov.p_pp = " << c.markov.p_pp << '\n'
      << "markov.p_dd = " << c.markov.p_dd << '\n'
      << "markov.p_pw = " << c.markov.p_pw << '\n'
      << "markov.p_dw = " << c.markov.p_dw << '\n';
  if (c.truncation) {
    out << "truncation.k = " << c.truncation->k << '\n'
        << "truncation.measure = " << to_string(c.truncation->measure) << '\n';
  } else {
    out << "truncation.k = none\n";
  }
  out << "cd.z = " << c.cd.z << '\n' << "dod.s = " << c.dod.s << '\n' << "measures = ";
  for (std::size_t i = 0; i < c.measures.size(); ++i) {
    out << (i ? "," : "") << to_string(c.measures[i]);
  }
  out << '\n'
      << "grid.d_n_proportion = " << c.grid.d_n_proportion << '\n'
      << "grid.n_bins = " << c.grid.n_bins << '\n'
      << "master_seed = " << c.master_seed << '\n';
  return out.str();
}

}  // namespace lrod
