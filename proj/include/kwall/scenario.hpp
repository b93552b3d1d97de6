#pragma once

#include "kwall/wall.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace kwall {

struct ScenarioCase {
  std::string name;
  std::vector<std::int64_t> weights;
  std::int64_t window_base = 0;
};

struct Scenario {
  std::vector<ScenarioCase> cases;
};

// Scenario files are a flat JSON array of {name, weights, window_base}
// objects; names must be unique.  Throws ScenarioError.
Scenario parse_scenario(const std::string& text);
Scenario load_scenario(const std::string& path);

enum class OutputFormat { Text, Json };

struct CaseOutcome {
  ScenarioCase scenario_case;
  std::optional<WallReport> report;
  std::string error_code;
  std::string error_message;

  bool ok() const { return report.has_value(); }
};

// Runs one case; model-validation failures become rejected outcomes while
// internal invariant violations propagate.
CaseOutcome evaluate_case(const ScenarioCase& c);

std::string format_outcomes(const std::vector<CaseOutcome>& outcomes,
                            OutputFormat format);
std::string format_wall_report_text(const WallReport& report);

// Exit codes: 0 success, 2 invalid input, 3 internal invariant violation.
int run_scenario(const std::string& path, OutputFormat format,
                 std::ostream& out, std::ostream& err);
int run_case(const std::vector<std::int64_t>& weights, std::int64_t base,
             OutputFormat format, std::ostream& out, std::ostream& err);
int run_self_check_cli(int trials, std::uint64_t seed, std::ostream& out);

}  // namespace kwall
