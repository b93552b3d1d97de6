#include "kwall/scenario.hpp"

#include "kwall/errors.hpp"
#include "kwall/self_check.hpp"

#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace kwall {

namespace {

std::string format_int_list(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << v[i];
  }
  os << "]";
  return os.str();
}

std::string format_exponent_basis(const std::vector<std::int64_t>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ", ";
    os << exponent_label(v[i]);
  }
  os << "]";
  return os.str();
}

void append_matrix(std::ostream& os, const std::string& title,
                   const std::string& domain, const std::string& codomain,
                   const LinearMap& m) {
  os << "  " << title << ": " << domain << " -> " << codomain << "\n";
  if (m.rows() == 0 || m.cols() == 0) {
    os << "    [] (" << m.rows() << "x" << m.cols() << ")\n";
    return;
  }
  std::vector<std::size_t> widths(static_cast<std::size_t>(m.cols()), 0);
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      widths[static_cast<std::size_t>(j)] = std::max(
          widths[static_cast<std::size_t>(j)], m.entries(i, j).str().size());
  for (Index i = 0; i < m.rows(); ++i) {
    os << "    [";
    for (Index j = 0; j < m.cols(); ++j) {
      const std::string s = m.entries(i, j).str();
      os << " " << std::string(widths[static_cast<std::size_t>(j)] - s.size(), ' ')
         << s;
    }
    os << " ]\n";
  }
}

std::string criterion_line(const char* label, const CriterionResult& c) {
  std::ostringstream os;
  os << label << ": "
     << (c.saturated ? "saturated (" : "not saturated (") << c.rank
     << (c.saturated ? " = " : " < ") << c.bound << ")";
  return os.str();
}

Json outcome_to_json(const CaseOutcome& outcome) {
  Json j;
  j["name"] = outcome.scenario_case.name;
  if (outcome.ok()) {
    j["status"] = "ok";
    j["report"] = wall_report_to_json(*outcome.report);
  } else {
    j["status"] = "rejected";
    j["error"] = outcome.error_code;
    j["message"] = outcome.error_message;
  }
  return j;
}

}  // namespace

Scenario parse_scenario(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ScenarioError(std::string("scenario is not valid JSON: ") + e.what());
  }
  if (!j.is_array())
    throw ScenarioError("scenario must be a JSON array of cases");

  Scenario scenario;
  std::set<std::string> names;
  for (const auto& entry : j) {
    if (!entry.is_object())
      throw ScenarioError("each scenario case must be a JSON object");
    ScenarioCase c;
    try {
      c.name = entry.at("name").get<std::string>();
      c.weights = entry.at("weights").get<std::vector<std::int64_t>>();
      if (entry.contains("window_base"))
        c.window_base = entry.at("window_base").get<std::int64_t>();
    } catch (const nlohmann::json::exception& e) {
      throw ScenarioError(std::string("malformed scenario case: ") + e.what());
    }
    if (!names.insert(c.name).second)
      throw ScenarioError("duplicate case name '" + c.name + "'");
    scenario.cases.push_back(std::move(c));
  }
  return scenario;
}

Scenario load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError("cannot open scenario file '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

CaseOutcome evaluate_case(const ScenarioCase& c) {
  CaseOutcome outcome;
  outcome.scenario_case = c;
  try {
    outcome.report = full_report(build_model(c.weights, c.window_base));
  } catch (const Error& e) {
    if (is_internal_error(e)) throw;
    outcome.error_code = e.code();
    outcome.error_message = e.what();
  }
  return outcome;
}

std::string format_wall_report_text(const WallReport& r) {
  std::ostringstream os;
  os << "  weights: " << format_int_list(r.model.weights) << "\n";
  os << "  window_base: " << r.model.window_base << "\n";
  os << "  eta: " << r.model.eta << "\n";
  os << "  codim_z: " << r.model.codim_z << "\n";
  os << "  q-: " << to_string(r.model.q_minus) << "\n";
  os << "  q+: " << to_string(r.model.q_plus) << "\n";
  os << "  K(C) basis: " << format_exponent_basis(r.bases.c) << "\n";
  os << "  K(X//-) basis: " << format_exponent_basis(r.bases.g_minus) << "\n";
  os << "  K(X//+) basis: " << format_exponent_basis(r.bases.g_plus) << "\n";
  append_matrix(os, "res-", "K(C)", "K(X//-)", r.structure.res_minus);
  append_matrix(os, "res+", "K(C)", "K(X//+)", r.structure.res_plus);
  append_matrix(os, "res-*", "K(X//-)", "K(C)", r.structure.res_minus_star);
  append_matrix(os, "res+*", "K(X//+)", "K(C)", r.structure.res_plus_star);
  append_matrix(os, "iota-", "K(D)", "K(C)", r.iota.iota_minus);
  append_matrix(os, "iota+", "K(D')", "K(C)", r.iota.iota_plus);
  append_matrix(os, "*iota-", "K(C)", "K(D)", r.iota.star_iota_minus);
  append_matrix(os, "iota-*", "K(C)", "K(D)", r.iota.iota_minus_star);
  append_matrix(os, "*iota+", "K(C)", "K(D')", r.iota.star_iota_plus);
  append_matrix(os, "iota+*", "K(C)", "K(D')", r.iota.iota_plus_star);
  append_matrix(os, "K(S)", "K(D)", "K(X//+)", r.k_s);
  append_matrix(os, "K(S*)", "K(X//+)", "K(D)", r.k_s_star);
  append_matrix(os, "m_plus", "K(X//+)", "K(X//+)", r.m_plus);
  os << "  m_prime: " << r.m_prime << "\n";
  os << "  " << criterion_line("IC", r.ic_primary) << "\n";
  os << "  " << criterion_line("dual IC", r.ic_dual) << "\n";
  os << "  parity: " << (r.parity.lemma_conditions ? "lemma holds" : "lemma fails")
     << ", codim " << r.model.codim_z
     << (r.parity.codim_odd ? " odd" : " even") << " -> "
     << (r.parity.prediction ? "predicts saturated" : "no prediction") << "\n";
  os << "  defect: " << r.defect << "\n";
  return os.str();
}

std::string format_outcomes(const std::vector<CaseOutcome>& outcomes,
                            OutputFormat format) {
  if (format == OutputFormat::Json) {
    Json j = Json::array();
    for (const auto& outcome : outcomes) j.push_back(outcome_to_json(outcome));
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  bool first = true;
  for (const auto& outcome : outcomes) {
    if (!first) os << "\n";
    first = false;
    os << "case " << outcome.scenario_case.name << "\n";
    if (outcome.ok()) {
      os << format_wall_report_text(*outcome.report);
    } else {
      os << "  rejected: " << outcome.error_message << "\n";
    }
  }
  return os.str();
}

int run_scenario(const std::string& path, OutputFormat format,
                 std::ostream& out, std::ostream& err) {
  Scenario scenario;
  try {
    scenario = load_scenario(path);
  } catch (const ScenarioError& e) {
    err << e.what() << "\n";
    return 2;
  }
  std::vector<CaseOutcome> outcomes;
  outcomes.reserve(scenario.cases.size());
  for (const auto& c : scenario.cases) outcomes.push_back(evaluate_case(c));
  out << format_outcomes(outcomes, format);
  for (const auto& outcome : outcomes)
    if (!outcome.ok()) return 2;
  return 0;
}

int run_case(const std::vector<std::int64_t>& weights, std::int64_t base,
             OutputFormat format, std::ostream& out, std::ostream& err) {
  (void)err;
  ScenarioCase c;
  c.name = "case";
  c.weights = weights;
  c.window_base = base;
  std::vector<CaseOutcome> outcomes{evaluate_case(c)};
  out << format_outcomes(outcomes, format);
  return outcomes.front().ok() ? 0 : 2;
}

int run_self_check_cli(int trials, std::uint64_t seed, std::ostream& out) {
  out << "self-check: trials=" << trials << " seed=" << seed << "\n";
  const std::vector<CheckResult> results = run_self_check(trials, seed);
  int passed = 0;
  for (const auto& r : results) {
    if (r.passed()) {
      ++passed;
      out << "[PASS] " << r.family << " (trials=" << r.trials << ")\n";
    } else {
      out << "[FAIL] " << r.family << " (" << r.failures.size()
          << " violations)\n";
      for (const auto& f : r.failures) out << "       " << f << "\n";
    }
  }
  out << "self-check: " << passed << "/" << results.size()
      << " families passed\n";
  return passed == static_cast<int>(results.size()) ? 0 : 3;
}

}  // namespace kwall
