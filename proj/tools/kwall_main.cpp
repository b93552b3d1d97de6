#include "kwall/errors.hpp"
#include "kwall/scenario.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  CLI::App app{
      "kwall: exact K-theoretic invariants of simple balanced wall "
      "crossings for one-parameter torus actions on affine space"};

  std::string scenario_path;
  std::vector<std::int64_t> weights;
  std::int64_t base = 0;
  std::string format_name = "text";
  int trials = 0;
  std::uint64_t seed = 0;

  auto* scenario_opt =
      app.add_option("--scenario", scenario_path,
                     "evaluate every case in a scenario JSON file");
  auto* weights_opt =
      app.add_option("--weights", weights,
                     "evaluate a single case with these torus weights (CSV)")
          ->delimiter(',');
  app.add_option("--base", base,
                 "window base exponent for --weights (default 0)")
      ->needs(weights_opt);
  app.add_option("--format", format_name, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  auto* trials_opt =
      app.add_option("--trials", trials,
                     "run the randomized self-check suites with this many "
                     "trials")
          ->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for --trials (default 0)")
      ->needs(trials_opt);

  scenario_opt->excludes(weights_opt)->excludes(trials_opt);
  weights_opt->excludes(trials_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  const kwall::OutputFormat format = format_name == "json"
                                         ? kwall::OutputFormat::Json
                                         : kwall::OutputFormat::Text;
  try {
    if (*scenario_opt)
      return kwall::run_scenario(scenario_path, format, std::cout, std::cerr);
    if (*weights_opt)
      return kwall::run_case(weights, base, format, std::cout, std::cerr);
    if (*trials_opt)
      return kwall::run_self_check_cli(trials, seed, std::cout);
    std::cerr << "one of --scenario, --weights or --trials is required\n";
    return 2;
  } catch (const kwall::Error& e) {
    std::cerr << e.what() << "\n";
    return kwall::is_internal_error(e) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 3;
  }
}
