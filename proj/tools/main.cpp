#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "radar_uq/commands.hpp"

namespace {

struct CommonOpts {
  std::string scenario_path;
  std::string out;
  std::optional<std::uint64_t> seed;
  std::optional<int> runs;
  bool serial = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--scenario", opts.scenario_path, "Scenario JSON file")
      ->required()
      ->type_name("PATH");
  cmd->add_option("--out", opts.out, "Output CSV path (falls back to the scenario's output.csv)")
      ->type_name("PATH");
  cmd->add_option("--seed", opts.seed, "Override the Monte Carlo seed");
  cmd->add_option("--runs", opts.runs, "Override the Monte Carlo run count");
  cmd->add_flag("--serial", opts.serial, "Use the serial reference implementation");
}

// Exit codes: 0 success, 2 validation problems (bad usage or bad scenario),
// 1 runtime failure.
constexpr int kExitValidation = 2;
constexpr int kExitRuntime = 1;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-pulse radar detection probability with first-order uncertainty propagation"};
  app.require_subcommand(1);

  CommonOpts nominal_opts, mc_opts, sensitivity_opts, budget_opts;
  std::string summary_out;

  CLI::App* nominal = app.add_subcommand("nominal", "Nominal detection-probability sweep");
  add_common(nominal, nominal_opts);

  CLI::App* montecarlo = app.add_subcommand("montecarlo", "Monte Carlo ensemble over the sweep");
  add_common(montecarlo, mc_opts);
  montecarlo
      ->add_option("--summary-out", summary_out,
                   "Summary JSON path (default: <out>.summary.json)")
      ->type_name("PATH");

  CLI::App* sensitivity =
      app.add_subcommand("sensitivity", "Linearized 3-sigma curves for the three presets");
  add_common(sensitivity, sensitivity_opts);

  CLI::App* budget = app.add_subcommand("budget", "Per-source 3-sigma error budget");
  add_common(budget, budget_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitValidation;
  }

  CommonOpts* opts = nullptr;
  if (nominal->parsed()) opts = &nominal_opts;
  if (montecarlo->parsed()) opts = &mc_opts;
  if (sensitivity->parsed()) opts = &sensitivity_opts;
  if (budget->parsed()) opts = &budget_opts;

  try {
    radar_uq::Scenario scenario = radar_uq::load_scenario(opts->scenario_path);
    if (opts->seed) scenario.mc.seed = *opts->seed;
    if (opts->runs) {
      if (*opts->runs < 1) throw radar_uq::ScenarioError("--runs must be at least 1");
      scenario.mc.runs = *opts->runs;
    }

    std::string out_csv = !opts->out.empty() ? opts->out : scenario.output.csv;
    if (out_csv.empty())
      throw radar_uq::ScenarioError("no output path: pass --out or set output.csv in the scenario");

    const auto policy = opts->serial ? radar_uq::ExecutionPolicy::Serial
                                     : radar_uq::ExecutionPolicy::Parallel;

    if (nominal->parsed()) {
      radar_uq::cmd_nominal(scenario, out_csv, policy);
    } else if (montecarlo->parsed()) {
      std::string summary = !summary_out.empty() ? summary_out : scenario.output.summary;
      if (summary.empty()) summary = out_csv + ".summary.json";
      radar_uq::cmd_montecarlo(scenario, out_csv, summary, policy);
    } else if (sensitivity->parsed()) {
      radar_uq::cmd_sensitivity(scenario, out_csv, policy);
    } else if (budget->parsed()) {
      radar_uq::cmd_budget(scenario, out_csv, policy);
    }
    return 0;
  } catch (const radar_uq::ScenarioError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}
