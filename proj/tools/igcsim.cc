// Command-line front end for the integrated guidance and control simulator.
//
//   igcsim run SCENARIO OUT.csv [--audit] [--summary-json FILE]
//   igcsim sweep SCENARIO --grid delta1:delta2=0.5,0.25,0.1 OUT.csv
//   igcsim check-gains SCENARIO [--g0-norm X] [--g1-norm X]
//                               [--gamma0y X] [--gamma2y X] [--probe]

#include <iostream>

#include "CLI11.hpp"
#include "igc/commands.h"

int main(int argc, char** argv) {
  CLI::App app{"Integrated guidance and control simulator"};
  app.require_subcommand(1);

  igc::cli::RunArgs run;
  std::string summary_json;
  auto* run_cmd = app.add_subcommand("run", "Simulate one engagement");
  run_cmd->add_option("scenario", run.scenario, "Scenario file")->required();
  run_cmd->add_option("out_csv", run.out_csv, "Per-step CSV log")->required();
  run_cmd->add_flag("--audit", run.audit, "Check the ISS bounds along the log");
  run_cmd->add_option("--summary-json", summary_json, "Write summary as JSON");

  igc::cli::SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a gain grid");
  sweep_cmd->add_option("scenario", sweep.scenario, "Scenario file")->required();
  sweep_cmd->add_option("out_table", sweep.out_table, "Result table (CSV)")
      ->required();
  sweep_cmd
      ->add_option("--grid", sweep.grid,
                   "name[:name...]=v1,v2,...; repeat for a product grid")
      ->required();

  igc::cli::CheckGainsArgs check;
  double g0 = 0, g1 = 0, gamma0y = 0, gamma2y = 0;
  auto* check_cmd =
      app.add_subcommand("check-gains", "Small-gain certificate for the gains");
  check_cmd->add_option("scenario", check.scenario, "Scenario file")->required();
  auto* g0_opt = check_cmd->add_option("--g0-norm", g0, "Bound on ||g0||");
  auto* g1_opt = check_cmd->add_option("--g1-norm", g1, "Bound on ||g1||");
  auto* gamma0y_opt =
      check_cmd->add_option("--gamma0y", gamma0y, "Guidance-loop gain estimate");
  auto* gamma2y_opt =
      check_cmd->add_option("--gamma2y", gamma2y, "Inner-loop gain estimate");
  check_cmd->add_flag("--probe", check.probe,
                      "Estimate missing loop gains by simulation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : igc::cli::kExitError;
  }

  if (*run_cmd) {
    if (!summary_json.empty()) run.summary_json = summary_json;
    return igc::cli::cmd_run(run, std::cout, std::cerr);
  }
  if (*sweep_cmd) return igc::cli::cmd_sweep(sweep, std::cout, std::cerr);
  if (*g0_opt) check.g0_norm = g0;
  if (*g1_opt) check.g1_norm = g1;
  if (*gamma0y_opt) check.gamma0y = gamma0y;
  if (*gamma2y_opt) check.gamma2y = gamma2y;
  return igc::cli::cmd_check_gains(check, std::cout, std::cerr);
}
