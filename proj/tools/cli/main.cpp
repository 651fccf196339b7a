// Copyright 2026 The exactmip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "commands.hpp"

int main(int argc, char** argv) {
  using exactmip::cli::Command;
  using exactmip::cli::RunConfig;

  CLI::App app{"Exact rational MILP solver, certificate verifier and IIS finder",
               "exactmip"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "exactmip 0.3.0");

  RunConfig cfg;
  std::string format;
  std::string gamma = "1/5";
  const std::map<std::string, bool> onOff{{"on", true}, {"off", false}};
  const std::map<std::string, std::string> formats{{"mps", "mps"},
                                                   {"lp", "lp"}};

  auto* solveCmd = app.add_subcommand("solve", "Solve an instance exactly");
  solveCmd->add_option("input", cfg.input, "Instance file (.mps or .lp)")
      ->required();
  solveCmd->add_option("--format", format, "Override the input format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  solveCmd->add_option("--certificate", cfg.certificate,
                       "Write a proof certificate to this path");
  solveCmd->add_option("--stats", cfg.stats,
                       "Write solve statistics as JSON to this path");
  solveCmd->add_option("--node-limit", cfg.nodeLimit, "Maximum B&B nodes")
      ->check(CLI::NonNegativeNumber);
  solveCmd->add_option("--time-limit", cfg.params.timeLimitSeconds,
                       "Wall-clock limit in seconds");
  solveCmd->add_option("--cuts", cfg.params.cuts, "Root GMI cuts (on|off)")
      ->transform(CLI::CheckedTransformer(onOff, CLI::ignore_case))
      ->default_str("on");
  solveCmd
      ->add_option("--heuristics", cfg.params.heuristics,
                   "Solution repair heuristic (on|off)")
      ->transform(CLI::CheckedTransformer(onOff, CLI::ignore_case))
      ->default_str("on");
  solveCmd->add_option("--branching", cfg.branching,
                       "Branching rule: aps, pscost or firstfrac")
      ->check(CLI::IsMember({"aps", "pscost", "firstfrac"}))
      ->capture_default_str();
  solveCmd->add_option("--gamma", gamma, "APS discount factor in [0, 1]")
      ->capture_default_str();
  solveCmd->add_option("--reliability", cfg.params.reliability,
                       "Records needed before ancestral terms are used")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* verifyCmd = app.add_subcommand("verify", "Check a certificate");
  verifyCmd->add_option("certificate", cfg.input, "Certificate file")
      ->required();

  auto* iisCmd = app.add_subcommand(
      "iis", "Find an irreducible infeasible subsystem");
  iisCmd->add_option("input", cfg.input, "Instance file (.mps or .lp)")
      ->required();
  iisCmd->add_option("--format", format, "Override the input format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  iisCmd->add_option("--method", cfg.iisMethod, "deletion or additive")
      ->check(CLI::IsMember({"deletion", "additive"}))
      ->capture_default_str();
  iisCmd
      ->add_option("--include-bounds", cfg.iisOptions.includeBounds,
                   "Treat finite bounds as removable (on|off)")
      ->transform(CLI::CheckedTransformer(onOff, CLI::ignore_case))
      ->default_str("on");
  iisCmd
      ->add_option("--irreducible", cfg.iisOptions.irreducible,
                   "Guarantee irreducibility (on|off)")
      ->transform(CLI::CheckedTransformer(onOff, CLI::ignore_case))
      ->default_str("on");
  iisCmd->add_option("--node-limit", cfg.iisOptions.nodeLimit,
                     "Node limit of each feasibility check")
      ->capture_default_str();
  iisCmd->add_option("--output", cfg.output,
                     "Reduced instance path (default: <input>.iis.<ext>)");
  iisCmd->add_option("--summary", cfg.stats,
                     "Also write the JSON summary to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exactmip::cli::kExitUsage;
  }

  if (!format.empty()) cfg.format = format;
  cfg.gamma = gamma;
  if (solveCmd->parsed()) {
    cfg.command = Command::Solve;
  } else if (verifyCmd->parsed()) {
    cfg.command = Command::Verify;
  } else {
    cfg.command = Command::Iis;
  }
  return exactmip::cli::run(cfg, std::cout, std::cerr);
}
