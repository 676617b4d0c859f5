// Copyright 2026 The CGD Authors
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

#include <filesystem>
#include <iostream>
#include <ios>

#include "CLI11.hpp"
#include "cgd/dynamics.hpp"
#include "cgd/error.hpp"
#include "cgd/family.hpp"
#include "commands.hpp"

namespace {

using cgd::cli::RunConfig;

void AddDynamics(CLI::App* cmd, RunConfig& cfg, bool required = true) {
  auto* opt = cmd->add_option("--dynamics,-d", cfg.dynamics, "Dynamics name")
                  ->check(CLI::IsMember(cgd::DynamicsNames()));
  if (required) opt->required();
}

void AddFamily(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--max-vertices,-n", cfg.max_vertices,
                  "Largest vertex count in the family")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--family,-f", cfg.family, "Family name")
      ->check(CLI::IsMember(cgd::FamilyNames()));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Causal graph dynamics over port graphs"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* run = app.add_subcommand("run", "Write the trajectory X, F(X), ...");
  AddDynamics(run, cfg);
  run->add_option("--input,-i", cfg.input, "Graph file")->required();
  run->add_option("--steps,-s", cfg.steps, "Number of configurations to write");
  run->add_option("--output,-o", cfg.output, "Output directory");
  run->add_flag("--dot", cfg.render, "Also write DOT renders");

  auto* verify = app.add_subcommand(
      "verify", "Check the axioms, bijectivity and vertex preservation");
  AddDynamics(verify, cfg);
  AddFamily(verify, cfg);
  verify->add_option("--output,-o", cfg.output, "Write the inverse table here");

  auto* enumerate = app.add_subcommand("enumerate", "List a graph family");
  AddDynamics(enumerate, cfg, false);
  AddFamily(enumerate, cfg);
  enumerate->add_option("--output,-o", cfg.output, "Output file");

  auto* decompose = app.add_subcommand(
      "decompose", "Compute one step as a product of local reversible blocks");
  AddDynamics(decompose, cfg);
  decompose->add_option("--input,-i", cfg.input, "Graph file")->required();
  decompose->add_option("--output,-o", cfg.output, "Output directory");
  decompose->add_option("--exception-bound,-p", cfg.exception_bound,
                        "Graphs this small are left alone by the extension");
  decompose->add_flag("--trace", cfg.trace, "Write every intermediate graph");
  decompose->add_flag("--dot", cfg.render, "Also write DOT renders");

  auto* check = app.add_subcommand(
      "check-blocks", "Check the block decomposition over a family");
  AddDynamics(check, cfg);
  AddFamily(check, cfg);
  check->add_option("--exception-bound,-p", cfg.exception_bound,
                    "Graphs this small are left alone by the extension");

  auto* dot = app.add_subcommand("export-dot", "Render graphs as DOT");
  dot->add_option("--input,-i", cfg.input, "Graph file")->required();
  dot->add_option("--output,-o", cfg.output, "Output file");
  dot->add_option("--caption", cfg.caption, "Graph caption");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cgd::cli::kOk : cgd::cli::kUsageError;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return cgd::cli::RunCommand(cfg, std::cout);
  } catch (const cgd::ParseError& e) {
    std::cerr << "cgd: parse error: " << e.what() << '\n';
    return cgd::cli::kUsageError;
  } catch (const std::ios_base::failure& e) {
    std::cerr << "cgd: " << e.what() << '\n';
    return cgd::cli::kIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "cgd: " << e.what() << '\n';
    return cgd::cli::kIoError;
  } catch (const cgd::Error& e) {
    std::cerr << "cgd: " << e.what() << '\n';
    return cgd::cli::kAssertionFailed;
  }
}
