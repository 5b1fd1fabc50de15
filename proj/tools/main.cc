// Copyright 2026 The expertcover Authors.
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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "expertcover/cli/commands.h"
#include "expertcover/cli/suites.h"

namespace {

using expertcover::cli::CommandOptions;

void add_common(CLI::App* cmd, CommandOptions& options, std::string& seed_text) {
  cmd->add_option("--config", options.config, "JSON config file");
  cmd->add_option("--set", options.overrides,
                  "Override a config value, e.g. --set game.epsilon=0.25");
  cmd->add_option("--seed", seed_text, "Master seed (unsigned 64-bit)");
  cmd->add_option("--out-dir", options.out_dir, "Output directory");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prediction with expert advice over large expert sets"};
  app.require_subcommand(1);

  CommandOptions options;
  std::string seed_text;
  std::string format_text = "csv";
  std::string suite;

  CLI::App* run = app.add_subcommand("run", "Play one seeded game");
  add_common(run, options, seed_text);
  CLI::App* sweep = app.add_subcommand("sweep", "Run a grid of seeded games");
  add_common(sweep, options, seed_text);
  sweep->add_option("--parallelism", options.parallelism, "Worker threads")
      ->check(CLI::PositiveNumber);
  CLI::App* validate = app.add_subcommand("validate", "Run a bound-validation suite");
  validate->add_option("suite", suite, "Suite name")->required();
  validate->add_option("--seed", seed_text, "Master seed (unsigned 64-bit)");
  CLI::App* export_env =
      app.add_subcommand("export-env", "Write a realized loss matrix and sidecar");
  add_common(export_env, options, seed_text);
  export_env->add_option("--format", format_text, "csv or binary")
      ->check(CLI::IsMember({"csv", "binary"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : expertcover::cli::kExitConfigError;
  }

  if (!seed_text.empty()) {
    try {
      std::size_t used = 0;
      options.seed = std::stoull(seed_text, &used);
      if (used != seed_text.size() || seed_text.front() == '-') throw std::invalid_argument("");
    } catch (const std::exception&) {
      std::cerr << "config error: --seed: expected an unsigned integer, got '"
                << seed_text << "'\n";
      return expertcover::cli::kExitConfigError;
    }
  }
  options.format = expertcover::parse_matrix_format(format_text);

  if (*run) return expertcover::cli::cmd_run(options, std::cout, std::cerr);
  if (*sweep) return expertcover::cli::cmd_sweep(options, std::cout, std::cerr);
  if (*validate) {
    return expertcover::cli::cmd_validate(suite, options, std::cout, std::cerr);
  }
  return expertcover::cli::cmd_export_env(options, std::cout, std::cerr);
}
