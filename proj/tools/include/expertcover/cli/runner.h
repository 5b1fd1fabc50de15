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

#ifndef EXPERTCOVER_CLI_RUNNER_H_
#define EXPERTCOVER_CLI_RUNNER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "expertcover/analysis.h"
#include "expertcover/cli/config.h"
#include "expertcover/environments.h"
#include "expertcover/game.h"

namespace expertcover::cli {

// Seeds of the two independent streams behind one --seed value.
std::uint64_t environment_seed(std::uint64_t seed);
std::uint64_t learner_seed(std::uint64_t seed);

struct CopySummary {
  double epsilon = 0.0;
  double cumulative_loss = 0.0;
  double regret = 0.0;
  std::size_t packing_size = 0;
  int phases = 0;
  double theorem1_bound = 0.0;
};

struct RunResult {
  RunConfig config;  // with the horizon resolved
  std::uint64_t seed = 0;
  GeneratedEnvironment environment;
  GameTrajectory trajectory;
  RegretLedger ledger;
  std::vector<CopySummary> copies;  // meta_tuner only
  double lemma1_bound = 0.0;
  std::optional<double> theorem1_bound;  // many_experts only
  // The bound the realized regret is compared against: lemma1 for hedge,
  // theorem1 for many_experts, best copy bound plus overhead for meta_tuner.
  double bound = 0.0;

  bool bound_holds() const { return ledger.regret <= bound; }
  nlohmann::json summary() const;
};

// Builds the environment from environment_seed(seed) and plays one game with
// learner_seed(seed). Throws ConfigError when the environment cannot host the
// configured horizon.
RunResult run_game(const RunConfig& config, std::uint64_t seed);

// Header: t,phase,packing_size,chosen_expert,loss,cumulative_loss.
void write_trajectory_csv(std::ostream& out, const GameTrajectory& trajectory);

struct RunPaths {
  std::filesystem::path trajectory;
  std::filesystem::path summary;
  std::filesystem::path manifest;
};

// Writes trajectory.csv, then summary.json, then manifest.json (the only
// file carrying wall time and version). Throws IoError.
RunPaths write_run(const RunResult& result, const std::filesystem::path& out_dir,
                   double wall_seconds);

}  // namespace expertcover::cli

#endif  // EXPERTCOVER_CLI_RUNNER_H_
