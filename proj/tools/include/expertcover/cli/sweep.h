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

#ifndef EXPERTCOVER_CLI_SWEEP_H_
#define EXPERTCOVER_CLI_SWEEP_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "expertcover/cli/config.h"
#include "expertcover/game.h"

namespace expertcover::cli {

// One line of the sweep table. row_type is "cell" for a grid cell,
// "best_epsilon" for the many_experts cell with the lowest mean regret among
// cells sharing environment parameters, and "meta_tuner" for the meta run on
// those parameters.
struct SweepRow {
  std::string row_type = "cell";
  Algorithm algorithm = Algorithm::kHedge;
  std::optional<double> epsilon;
  std::map<std::string, double> parameters;
  std::vector<double> regrets;  // one per successful seed, in seed order
  std::vector<double> packing_sizes;
  std::vector<double> phases;
  std::size_t failures = 0;
  std::string first_error;

  double mean_regret() const;
  // Sample standard deviation over sqrt(n); 0 for fewer than two seeds.
  double stderr_regret() const;
};

struct SweepTable {
  std::vector<std::string> parameter_names;  // swept environment parameters
  std::vector<SweepRow> rows;
  std::size_t failed_runs = 0;
};

// Runs every cell for seeds seed, seed + 1, ... on `parallelism` worker
// threads. Results do not depend on the thread count. Cell failures are
// recorded and do not stop the sweep.
SweepTable run_sweep(const RunConfig& config, std::uint64_t seed,
                     std::size_t parallelism);

// Columns: row_type, algorithm, epsilon, <parameters...>, seeds,
// mean_regret, stderr_regret, mean_K_p, mean_p, failures, error.
void write_sweep_csv(std::ostream& out, const SweepTable& table);

}  // namespace expertcover::cli

#endif  // EXPERTCOVER_CLI_SWEEP_H_
