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

#ifndef EXPERTCOVER_CLI_COMMANDS_H_
#define EXPERTCOVER_CLI_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "expertcover/matrix_io.h"

namespace expertcover::cli {

enum ExitCode : int {
  kExitOk = 0,
  kExitBoundViolation = 1,
  kExitConfigError = 2,
  kExitIoError = 3,
};

struct CommandOptions {
  std::optional<std::filesystem::path> config;
  std::vector<std::string> overrides;  // "a.b=value"
  std::optional<std::uint64_t> seed;
  std::filesystem::path out_dir = ".";
  std::size_t parallelism = 1;
  MatrixFormat format = MatrixFormat::kCsv;
};

// Each command reports progress on `out`, diagnostics on `err`, and returns
// an ExitCode. Exceptions are mapped to exit codes, not propagated.

// One game: trajectory.csv, summary.json, manifest.json in out_dir. Seed
// defaults to 0. Exits 1 if the realized regret exceeds the run's bound.
int cmd_run(const CommandOptions& options, std::ostream& out, std::ostream& err);

// Grid from the config's sweep section: sweep.csv and sweep.json in out_dir.
// Requires --seed. Exits 1 if any cell failed.
int cmd_sweep(const CommandOptions& options, std::ostream& out, std::ostream& err);

// Requires --seed. Unknown suite names are configuration errors.
int cmd_validate(const std::string& suite, const CommandOptions& options,
                 std::ostream& out, std::ostream& err);

// Writes environment.csv or environment.bin plus environment.json (spec,
// seeds, ground truth).
int cmd_export_env(const CommandOptions& options, std::ostream& out,
                   std::ostream& err);

}  // namespace expertcover::cli

#endif  // EXPERTCOVER_CLI_COMMANDS_H_
