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

#include "expertcover/cli/commands.h"

#include <chrono>
#include <exception>
#include <fstream>
#include <ostream>
#include <stdexcept>

#include "expertcover/cli/config.h"
#include "expertcover/cli/runner.h"
#include "expertcover/cli/suites.h"
#include "expertcover/cli/sweep.h"
#include "expertcover/loss_oracle.h"

namespace expertcover::cli {
namespace {

// Runs body and maps exceptions onto exit codes.
template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "i/o error: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::invalid_argument& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfigError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitBoundViolation;
  }
}

const std::filesystem::path& require_config(const CommandOptions& options) {
  if (!options.config) throw ConfigError("--config: required");
  return *options.config;
}

std::uint64_t require_seed(const CommandOptions& options) {
  if (!options.seed) {
    throw ConfigError("--seed: required in this mode (no implicit randomness)");
  }
  return *options.seed;
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create '" + dir.string() + "': " + ec.message());
}

}  // namespace

int cmd_run(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const RunConfig config = load_config(require_config(options), options.overrides);
    const auto start = std::chrono::steady_clock::now();
    const RunResult result = run_game(config, options.seed.value_or(0));
    const double wall = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
    const RunPaths paths = write_run(result, options.out_dir, wall);
    out << to_string(result.config.game.algorithm) << ": T=" << result.config.game.horizon
        << " K=" << result.environment.oracle->finite_experts()
        << " regret=" << result.ledger.regret << " bound=" << result.bound
        << " K_p=" << result.trajectory.final_packing_size()
        << " p=" << result.trajectory.final_phase() << '\n'
        << "wrote " << paths.trajectory.string() << ", " << paths.summary.string()
        << '\n';
    if (!result.bound_holds()) {
      err << "bound violated: regret " << result.ledger.regret << " > "
          << result.bound << '\n';
      return kExitBoundViolation;
    }
    return kExitOk;
  });
}

int cmd_sweep(const CommandOptions& options, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::uint64_t seed = require_seed(options);
    const RunConfig config = load_config(require_config(options), options.overrides);
    if (!config.sweep) throw ConfigError("sweep: missing section");
    if (options.parallelism < 1) throw ConfigError("--parallelism: must be >= 1");
    const SweepTable table = run_sweep(config, seed, options.parallelism);

    ensure_dir(options.out_dir);
    const auto csv_path = options.out_dir / "sweep.csv";
    std::ofstream csv(csv_path, std::ios::trunc);
    if (!csv) throw IoError("cannot open '" + csv_path.string() + "' for writing");
    write_sweep_csv(csv, table);
    csv.flush();
    if (!csv) throw IoError("write failed: '" + csv_path.string() + "'");

    nlohmann::json cells = nlohmann::json::array();
    for (const SweepRow& row : table.rows) {
      cells.push_back({{"row_type", row.row_type},
                       {"algorithm", std::string(to_string(row.algorithm))},
                       {"epsilon", row.epsilon ? nlohmann::json(*row.epsilon)
                                               : nlohmann::json(nullptr)},
                       {"parameters", row.parameters},
                       {"regrets", row.regrets},
                       {"failures", row.failures},
                       {"error", row.first_error}});
    }
    save_json(options.out_dir / "sweep.json",
              {{"config", config.to_json()}, {"seed", seed}, {"cells", cells}});

    write_sweep_csv(out, table);
    if (table.failed_runs > 0) {
      err << table.failed_runs << " sweep run(s) failed; see the error column\n";
      return kExitBoundViolation;
    }
    return kExitOk;
  });
}

int cmd_validate(const std::string& suite, const CommandOptions& options,
                 std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!is_suite(suite)) {
      std::string names;
      for (const SuiteInfo& s : suites()) names += " " + std::string(s.name);
      throw ConfigError("suite: unknown '" + suite + "'; expected one of" + names);
    }
    const std::uint64_t seed = require_seed(options);
    const SuiteReport report = run_suite(suite, seed);
    out << (report.passed ? "PASS " : "FAIL ") << report.name << ": "
        << report.headline << '\n';
    for (const std::string& line : report.details) out << "  " << line << '\n';
    out << "  (" << report.seconds << " s)\n";
    return report.passed ? kExitOk : kExitBoundViolation;
  });
}

int cmd_export_env(const CommandOptions& options, std::ostream& out,
                   std::ostream& err) {
  return guarded(err, [&] {
    nlohmann::json root = read_config_json(require_config(options), options.overrides);
    // Only the environment matters here; a game section is optional.
    if (root.is_object() && !root.contains("game")) {
      root["game"] = {{"algorithm", "hedge"}};
    }
    const RunConfig config = parse_config(root);
    const std::uint64_t seed = options.seed.value_or(0);
    GeneratedEnvironment env;
    try {
      env = make_environment(config.environment, environment_seed(seed));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    const LossMatrix matrix = materialize(*env.oracle);

    ensure_dir(options.out_dir);
    const auto matrix_path =
        options.out_dir / (options.format == MatrixFormat::kCsv ? "environment.csv"
                                                                : "environment.bin");
    save_matrix(matrix_path, matrix, options.format);
    const auto sidecar_path = options.out_dir / "environment.json";
    save_json(sidecar_path, {{"spec", env.spec.to_json()},
                             {"seed", seed},
                             {"environment_seed", env.seed},
                             {"T", matrix.rounds()},
                             {"K", matrix.experts()},
                             {"format", std::string(to_string(options.format))},
                             {"matrix", matrix_path.filename().string()},
                             {"ground_truth", env.ground_truth}});
    out << "wrote " << matrix_path.string() << " (" << matrix.rounds() << " x "
        << matrix.experts() << "), " << sidecar_path.string() << '\n';
    return kExitOk;
  });
}

}  // namespace expertcover::cli
