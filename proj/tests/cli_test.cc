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

#include <algorithm>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "expertcover/cli/commands.h"
#include "expertcover/cli/config.h"
#include "expertcover/cli/runner.h"
#include "expertcover/cli/suites.h"
#include "expertcover/cli/sweep.h"
#include "expertcover/environments.h"
#include "expertcover/loss_oracle.h"
#include "expertcover/matrix_io.h"
#include "test_util.h"

namespace expertcover::cli {
namespace {

using nlohmann::json;
using test_util::TempDir;

std::string config_error(const json& root) {
  try {
    parse_config(root);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

json base_config() {
  return json::parse(R"({
    "game": {"algorithm": "many_experts", "T": 50, "epsilon": 0.25},
    "environment": {"kind": "low_rank", "K": 30, "d": 2, "epsilon_noise": 0.05}
  })");
}

std::filesystem::path write_config(const TempDir& dir, const json& root,
                                   const std::string& name = "config.json") {
  const auto path = dir / name;
  save_json(path, root);
  return path;
}

std::vector<std::vector<std::string>> read_csv_rows(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream s(line);
    std::string cell;
    while (std::getline(s, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

// ---------------------------------------------------------------------------
// Config parsing

TEST(ConfigTest, ParsesAndCopiesHorizon) {
  const RunConfig config = parse_config(base_config());
  EXPECT_EQ(config.game.algorithm, Algorithm::kManyExperts);
  EXPECT_EQ(config.game.horizon, 50);
  EXPECT_EQ(config.game.epsilon, 0.25);
  EXPECT_EQ(config.environment.get_count("T"), 50u);
  EXPECT_FALSE(config.sweep.has_value());
  EXPECT_EQ(config.feedback, MetaFeedback::kExpected);
}

TEST(ConfigTest, HorizonFromEnvironmentSection) {
  json root = base_config();
  root["game"].erase("T");
  root["environment"]["T"] = 40;
  EXPECT_EQ(parse_config(root).game.horizon, 40);
  root["game"]["T"] = 30;
  EXPECT_EQ(parse_config(root).game.horizon, 30);
}

TEST(ConfigTest, ErrorsNameTheField) {
  json root = base_config();
  root["game"]["speed"] = 1;
  EXPECT_EQ(config_error(root), "game.speed: unknown key");

  root = base_config();
  root["extra"] = 1;
  EXPECT_EQ(config_error(root), "extra: unknown key");

  root = base_config();
  root["game"].erase("epsilon");
  EXPECT_EQ(config_error(root), "game.epsilon: required for many_experts");

  root = base_config();
  root["game"]["epsilon"] = 1.5;
  EXPECT_EQ(config_error(root).rfind("game.epsilon", 0), 0u) << config_error(root);

  root = base_config();
  root["game"].erase("T");
  EXPECT_EQ(config_error(root), "game.T: missing (set it in game or environment)");

  root = base_config();
  root["environment"]["T"] = 20;
  EXPECT_EQ(config_error(root), "game.T: exceeds environment.T");

  root = base_config();
  root["environment"].erase("d");
  EXPECT_EQ(config_error(root), "environment.d: missing");

  root = base_config();
  root["game"]["algorithm"] = "ucb";
  EXPECT_EQ(config_error(root).rfind("game.algorithm", 0), 0u) << config_error(root);

  root = base_config();
  root["game"]["feedback"] = "sampled";
  EXPECT_EQ(config_error(root).rfind("game.feedback", 0), 0u) << config_error(root);

  root = base_config();
  root["sweep"] = {{"epsilon", {0.5, 2.0}}};
  EXPECT_EQ(config_error(root), "sweep.epsilon: values must lie in (0, 1]");

  root = base_config();
  root.erase("environment");
  EXPECT_EQ(config_error(root), "environment: missing");
}

TEST(ConfigTest, MetaNeedsTwoRounds) {
  json root = base_config();
  root["game"] = {{"algorithm", "meta_tuner"}, {"T", 1}};
  EXPECT_FALSE(config_error(root).empty());
}

TEST(ConfigTest, Overrides) {
  json root = base_config();
  apply_override(root, "game.epsilon=0.5");
  apply_override(root, "environment.kind=clustered_binary");
  apply_override(root, "sweep.seeds=3");
  apply_override(root, "sweep.epsilon=[0.25,1]");
  EXPECT_EQ(root["game"]["epsilon"], 0.5);
  EXPECT_EQ(root["environment"]["kind"], "clustered_binary");
  EXPECT_EQ(root["sweep"]["seeds"], 3);
  EXPECT_EQ(root["sweep"]["epsilon"], json::parse("[0.25,1]"));
  EXPECT_THROW(apply_override(root, "game.epsilon"), ConfigError);
  EXPECT_THROW(apply_override(root, "game..T=3"), ConfigError);
  EXPECT_THROW(apply_override(root, "game.epsilon.x=3"), ConfigError);
}

TEST(ConfigTest, RelativeMatrixPathFollowsConfigFile) {
  TempDir dir;
  std::filesystem::create_directories(dir / "sub");
  save_matrix(dir / "sub" / "m.csv", LossMatrix(3, 2, {0, 1, 1, 0, -1, 1}), MatrixFormat::kCsv);
  const json root = {{"game", {{"algorithm", "hedge"}}},
                     {"environment", {{"kind", "finite_matrix"}, {"path", "m.csv"}}}};
  const RunConfig config = load_config(write_config(dir, root, "sub/c.json"));
  EXPECT_TRUE(config.horizon_from_environment);
  EXPECT_TRUE(std::filesystem::equivalent(config.environment.path, dir / "sub" / "m.csv"));
  const RunResult result = run_game(config, 1);
  EXPECT_EQ(result.config.game.horizon, 3);
  EXPECT_EQ(result.trajectory.rounds.size(), 3u);
}

TEST(ConfigTest, UnreadableOrInvalidFile) {
  TempDir dir;
  EXPECT_THROW(load_config(dir / "absent.json"), ConfigError);
  test_util::write_file(dir / "bad.json", "{ nope");
  EXPECT_THROW(load_config(dir / "bad.json"), ConfigError);
}

// ---------------------------------------------------------------------------
// run

TEST(RunTest, HedgeExampleOutputs) {
  TempDir dir;
  CommandOptions options;
  options.config = test_util::data_dir() / "hedge_iid.json";
  options.seed = 7;
  options.out_dir = dir.path();
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(cmd_run(options, out, err), kExitOk) << err.str();

  const auto rows = read_csv_rows(dir / "trajectory.csv");
  ASSERT_EQ(rows.size(), 101u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"t", "phase", "packing_size", "chosen_expert",
                                               "loss", "cumulative_loss"}));
  const json summary = load_json(dir / "summary.json");
  for (const char* key : {"algorithm", "T", "K", "epsilon", "seed", "environment",
                          "environment_seed", "learner_cumulative", "best_expert",
                          "best_cumulative", "regret", "lemma1_bound", "theorem1_bound",
                          "K_p", "p", "bound", "bound_holds"}) {
    EXPECT_TRUE(summary.contains(key)) << key;
  }
  EXPECT_EQ(summary["T"], 100);
  EXPECT_EQ(summary["K"], 2);
  EXPECT_TRUE(summary["epsilon"].is_null());
  EXPECT_TRUE(summary["bound_holds"].get<bool>());

  // Re-derive the regret from the CSV and a fresh copy of the environment.
  double cumulative = 0.0;
  for (std::size_t r = 1; r < rows.size(); ++r) {
    EXPECT_EQ(std::stoll(rows[r][0]), static_cast<long long>(r));
    cumulative += std::stod(rows[r][4]);
    EXPECT_NEAR(std::stod(rows[r][5]), cumulative, 1e-9);
  }
  const RunConfig config = load_config(*options.config);
  const GeneratedEnvironment env =
      make_environment(config.environment, summary["environment_seed"].get<std::uint64_t>());
  const std::vector<double> sums = env.oracle->cumulative_losses();
  const double best = *std::min_element(sums.begin(), sums.end());
  EXPECT_NEAR(summary["regret"].get<double>(), cumulative - best, 1e-9);

  const json manifest = load_json(dir / "manifest.json");
  EXPECT_TRUE(manifest.contains("code_version"));
  EXPECT_TRUE(manifest.contains("wall_time"));
  EXPECT_EQ(manifest["seed"], 7);
}

TEST(RunTest, SameSeedSameBytes) {
  TempDir dir;
  CommandOptions options;
  options.config = test_util::data_dir() / "hedge_iid.json";
  options.seed = 11;
  std::ostringstream sink;
  options.out_dir = dir / "a";
  ASSERT_EQ(cmd_run(options, sink, sink), kExitOk);
  options.out_dir = dir / "b";
  ASSERT_EQ(cmd_run(options, sink, sink), kExitOk);
  for (const char* file : {"trajectory.csv", "summary.json"}) {
    EXPECT_EQ(test_util::read_file(dir / "a" / file), test_util::read_file(dir / "b" / file))
        << file;
  }
  options.seed = 12;
  options.out_dir = dir / "c";
  ASSERT_EQ(cmd_run(options, sink, sink), kExitOk);
  EXPECT_NE(test_util::read_file(dir / "a" / "trajectory.csv"),
            test_util::read_file(dir / "c" / "trajectory.csv"));
}

TEST(RunTest, MetaSummaryListsCopies) {
  json root = base_config();
  root["game"] = {{"algorithm", "meta_tuner"}, {"T", 8}};
  const RunResult result = run_game(parse_config(root), 3);
  const json summary = result.summary();
  ASSERT_EQ(summary["copies"].size(), 3u);
  EXPECT_EQ(summary["copies"][0]["epsilon"], 1.0);
  EXPECT_EQ(summary["copies"][1]["epsilon"], 0.5);
  EXPECT_EQ(summary["copies"][2]["epsilon"], 0.25);
  EXPECT_EQ(summary["feedback"], "expected");
  EXPECT_TRUE(summary.contains("meta_overhead_bound"));
  double best = result.copies[0].theorem1_bound;
  for (const CopySummary& c : result.copies) best = std::min(best, c.theorem1_bound);
  EXPECT_DOUBLE_EQ(result.bound, best + meta_overhead_bound(8, 3));
}

TEST(RunTest, ManyExpertsBoundUsesFinalPacking) {
  const RunResult result = run_game(parse_config(base_config()), 5);
  ASSERT_TRUE(result.theorem1_bound.has_value());
  EXPECT_DOUBLE_EQ(result.bound,
                   theorem1_bound(result.trajectory.final_packing_size(),
                                  result.trajectory.final_phase(), 0.25, 50));
  EXPECT_TRUE(result.bound_holds());
  EXPECT_EQ(result.summary()["epsilon"], 0.25);
}

TEST(RunTest, TrajectoryCsvFormat) {
  GameTrajectory t;
  t.append(RoundRecord{1, ExpertId{3}, 0.5, 0.5, 0.0, 2, 1});
  t.append(RoundRecord{2, ExpertId{0}, -0.25, 0.0, 0.0, 4, 2});
  std::ostringstream out;
  write_trajectory_csv(out, t);
  EXPECT_EQ(out.str(),
            "t,phase,packing_size,chosen_expert,loss,cumulative_loss\n"
            "1,1,2,3,0.5,0.5\n"
            "2,2,4,0,-0.25,0.25\n");
}

TEST(RunTest, SeedStreamsDiffer) {
  EXPECT_NE(environment_seed(1), learner_seed(1));
  EXPECT_NE(environment_seed(1), environment_seed(2));
  EXPECT_EQ(learner_seed(9), learner_seed(9));
}

// ---------------------------------------------------------------------------
// sweep

TEST(SweepTest, SingleCellMatchesRun) {
  json root = base_config();
  root["sweep"] = {{"seeds", 1}};
  const RunConfig config = parse_config(root);
  const SweepTable table = run_sweep(config, 42, 1);
  ASSERT_EQ(table.rows.size(), 1u);  // one epsilon: no best_epsilon row
  EXPECT_EQ(table.rows[0].row_type, "cell");
  ASSERT_EQ(table.rows[0].regrets.size(), 1u);
  EXPECT_EQ(table.rows[0].regrets[0], run_game(config, 42).ledger.regret);
}

TEST(SweepTest, GridShapeAndSeeds) {
  const RunConfig config = load_config(test_util::data_dir() / "clustered_sweep.json");
  const SweepTable table = run_sweep(config, 100, 1);
  std::size_t cells = 0;
  std::size_t best = 0;
  std::size_t meta = 0;
  for (const SweepRow& row : table.rows) {
    if (row.row_type == "cell") ++cells;
    if (row.row_type == "best_epsilon") ++best;
    if (row.row_type == "meta_tuner") ++meta;
    EXPECT_EQ(row.regrets.size(), 4u);
  }
  EXPECT_EQ(cells, 3u);
  EXPECT_EQ(best, 1u);
  EXPECT_EQ(meta, 1u);
  EXPECT_EQ(table.failed_runs, 0u);
  // Seeds are master, master + 1, ...
  RunConfig single = config;
  single.game.epsilon = 0.5;
  for (const SweepRow& row : table.rows) {
    if (row.row_type == "cell" && row.epsilon == 0.5) {
      EXPECT_EQ(row.regrets[2], run_game(single, 102).ledger.regret);
    }
  }
}

TEST(SweepTest, EnvironmentGridCrossesEpsilons) {
  json root = base_config();
  root["sweep"] = {{"seeds", 2},
                   {"epsilon", {0.25, 0.5}},
                   {"environment", {{"d", {1, 2, 3}}}},
                   {"include_meta", false}};
  const SweepTable table = run_sweep(parse_config(root), 1, 1);
  EXPECT_EQ(table.parameter_names, (std::vector<std::string>{"d"}));
  std::size_t cells = 0;
  for (const SweepRow& row : table.rows) {
    if (row.row_type == "cell") ++cells;
    EXPECT_NE(row.row_type, "meta_tuner");
  }
  EXPECT_EQ(cells, 6u);
}

TEST(SweepTest, DeterministicAcrossRunsAndThreads) {
  const RunConfig config = load_config(test_util::data_dir() / "clustered_sweep.json");
  std::ostringstream a;
  std::ostringstream b;
  std::ostringstream c;
  write_sweep_csv(a, run_sweep(config, 5, 1));
  write_sweep_csv(b, run_sweep(config, 5, 1));
  write_sweep_csv(c, run_sweep(config, 5, 3));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str(), c.str());
}

TEST(SweepTest, FiftySeedInvocationsWriteIdenticalTables) {
  TempDir dir;
  CommandOptions options;
  options.config = test_util::data_dir() / "clustered_sweep.json";
  options.overrides = {"sweep.seeds=50"};
  options.seed = 2026;
  std::ostringstream sink;
  options.out_dir = dir / "a";
  ASSERT_EQ(cmd_sweep(options, sink, sink), kExitOk);
  options.out_dir = dir / "b";
  options.parallelism = 2;
  ASSERT_EQ(cmd_sweep(options, sink, sink), kExitOk);
  EXPECT_EQ(test_util::read_file(dir / "a" / "sweep.csv"),
            test_util::read_file(dir / "b" / "sweep.csv"));
  EXPECT_EQ(test_util::read_file(dir / "a" / "sweep.json"),
            test_util::read_file(dir / "b" / "sweep.json"));
}

// Binary losses are 2 apart or equal, so every epsilon below 1 admits the
// same experts at the same rounds; epsilon = 1 never admits anyone.
TEST(SweepTest, ClusteredEpsilonGridIsFlatBelowOne) {
  const RunConfig config = load_config(test_util::data_dir() / "clustered_sweep.json");
  const SweepTable table = run_sweep(config, 7, 1);
  const SweepRow* quarter = nullptr;
  const SweepRow* half = nullptr;
  const SweepRow* one = nullptr;
  for (const SweepRow& row : table.rows) {
    if (row.row_type != "cell") continue;
    if (row.epsilon == 0.25) quarter = &row;
    if (row.epsilon == 0.5) half = &row;
    if (row.epsilon == 1.0) one = &row;
  }
  ASSERT_TRUE(quarter && half && one);
  EXPECT_EQ(quarter->regrets, half->regrets);
  EXPECT_EQ(quarter->packing_sizes, half->packing_sizes);
  for (double k : one->packing_sizes) EXPECT_EQ(k, 1.0);
  for (double k : half->packing_sizes) EXPECT_LE(k, 6.0);
}

TEST(SweepTest, StatsHelpers) {
  SweepRow row;
  EXPECT_EQ(row.stderr_regret(), 0.0);
  row.regrets = {1.0, 3.0};
  EXPECT_DOUBLE_EQ(row.mean_regret(), 2.0);
  EXPECT_DOUBLE_EQ(row.stderr_regret(), 1.0);
}

TEST(SweepTest, CellFailuresGiveNonZeroExit) {
  TempDir dir;
  json root = json::parse(R"({
    "game": {"algorithm": "many_experts", "T": 4, "epsilon": 0.5},
    "environment": {"kind": "clustered_binary", "K": 100, "N": 4},
    "sweep": {"seeds": 2, "environment": {"N": [4, 20]}}
  })");
  CommandOptions options;
  options.config = write_config(dir, root);
  options.seed = 1;
  options.out_dir = dir / "out";
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_sweep(options, out, err), kExitBoundViolation);
  EXPECT_NE(err.str().find("failed"), std::string::npos);
  const std::string csv = test_util::read_file(dir / "out" / "sweep.csv");
  EXPECT_NE(csv.find("too many distinct binary rows"), std::string::npos);
  EXPECT_TRUE(std::filesystem::exists(dir / "out" / "sweep.json"));
}

TEST(SweepTest, RequiresSeedAndSection) {
  TempDir dir;
  CommandOptions options;
  options.config = write_config(dir, base_config());
  options.out_dir = dir / "out";
  std::ostringstream sink;
  EXPECT_EQ(cmd_sweep(options, sink, sink), kExitConfigError);
  options.seed = 1;
  EXPECT_EQ(cmd_sweep(options, sink, sink), kExitConfigError);  // no sweep section
}

// ---------------------------------------------------------------------------
// exit codes

TEST(ExitCodeTest, ConfigErrors) {
  TempDir dir;
  CommandOptions options;
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_run(options, out, err), kExitConfigError);  // no --config
  options.config = dir / "absent.json";
  EXPECT_EQ(cmd_run(options, out, err), kExitConfigError);
  json root = base_config();
  root["game"]["epsilon"] = 0.0;
  options.config = write_config(dir, root);
  err.str("");
  EXPECT_EQ(cmd_run(options, out, err), kExitConfigError);
  EXPECT_NE(err.str().find("game.epsilon"), std::string::npos) << err.str();
  options.config = write_config(dir, base_config());
  options.overrides = {"environment.d=99"};
  EXPECT_EQ(cmd_run(options, out, err), kExitConfigError);

  test_util::write_file(dir / "wide.csv", "0.5,1.5\n");
  const json wide = {{"game", {{"algorithm", "hedge"}}},
                     {"environment", {{"kind", "finite_matrix"}, {"path", "wide.csv"}}}};
  options.config = write_config(dir, wide, "wide.json");
  options.overrides.clear();
  err.str("");
  EXPECT_EQ(cmd_run(options, out, err), kExitConfigError);
  EXPECT_NE(err.str().find("outside [-1, 1]"), std::string::npos) << err.str();
}

TEST(ExitCodeTest, IoErrors) {
  TempDir dir;
  test_util::write_file(dir / "blocker", "x");
  CommandOptions options;
  options.config = write_config(dir, base_config());
  options.out_dir = dir / "blocker" / "out";
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_run(options, out, err), kExitIoError) << err.str();

  const json missing = {{"game", {{"algorithm", "hedge"}}},
                        {"environment", {{"kind", "finite_matrix"}, {"path", "nowhere.bin"}}}};
  options.config = write_config(dir, missing, "missing.json");
  options.out_dir = dir / "out";
  EXPECT_EQ(cmd_run(options, out, err), kExitIoError) << err.str();
}

// ---------------------------------------------------------------------------
// export-env

TEST(ExportEnvTest, BinaryRoundTripAndReplay) {
  TempDir dir;
  const json env_only = json::parse(
      R"({"environment": {"kind": "sparse_dictionary", "T": 40, "K": 25, "n": 5, "k": 2,
                          "epsilon_noise": 0.05}})");
  CommandOptions options;
  options.config = write_config(dir, env_only);
  options.seed = 9;
  options.out_dir = dir / "export";
  options.format = MatrixFormat::kBinary;
  std::ostringstream out;
  std::ostringstream err;
  ASSERT_EQ(cmd_export_env(options, out, err), kExitOk) << err.str();

  const json sidecar = load_json(dir / "export" / "environment.json");
  EXPECT_EQ(sidecar["matrix"], "environment.bin");
  EXPECT_EQ(sidecar["T"], 40);
  EXPECT_EQ(sidecar["K"], 25);
  EXPECT_EQ(sidecar["environment_seed"], environment_seed(9));
  EXPECT_TRUE(sidecar["ground_truth"].contains("D"));

  // Regenerating from the sidecar reproduces the file bit for bit.
  const LossMatrix loaded = load_matrix(dir / "export" / "environment.bin");
  const GeneratedEnvironment again = make_environment(
      EnvironmentSpec::from_json(sidecar["spec"]), sidecar["environment_seed"].get<std::uint64_t>());
  std::ostringstream a;
  std::ostringstream b;
  write_binary_matrix(a, loaded);
  write_binary_matrix(b, materialize(*again.oracle));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str(), test_util::read_file(dir / "export" / "environment.bin"));

  // A game on the exported matrix replays the game on the generator.
  json generated = env_only;
  generated["game"] = {{"algorithm", "many_experts"}, {"epsilon", 0.25}};
  json finite = {{"game", generated["game"]},
                 {"environment", {{"kind", "finite_matrix"}, {"path", "export/environment.bin"}}}};
  const RunResult from_generator = run_game(parse_config(generated), 9);
  const RunResult from_file = run_game(load_config(write_config(dir, finite, "finite.json")), 9);
  EXPECT_EQ(from_generator.trajectory.rounds, from_file.trajectory.rounds);
  EXPECT_EQ(from_generator.ledger.regret, from_file.ledger.regret);
}

TEST(ExportEnvTest, CsvExport) {
  TempDir dir;
  CommandOptions options;
  options.config = test_util::data_dir() / "hedge_iid.json";
  options.seed = 2;
  options.out_dir = dir.path();
  std::ostringstream sink;
  ASSERT_EQ(cmd_export_env(options, sink, sink), kExitOk);
  const LossMatrix m = load_matrix(dir / "environment.csv");
  EXPECT_EQ(m.rounds(), 100u);
  EXPECT_EQ(m.experts(), 2u);
  EXPECT_EQ(load_json(dir / "environment.json")["format"], "csv");
}

// ---------------------------------------------------------------------------
// validate

TEST(ValidateTest, UnknownSuiteAndMissingSeed) {
  CommandOptions options;
  std::ostringstream out;
  std::ostringstream err;
  options.seed = 1;
  EXPECT_EQ(cmd_validate("no_such_suite", options, out, err), kExitConfigError);
  EXPECT_NE(err.str().find("lemma1"), std::string::npos);
  options.seed.reset();
  EXPECT_EQ(cmd_validate("logsum", options, out, err), kExitConfigError);
}

TEST(ValidateTest, LogsumPasses) {
  CommandOptions options;
  options.seed = 3;
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(cmd_validate("logsum", options, out, err), kExitOk) << err.str();
  EXPECT_EQ(out.str().rfind("PASS logsum:", 0), 0u) << out.str();
}

TEST(ValidateTest, SuiteRegistry) {
  std::vector<std::string> names;
  for (const SuiteInfo& s : suites()) names.emplace_back(s.name);
  for (const char* expected : {"lemma1", "duality", "theorem1", "packing", "corollary3",
                               "lower_bound", "meta", "logsum", "robustness",
                               "reproducibility"}) {
    EXPECT_NE(std::find(names.begin(), names.end(), expected), names.end()) << expected;
    EXPECT_TRUE(is_suite(expected));
  }
  EXPECT_FALSE(is_suite("everything"));
}

}  // namespace
}  // namespace expertcover::cli
