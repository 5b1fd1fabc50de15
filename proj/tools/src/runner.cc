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

#include "expertcover/cli/runner.h"

#include <algorithm>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "expertcover/hedge.h"
#include "expertcover/many_experts.h"
#include "expertcover/matrix_io.h"
#include "expertcover/meta_tuner.h"
#include "expertcover/rng.h"

#ifndef EXPERTCOVER_VERSION
#define EXPERTCOVER_VERSION "unknown"
#endif

namespace expertcover::cli {

std::uint64_t environment_seed(std::uint64_t seed) {
  return Rng::derive_seed(seed, stream_id("environment"));
}

std::uint64_t learner_seed(std::uint64_t seed) {
  return Rng::derive_seed(seed, stream_id("learner"));
}

RunResult run_game(const RunConfig& config, std::uint64_t seed) {
  RunResult result;
  result.config = config;
  result.seed = seed;
  try {
    result.environment =
        make_environment(config.environment, environment_seed(seed));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  } catch (const std::domain_error& e) {
    // Out-of-range entries in a loss file.
    throw ConfigError("environment.path: " + std::string(e.what()));
  }
  const LossOracle& oracle = *result.environment.oracle;

  GameConfig& game = result.config.game;
  if (config.horizon_from_environment) game.horizon = oracle.horizon();
  if (game.horizon > oracle.horizon()) {
    throw ConfigError("game.T: exceeds the environment's " +
                      std::to_string(oracle.horizon()) + " rounds");
  }
  try {
    game.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("game.") + e.what());
  }
  game.seed = seed;

  const std::size_t k = oracle.finite_experts();
  result.lemma1_bound = hedge_regret_bound(game.horizon, k);
  switch (game.algorithm) {
    case Algorithm::kHedge: {
      Rng rng(learner_seed(seed));
      result.trajectory = play_hedge(oracle, game.horizon, rng);
      result.bound = result.lemma1_bound;
      break;
    }
    case Algorithm::kManyExperts: {
      Rng rng(learner_seed(seed));
      result.trajectory =
          play_many_experts(oracle, game.horizon, game.epsilon, rng);
      result.theorem1_bound = theorem1_bound(
          result.trajectory.final_packing_size(),
          result.trajectory.final_phase(), game.epsilon, game.horizon);
      result.bound = *result.theorem1_bound;
      break;
    }
    case Algorithm::kMetaTuner: {
      MetaRun run = play_meta(oracle, game.horizon, learner_seed(seed),
                              config.feedback);
      result.trajectory = std::move(run.trajectory);
      double best_copy_bound = std::numeric_limits<double>::infinity();
      for (std::size_t r = 0; r < run.copies.size(); ++r) {
        CopySummary copy;
        copy.epsilon = run.grid.levels[r].epsilon;
        copy.cumulative_loss = run.copy_cumulative[r];
        copy.packing_size = run.copies[r].final_packing_size();
        copy.phases = run.copies[r].final_phase();
        copy.theorem1_bound = theorem1_bound(copy.packing_size, copy.phases,
                                             copy.epsilon, game.horizon);
        best_copy_bound = std::min(best_copy_bound, copy.theorem1_bound);
        result.copies.push_back(copy);
      }
      result.bound =
          best_copy_bound + meta_overhead_bound(game.horizon, run.copies.size());
      break;
    }
  }
  result.ledger = empirical_regret(result.trajectory, oracle);
  for (CopySummary& copy : result.copies) {
    copy.regret = copy.cumulative_loss - result.ledger.best_cumulative;
  }
  return result;
}

nlohmann::json RunResult::summary() const {
  using nlohmann::json;
  const GameConfig& game = config.game;
  json j;
  j["algorithm"] = std::string(to_string(game.algorithm));
  j["T"] = game.horizon;
  j["K"] = environment.oracle->finite_experts();
  j["epsilon"] = game.algorithm == Algorithm::kManyExperts ? json(game.epsilon)
                                                           : json(nullptr);
  j["seed"] = seed;
  j["environment"] = environment.spec.to_json();
  j["environment_seed"] = environment.seed;
  j["learner_cumulative"] = ledger.learner_cumulative;
  j["best_expert"] = ledger.best_expert.index;
  j["best_cumulative"] = ledger.best_cumulative;
  j["regret"] = ledger.regret;
  j["lemma1_bound"] = lemma1_bound;
  j["theorem1_bound"] = theorem1_bound ? json(*theorem1_bound) : json(nullptr);
  j["K_p"] = trajectory.final_packing_size();
  j["p"] = trajectory.final_phase();
  j["bound"] = bound;
  j["bound_holds"] = bound_holds();
  if (game.algorithm == Algorithm::kMetaTuner) {
    j["feedback"] = std::string(to_string(config.feedback));
    j["meta_overhead_bound"] = meta_overhead_bound(game.horizon, copies.size());
    json list = json::array();
    for (const CopySummary& copy : copies) {
      list.push_back({{"epsilon", copy.epsilon},
                      {"cumulative_loss", copy.cumulative_loss},
                      {"regret", copy.regret},
                      {"K_p", copy.packing_size},
                      {"p", copy.phases},
                      {"theorem1_bound", copy.theorem1_bound}});
    }
    j["copies"] = std::move(list);
  }
  return j;
}

void write_trajectory_csv(std::ostream& out, const GameTrajectory& trajectory) {
  out << "t,phase,packing_size,chosen_expert,loss,cumulative_loss\n";
  double cumulative = 0.0;
  for (const RoundRecord& r : trajectory.rounds) {
    cumulative += r.incurred;
    out << r.t << ',' << r.phase << ',' << r.packing_size << ','
        << r.chosen.index << ',' << format_double(r.incurred) << ','
        << format_double(cumulative) << '\n';
  }
}

RunPaths write_run(const RunResult& result, const std::filesystem::path& out_dir,
                   double wall_seconds) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) {
    throw IoError("cannot create '" + out_dir.string() + "': " + ec.message());
  }
  RunPaths paths{out_dir / "trajectory.csv", out_dir / "summary.json",
                 out_dir / "manifest.json"};
  {
    std::ofstream out(paths.trajectory, std::ios::trunc);
    if (!out) {
      throw IoError("cannot open '" + paths.trajectory.string() + "' for writing");
    }
    write_trajectory_csv(out, result.trajectory);
    out.flush();
    if (!out) throw IoError("write failed: '" + paths.trajectory.string() + "'");
  }
  save_json(paths.summary, result.summary());
  save_json(paths.manifest,
            {{"config", result.config.to_json()},
             {"seed", result.seed},
             {"outputs",
              {{"trajectory", paths.trajectory.string()},
               {"summary", paths.summary.string()}}},
             {"code_version", EXPERTCOVER_VERSION},
             {"wall_time", wall_seconds}});
  return paths;
}

}  // namespace expertcover::cli
