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

#include <cmath>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "expertcover/analysis.h"
#include "expertcover/environments.h"
#include "expertcover/hedge.h"
#include "expertcover/meta_tuner.h"

namespace expertcover {
namespace {

std::vector<double> grid_epsilons(const EpsilonGrid& grid) {
  std::vector<double> out;
  for (const EpsilonLevel& level : grid.levels) out.push_back(level.epsilon);
  return out;
}

TEST(EpsilonGridTest, Examples) {
  EXPECT_EQ(grid_epsilons(build_grid(2)), (std::vector<double>{1.0}));
  EXPECT_EQ(grid_epsilons(build_grid(8)), (std::vector<double>{1.0, 0.5, 0.25}));
  EXPECT_EQ(grid_epsilons(build_grid(9)).size(), 4u);
  const EpsilonGrid big = build_grid(1000);
  ASSERT_EQ(big.size(), 10u);
  EXPECT_EQ(big.levels.back().epsilon, 0.001953125);
  EXPECT_EQ(big.levels.back().level, 10);
}

TEST(EpsilonGridTest, SmallestLevelNearOneOverT) {
  for (Round t = 2; t <= 5000; t += 7) {
    const double smallest = build_grid(t).levels.back().epsilon;
    EXPECT_GE(smallest * static_cast<double>(t), 1.0);
    EXPECT_LT(smallest * static_cast<double>(t), 4.0);
  }
}

TEST(EpsilonGridTest, RejectsShortHorizon) {
  EXPECT_THROW(build_grid(1), std::invalid_argument);
  EXPECT_THROW(build_grid(0), std::invalid_argument);
}

TEST(MetaFeedbackTest, NamesRoundTrip) {
  for (MetaFeedback m : {MetaFeedback::kExpected, MetaFeedback::kRealized}) {
    EXPECT_EQ(parse_meta_feedback(to_string(m)), m);
  }
  EXPECT_THROW(parse_meta_feedback("sampled"), std::invalid_argument);
}

TEST(MetaOverheadTest, MatchesHedgeBound) {
  EXPECT_DOUBLE_EQ(meta_overhead_bound(1000, 10), 4.0 * std::sqrt(1000.0 * std::log(10.0)));
  EXPECT_DOUBLE_EQ(meta_overhead_bound(100, 1), 0.0);
}

TEST(PlayMetaTest, IdenticalExpertsGiveEqualLosses) {
  LossMatrix m(16, 5);
  for (Round t = 1; t <= 16; ++t) {
    for (std::size_t i = 0; i < 5; ++i) m.at(t, ExpertId{i}) = std::sin(static_cast<double>(t));
  }
  const MetaRun run = play_meta(MatrixOracle(m), 16, 3);
  ASSERT_EQ(run.copies.size(), 4u);
  for (std::size_t r = 0; r < run.copies.size(); ++r) {
    EXPECT_NEAR(run.copy_cumulative[r], run.copy_cumulative[0], 1e-12);
  }
  EXPECT_NEAR(empirical_regret(run.trajectory, m).regret, 0.0, 1e-12);
}

TEST(PlayMetaTest, CopiesMatchStandaloneRuns) {
  const LowRankEnvironment env = make_low_rank(64, 40, 2, 0.05, 5);
  const std::uint64_t seed = 77;
  for (MetaFeedback mode : {MetaFeedback::kExpected, MetaFeedback::kRealized}) {
    const MetaRun run = play_meta(env.oracle, 64, seed, mode);
    ASSERT_EQ(run.copies.size(), 6u);
    for (std::size_t r = 0; r < run.copies.size(); ++r) {
      Rng rng = Rng::derive(seed, r);
      const ManyExpertsRun alone =
          run_many_experts(env.oracle, 64, run.grid.levels[r].epsilon, rng);
      EXPECT_EQ(alone.trajectory, run.copies[r]);
      EXPECT_EQ(alone.final_state, run.copy_states[r]);
      EXPECT_NEAR(alone.trajectory.learner_cumulative, run.copy_cumulative[r], 1e-12);
    }
  }
}

TEST(PlayMetaTest, PlayedActionIsSelectedCopysAction) {
  auto env = make_clustered_binary(128, 300, 5, 2);
  const MetaRun run = play_meta(*env, 128, 9);
  ASSERT_EQ(run.selected.size(), 128u);
  for (std::size_t s = 0; s < run.trajectory.rounds.size(); ++s) {
    const RoundRecord& played = run.trajectory.rounds[s];
    const RoundRecord& copy = run.copies[run.selected[s]].rounds[s];
    EXPECT_EQ(played.chosen, copy.chosen);
    EXPECT_EQ(played.incurred, copy.incurred);
  }
}

TEST(PlayMetaTest, MetaWeightsFollowExpectedFeedback) {
  const LowRankEnvironment env = make_low_rank(32, 20, 2, 0.1, 8);
  const MetaRun run = play_meta(env.oracle, 32, 4);
  HedgeState meta(run.copies.size());
  for (std::size_t s = 0; s < 32; ++s) {
    std::vector<double> feedback;
    for (const GameTrajectory& copy : run.copies) feedback.push_back(copy.rounds[s].expected);
    meta.update(feedback);
  }
  EXPECT_EQ(meta, run.meta);
}

TEST(PlayMetaTest, RealizedModeRunsAndDiffers) {
  const LowRankEnvironment env = make_low_rank(64, 40, 2, 0.2, 6);
  const MetaRun expected = play_meta(env.oracle, 64, 1, MetaFeedback::kExpected);
  const MetaRun realized = play_meta(env.oracle, 64, 1, MetaFeedback::kRealized);
  // Copies do not see the meta feedback.
  EXPECT_EQ(expected.copies, realized.copies);
  EXPECT_EQ(realized.trajectory.rounds.size(), 64u);
  EXPECT_NE(expected.meta, realized.meta);
}

TEST(PlayMetaTest, Deterministic) {
  auto env = make_clustered_binary(64, 100, 4, 3);
  const MetaRun a = play_meta(*env, 64, 12);
  const MetaRun b = play_meta(*env, 64, 12);
  EXPECT_EQ(a.trajectory, b.trajectory);
  EXPECT_EQ(a.selected, b.selected);
  EXPECT_EQ(a.meta, b.meta);
}

TEST(PlayMetaTest, HorizonErrors) {
  MatrixOracle oracle(LossMatrix(4, 2, 0.0));
  EXPECT_THROW(play_meta(oracle, 5, 0), std::invalid_argument);
  EXPECT_THROW(play_meta(oracle, 1, 0), std::invalid_argument);
}

}  // namespace
}  // namespace expertcover
