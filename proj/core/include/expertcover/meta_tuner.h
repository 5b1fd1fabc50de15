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

#ifndef EXPERTCOVER_META_TUNER_H_
#define EXPERTCOVER_META_TUNER_H_

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "expertcover/game.h"
#include "expertcover/loss_oracle.h"
#include "expertcover/many_experts.h"

namespace expertcover {

struct EpsilonLevel {
  int level = 1;  // r, 1-based
  double epsilon = 1.0;
};

// Accuracies 1, 1/2, ..., 2^-(R-1) with R = ceil(log2 T).
struct EpsilonGrid {
  std::vector<EpsilonLevel> levels;
  std::size_t size() const { return levels.size(); }
};

// Throws std::invalid_argument for T < 2.
EpsilonGrid build_grid(Round horizon);

// What the meta-hedge observes from each copy every round.
enum class MetaFeedback {
  kExpected,  // <p_t^(r), l_t>, the copy's expected loss
  kRealized,  // the loss of the action the copy sampled
};

std::string_view to_string(MetaFeedback mode);
MetaFeedback parse_meta_feedback(std::string_view name);

// Stream id of the meta-hedge's own sampler; copies use streams 0..R-1.
inline constexpr std::uint64_t kMetaStream = 0x6d657461ULL;

struct MetaRun {
  EpsilonGrid grid;
  // packing_size / phase record the maximum over copies.
  GameTrajectory trajectory;
  std::vector<GameTrajectory> copies;
  std::vector<PackingState> copy_states;
  std::vector<double> copy_cumulative;  // realized, per copy
  std::vector<std::size_t> selected;    // copy index played each round
  HedgeState meta;
};

// Runs R copies of the many-experts algorithm at the grid accuracies and hedges
// over them. Copy r draws from Rng::derive(seed, r); the meta-hedge from
// Rng::derive(seed, kMetaStream). Every copy sees the full loss function, so
// copy r's trajectory equals a standalone play_many_experts with the same
// stream.
MetaRun play_meta(const LossOracle& oracle, Round horizon, std::uint64_t seed,
                  MetaFeedback mode = MetaFeedback::kExpected);

// 4 sqrt(T ln R): the meta-hedge overhead against the best copy.
double meta_overhead_bound(Round horizon, std::size_t copies);

}  // namespace expertcover

#endif  // EXPERTCOVER_META_TUNER_H_
