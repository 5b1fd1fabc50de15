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

#ifndef EXPERTCOVER_GAME_H_
#define EXPERTCOVER_GAME_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "expertcover/rng.h"
#include "expertcover/types.h"

namespace expertcover {

// Draws index i with probability weights[i] / sum(weights), using exactly one
// engine advance. Throws std::domain_error("degenerate distribution") when the
// weights are empty, negative, non-finite or all zero.
ExpertId sample_categorical(std::span<const double> weights, Rng& rng);

// sum_i p(i) * l(i). p must sum to 1 within 1e-9.
double expected_loss(std::span<const double> distribution,
                     std::span<const double> losses);

// Shannon entropy (nats) of a probability vector.
double entropy(std::span<const double> distribution);

struct RoundRecord {
  Round t = 0;
  ExpertId chosen;
  double incurred = 0.0;
  // <p_t, l_t> under the distribution the action was sampled from.
  double expected = 0.0;
  double entropy = 0.0;
  // Active-set size and phase index at the end of the round, i.e. after any
  // expansion or restart the round triggered.
  std::size_t packing_size = 0;
  int phase = 1;

  friend bool operator==(const RoundRecord&, const RoundRecord&) = default;
};

struct GameTrajectory {
  std::vector<RoundRecord> rounds;
  double learner_cumulative = 0.0;
  std::uint64_t seed = 0;

  void append(const RoundRecord& record) {
    rounds.push_back(record);
    learner_cumulative += record.incurred;
  }

  // Final active-set size (K_p) and phase count (p); 0 for an empty game.
  std::size_t final_packing_size() const {
    return rounds.empty() ? 0 : rounds.back().packing_size;
  }
  int final_phase() const { return rounds.empty() ? 0 : rounds.back().phase; }

  friend bool operator==(const GameTrajectory&,
                         const GameTrajectory&) = default;
};

enum class Algorithm { kHedge, kManyExperts, kMetaTuner };

std::string_view to_string(Algorithm algorithm);
// Throws std::invalid_argument for unknown names.
Algorithm parse_algorithm(std::string_view name);

struct GameConfig {
  Round horizon = 1;
  double epsilon = 1.0;
  std::uint64_t seed = 0;
  Algorithm algorithm = Algorithm::kHedge;

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
};

}  // namespace expertcover

#endif  // EXPERTCOVER_GAME_H_
