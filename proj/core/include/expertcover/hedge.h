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

#ifndef EXPERTCOVER_HEDGE_H_
#define EXPERTCOVER_HEDGE_H_

#include <cstddef>
#include <span>
#include <vector>

#include "expertcover/game.h"
#include "expertcover/loss_oracle.h"
#include "expertcover/rng.h"

namespace expertcover {

// Anytime learning rate sqrt(8 ln(K) / t); zero for a single expert.
// Throws std::invalid_argument for t < 1 or K < 1.
double learning_rate(Round t, std::size_t num_experts);

// Exponential Weights over a fixed set of K experts. Weights are stored as
// natural logs; round() is the 1-based index of the next round to be played.
class HedgeState {
 public:
  // Fresh state: all weights 1, round 1.
  explicit HedgeState(std::size_t num_experts);
  // Throws std::invalid_argument on empty, non-finite, or a round below 1.
  HedgeState(std::vector<double> log_weights, Round round);

  std::size_t num_experts() const { return log_weights_.size(); }
  Round round() const { return round_; }
  std::span<const double> log_weights() const { return log_weights_; }

  // Normalized distribution; stable under arbitrary log-weight offsets.
  std::vector<double> distribution() const;
  void distribution(std::span<double> out) const;

  // w <- w * exp(-eta_t * l) with eta_t = learning_rate(round(), K), then
  // advances the round.
  void update(std::span<const double> losses);

  friend bool operator==(const HedgeState&, const HedgeState&) = default;

 private:
  std::vector<double> log_weights_;
  Round round_ = 1;
};

inline std::vector<double> distribution(const HedgeState& state) {
  return state.distribution();
}

inline HedgeState update(HedgeState state, std::span<const double> losses) {
  state.update(losses);
  return state;
}

// Plays Exponential Weights for T rounds over every expert of a finite oracle.
// Records packing_size = K and phase = 1 on every round.
GameTrajectory play_hedge(const LossOracle& oracle, Round horizon, Rng& rng);

// sqrt-regret guarantee of the anytime rate: 4 sqrt(T ln K).
double hedge_regret_bound(Round horizon, std::size_t num_experts);

}  // namespace expertcover

#endif  // EXPERTCOVER_HEDGE_H_
