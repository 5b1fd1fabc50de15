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

#ifndef EXPERTCOVER_MANY_EXPERTS_H_
#define EXPERTCOVER_MANY_EXPERTS_H_

#include <cstddef>
#include <vector>

#include "expertcover/game.h"
#include "expertcover/hedge.h"
#include "expertcover/loss_oracle.h"
#include "expertcover/rng.h"

namespace expertcover {

// Exponential Weights for many experts: maintains a growing 2*epsilon-packing
// S of the realized loss sequence and runs Hedge over S, restarting Hedge
// whenever S grows.

struct PhaseStart {
  Round start = 0;         // tau_r; the first round of phase r is start + 1
  std::size_t experts = 0;  // K_r

  friend bool operator==(const PhaseStart&, const PhaseStart&) = default;
};

struct Admission {
  ExpertId expert;
  Round round = 0;  // 0 for the initial expert

  friend bool operator==(const Admission&, const Admission&) = default;
};

struct PackingState {
  // Starts with the single expert `initial`: phase 1, tau_1 = 0, K_1 = 1.
  // Throws std::invalid_argument unless 0 < epsilon <= 1.
  PackingState(double epsilon, ExpertId initial = ExpertId{0});

  std::vector<ExpertId> active;  // S, in admission order
  std::vector<Admission> admissions;
  int phase = 1;
  Round phase_start = 0;
  HedgeState inner;
  double epsilon;
  std::vector<PhaseStart> restarts;

  double threshold() const { return 2.0 * epsilon; }
  // Throws std::logic_error if an invariant is broken.
  void check_invariants() const;

  friend bool operator==(const PackingState&, const PackingState&) = default;
};

// Admits uncovered experts at round t until every expert is within 2*epsilon
// of S. Returns the admitted experts in order.
std::vector<ExpertId> expand_packing(PackingState& state, Round t,
                                     const LossOracle& oracle);

// Resets the inner Hedge over the current S (weights 1, clock 1) and opens
// phase r + 1 with tau_{r+1} = t.
void restart(PackingState& state, Round t);

// One round: samples from the inner Hedge over S, then expands S and either
// restarts or applies the Hedge update. The record carries the end-of-round
// |S| and phase.
RoundRecord play_round(PackingState& state, Round t, const LossOracle& oracle,
                       Rng& rng);

struct ManyExpertsRun {
  GameTrajectory trajectory;
  PackingState final_state;
};

// Full game, keeping the final packing state.
ManyExpertsRun run_many_experts(const LossOracle& oracle, Round horizon,
                                double epsilon, Rng& rng,
                                ExpertId initial = ExpertId{0});

GameTrajectory play_many_experts(const LossOracle& oracle, Round horizon,
                                 double epsilon, Rng& rng);

// 2*eps*T + 2p + 8 sqrt(T K_p ln K_p). Requires 1 <= p <= K_p and T >= 1.
double theorem1_bound(std::size_t final_packing_size, int phases,
                      double epsilon, Round horizon);

}  // namespace expertcover

#endif  // EXPERTCOVER_MANY_EXPERTS_H_
