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

#include "expertcover/many_experts.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace expertcover {
namespace {

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon: must lie in (0, 1], got " +
                                std::to_string(epsilon));
  }
}

}  // namespace

PackingState::PackingState(double eps, ExpertId initial)
    : active{initial},
      admissions{Admission{initial, 0}},
      inner(1),
      epsilon(eps),
      restarts{PhaseStart{0, 1}} {
  check_epsilon(eps);
}

void PackingState::check_invariants() const {
  std::unordered_set<ExpertId> seen;
  for (ExpertId i : active) {
    if (!seen.insert(i).second) {
      throw std::logic_error("packing state: duplicate active expert");
    }
  }
  if (inner.num_experts() != active.size()) {
    throw std::logic_error("packing state: inner hedge size != |S|");
  }
  if (admissions.size() != active.size()) {
    throw std::logic_error("packing state: admission log out of sync");
  }
  if (restarts.empty() || static_cast<int>(restarts.size()) != phase) {
    throw std::logic_error("packing state: phase count mismatch");
  }
  for (std::size_t r = 1; r < restarts.size(); ++r) {
    if (restarts[r].start <= restarts[r - 1].start ||
        restarts[r].experts <= restarts[r - 1].experts) {
      throw std::logic_error("packing state: restarts not increasing");
    }
  }
  if (restarts.back().start != phase_start ||
      restarts.back().experts != active.size()) {
    throw std::logic_error("packing state: current phase not recorded");
  }
}

std::vector<ExpertId> expand_packing(PackingState& state, Round t,
                                     const LossOracle& oracle) {
  std::vector<ExpertId> added;
  while (const auto j = oracle.uncovered_expert(t, state.active,
                                                state.threshold())) {
    if (std::find(state.active.begin(), state.active.end(), *j) !=
        state.active.end()) {
      throw std::logic_error("uncovered_expert returned an active expert");
    }
    state.active.push_back(*j);
    state.admissions.push_back(Admission{*j, t});
    added.push_back(*j);
  }
  return added;
}

void restart(PackingState& state, Round t) {
  state.inner = HedgeState(state.active.size());
  state.phase += 1;
  state.phase_start = t;
  state.restarts.push_back(PhaseStart{t, state.active.size()});
}

RoundRecord play_round(PackingState& state, Round t, const LossOracle& oracle,
                       Rng& rng) {
  const std::size_t k = state.active.size();
  std::vector<double> p(k);
  std::vector<double> losses(k);
  state.inner.distribution(p);
  const ExpertId slot = sample_categorical(p, rng);
  for (std::size_t s = 0; s < k; ++s) {
    losses[s] = oracle.loss(t, state.active[s]);
  }

  RoundRecord record;
  record.t = t;
  record.chosen = state.active[slot.index];
  record.incurred = losses[slot.index];
  record.expected = expected_loss(p, losses);
  record.entropy = entropy(p);

  if (!expand_packing(state, t, oracle).empty()) {
    restart(state, t);
  } else {
    // eta_t = sqrt(8 ln K_r / (t - tau_r)) runs on the inner hedge's own clock.
    if (state.inner.round() != t - state.phase_start) {
      throw std::logic_error("many_experts: inner clock out of step");
    }
    state.inner.update(losses);
  }
  record.packing_size = state.active.size();
  record.phase = state.phase;
  return record;
}

ManyExpertsRun run_many_experts(const LossOracle& oracle, Round horizon,
                                double epsilon, Rng& rng, ExpertId initial) {
  check_epsilon(epsilon);
  if (horizon < 1) {
    throw std::invalid_argument("play_many_experts: T must be >= 1");
  }
  if (horizon > oracle.horizon()) {
    throw std::invalid_argument(
        "play_many_experts: T exceeds the environment horizon");
  }
  if (const auto k = oracle.num_experts(); k && initial.index >= *k) {
    throw std::invalid_argument("play_many_experts: initial expert out of range");
  }

  ManyExpertsRun run{GameTrajectory{}, PackingState(epsilon, initial)};
  PackingState& state = run.final_state;
  GameTrajectory& trajectory = run.trajectory;
  trajectory.seed = rng.seed();
  trajectory.rounds.reserve(static_cast<std::size_t>(horizon));

  for (Round t = 1; t <= horizon; ++t) {
    trajectory.append(play_round(state, t, oracle, rng));
  }
  return run;
}

GameTrajectory play_many_experts(const LossOracle& oracle, Round horizon,
                                 double epsilon, Rng& rng) {
  return run_many_experts(oracle, horizon, epsilon, rng).trajectory;
}

double theorem1_bound(std::size_t final_packing_size, int phases,
                      double epsilon, Round horizon) {
  if (phases < 1 || static_cast<std::size_t>(phases) > final_packing_size) {
    throw std::invalid_argument("theorem1_bound: need 1 <= p <= K_p");
  }
  if (horizon < 1) throw std::invalid_argument("theorem1_bound: T must be >= 1");
  if (!(epsilon >= 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("theorem1_bound: epsilon must be >= 0");
  }
  const double t = static_cast<double>(horizon);
  const double k = static_cast<double>(final_packing_size);
  return 2.0 * epsilon * t + 2.0 * phases + 8.0 * std::sqrt(t * k * std::log(k));
}

}  // namespace expertcover
