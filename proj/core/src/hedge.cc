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

#include "expertcover/hedge.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace expertcover {

double learning_rate(Round t, std::size_t num_experts) {
  if (t < 1) throw std::invalid_argument("learning_rate: t must be >= 1");
  if (num_experts < 1) {
    throw std::invalid_argument("learning_rate: K must be >= 1");
  }
  if (num_experts == 1) return 0.0;
  return std::sqrt(8.0 * std::log(static_cast<double>(num_experts)) /
                   static_cast<double>(t));
}

double hedge_regret_bound(Round horizon, std::size_t num_experts) {
  return 4.0 * std::sqrt(static_cast<double>(horizon) *
                         std::log(static_cast<double>(num_experts)));
}

HedgeState::HedgeState(std::size_t num_experts)
    : log_weights_(num_experts, 0.0) {
  if (num_experts == 0) {
    throw std::invalid_argument("HedgeState: need at least one expert");
  }
}

HedgeState::HedgeState(std::vector<double> log_weights, Round round)
    : log_weights_(std::move(log_weights)), round_(round) {
  if (log_weights_.empty()) {
    throw std::invalid_argument("HedgeState: need at least one expert");
  }
  if (round_ < 1) throw std::invalid_argument("HedgeState: round must be >= 1");
  for (double w : log_weights_) {
    if (!std::isfinite(w)) {
      throw std::invalid_argument("HedgeState: non-finite log weight");
    }
  }
}

void HedgeState::distribution(std::span<double> out) const {
  if (out.size() != log_weights_.size()) {
    throw std::invalid_argument("HedgeState::distribution: size mismatch");
  }
  const double m = *std::max_element(log_weights_.begin(), log_weights_.end());
  double total = 0.0;
  for (std::size_t i = 0; i < log_weights_.size(); ++i) {
    out[i] = std::exp(log_weights_[i] - m);
    total += out[i];
  }
  // total >= 1 because the maximal entry contributes exp(0).
  for (double& p : out) p /= total;
}

std::vector<double> HedgeState::distribution() const {
  std::vector<double> out(log_weights_.size());
  distribution(out);
  return out;
}

void HedgeState::update(std::span<const double> losses) {
  if (losses.size() != log_weights_.size()) {
    throw std::invalid_argument("HedgeState::update: expected " +
                                std::to_string(log_weights_.size()) +
                                " losses, got " +
                                std::to_string(losses.size()));
  }
  const double eta = learning_rate(round_, log_weights_.size());
  if (eta != 0.0) {
    for (std::size_t i = 0; i < losses.size(); ++i) {
      log_weights_[i] -= eta * losses[i];
    }
  }
  ++round_;
}

GameTrajectory play_hedge(const LossOracle& oracle, Round horizon, Rng& rng) {
  if (horizon < 1) throw std::invalid_argument("play_hedge: T must be >= 1");
  if (horizon > oracle.horizon()) {
    throw std::invalid_argument("play_hedge: T exceeds the environment horizon");
  }
  const std::size_t k = oracle.finite_experts();
  HedgeState state(k);
  std::vector<double> p(k);
  std::vector<double> losses(k);
  GameTrajectory trajectory;
  trajectory.seed = rng.seed();
  trajectory.rounds.reserve(static_cast<std::size_t>(horizon));
  for (Round t = 1; t <= horizon; ++t) {
    state.distribution(p);
    const ExpertId chosen = sample_categorical(p, rng);
    oracle.round_losses(t, losses);
    RoundRecord record;
    record.t = t;
    record.chosen = chosen;
    record.incurred = losses[chosen.index];
    record.expected = expected_loss(p, losses);
    record.entropy = entropy(p);
    record.packing_size = k;
    record.phase = 1;
    trajectory.append(record);
    state.update(losses);
  }
  return trajectory;
}

}  // namespace expertcover
