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

#include "expertcover/game.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace expertcover {

ExpertId sample_categorical(std::span<const double> weights, Rng& rng) {
  if (weights.empty()) throw std::domain_error("degenerate distribution");
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) {
      throw std::domain_error("degenerate distribution");
    }
    total += w;
  }
  if (!(total > 0.0) || !std::isfinite(total)) {
    throw std::domain_error("degenerate distribution");
  }
  const double target = rng.uniform() * total;
  double running = 0.0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0.0) continue;
    last_positive = i;
    running += weights[i];
    if (target < running) return ExpertId{i};
  }
  // Rounding left target at or above the accumulated total.
  return ExpertId{last_positive};
}

double expected_loss(std::span<const double> distribution,
                     std::span<const double> losses) {
  if (distribution.size() != losses.size()) {
    throw std::invalid_argument("expected_loss: length mismatch");
  }
  double mass = 0.0;
  double sum = 0.0;
  for (std::size_t i = 0; i < losses.size(); ++i) {
    mass += distribution[i];
    sum += distribution[i] * losses[i];
  }
  if (std::abs(mass - 1.0) > 1e-9) {
    throw std::invalid_argument("expected_loss: distribution sums to " +
                                std::to_string(mass));
  }
  return sum;
}

double entropy(std::span<const double> distribution) {
  double h = 0.0;
  for (double p : distribution) {
    if (p > 0.0) h -= p * std::log(p);
  }
  return h;
}

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kHedge:
      return "hedge";
    case Algorithm::kManyExperts:
      return "many_experts";
    case Algorithm::kMetaTuner:
      return "meta_tuner";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  if (name == "hedge") return Algorithm::kHedge;
  if (name == "many_experts") return Algorithm::kManyExperts;
  if (name == "meta_tuner") return Algorithm::kMetaTuner;
  throw std::invalid_argument("algorithm: unknown value '" + std::string(name) +
                              "'");
}

void GameConfig::validate() const {
  if (horizon < 1) throw std::invalid_argument("T: must be at least 1");
  if (!(epsilon > 0.0 && epsilon <= 1.0)) {
    throw std::invalid_argument("epsilon: must lie in (0, 1]");
  }
  if (algorithm == Algorithm::kMetaTuner && horizon < 2) {
    throw std::invalid_argument("T: meta_tuner needs at least 2 rounds");
  }
}

}  // namespace expertcover
