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

#ifndef EXPERTCOVER_ANALYSIS_H_
#define EXPERTCOVER_ANALYSIS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "expertcover/game.h"
#include "expertcover/loss_oracle.h"
#include "expertcover/types.h"

namespace expertcover {

// Ground-truth measurements on realized loss sequences. Covers use
// "distance <= eps", packings use "distance > eps"; ties belong to covers.

// Exact searches refuse instances with more experts than this by default.
inline constexpr std::size_t kDefaultExactBudget = 24;

// max_t |l_t(i) - l_t(j)|. Throws std::out_of_range on a bad index.
double expert_distance(const LossMatrix& losses, ExpertId i, ExpertId j);
double expert_distance(const LossOracle& oracle, ExpertId i, ExpertId j);

// All pairwise distances, K x K row-major.
std::vector<double> distance_table(const LossMatrix& losses);

struct ExpertSet {
  std::vector<ExpertId> members;
  std::size_t size() const { return members.size(); }
};

bool is_cover(const LossMatrix& losses, std::span<const ExpertId> set,
              double epsilon);
bool is_packing(const LossMatrix& losses, std::span<const ExpertId> set,
                double epsilon);
// Pairwise check through the oracle; only touches the members' columns.
bool is_packing(const LossOracle& oracle, std::span<const ExpertId> set,
                double epsilon);

// Smallest epsilon-cover by branch and bound. Non-positive epsilon means
// identical columns only. nullopt when K exceeds the budget.
std::optional<ExpertSet> covering_number_exact(
    const LossMatrix& losses, double epsilon,
    std::size_t budget = kDefaultExactBudget);

// Largest epsilon-packing: maximum clique of the "> epsilon" separation graph.
std::optional<ExpertSet> packing_number_exact(
    const LossMatrix& losses, double epsilon,
    std::size_t budget = kDefaultExactBudget);

struct PackingOrder {
  enum class Kind { kIndex, kRandom };
  Kind kind = Kind::kIndex;
  std::uint64_t seed = 0;

  static PackingOrder index() { return {}; }
  static PackingOrder random(std::uint64_t seed) {
    return {Kind::kRandom, seed};
  }
};

// Greedy maximal epsilon-packing: admits each expert (in the given order) that
// is more than epsilon away from everything admitted so far. The result is
// also an epsilon-cover.
ExpertSet packing_greedy(const LossMatrix& losses, double epsilon,
                         PackingOrder order = PackingOrder::index());

struct CoverReport {
  double epsilon = 0.0;
  std::optional<std::size_t> exact_cover;
  std::optional<std::size_t> exact_packing_at_eps;
  std::optional<std::size_t> exact_packing_at_2eps;
  std::size_t greedy_packing_at_eps = 0;
  std::size_t greedy_packing_at_2eps = 0;
  ExpertSet cover_witness;
  ExpertSet packing_at_eps_witness;
  ExpertSet packing_at_2eps_witness;
  ExpertSet greedy_at_eps_witness;
  ExpertSet greedy_at_2eps_witness;

  // P(2e) <= N(e) <= P(e) on the exact quantities, and
  // greedy(2e) <= N(e) <= greedy(e). Vacuously true for absent fields.
  bool sandwich_holds() const;
};

// Exact N(eps), P(eps), P(2eps) plus the greedy bounds. Exact fields are
// absent when K exceeds the budget.
CoverReport duality_certificate(const LossMatrix& losses, double epsilon,
                                std::size_t budget = kDefaultExactBudget);

struct RegretLedger {
  double learner_cumulative = 0.0;
  ExpertId best_expert;
  double best_cumulative = 0.0;
  double regret = 0.0;
};

// Throws std::invalid_argument when the trajectory length differs from the
// oracle's horizon.
RegretLedger empirical_regret(const GameTrajectory& trajectory,
                              const LossOracle& oracle);
RegretLedger empirical_regret(const GameTrajectory& trajectory,
                              const LossMatrix& losses);

struct VariationProfile {
  std::vector<double> per_expert;
  double max() const;
};

// V(i) = sum_{t<T} |l_{t+1}(i) - l_t(i)|.
VariationProfile variation_profile(const LossMatrix& losses);

// sum ln a_i <= 2 a_n ln a_n for 1 = a_1 < a_2 < ... < a_n. Throws
// std::invalid_argument if the sequence is empty, does not start at 1, or is
// not strictly increasing.
bool logsum_bound_check(std::span<const std::uint64_t> sequence);

}  // namespace expertcover

#endif  // EXPERTCOVER_ANALYSIS_H_
