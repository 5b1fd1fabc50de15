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

#include "expertcover/analysis.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "expertcover/rng.h"

namespace expertcover {
namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaskBits = 64;

void check_index(const LossMatrix& losses, ExpertId i) {
  if (i.index >= losses.experts()) {
    throw std::out_of_range("expert " + std::to_string(i.index) +
                            " out of range (K = " +
                            std::to_string(losses.experts()) + ")");
  }
}

// Relation masks over at most 64 experts: bit j of rows[i] is set when
// `related(d(i, j))`.
template <typename Related>
std::vector<Mask> relation_masks(const LossMatrix& losses, Related related) {
  const std::size_t k = losses.experts();
  const std::vector<double> d = distance_table(losses);
  std::vector<Mask> rows(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (related(d[i * k + j])) rows[i] |= Mask{1} << j;
    }
  }
  return rows;
}

std::vector<ExpertId> members_of(Mask m) {
  std::vector<ExpertId> out;
  while (m != 0) {
    out.push_back(ExpertId{static_cast<std::size_t>(std::countr_zero(m))});
    m &= m - 1;
  }
  return out;
}

class SetCoverSearch {
 public:
  explicit SetCoverSearch(std::vector<Mask> covers) : covers_(std::move(covers)) {}

  std::vector<std::size_t> solve(Mask universe) {
    best_ = greedy(universe);
    std::vector<std::size_t> chosen;
    search(universe, chosen);
    return best_;
  }

 private:
  std::vector<std::size_t> greedy(Mask uncovered) const {
    std::vector<std::size_t> picked;
    while (uncovered != 0) {
      std::size_t best_j = 0;
      int best_gain = -1;
      for (std::size_t j = 0; j < covers_.size(); ++j) {
        const int gain = std::popcount(covers_[j] & uncovered);
        if (gain > best_gain) {
          best_gain = gain;
          best_j = j;
        }
      }
      picked.push_back(best_j);
      uncovered &= ~covers_[best_j];
    }
    return picked;
  }

  void search(Mask uncovered, std::vector<std::size_t>& chosen) {
    if (uncovered == 0) {
      if (chosen.size() < best_.size()) best_ = chosen;
      return;
    }
    int widest = 0;
    for (Mask c : covers_) widest = std::max(widest, std::popcount(c & uncovered));
    const std::size_t remaining = static_cast<std::size_t>(std::popcount(uncovered));
    const std::size_t lower = (remaining + widest - 1) / static_cast<std::size_t>(widest);
    if (chosen.size() + lower >= best_.size()) return;

    // Some chosen expert must cover the lowest uncovered one.
    const Mask target = uncovered & (~uncovered + 1);
    std::vector<std::size_t> candidates;
    for (std::size_t j = 0; j < covers_.size(); ++j) {
      if ((covers_[j] & target) != 0) candidates.push_back(j);
    }
    // Drop candidates whose useful coverage is contained in another's.
    std::vector<std::size_t> kept;
    for (std::size_t a : candidates) {
      const Mask ca = covers_[a] & uncovered;
      bool dominated = false;
      for (std::size_t b : candidates) {
        if (a == b) continue;
        const Mask cb = covers_[b] & uncovered;
        if ((ca & ~cb) == 0 && (ca != cb || b < a)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(a);
    }
    std::sort(kept.begin(), kept.end(), [&](std::size_t a, std::size_t b) {
      const int ga = std::popcount(covers_[a] & uncovered);
      const int gb = std::popcount(covers_[b] & uncovered);
      return ga != gb ? ga > gb : a < b;
    });
    for (std::size_t j : kept) {
      chosen.push_back(j);
      search(uncovered & ~covers_[j], chosen);
      chosen.pop_back();
    }
  }

  std::vector<Mask> covers_;
  std::vector<std::size_t> best_;
};

class MaxCliqueSearch {
 public:
  explicit MaxCliqueSearch(std::vector<Mask> adjacency)
      : adjacency_(std::move(adjacency)) {}

  Mask solve(Mask vertices) {
    expand(0, vertices);
    return best_;
  }

 private:
  void expand(Mask clique, Mask candidates) {
    if (candidates == 0) {
      if (std::popcount(clique) > std::popcount(best_)) best_ = clique;
      return;
    }
    while (candidates != 0) {
      if (std::popcount(clique) + std::popcount(candidates) <= std::popcount(best_)) {
        return;
      }
      const Mask v = candidates & (~candidates + 1);
      const auto index = static_cast<std::size_t>(std::countr_zero(v));
      expand(clique | v, candidates & adjacency_[index]);
      candidates &= ~v;
    }
  }

  std::vector<Mask> adjacency_;
  Mask best_ = 0;
};

Mask full_mask(std::size_t k) {
  return k == kMaskBits ? ~Mask{0} : (Mask{1} << k) - 1;
}

}  // namespace

double expert_distance(const LossMatrix& losses, ExpertId i, ExpertId j) {
  check_index(losses, i);
  check_index(losses, j);
  double d = 0.0;
  for (Round t = 1; t <= static_cast<Round>(losses.rounds()); ++t) {
    d = std::max(d, std::abs(losses.at(t, i) - losses.at(t, j)));
  }
  return d;
}

double expert_distance(const LossOracle& oracle, ExpertId i, ExpertId j) {
  const std::size_t k = oracle.finite_experts();
  if (i.index >= k || j.index >= k) throw std::out_of_range("expert index");
  double d = 0.0;
  for (Round t = 1; t <= oracle.horizon(); ++t) {
    d = std::max(d, std::abs(oracle.loss(t, i) - oracle.loss(t, j)));
  }
  return d;
}

std::vector<double> distance_table(const LossMatrix& losses) {
  const std::size_t k = losses.experts();
  std::vector<double> d(k * k, 0.0);
  for (Round t = 1; t <= static_cast<Round>(losses.rounds()); ++t) {
    const auto row = losses.row(t);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const double gap = std::abs(row[i] - row[j]);
        if (gap > d[i * k + j]) {
          d[i * k + j] = gap;
          d[j * k + i] = gap;
        }
      }
    }
  }
  return d;
}

bool is_cover(const LossMatrix& losses, std::span<const ExpertId> set,
              double epsilon) {
  for (std::size_t i = 0; i < losses.experts(); ++i) {
    const bool covered = std::any_of(set.begin(), set.end(), [&](ExpertId j) {
      return expert_distance(losses, ExpertId{i}, j) <= epsilon;
    });
    if (!covered) return false;
  }
  return true;
}

bool is_packing(const LossMatrix& losses, std::span<const ExpertId> set,
                double epsilon) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      if (!(expert_distance(losses, set[a], set[b]) > epsilon)) return false;
    }
  }
  return true;
}

bool is_packing(const LossOracle& oracle, std::span<const ExpertId> set,
                double epsilon) {
  for (std::size_t a = 0; a < set.size(); ++a) {
    for (std::size_t b = a + 1; b < set.size(); ++b) {
      bool separated = false;
      for (Round t = 1; t <= oracle.horizon() && !separated; ++t) {
        separated = std::abs(oracle.loss(t, set[a]) - oracle.loss(t, set[b])) >
                    epsilon;
      }
      if (!separated) return false;
    }
  }
  return true;
}

std::optional<ExpertSet> covering_number_exact(const LossMatrix& losses,
                                               double epsilon,
                                               std::size_t budget) {
  const std::size_t k = losses.experts();
  if (k > std::min(budget, kMaskBits)) return std::nullopt;
  if (k == 0) return ExpertSet{};
  const double radius = std::max(epsilon, 0.0);
  SetCoverSearch search(
      relation_masks(losses, [radius](double d) { return d <= radius; }));
  ExpertSet result;
  for (std::size_t j : search.solve(full_mask(k))) {
    result.members.push_back(ExpertId{j});
  }
  std::sort(result.members.begin(), result.members.end());
  return result;
}

std::optional<ExpertSet> packing_number_exact(const LossMatrix& losses,
                                              double epsilon,
                                              std::size_t budget) {
  const std::size_t k = losses.experts();
  if (k > std::min(budget, kMaskBits)) return std::nullopt;
  if (k == 0) return ExpertSet{};
  std::vector<Mask> adjacency =
      relation_masks(losses, [epsilon](double d) { return d > epsilon; });
  for (std::size_t i = 0; i < k; ++i) adjacency[i] &= ~(Mask{1} << i);
  MaxCliqueSearch search(std::move(adjacency));
  return ExpertSet{members_of(search.solve(full_mask(k)))};
}

ExpertSet packing_greedy(const LossMatrix& losses, double epsilon,
                         PackingOrder order) {
  std::vector<std::size_t> sequence(losses.experts());
  std::iota(sequence.begin(), sequence.end(), std::size_t{0});
  if (order.kind == PackingOrder::Kind::kRandom) {
    Rng rng(order.seed);
    for (std::size_t i = 0; i + 1 < sequence.size(); ++i) {
      std::swap(sequence[i], sequence[i + rng.below(sequence.size() - i)]);
    }
  }
  ExpertSet admitted;
  for (std::size_t j : sequence) {
    const bool separated =
        std::all_of(admitted.members.begin(), admitted.members.end(),
                    [&](ExpertId a) {
                      return expert_distance(losses, ExpertId{j}, a) > epsilon;
                    });
    if (separated) admitted.members.push_back(ExpertId{j});
  }
  return admitted;
}

bool CoverReport::sandwich_holds() const {
  if (exact_cover) {
    if (greedy_packing_at_2eps > *exact_cover) return false;
    if (*exact_cover > greedy_packing_at_eps) return false;
    if (exact_packing_at_2eps && *exact_packing_at_2eps > *exact_cover) {
      return false;
    }
    if (exact_packing_at_eps && *exact_cover > *exact_packing_at_eps) {
      return false;
    }
  }
  return true;
}

CoverReport duality_certificate(const LossMatrix& losses, double epsilon,
                                std::size_t budget) {
  CoverReport report;
  report.epsilon = epsilon;
  report.greedy_at_eps_witness = packing_greedy(losses, epsilon);
  report.greedy_at_2eps_witness = packing_greedy(losses, 2.0 * epsilon);
  report.greedy_packing_at_eps = report.greedy_at_eps_witness.size();
  report.greedy_packing_at_2eps = report.greedy_at_2eps_witness.size();
  if (auto cover = covering_number_exact(losses, epsilon, budget)) {
    report.exact_cover = cover->size();
    report.cover_witness = std::move(*cover);
  }
  if (auto packing = packing_number_exact(losses, epsilon, budget)) {
    report.exact_packing_at_eps = packing->size();
    report.packing_at_eps_witness = std::move(*packing);
  }
  if (auto packing = packing_number_exact(losses, 2.0 * epsilon, budget)) {
    report.exact_packing_at_2eps = packing->size();
    report.packing_at_2eps_witness = std::move(*packing);
  }
  return report;
}

RegretLedger empirical_regret(const GameTrajectory& trajectory,
                              const LossOracle& oracle) {
  if (static_cast<Round>(trajectory.rounds.size()) != oracle.horizon()) {
    throw std::invalid_argument(
        "empirical_regret: trajectory has " +
        std::to_string(trajectory.rounds.size()) + " rounds, environment has " +
        std::to_string(oracle.horizon()));
  }
  const std::vector<double> sums = oracle.cumulative_losses();
  const auto best = std::min_element(sums.begin(), sums.end());
  RegretLedger ledger;
  ledger.learner_cumulative = trajectory.learner_cumulative;
  ledger.best_expert =
      ExpertId{static_cast<std::size_t>(std::distance(sums.begin(), best))};
  ledger.best_cumulative = *best;
  ledger.regret = ledger.learner_cumulative - ledger.best_cumulative;
  return ledger;
}

RegretLedger empirical_regret(const GameTrajectory& trajectory,
                              const LossMatrix& losses) {
  if (trajectory.rounds.size() != losses.rounds()) {
    throw std::invalid_argument("empirical_regret: length mismatch");
  }
  std::vector<double> sums(losses.experts(), 0.0);
  for (Round t = 1; t <= static_cast<Round>(losses.rounds()); ++t) {
    const auto row = losses.row(t);
    for (std::size_t i = 0; i < row.size(); ++i) sums[i] += row[i];
  }
  const auto best = std::min_element(sums.begin(), sums.end());
  RegretLedger ledger;
  ledger.learner_cumulative = trajectory.learner_cumulative;
  ledger.best_expert =
      ExpertId{static_cast<std::size_t>(std::distance(sums.begin(), best))};
  ledger.best_cumulative = *best;
  ledger.regret = ledger.learner_cumulative - ledger.best_cumulative;
  return ledger;
}

double VariationProfile::max() const {
  return per_expert.empty()
             ? 0.0
             : *std::max_element(per_expert.begin(), per_expert.end());
}

VariationProfile variation_profile(const LossMatrix& losses) {
  VariationProfile profile;
  profile.per_expert.assign(losses.experts(), 0.0);
  for (Round t = 1; t < static_cast<Round>(losses.rounds()); ++t) {
    const auto now = losses.row(t);
    const auto next = losses.row(t + 1);
    for (std::size_t i = 0; i < now.size(); ++i) {
      profile.per_expert[i] += std::abs(next[i] - now[i]);
    }
  }
  return profile;
}

bool logsum_bound_check(std::span<const std::uint64_t> sequence) {
  if (sequence.empty()) throw std::invalid_argument("logsum: empty sequence");
  if (sequence.front() != 1) {
    throw std::invalid_argument("logsum: sequence must start at 1");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < sequence.size(); ++i) {
    if (i > 0 && sequence[i] <= sequence[i - 1]) {
      throw std::invalid_argument("logsum: sequence must be strictly increasing");
    }
    sum += std::log(static_cast<double>(sequence[i]));
  }
  const double last = static_cast<double>(sequence.back());
  return sum <= 2.0 * last * std::log(last);
}

}  // namespace expertcover
