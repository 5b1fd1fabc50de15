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

#include "expertcover/loss_oracle.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace expertcover {

std::size_t LossOracle::finite_experts() const {
  const auto k = num_experts();
  if (!k) throw std::logic_error("environment has an unbounded expert set");
  return *k;
}

void LossOracle::round_losses(Round t, std::span<double> out) const {
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = loss(t, ExpertId{i});
}

std::vector<double> LossOracle::cumulative_losses() const {
  const std::size_t k = finite_experts();
  std::vector<double> sums(k, 0.0);
  std::vector<double> row(k);
  for (Round t = 1; t <= horizon(); ++t) {
    round_losses(t, row);
    for (std::size_t i = 0; i < k; ++i) sums[i] += row[i];
  }
  return sums;
}

std::optional<ExpertId> LossOracle::uncovered_expert(
    Round t, std::span<const ExpertId> active, double threshold) const {
  std::vector<double> row(finite_experts());
  round_losses(t, row);
  std::vector<double> active_losses;
  active_losses.reserve(active.size());
  for (ExpertId i : active) active_losses.push_back(row[i.index]);
  return scan_uncovered(row, active_losses, threshold);
}

std::optional<ExpertId> scan_uncovered(std::span<const double> round_losses,
                                       std::span<const double> active_losses,
                                       double threshold) {
  if (round_losses.empty()) return std::nullopt;
  if (active_losses.empty()) return ExpertId{0};
  // At a single round the distance is one-dimensional, so the nearest active
  // value decides coverage.
  std::vector<double> sorted(active_losses.begin(), active_losses.end());
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t j = 0; j < round_losses.size(); ++j) {
    const double x = round_losses[j];
    const auto it = std::lower_bound(sorted.begin(), sorted.end(), x);
    bool covered = false;
    if (it != sorted.end() && std::abs(x - *it) <= threshold) covered = true;
    if (!covered && it != sorted.begin() &&
        std::abs(x - *std::prev(it)) <= threshold) {
      covered = true;
    }
    if (!covered) return ExpertId{j};
  }
  return std::nullopt;
}

MatrixOracle::MatrixOracle(LossMatrix matrix) : matrix_(std::move(matrix)) {
  matrix_.validate();
}

std::optional<ExpertId> MatrixOracle::uncovered_expert(
    Round t, std::span<const ExpertId> active, double threshold) const {
  const auto row = matrix_.row(t);
  std::vector<double> active_losses;
  active_losses.reserve(active.size());
  for (ExpertId i : active) active_losses.push_back(row[i.index]);
  return scan_uncovered(row, active_losses, threshold);
}

void MatrixOracle::round_losses(Round t, std::span<double> out) const {
  const auto row = matrix_.row(t);
  std::copy(row.begin(), row.end(), out.begin());
}

LossMatrix materialize(const LossOracle& oracle) {
  const std::size_t k = oracle.finite_experts();
  const auto rounds = static_cast<std::size_t>(oracle.horizon());
  LossMatrix out(rounds, k);
  for (Round t = 1; t <= oracle.horizon(); ++t) {
    oracle.round_losses(t, out.row(t));
  }
  return out;
}

}  // namespace expertcover
