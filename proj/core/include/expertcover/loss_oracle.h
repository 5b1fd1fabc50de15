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

#ifndef EXPERTCOVER_LOSS_ORACLE_H_
#define EXPERTCOVER_LOSS_ORACLE_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "expertcover/types.h"

namespace expertcover {

// The environment's side of the game: a fixed sequence of loss functions over
// experts, queried with full information.
//
// Implementations must be deterministic (the same query returns the same value)
// and must only return losses in [-1, 1].
class LossOracle {
 public:
  virtual ~LossOracle() = default;

  virtual double loss(Round t, ExpertId i) const = 0;

  // Expert count; nullopt means the expert set is unbounded.
  virtual std::optional<std::size_t> num_experts() const = 0;

  virtual Round horizon() const = 0;

  // Returns the smallest-index expert j such that |l_t(j) - l_t(i)| > threshold
  // for every i in active, or nullopt if no such expert exists. An empty active
  // set leaves every expert uncovered.
  //
  // The default scans all experts of a finite oracle. Unbounded oracles must
  // override it.
  virtual std::optional<ExpertId> uncovered_expert(
      Round t, std::span<const ExpertId> active, double threshold) const;

  // Writes l_t(i) for every expert into out (size num_experts()).
  virtual void round_losses(Round t, std::span<double> out) const;

  // Column sums sum_t l_t(i) over the whole horizon, one per expert.
  virtual std::vector<double> cumulative_losses() const;

  // Number of experts, throwing std::logic_error for unbounded oracles.
  std::size_t finite_experts() const;
};

// Index-order scan over a single round's losses. Exposed for oracles that can
// materialize a round cheaply and for testing smarter overrides against it.
std::optional<ExpertId> scan_uncovered(std::span<const double> round_losses,
                                       std::span<const double> active_losses,
                                       double threshold);

// Finite environment backed by a dense matrix.
class MatrixOracle final : public LossOracle {
 public:
  // Validates every entry (see checked_loss).
  explicit MatrixOracle(LossMatrix matrix);

  double loss(Round t, ExpertId i) const override { return matrix_.at(t, i); }
  std::optional<std::size_t> num_experts() const override {
    return matrix_.experts();
  }
  Round horizon() const override {
    return static_cast<Round>(matrix_.rounds());
  }
  std::optional<ExpertId> uncovered_expert(
      Round t, std::span<const ExpertId> active,
      double threshold) const override;
  void round_losses(Round t, std::span<double> out) const override;

  const LossMatrix& matrix() const { return matrix_; }

 private:
  LossMatrix matrix_;
};

// Copies an oracle into a dense matrix. Only sensible for small T x K.
LossMatrix materialize(const LossOracle& oracle);

}  // namespace expertcover

#endif  // EXPERTCOVER_LOSS_ORACLE_H_
