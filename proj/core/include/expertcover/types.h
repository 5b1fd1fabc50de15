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

#ifndef EXPERTCOVER_TYPES_H_
#define EXPERTCOVER_TYPES_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace expertcover {

// Rounds are 1-based: a game of horizon T plays rounds 1..T.
using Round = std::int64_t;

// Identifies an expert within an environment. Plain index, kept as a distinct
// type so that expert ids are not confused with positions inside an active set.
struct ExpertId {
  std::size_t index = 0;

  friend constexpr auto operator<=>(const ExpertId&,
                                    const ExpertId&) = default;
};

// Losses live in [-1, 1]. Values that overshoot by less than this amount are
// treated as rounding noise and clamped.
inline constexpr double kLossClampSlack = 1e-12;

// Validates a loss at an environment boundary. Clamps (with a warning) values
// within kLossClampSlack of the range; throws std::domain_error otherwise,
// including for NaN.
double checked_loss(double value);

// Dense T x K loss matrix, row-major: row t-1 holds the round-t losses of all
// K experts.
class LossMatrix {
 public:
  LossMatrix() = default;
  LossMatrix(std::size_t rounds, std::size_t experts, double fill = 0.0);
  LossMatrix(std::size_t rounds, std::size_t experts,
             std::vector<double> row_major);

  std::size_t rounds() const { return rounds_; }
  std::size_t experts() const { return experts_; }

  // t is 1-based.
  double at(Round t, ExpertId i) const {
    return values_[static_cast<std::size_t>(t - 1) * experts_ + i.index];
  }
  double& at(Round t, ExpertId i) {
    return values_[static_cast<std::size_t>(t - 1) * experts_ + i.index];
  }

  std::span<const double> row(Round t) const {
    return {values_.data() + static_cast<std::size_t>(t - 1) * experts_,
            experts_};
  }
  std::span<double> row(Round t) {
    return {values_.data() + static_cast<std::size_t>(t - 1) * experts_,
            experts_};
  }

  std::vector<double> column(ExpertId i) const;
  const std::vector<double>& values() const { return values_; }

  // Runs checked_loss over every entry.
  void validate();

  friend bool operator==(const LossMatrix&, const LossMatrix&) = default;

 private:
  std::size_t rounds_ = 0;
  std::size_t experts_ = 0;
  std::vector<double> values_;
};

}  // namespace expertcover

template <>
struct std::hash<expertcover::ExpertId> {
  std::size_t operator()(const expertcover::ExpertId& id) const noexcept {
    return std::hash<std::size_t>{}(id.index);
  }
};

#endif  // EXPERTCOVER_TYPES_H_
