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

#include "expertcover/types.h"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include <spdlog/spdlog.h>

namespace expertcover {

double checked_loss(double value) {
  if (value >= -1.0 && value <= 1.0) return value;
  if (std::isfinite(value) && std::abs(value) - 1.0 < kLossClampSlack) {
    spdlog::warn("clamping loss {} into [-1, 1]", value);
    return value > 0 ? 1.0 : -1.0;
  }
  throw std::domain_error("loss " + std::to_string(value) +
                          " outside [-1, 1]");
}

LossMatrix::LossMatrix(std::size_t rounds, std::size_t experts, double fill)
    : rounds_(rounds), experts_(experts), values_(rounds * experts, fill) {}

LossMatrix::LossMatrix(std::size_t rounds, std::size_t experts,
                       std::vector<double> row_major)
    : rounds_(rounds), experts_(experts), values_(std::move(row_major)) {
  if (values_.size() != rounds * experts) {
    throw std::invalid_argument("loss matrix: expected " +
                                std::to_string(rounds * experts) +
                                " values, got " +
                                std::to_string(values_.size()));
  }
}

std::vector<double> LossMatrix::column(ExpertId i) const {
  if (i.index >= experts_) throw std::out_of_range("expert index");
  std::vector<double> out(rounds_);
  for (std::size_t t = 0; t < rounds_; ++t) {
    out[t] = values_[t * experts_ + i.index];
  }
  return out;
}

void LossMatrix::validate() {
  for (double& v : values_) v = checked_loss(v);
}

}  // namespace expertcover
