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

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "expertcover/game.h"
#include "expertcover/loss_oracle.h"
#include "expertcover/rng.h"
#include "expertcover/types.h"

namespace expertcover {
namespace {

TEST(CheckedLossTest, PassesValuesInRange) {
  EXPECT_EQ(checked_loss(-1.0), -1.0);
  EXPECT_EQ(checked_loss(0.25), 0.25);
  EXPECT_EQ(checked_loss(1.0), 1.0);
}

TEST(CheckedLossTest, ClampsRoundingNoise) {
  EXPECT_EQ(checked_loss(1.0 + 1e-14), 1.0);
  EXPECT_EQ(checked_loss(-1.0 - 1e-14), -1.0);
}

TEST(CheckedLossTest, RejectsRealViolations) {
  EXPECT_THROW(checked_loss(1.0 + 1e-6), std::domain_error);
  EXPECT_THROW(checked_loss(-2.0), std::domain_error);
  EXPECT_THROW(checked_loss(std::numeric_limits<double>::quiet_NaN()),
               std::domain_error);
}

TEST(LossMatrixTest, RowMajorLayout) {
  LossMatrix m(2, 3, {0.1, 0.2, 0.3, -0.1, -0.2, -0.3});
  EXPECT_EQ(m.at(1, ExpertId{2}), 0.3);
  EXPECT_EQ(m.at(2, ExpertId{0}), -0.1);
  EXPECT_EQ(m.column(ExpertId{1}), (std::vector<double>{0.2, -0.2}));
  EXPECT_THROW(LossMatrix(2, 2, std::vector<double>{1.0}), std::invalid_argument);
}

TEST(RngTest, SameSeedSameStream) {
  Rng a(42);
  Rng b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(RngTest, DerivedStreamsDiffer) {
  Rng a = Rng::derive(7, 0);
  Rng b = Rng::derive(7, 1);
  Rng c = Rng::derive(8, 0);
  const auto x = a.next_u64();
  EXPECT_NE(x, b.next_u64());
  EXPECT_NE(x, c.next_u64());
  EXPECT_EQ(Rng::derive(7, 0).next_u64(), x);
}

TEST(RngTest, UniformInUnitInterval) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RngTest, BelowStaysInRange) {
  Rng rng(3);
  for (std::uint64_t bound : {1ULL, 2ULL, 7ULL, 1000ULL}) {
    for (int i = 0; i < 1000; ++i) ASSERT_LT(rng.below(bound), bound);
  }
  EXPECT_THROW(rng.below(0), std::invalid_argument);
}

TEST(SampleCategoricalTest, Singleton) {
  Rng rng(5);
  const std::vector<double> w{1.0};
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_categorical(w, rng).index, 0u);
}

TEST(SampleCategoricalTest, ZeroMassExcluded) {
  Rng rng(5);
  const std::vector<double> w{0.0, 3.0};
  for (int i = 0; i < 1000; ++i) EXPECT_EQ(sample_categorical(w, rng).index, 1u);
}

TEST(SampleCategoricalTest, ConsumesOneAdvance) {
  Rng a(9);
  Rng b(9);
  const std::vector<double> w{0.2, 0.3, 0.5};
  sample_categorical(w, a);
  b.next_u64();
  EXPECT_EQ(a.next_u64(), b.next_u64());
}

TEST(SampleCategoricalTest, DegenerateInputs) {
  Rng rng(1);
  EXPECT_THROW(sample_categorical(std::vector<double>{}, rng), std::domain_error);
  EXPECT_THROW(sample_categorical(std::vector<double>{0.0, 0.0}, rng),
               std::domain_error);
  EXPECT_THROW(sample_categorical(
                   std::vector<double>{1.0, std::numeric_limits<double>::infinity()},
                   rng),
               std::domain_error);
  EXPECT_THROW(sample_categorical(std::vector<double>{1.0, -0.5}, rng),
               std::domain_error);
}

// Frequencies of a uniform 4-way draw: each within [0.235, 0.265] and a
// chi-square statistic below the 1% critical value for 3 degrees of freedom.
TEST(SampleCategoricalTest, UniformFrequencies) {
  constexpr int kDraws = 100000;
  constexpr double kChiSquare99 = 11.345;
  Rng rng(2024);
  const std::vector<double> w{1.0, 1.0, 1.0, 1.0};
  std::vector<int> counts(4, 0);
  for (int i = 0; i < kDraws; ++i) ++counts[sample_categorical(w, rng).index];
  double chi2 = 0.0;
  for (int c : counts) {
    const double freq = static_cast<double>(c) / kDraws;
    EXPECT_GE(freq, 0.235);
    EXPECT_LE(freq, 0.265);
    const double expected = kDraws / 4.0;
    chi2 += (c - expected) * (c - expected) / expected;
  }
  EXPECT_LT(chi2, kChiSquare99);
}

TEST(SampleCategoricalTest, NonUniformFrequencies) {
  constexpr int kDraws = 100000;
  constexpr double kChiSquare99 = 9.210;  // 2 degrees of freedom
  Rng rng(77);
  const std::vector<double> w{1.0, 2.0, 7.0};
  std::vector<int> counts(3, 0);
  for (int i = 0; i < kDraws; ++i) ++counts[sample_categorical(w, rng).index];
  double chi2 = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const double expected = kDraws * w[i] / 10.0;
    chi2 += (counts[i] - expected) * (counts[i] - expected) / expected;
  }
  EXPECT_LT(chi2, kChiSquare99);
}

TEST(ExpectedLossTest, Examples) {
  EXPECT_DOUBLE_EQ(expected_loss(std::vector<double>{1, 0},
                                 std::vector<double>{0.5, -1}),
                   0.5);
  EXPECT_DOUBLE_EQ(expected_loss(std::vector<double>{0.5, 0.5},
                                 std::vector<double>{1, -1}),
                   0.0);
  EXPECT_DOUBLE_EQ(expected_loss(std::vector<double>{0.25, 0.75},
                                 std::vector<double>{-1, 1}),
                   0.5);
}

TEST(ExpectedLossTest, Errors) {
  EXPECT_THROW(expected_loss(std::vector<double>{1.0}, std::vector<double>{0, 0}),
               std::invalid_argument);
  EXPECT_THROW(expected_loss(std::vector<double>{0.5, 0.4},
                             std::vector<double>{0, 0}),
               std::invalid_argument);
}

TEST(GameConfigTest, Validation) {
  GameConfig config;
  config.horizon = 10;
  config.epsilon = 0.5;
  EXPECT_NO_THROW(config.validate());
  config.epsilon = 0.0;
  EXPECT_THROW(config.validate(), std::invalid_argument);
  config.epsilon = 1.5;
  EXPECT_THROW(config.validate(), std::invalid_argument);
  config.epsilon = 1.0;
  config.horizon = 0;
  EXPECT_THROW(config.validate(), std::invalid_argument);
}

TEST(AlgorithmTest, NamesRoundTrip) {
  for (auto a : {Algorithm::kHedge, Algorithm::kManyExperts, Algorithm::kMetaTuner}) {
    EXPECT_EQ(parse_algorithm(to_string(a)), a);
  }
  EXPECT_THROW(parse_algorithm("ftrl"), std::invalid_argument);
}

// Brute-force reading of the uncovered-expert contract.
std::optional<ExpertId> brute_uncovered(std::span<const double> row,
                                        std::span<const ExpertId> active,
                                        double threshold) {
  for (std::size_t j = 0; j < row.size(); ++j) {
    bool far_from_all = true;
    for (ExpertId i : active) {
      if (std::abs(row[j] - row[i.index]) <= threshold) far_from_all = false;
    }
    if (far_from_all) return ExpertId{j};
  }
  return std::nullopt;
}

TEST(UncoveredExpertTest, MatchesBruteForceScan) {
  Rng rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::size_t k = 1 + rng.below(30);
    std::vector<double> row(k);
    // Coarse grid so ties at exactly the threshold occur.
    for (double& v : row) v = -1.0 + 0.25 * static_cast<double>(rng.below(9));
    std::vector<ExpertId> active;
    for (std::size_t j = 0; j < k; ++j) {
      if (rng.below(4) == 0) active.push_back(ExpertId{j});
    }
    const double threshold = 0.25 * static_cast<double>(rng.below(5));
    std::vector<double> active_losses;
    for (ExpertId i : active) active_losses.push_back(row[i.index]);
    ASSERT_EQ(scan_uncovered(row, active_losses, threshold),
              brute_uncovered(row, active, threshold));

    MatrixOracle oracle(LossMatrix(1, k, row));
    ASSERT_EQ(oracle.uncovered_expert(1, active, threshold),
              brute_uncovered(row, active, threshold));
  }
}

TEST(UncoveredExpertTest, EmptyActiveSetLeavesExpertZero) {
  MatrixOracle oracle(LossMatrix(1, 3, {0.0, 0.1, 0.2}));
  EXPECT_EQ(oracle.uncovered_expert(1, {}, 1.0), ExpertId{0});
}

TEST(MatrixOracleTest, ValidatesRange) {
  EXPECT_THROW(MatrixOracle(LossMatrix(1, 2, {0.0, 1.5})), std::domain_error);
}

TEST(MatrixOracleTest, DefaultCumulativeLosses) {
  MatrixOracle oracle(LossMatrix(2, 2, {0.5, -1.0, 0.25, 1.0}));
  EXPECT_EQ(oracle.cumulative_losses(), (std::vector<double>{0.75, 0.0}));
  EXPECT_EQ(materialize(oracle), oracle.matrix());
}

}  // namespace
}  // namespace expertcover
