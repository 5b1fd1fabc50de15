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

#ifndef EXPERTCOVER_ENVIRONMENTS_H_
#define EXPERTCOVER_ENVIRONMENTS_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "expertcover/loss_oracle.h"
#include "expertcover/types.h"

namespace expertcover {

enum class EnvironmentKind {
  kFiniteMatrix,
  kClusteredBinary,
  kLowRank,
  kSparseDictionary,
  kBoundedVariation,
  kIidStochastic,
};

std::string_view to_string(EnvironmentKind kind);
// Throws std::invalid_argument for unknown names.
EnvironmentKind parse_environment_kind(std::string_view name);

enum class NoiseModel {
  kUniform,     // mean + U[-noise, noise], clipped to [-1, 1]
  kRademacher,  // +1 with probability (1 + mean) / 2, else -1
};

// Declarative description of an environment. Numeric parameters are looked up
// by name (T, K, N, d, n, k, epsilon_noise, noise); the finite-matrix kind reads
// `path`, the i.i.d. kind optionally takes explicit per-expert `means`.
struct EnvironmentSpec {
  EnvironmentKind kind = EnvironmentKind::kIidStochastic;
  std::map<std::string, double> parameters;
  std::vector<double> means;
  NoiseModel noise_model = NoiseModel::kUniform;
  std::string path;

  double get(const std::string& name) const;
  double get_or(const std::string& name, double fallback) const;
  std::size_t get_count(const std::string& name) const;

  // Throws std::invalid_argument naming the offending parameter.
  void validate() const;

  nlohmann::json to_json() const;
  static EnvironmentSpec from_json(const nlohmann::json& j);
};

// ---------------------------------------------------------------------------
// Binary clusters.

// K experts, each a copy of one of N distinct +-1 loss sequences. Rows are
// stored once per cluster, so K can be large.
class ClusteredBinaryEnvironment final : public LossOracle {
 public:
  ClusteredBinaryEnvironment(std::vector<std::int8_t> prototypes,
                             std::size_t horizon,
                             std::vector<std::uint32_t> assignment);

  double loss(Round t, ExpertId i) const override {
    return prototype_loss(assignment_[i.index], t);
  }
  std::optional<std::size_t> num_experts() const override {
    return assignment_.size();
  }
  Round horizon() const override { return static_cast<Round>(horizon_); }

  // Scans clusters instead of experts; returns the same expert as the
  // index-order scan.
  std::optional<ExpertId> uncovered_expert(
      Round t, std::span<const ExpertId> active,
      double threshold) const override;
  void round_losses(Round t, std::span<double> out) const override;
  std::vector<double> cumulative_losses() const override;

  std::size_t num_clusters() const { return first_member_.size(); }
  std::uint32_t cluster_of(ExpertId i) const { return assignment_[i.index]; }
  const std::vector<std::uint32_t>& assignment() const { return assignment_; }
  double prototype_loss(std::uint32_t cluster, Round t) const {
    return prototypes_[cluster * horizon_ + static_cast<std::size_t>(t - 1)];
  }

 private:
  std::vector<std::int8_t> prototypes_;  // N x T, +-1
  std::size_t horizon_;
  std::vector<std::uint32_t> assignment_;
  std::vector<ExpertId> first_member_;
  std::vector<double> cluster_sums_;
};

// Throws std::invalid_argument when N > K, N < 1, or N > 2^T ("too many
// distinct binary rows").
std::unique_ptr<ClusteredBinaryEnvironment> make_clustered_binary(
    std::size_t horizon, std::size_t num_experts, std::size_t num_clusters,
    std::uint64_t seed);

// ---------------------------------------------------------------------------
// Dense generators with exposed ground truth.

struct LowRankEnvironment {
  MatrixOracle oracle;
  Eigen::MatrixXd u;      // T x d
  Eigen::MatrixXd w;      // d x K
  Eigen::MatrixXd noise;  // T x K, |entries| <= epsilon_noise
  double epsilon_noise = 0.0;
};

// L = clip(U W + E) with |U W| <= 1 - epsilon_noise and |E| <= epsilon_noise.
// Requires 1 <= d <= min(T, K) and 0 <= epsilon_noise <= 1/4.
LowRankEnvironment make_low_rank(std::size_t horizon, std::size_t num_experts,
                                 std::size_t rank, double epsilon_noise,
                                 std::uint64_t seed);

struct SparseDictionaryEnvironment {
  MatrixOracle oracle;
  Eigen::MatrixXd dictionary;  // T x n, rows of 1-norm at most 1
  Eigen::MatrixXd codes;       // n x K, k-sparse columns in [-1, 1]
  Eigen::MatrixXd noise;       // T x K
  double epsilon_noise = 0.0;
};

// L = clip(D V + E). Requires 0 <= k <= n, n >= 1 and 0 <= epsilon_noise <=
// 1/4.
SparseDictionaryEnvironment make_sparse_dictionary(
    std::size_t horizon, std::size_t num_experts, std::size_t atoms,
    std::size_t sparsity, double epsilon_noise, std::uint64_t seed);

struct BoundedVariationEnvironment {
  MatrixOracle oracle;
  // Round at which each expert's loss turns to +1 for good; 0 if never.
  std::vector<Round> flip_round;
};

// Halving adversary: every expert starts at -1; each round floor(m/2) of the m
// experts still at -1 are picked uniformly and flipped to +1 permanently.
// Requires K >= 2; warns when K < 2^T.
BoundedVariationEnvironment make_bounded_variation_adversary(
    std::size_t horizon, std::size_t num_experts, std::uint64_t seed);

struct IidEnvironment {
  MatrixOracle oracle;
  std::vector<double> means;
};

// Independent per-expert losses, i.i.d. across rounds. For the uniform model
// the means must satisfy |mean| <= 1 and draws are clipped into [-1, 1].
IidEnvironment make_iid_stochastic(std::size_t horizon,
                                   std::vector<double> means, double noise,
                                   NoiseModel model, std::uint64_t seed);

// ---------------------------------------------------------------------------
// Spec-driven construction.

struct GeneratedEnvironment {
  EnvironmentSpec spec;
  std::uint64_t seed = 0;
  std::shared_ptr<const LossOracle> oracle;
  // Kind-specific structure (clusters, factors, flip rounds, means).
  nlohmann::json ground_truth;
};

// Validates the spec and builds the environment. Throws std::invalid_argument
// for bad specs and IoError when a finite matrix cannot be read.
GeneratedEnvironment make_environment(const EnvironmentSpec& spec,
                                      std::uint64_t seed);

}  // namespace expertcover

#endif  // EXPERTCOVER_ENVIRONMENTS_H_
