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

#include "expertcover/environments.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

#include <spdlog/spdlog.h>

#include "expertcover/matrix_io.h"
#include "expertcover/rng.h"

namespace expertcover {
namespace {

// Sub-streams of a generator seed, so that e.g. changing K does not shift the
// noise draws of a different component.
constexpr std::uint64_t kRowsStream = 1;
constexpr std::uint64_t kAssignStream = 2;
constexpr std::uint64_t kFactorStream = 3;
constexpr std::uint64_t kNoiseStream = 4;
constexpr std::uint64_t kSupportStream = 5;

// In-place partial Fisher-Yates: afterwards items[0, count) is a uniform
// random subset in random order.
template <typename T>
void partial_shuffle(std::vector<T>& items, std::size_t count, Rng& rng) {
  for (std::size_t i = 0; i < count && i + 1 < items.size(); ++i) {
    const std::size_t j = i + rng.below(items.size() - i);
    std::swap(items[i], items[j]);
  }
}

double clip(double x) { return std::clamp(x, -1.0, 1.0); }

Eigen::MatrixXd uniform_matrix(Eigen::Index rows, Eigen::Index cols, double lo,
                               double hi, Rng& rng) {
  Eigen::MatrixXd m(rows, cols);
  // Row-major fill order, independent of Eigen's storage order.
  for (Eigen::Index r = 0; r < rows; ++r) {
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = rng.uniform(lo, hi);
  }
  return m;
}

LossMatrix to_loss_matrix(const Eigen::MatrixXd& m) {
  LossMatrix out(static_cast<std::size_t>(m.rows()),
                 static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      out.at(r + 1, ExpertId{static_cast<std::size_t>(c)}) = m(r, c);
    }
  }
  return out;
}

nlohmann::json to_json_rows(const Eigen::MatrixXd& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

void check_noise(double epsilon_noise) {
  if (!(epsilon_noise >= 0.0 && epsilon_noise <= 0.25)) {
    throw std::invalid_argument("epsilon_noise: must lie in [0, 1/4]");
  }
}

void check_residual(const LossMatrix& losses, const Eigen::MatrixXd& structure,
                    double epsilon_noise) {
  for (Eigen::Index r = 0; r < structure.rows(); ++r) {
    for (Eigen::Index c = 0; c < structure.cols(); ++c) {
      const double l = losses.at(r + 1, ExpertId{static_cast<std::size_t>(c)});
      if (std::abs(l - structure(r, c)) > epsilon_noise + 1e-12) {
        throw std::logic_error("generator residual exceeds epsilon_noise");
      }
    }
  }
}

bool exceeds_power_of_two(std::size_t count, std::size_t exponent) {
  return exponent < 63 && count > (std::size_t{1} << exponent);
}

}  // namespace

// ---------------------------------------------------------------------------
// EnvironmentSpec

std::string_view to_string(EnvironmentKind kind) {
  switch (kind) {
    case EnvironmentKind::kFiniteMatrix:
      return "finite_matrix";
    case EnvironmentKind::kClusteredBinary:
      return "clustered_binary";
    case EnvironmentKind::kLowRank:
      return "low_rank";
    case EnvironmentKind::kSparseDictionary:
      return "sparse_dictionary";
    case EnvironmentKind::kBoundedVariation:
      return "bounded_variation";
    case EnvironmentKind::kIidStochastic:
      return "iid_stochastic";
  }
  return "unknown";
}

EnvironmentKind parse_environment_kind(std::string_view name) {
  for (auto kind :
       {EnvironmentKind::kFiniteMatrix, EnvironmentKind::kClusteredBinary,
        EnvironmentKind::kLowRank, EnvironmentKind::kSparseDictionary,
        EnvironmentKind::kBoundedVariation, EnvironmentKind::kIidStochastic}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("environment.kind: unknown value '" +
                              std::string(name) + "'");
}

double EnvironmentSpec::get(const std::string& name) const {
  const auto it = parameters.find(name);
  if (it == parameters.end()) {
    throw std::invalid_argument("environment." + name + ": missing");
  }
  return it->second;
}

double EnvironmentSpec::get_or(const std::string& name, double fallback) const {
  const auto it = parameters.find(name);
  return it == parameters.end() ? fallback : it->second;
}

std::size_t EnvironmentSpec::get_count(const std::string& name) const {
  const double v = get(name);
  if (!(v >= 0.0) || v != std::floor(v) || v > 4e9) {
    throw std::invalid_argument("environment." + name +
                                ": must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

void EnvironmentSpec::validate() const {
  auto require_positive = [&](const std::string& name) {
    if (get_count(name) < 1) {
      throw std::invalid_argument("environment." + name + ": must be >= 1");
    }
    return get_count(name);
  };
  auto check_noise_param = [&] {
    const double noise = get_or("epsilon_noise", 0.0);
    if (!(noise >= 0.0 && noise <= 0.25)) {
      throw std::invalid_argument(
          "environment.epsilon_noise: must lie in [0, 1/4]");
    }
  };
  switch (kind) {
    case EnvironmentKind::kFiniteMatrix:
      if (path.empty()) {
        throw std::invalid_argument("environment.path: missing");
      }
      return;
    case EnvironmentKind::kClusteredBinary: {
      const std::size_t t = require_positive("T");
      const std::size_t k = require_positive("K");
      const std::size_t n = require_positive("N");
      if (n > k) throw std::invalid_argument("environment.N: must be <= K");
      if (exceeds_power_of_two(n, t)) {
        throw std::invalid_argument(
            "environment.N: too many distinct binary rows");
      }
      return;
    }
    case EnvironmentKind::kLowRank: {
      const std::size_t t = require_positive("T");
      const std::size_t k = require_positive("K");
      const std::size_t d = require_positive("d");
      if (d > std::min(t, k)) {
        throw std::invalid_argument("environment.d: must be <= min(T, K)");
      }
      check_noise_param();
      return;
    }
    case EnvironmentKind::kSparseDictionary: {
      require_positive("T");
      require_positive("K");
      const std::size_t n = require_positive("n");
      if (get_count("k") > n) {
        throw std::invalid_argument("environment.k: must be <= n");
      }
      check_noise_param();
      return;
    }
    case EnvironmentKind::kBoundedVariation:
      require_positive("T");
      if (get_count("K") < 2) {
        throw std::invalid_argument("environment.K: must be >= 2");
      }
      return;
    case EnvironmentKind::kIidStochastic: {
      require_positive("T");
      const std::size_t k = require_positive("K");
      if (!means.empty() && means.size() != k) {
        throw std::invalid_argument("environment.means: expected K entries");
      }
      for (double m : means) {
        if (!(m >= -1.0 && m <= 1.0)) {
          throw std::invalid_argument(
              "environment.means: entries must lie in [-1, 1]");
        }
      }
      const double mean = get_or("mean", 0.0);
      if (!(mean >= -1.0 && mean <= 1.0)) {
        throw std::invalid_argument("environment.mean: must lie in [-1, 1]");
      }
      if (!(get_or("noise", 0.0) >= 0.0)) {
        throw std::invalid_argument("environment.noise: must be >= 0");
      }
      return;
    }
  }
}

nlohmann::json EnvironmentSpec::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  for (const auto& [name, value] : parameters) j[name] = value;
  if (!means.empty()) j["means"] = means;
  if (kind == EnvironmentKind::kIidStochastic) {
    j["noise_model"] =
        noise_model == NoiseModel::kRademacher ? "rademacher" : "uniform";
  }
  if (!path.empty()) j["path"] = path;
  return j;
}

EnvironmentSpec EnvironmentSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object()) {
    throw std::invalid_argument("environment: expected an object");
  }
  if (!j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("environment.kind: missing");
  }
  EnvironmentSpec spec;
  spec.kind = parse_environment_kind(j["kind"].get<std::string>());
  for (const auto& [name, value] : j.items()) {
    if (name == "kind") continue;
    if (name == "means") {
      if (!value.is_array()) {
        throw std::invalid_argument("environment.means: expected an array");
      }
      for (const auto& m : value) {
        if (!m.is_number()) {
          throw std::invalid_argument("environment.means: expected numbers");
        }
        spec.means.push_back(m.get<double>());
      }
    } else if (name == "noise_model") {
      const std::string model = value.is_string() ? value.get<std::string>() : "";
      if (model == "uniform") {
        spec.noise_model = NoiseModel::kUniform;
      } else if (model == "rademacher") {
        spec.noise_model = NoiseModel::kRademacher;
      } else {
        throw std::invalid_argument(
            "environment.noise_model: expected 'uniform' or 'rademacher'");
      }
    } else if (name == "path") {
      if (!value.is_string()) {
        throw std::invalid_argument("environment.path: expected a string");
      }
      spec.path = value.get<std::string>();
    } else if (value.is_number()) {
      spec.parameters[name] = value.get<double>();
    } else {
      throw std::invalid_argument("environment." + name +
                                  ": expected a number");
    }
  }
  return spec;
}

// ---------------------------------------------------------------------------
// Clustered binary

ClusteredBinaryEnvironment::ClusteredBinaryEnvironment(
    std::vector<std::int8_t> prototypes, std::size_t horizon,
    std::vector<std::uint32_t> assignment)
    : prototypes_(std::move(prototypes)),
      horizon_(horizon),
      assignment_(std::move(assignment)) {
  if (horizon_ == 0 || prototypes_.size() % horizon_ != 0) {
    throw std::invalid_argument("clustered_binary: bad prototype shape");
  }
  for (std::int8_t v : prototypes_) {
    if (v != 1 && v != -1) {
      throw std::invalid_argument("clustered_binary: losses must be +-1");
    }
  }
  const std::size_t clusters = prototypes_.size() / horizon_;
  const ExpertId unset{std::numeric_limits<std::size_t>::max()};
  first_member_.assign(clusters, unset);
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    const std::uint32_t c = assignment_[i];
    if (c >= clusters) {
      throw std::invalid_argument("clustered_binary: cluster out of range");
    }
    if (first_member_[c] == unset) first_member_[c] = ExpertId{i};
  }
  for (ExpertId first : first_member_) {
    if (first == unset) {
      throw std::invalid_argument("clustered_binary: empty cluster");
    }
  }
  cluster_sums_.assign(clusters, 0.0);
  for (std::size_t c = 0; c < clusters; ++c) {
    for (std::size_t t = 0; t < horizon_; ++t) {
      cluster_sums_[c] += prototypes_[c * horizon_ + t];
    }
  }
}

std::optional<ExpertId> ClusteredBinaryEnvironment::uncovered_expert(
    Round t, std::span<const ExpertId> active, double threshold) const {
  // Members of a cluster share their losses, so an expert is uncovered exactly
  // when its cluster's prototype is; the smallest uncovered index is then the
  // smallest first member among uncovered clusters.
  std::optional<ExpertId> best;
  for (std::uint32_t c = 0; c < first_member_.size(); ++c) {
    const double v = prototype_loss(c, t);
    bool covered = false;
    for (ExpertId i : active) {
      if (std::abs(v - loss(t, i)) <= threshold) {
        covered = true;
        break;
      }
    }
    if (!covered && (!best || first_member_[c] < *best)) {
      best = first_member_[c];
    }
  }
  return best;
}

void ClusteredBinaryEnvironment::round_losses(Round t,
                                              std::span<double> out) const {
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    out[i] = prototype_loss(assignment_[i], t);
  }
}

std::vector<double> ClusteredBinaryEnvironment::cumulative_losses() const {
  std::vector<double> sums(assignment_.size());
  for (std::size_t i = 0; i < assignment_.size(); ++i) {
    sums[i] = cluster_sums_[assignment_[i]];
  }
  return sums;
}

std::unique_ptr<ClusteredBinaryEnvironment> make_clustered_binary(
    std::size_t horizon, std::size_t num_experts, std::size_t num_clusters,
    std::uint64_t seed) {
  if (horizon < 1) throw std::invalid_argument("clustered_binary: T must be >= 1");
  if (num_clusters < 1) {
    throw std::invalid_argument("clustered_binary: N must be >= 1");
  }
  if (num_clusters > num_experts) {
    throw std::invalid_argument("clustered_binary: N must be <= K");
  }
  if (exceeds_power_of_two(num_clusters, horizon)) {
    throw std::invalid_argument("too many distinct binary rows");
  }
  if (num_experts > std::numeric_limits<std::uint32_t>::max()) {
    throw std::invalid_argument("clustered_binary: K too large");
  }

  Rng rows_rng = Rng::derive(seed, kRowsStream);
  std::vector<std::int8_t> prototypes;
  prototypes.reserve(num_clusters * horizon);
  if (horizon <= 16 && 2 * num_clusters > (std::size_t{1} << horizon)) {
    // Dense regime: pick N distinct codes out of all 2^T.
    std::vector<std::uint32_t> codes(std::size_t{1} << horizon);
    for (std::size_t c = 0; c < codes.size(); ++c) {
      codes[c] = static_cast<std::uint32_t>(c);
    }
    partial_shuffle(codes, num_clusters, rows_rng);
    for (std::size_t c = 0; c < num_clusters; ++c) {
      for (std::size_t t = 0; t < horizon; ++t) {
        prototypes.push_back(((codes[c] >> t) & 1U) != 0 ? 1 : -1);
      }
    }
  } else {
    std::unordered_set<std::string> seen;
    std::string row(horizon, '\0');
    while (seen.size() < num_clusters) {
      for (std::size_t t = 0; t < horizon; ++t) {
        row[t] = rows_rng.sign() > 0 ? 1 : -1;
      }
      if (seen.insert(row).second) {
        prototypes.insert(prototypes.end(), row.begin(), row.end());
      }
    }
  }

  Rng assign_rng = Rng::derive(seed, kAssignStream);
  std::vector<std::uint32_t> assignment(num_experts);
  for (std::size_t i = 0; i < num_experts; ++i) {
    assignment[i] = i < num_clusters
                        ? static_cast<std::uint32_t>(i)
                        : static_cast<std::uint32_t>(assign_rng.below(num_clusters));
  }
  partial_shuffle(assignment, num_experts, assign_rng);
  return std::make_unique<ClusteredBinaryEnvironment>(
      std::move(prototypes), horizon, std::move(assignment));
}

// ---------------------------------------------------------------------------
// Low rank

LowRankEnvironment make_low_rank(std::size_t horizon, std::size_t num_experts,
                                 std::size_t rank, double epsilon_noise,
                                 std::uint64_t seed) {
  if (horizon < 1 || num_experts < 1) {
    throw std::invalid_argument("low_rank: T and K must be >= 1");
  }
  if (rank < 1 || rank > std::min(horizon, num_experts)) {
    throw std::invalid_argument("low_rank: need 1 <= d <= min(T, K)");
  }
  check_noise(epsilon_noise);
  const auto t = static_cast<Eigen::Index>(horizon);
  const auto k = static_cast<Eigen::Index>(num_experts);
  const auto d = static_cast<Eigen::Index>(rank);

  Rng factor_rng = Rng::derive(seed, kFactorStream);
  Eigen::MatrixXd u = uniform_matrix(t, d, -1.0, 1.0, factor_rng);
  Eigen::MatrixXd w = uniform_matrix(d, k, -1.0, 1.0, factor_rng);
  const double peak = (u * w).cwiseAbs().maxCoeff();
  if (peak > 0.0) w *= (1.0 - epsilon_noise) / peak;
  const Eigen::MatrixXd structure = u * w;

  Rng noise_rng = Rng::derive(seed, kNoiseStream);
  Eigen::MatrixXd noise =
      uniform_matrix(t, k, -epsilon_noise, epsilon_noise, noise_rng);
  const Eigen::MatrixXd raw = structure + noise;
  LossMatrix losses = to_loss_matrix(raw.unaryExpr([](double x) { return clip(x); }));
  check_residual(losses, structure, epsilon_noise);
  return LowRankEnvironment{MatrixOracle(std::move(losses)), std::move(u),
                            std::move(w), std::move(noise), epsilon_noise};
}

// ---------------------------------------------------------------------------
// Sparse dictionary

SparseDictionaryEnvironment make_sparse_dictionary(
    std::size_t horizon, std::size_t num_experts, std::size_t atoms,
    std::size_t sparsity, double epsilon_noise, std::uint64_t seed) {
  if (horizon < 1 || num_experts < 1 || atoms < 1) {
    throw std::invalid_argument("sparse_dictionary: T, K and n must be >= 1");
  }
  if (sparsity > atoms) {
    throw std::invalid_argument("sparse_dictionary: need k <= n");
  }
  check_noise(epsilon_noise);
  const auto t = static_cast<Eigen::Index>(horizon);
  const auto k = static_cast<Eigen::Index>(num_experts);
  const auto n = static_cast<Eigen::Index>(atoms);

  Rng factor_rng = Rng::derive(seed, kFactorStream);
  Eigen::MatrixXd dictionary = uniform_matrix(t, n, -1.0, 1.0, factor_rng);
  for (Eigen::Index r = 0; r < t; ++r) {
    const double norm = dictionary.row(r).lpNorm<1>();
    if (norm > 1.0) dictionary.row(r) /= norm;
  }

  Rng support_rng = Rng::derive(seed, kSupportStream);
  Eigen::MatrixXd codes = Eigen::MatrixXd::Zero(n, k);
  std::vector<Eigen::Index> indices(atoms);
  for (Eigen::Index c = 0; c < k; ++c) {
    for (std::size_t a = 0; a < atoms; ++a) {
      indices[a] = static_cast<Eigen::Index>(a);
    }
    partial_shuffle(indices, sparsity, support_rng);
    for (std::size_t s = 0; s < sparsity; ++s) {
      codes(indices[s], c) = support_rng.uniform(-1.0, 1.0);
    }
  }

  const Eigen::MatrixXd structure = dictionary * codes;
  Rng noise_rng = Rng::derive(seed, kNoiseStream);
  Eigen::MatrixXd noise =
      uniform_matrix(t, k, -epsilon_noise, epsilon_noise, noise_rng);
  const Eigen::MatrixXd raw = structure + noise;
  LossMatrix losses = to_loss_matrix(raw.unaryExpr([](double x) { return clip(x); }));
  check_residual(losses, structure, epsilon_noise);
  return SparseDictionaryEnvironment{MatrixOracle(std::move(losses)),
                                     std::move(dictionary), std::move(codes),
                                     std::move(noise), epsilon_noise};
}

// ---------------------------------------------------------------------------
// Bounded variation

BoundedVariationEnvironment make_bounded_variation_adversary(
    std::size_t horizon, std::size_t num_experts, std::uint64_t seed) {
  if (num_experts < 2) {
    throw std::invalid_argument("bounded_variation: K must be >= 2");
  }
  if (horizon < 1) {
    throw std::invalid_argument("bounded_variation: T must be >= 1");
  }
  if (horizon >= 63 || num_experts < (std::size_t{1} << horizon)) {
    spdlog::warn(
        "bounded_variation: K = {} < 2^T; an expert surviving all {} rounds is "
        "not guaranteed",
        num_experts, horizon);
  }
  Rng rng(seed);
  std::vector<Round> flip_round(num_experts, 0);
  std::vector<std::size_t> survivors(num_experts);
  for (std::size_t i = 0; i < num_experts; ++i) survivors[i] = i;
  for (std::size_t t = 1; t <= horizon; ++t) {
    const std::size_t flips = survivors.size() / 2;
    partial_shuffle(survivors, flips, rng);
    for (std::size_t f = 0; f < flips; ++f) {
      flip_round[survivors[f]] = static_cast<Round>(t);
    }
    survivors.erase(survivors.begin(),
                    survivors.begin() + static_cast<std::ptrdiff_t>(flips));
  }
  LossMatrix losses(horizon, num_experts, -1.0);
  for (std::size_t i = 0; i < num_experts; ++i) {
    if (flip_round[i] == 0) continue;
    for (Round t = flip_round[i]; t <= static_cast<Round>(horizon); ++t) {
      losses.at(t, ExpertId{i}) = 1.0;
    }
  }
  return BoundedVariationEnvironment{MatrixOracle(std::move(losses)),
                                     std::move(flip_round)};
}

// ---------------------------------------------------------------------------
// i.i.d.

IidEnvironment make_iid_stochastic(std::size_t horizon,
                                   std::vector<double> means, double noise,
                                   NoiseModel model, std::uint64_t seed) {
  if (horizon < 1 || means.empty()) {
    throw std::invalid_argument("iid_stochastic: T and K must be >= 1");
  }
  for (double m : means) {
    if (!(m >= -1.0 && m <= 1.0)) {
      throw std::invalid_argument("iid_stochastic: means must lie in [-1, 1]");
    }
  }
  if (!(noise >= 0.0)) {
    throw std::invalid_argument("iid_stochastic: noise must be >= 0");
  }
  Rng rng(seed);
  LossMatrix losses(horizon, means.size());
  for (Round t = 1; t <= static_cast<Round>(horizon); ++t) {
    auto row = losses.row(t);
    for (std::size_t i = 0; i < means.size(); ++i) {
      if (model == NoiseModel::kRademacher) {
        row[i] = rng.uniform() < 0.5 * (1.0 + means[i]) ? 1.0 : -1.0;
      } else {
        row[i] = clip(means[i] + rng.uniform(-noise, noise));
      }
    }
  }
  return IidEnvironment{MatrixOracle(std::move(losses)), std::move(means)};
}

// ---------------------------------------------------------------------------

GeneratedEnvironment make_environment(const EnvironmentSpec& spec,
                                      std::uint64_t seed) {
  spec.validate();
  GeneratedEnvironment env{spec, seed, nullptr, nlohmann::json::object()};
  switch (spec.kind) {
    case EnvironmentKind::kFiniteMatrix: {
      env.oracle = std::make_shared<MatrixOracle>(load_matrix(spec.path));
      env.ground_truth["path"] = spec.path;
      break;
    }
    case EnvironmentKind::kClusteredBinary: {
      auto oracle = make_clustered_binary(spec.get_count("T"),
                                          spec.get_count("K"),
                                          spec.get_count("N"), seed);
      nlohmann::json prototypes = nlohmann::json::array();
      for (std::uint32_t c = 0; c < oracle->num_clusters(); ++c) {
        nlohmann::json row = nlohmann::json::array();
        for (Round t = 1; t <= oracle->horizon(); ++t) {
          row.push_back(static_cast<int>(oracle->prototype_loss(c, t)));
        }
        prototypes.push_back(std::move(row));
      }
      env.ground_truth["clusters"] = oracle->num_clusters();
      env.ground_truth["prototypes"] = std::move(prototypes);
      env.ground_truth["assignment"] = oracle->assignment();
      env.oracle = std::move(oracle);
      break;
    }
    case EnvironmentKind::kLowRank: {
      auto gen = make_low_rank(spec.get_count("T"), spec.get_count("K"),
                               spec.get_count("d"),
                               spec.get_or("epsilon_noise", 0.0), seed);
      env.ground_truth["U"] = to_json_rows(gen.u);
      env.ground_truth["W"] = to_json_rows(gen.w);
      env.ground_truth["E"] = to_json_rows(gen.noise);
      env.oracle = std::make_shared<MatrixOracle>(std::move(gen.oracle));
      break;
    }
    case EnvironmentKind::kSparseDictionary: {
      auto gen = make_sparse_dictionary(
          spec.get_count("T"), spec.get_count("K"), spec.get_count("n"),
          spec.get_count("k"), spec.get_or("epsilon_noise", 0.0), seed);
      env.ground_truth["D"] = to_json_rows(gen.dictionary);
      env.ground_truth["V"] = to_json_rows(gen.codes);
      env.ground_truth["E"] = to_json_rows(gen.noise);
      env.oracle = std::make_shared<MatrixOracle>(std::move(gen.oracle));
      break;
    }
    case EnvironmentKind::kBoundedVariation: {
      auto gen = make_bounded_variation_adversary(spec.get_count("T"),
                                                  spec.get_count("K"), seed);
      env.ground_truth["flip_round"] = gen.flip_round;
      env.oracle = std::make_shared<MatrixOracle>(std::move(gen.oracle));
      break;
    }
    case EnvironmentKind::kIidStochastic: {
      std::vector<double> means = spec.means;
      if (means.empty()) means.assign(spec.get_count("K"), spec.get_or("mean", 0.0));
      auto gen = make_iid_stochastic(spec.get_count("T"), std::move(means),
                                     spec.get_or("noise", 0.0),
                                     spec.noise_model, seed);
      env.ground_truth["means"] = gen.means;
      env.oracle = std::make_shared<MatrixOracle>(std::move(gen.oracle));
      break;
    }
  }
  return env;
}

}  // namespace expertcover
