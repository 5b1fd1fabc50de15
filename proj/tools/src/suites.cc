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

#include "expertcover/cli/suites.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "expertcover/analysis.h"
#include "expertcover/cli/runner.h"
#include "expertcover/environments.h"
#include "expertcover/hedge.h"
#include "expertcover/many_experts.h"
#include "expertcover/matrix_io.h"
#include "expertcover/meta_tuner.h"
#include "expertcover/rng.h"

namespace expertcover::cli {
namespace {

constexpr SuiteInfo kSuites[] = {
    {"lemma1", "AC1", "Hedge regret on i.i.d. +-1 losses, K=10, T=1e4"},
    {"duality", "AC2", "P(2e) <= N(e) <= P(e) on 500 small instances"},
    {"theorem1", "AC3", "per-run many-experts bound on every environment"},
    {"packing", "AC4", "final active set is a 2e-packing and |S| <= N(e)"},
    {"corollary3", "AC5", "clustered binary, N=8, K=1e5, T=5000"},
    {"lower_bound", "AC6", "halving adversary forces regret ~ T"},
    {"meta", "AC7", "meta-tuner against the best copy"},
    {"logsum", "AC8", "sum ln a_i <= 2 a_n ln a_n"},
    {"robustness", "AC9", "log-domain Hedge vs direct weights; long games"},
    {"reproducibility", "AC10", "same config and seed give identical files"},
};

std::string num(double v, int precision = 3) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(precision) << v;
  return out.str();
}

std::string sci(double v) {
  std::ostringstream out;
  out << std::scientific << std::setprecision(3) << v;
  return out.str();
}

double mean_of(const std::vector<double>& v) {
  return v.empty() ? 0.0
                   : std::accumulate(v.begin(), v.end(), 0.0) /
                         static_cast<double>(v.size());
}

double stderr_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double ss = 0.0;
  for (double x : v) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(v.size() - 1) /
                   static_cast<double>(v.size()));
}

// Subset enumeration, independent of the branch-and-bound solvers.
struct BruteForce {
  std::size_t k;
  std::vector<double> dist;

  explicit BruteForce(const LossMatrix& m)
      : k(m.experts()), dist(distance_table(m)) {}

  double d(std::size_t i, std::size_t j) const { return dist[i * k + j]; }

  std::size_t cover(double eps) const {
    std::size_t best = k;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size >= best) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        bool covered = false;
        for (std::size_t j = 0; j < k && !covered; ++j) {
          covered = ((mask >> j) & 1u) != 0 && d(i, j) <= eps;
        }
        ok = covered;
      }
      if (ok) best = size;
    }
    return best;
  }

  std::size_t packing(double eps) const {
    std::size_t best = 1;
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      const auto size = static_cast<std::size_t>(std::popcount(mask));
      if (size <= best) continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) {
        if (((mask >> i) & 1u) == 0) continue;
        for (std::size_t j = i + 1; j < k && ok; ++j) {
          if (((mask >> j) & 1u) != 0 && d(i, j) <= eps) ok = false;
        }
      }
      if (ok) best = size;
    }
    return best;
  }
};

// Many-experts runs over every shipped environment kind.
struct Group {
  std::string label;
  EnvironmentSpec spec;
  double epsilon;
};

struct Theorem1Run {
  std::size_t group;
  double regret;
  double bound;
  bool packing_ok;
  std::size_t packing_size;
};

EnvironmentSpec make_spec(EnvironmentKind kind, std::map<std::string, double> p) {
  EnvironmentSpec spec;
  spec.kind = kind;
  spec.parameters = std::move(p);
  return spec;
}

std::vector<Group> theorem1_groups(const std::filesystem::path& matrix_path) {
  using K = EnvironmentKind;
  const EnvironmentSpec clustered =
      make_spec(K::kClusteredBinary, {{"T", 500}, {"K", 2000}, {"N", 6}});
  const EnvironmentSpec low_rank = make_spec(
      K::kLowRank, {{"T", 200}, {"K", 200}, {"d", 2}, {"epsilon_noise", 0.05}});
  const EnvironmentSpec sparse =
      make_spec(K::kSparseDictionary, {{"T", 200}, {"K", 200}, {"n", 8},
                                       {"k", 2}, {"epsilon_noise", 0.05}});
  const EnvironmentSpec adversary =
      make_spec(K::kBoundedVariation, {{"T", 10}, {"K", 1024}});
  EnvironmentSpec iid = make_spec(K::kIidStochastic, {{"T", 500}, {"K", 50}});
  iid.noise_model = NoiseModel::kRademacher;
  EnvironmentSpec finite = make_spec(K::kFiniteMatrix, {});
  finite.path = matrix_path.string();

  std::vector<Group> groups;
  for (double eps : {0.25, 0.5}) {
    groups.push_back({"clustered_binary", clustered, eps});
    groups.push_back({"bounded_variation", adversary, eps});
    groups.push_back({"iid_stochastic", iid, eps});
  }
  for (double eps : {0.1, 0.25}) {
    groups.push_back({"low_rank", low_rank, eps});
    groups.push_back({"sparse_dictionary", sparse, eps});
    groups.push_back({"finite_matrix", finite, eps});
  }
  return groups;
}

constexpr std::size_t kTheorem1Seeds = 20;

struct ScratchDir {
  std::filesystem::path path;
  explicit ScratchDir(std::uint64_t seed) {
    path = std::filesystem::temp_directory_path() /
           ("expertcover-" + std::to_string(seed) + "-" +
            std::to_string(std::chrono::steady_clock::now().time_since_epoch().count()));
    std::filesystem::create_directories(path);
  }
  ~ScratchDir() {
    std::error_code ec;
    std::filesystem::remove_all(path, ec);
  }
};

std::vector<Theorem1Run> theorem1_runs(std::uint64_t seed,
                                       std::vector<Group>& groups_out) {
  ScratchDir scratch(seed);
  const auto matrix_path = scratch.path / "finite.bin";
  // The finite-matrix fixture is a realized low-rank instance on disk.
  save_matrix(matrix_path,
              make_low_rank(100, 50, 3, 0.1, Rng::derive_seed(seed, 0)).oracle.matrix(),
              MatrixFormat::kBinary);
  groups_out = theorem1_groups(matrix_path);

  std::vector<Theorem1Run> runs;
  for (std::size_t g = 0; g < groups_out.size(); ++g) {
    const Group& group = groups_out[g];
    for (std::size_t s = 0; s < kTheorem1Seeds; ++s) {
      const std::uint64_t run_seed = Rng::derive_seed(seed, 1000 * (g + 1) + s);
      const GeneratedEnvironment env =
          make_environment(group.spec, Rng::derive_seed(run_seed, 0));
      const LossOracle& oracle = *env.oracle;
      Rng rng = Rng::derive(run_seed, 1);
      const ManyExpertsRun run =
          run_many_experts(oracle, oracle.horizon(), group.epsilon, rng);
      run.final_state.check_invariants();
      const auto& t = run.trajectory;
      const double bound = theorem1_bound(t.final_packing_size(), t.final_phase(),
                                          group.epsilon, oracle.horizon());
      runs.push_back({g, empirical_regret(t, oracle).regret, bound,
                      is_packing(oracle, run.final_state.active,
                                 run.final_state.threshold()),
                      run.final_state.active.size()});
    }
  }
  return runs;
}

}  // namespace

std::span<const SuiteInfo> suites() { return kSuites; }

bool is_suite(std::string_view name) {
  return std::any_of(std::begin(kSuites), std::end(kSuites),
                     [&](const SuiteInfo& s) { return s.name == name; });
}

SuiteReport run_suite(std::string_view name, std::uint64_t seed) {
  static const std::map<std::string_view, std::function<SuiteReport(std::uint64_t)>>
      table{{"lemma1", lemma1_suite},
            {"duality", duality_suite},
            {"theorem1", theorem1_suite},
            {"packing", packing_suite},
            {"corollary3", corollary3_suite},
            {"lower_bound", lower_bound_suite},
            {"meta", meta_suite},
            {"logsum", logsum_suite},
            {"robustness", robustness_suite},
            {"reproducibility", reproducibility_suite}};
  const auto it = table.find(name);
  if (it == table.end()) {
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  }
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report = it->second(Rng::derive_seed(seed, stream_id(name)));
  report.name = std::string(name);
  report.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return report;
}

SuiteReport lemma1_suite(std::uint64_t seed) {
  constexpr Round kT = 10000;
  constexpr std::size_t kK = 10;
  constexpr std::size_t kSeeds = 50;
  std::vector<double> regrets;
  for (std::size_t s = 0; s < kSeeds; ++s) {
    const IidEnvironment env =
        make_iid_stochastic(kT, std::vector<double>(kK, 0.0), 0.0,
                            NoiseModel::kRademacher, Rng::derive_seed(seed, 2 * s));
    Rng rng = Rng::derive(seed, 2 * s + 1);
    regrets.push_back(empirical_regret(play_hedge(env.oracle, kT, rng), env.oracle).regret);
  }
  const double bound = hedge_regret_bound(kT, kK);
  SuiteReport report;
  report.passed = mean_of(regrets) <= bound;
  report.headline = "mean regret " + num(mean_of(regrets)) + " (se " +
                    num(stderr_of(regrets)) + ", " + std::to_string(kSeeds) +
                    " seeds) <= 4 sqrt(T ln K) = " + num(bound);
  report.details.push_back(
      "max regret " + num(*std::max_element(regrets.begin(), regrets.end())));
  return report;
}

SuiteReport duality_suite(std::uint64_t seed) {
  constexpr std::size_t kInstances = 500;
  const double grid[] = {0.1, 0.25, 0.5, 1.0};
  Rng rng(seed);
  std::size_t sandwich = 0;
  std::size_t mismatches = 0;
  std::size_t greedy = 0;
  std::size_t checks = 0;
  SuiteReport report;
  for (std::size_t n = 0; n < kInstances; ++n) {
    const std::size_t k = 1 + rng.below(8);
    const std::size_t t = 1 + rng.below(5);
    std::vector<double> values(t * k);
    for (double& v : values) v = rng.uniform(-1.0, 1.0);
    const LossMatrix m(t, k, std::move(values));
    const BruteForce brute(m);
    for (double eps : grid) {
      ++checks;
      const CoverReport cert = duality_certificate(m, eps);
      const std::size_t cover = *cert.exact_cover;
      const std::size_t pack_e = *cert.exact_packing_at_eps;
      const std::size_t pack_2e = *cert.exact_packing_at_2eps;
      if (!(pack_2e <= cover && cover <= pack_e) || !cert.sandwich_holds()) {
        ++sandwich;
        report.details.push_back("sandwich violated: instance " + std::to_string(n) +
                                 " eps " + num(eps, 2));
      }
      if (cover != brute.cover(eps) || pack_e != brute.packing(eps) ||
          pack_2e != brute.packing(2 * eps) ||
          !is_cover(m, cert.cover_witness.members, eps) ||
          !is_packing(m, cert.packing_at_eps_witness.members, eps) ||
          !is_packing(m, cert.packing_at_2eps_witness.members, 2 * eps)) {
        ++mismatches;
        report.details.push_back("solver disagrees with subset enumeration: instance " +
                                 std::to_string(n) + " eps " + num(eps, 2));
      }
      const auto& g = cert.greedy_at_eps_witness.members;
      if (!is_packing(m, g, eps) || !is_cover(m, g, eps)) ++greedy;
    }
  }
  report.passed = sandwich == 0 && mismatches == 0 && greedy == 0;
  report.headline = std::to_string(kInstances) + " instances x 4 eps (" +
                    std::to_string(checks) + " checks): " + std::to_string(sandwich) +
                    " sandwich violations, " + std::to_string(mismatches) +
                    " exhaustive-search mismatches, " + std::to_string(greedy) +
                    " invalid greedy packings";
  return report;
}

SuiteReport theorem1_suite(std::uint64_t seed) {
  std::vector<Group> groups;
  const std::vector<Theorem1Run> runs = theorem1_runs(seed, groups);
  SuiteReport report;
  std::size_t violations = 0;
  bool means_hold = true;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::vector<double> regrets;
    std::vector<double> bounds;
    for (const Theorem1Run& run : runs) {
      if (run.group != g) continue;
      regrets.push_back(run.regret);
      bounds.push_back(run.bound);
      if (run.regret > run.bound) {
        ++violations;
        report.details.push_back("per-run violation: " + groups[g].label +
                                 " eps " + num(groups[g].epsilon, 2) + " regret " +
                                 num(run.regret) + " > " + num(run.bound));
      }
    }
    const bool ok = mean_of(regrets) <= mean_of(bounds);
    means_hold = means_hold && ok;
    report.details.push_back(groups[g].label + " eps " + num(groups[g].epsilon, 2) +
                             ": mean regret " + num(mean_of(regrets)) +
                             " vs mean bound " + num(mean_of(bounds)) +
                             (ok ? "" : "  VIOLATED"));
  }
  const double fraction =
      static_cast<double>(violations) / static_cast<double>(runs.size());
  report.passed = runs.size() >= 200 && fraction < 0.05 && means_hold;
  report.headline = std::to_string(runs.size()) + " runs over " +
                    std::to_string(groups.size()) + " environment/eps groups: " +
                    std::to_string(violations) + " per-run violations (" +
                    num(100.0 * fraction, 1) + "% < 5%), group means " +
                    (means_hold ? "under" : "NOT under") + " the bound";
  return report;
}

SuiteReport packing_suite(std::uint64_t seed) {
  SuiteReport report;
  std::vector<Group> groups;
  const std::vector<Theorem1Run> runs =
      theorem1_runs(Rng::derive_seed(seed, 0), groups);
  std::size_t certificate_failures = 0;
  for (const Theorem1Run& run : runs) {
    if (!run.packing_ok) {
      ++certificate_failures;
      report.details.push_back("not a 2eps-packing: " + groups[run.group].label);
    }
  }

  // Small instances: compare |S| with the exact covering number.
  using K = EnvironmentKind;
  std::vector<EnvironmentSpec> small{
      make_spec(K::kLowRank, {{"T", 30}, {"K", 20}, {"d", 2}, {"epsilon_noise", 0.05}}),
      make_spec(K::kSparseDictionary,
                {{"T", 20}, {"K", 16}, {"n", 4}, {"k", 2}, {"epsilon_noise", 0.02}}),
      make_spec(K::kClusteredBinary, {{"T", 10}, {"K", 20}, {"N", 5}}),
      make_spec(K::kBoundedVariation, {{"T", 4}, {"K", 16}}),
      make_spec(K::kIidStochastic, {{"T", 20}, {"K", 12}, {"noise", 0.3}})};
  constexpr std::size_t kSmallSeeds = 20;
  std::size_t small_runs = 0;
  std::size_t cover_failures = 0;
  for (std::size_t e = 0; e < small.size(); ++e) {
    for (std::size_t s = 0; s < kSmallSeeds; ++s) {
      const std::uint64_t run_seed = Rng::derive_seed(seed, 100 * (e + 1) + s);
      const GeneratedEnvironment env =
          make_environment(small[e], Rng::derive_seed(run_seed, 0));
      const LossMatrix m = materialize(*env.oracle);
      for (double eps : {0.1, 0.25, 0.5}) {
        Rng rng = Rng::derive(run_seed, 1);
        const ManyExpertsRun run =
            run_many_experts(*env.oracle, env.oracle->horizon(), eps, rng);
        const auto cover = covering_number_exact(m, eps);
        ++small_runs;
        const std::size_t size = run.final_state.active.size();
        if (!is_packing(m, run.final_state.active, 2 * eps)) {
          ++certificate_failures;
          report.details.push_back("small instance not a 2eps-packing: " +
                                   std::string(to_string(small[e].kind)));
        }
        if (!cover || size > cover->size()) {
          ++cover_failures;
          report.details.push_back(
              std::string(to_string(small[e].kind)) + " eps " + num(eps, 2) +
              ": |S| = " + std::to_string(size) + " > N(eps) = " +
              (cover ? std::to_string(cover->size()) : std::string("n/a")));
        }
      }
    }
  }
  report.passed = certificate_failures == 0 && cover_failures == 0;
  report.headline = std::to_string(runs.size() + small_runs) +
                    " runs: " + std::to_string(certificate_failures) +
                    " failed 2eps-packing certificates; " +
                    std::to_string(small_runs) + " small instances (K <= 20): " +
                    std::to_string(cover_failures) + " with |S| > exact N(eps)";
  return report;
}

SuiteReport corollary3_suite(std::uint64_t seed) {
  constexpr Round kT = 5000;
  constexpr std::size_t kK = 100000;
  constexpr std::size_t kN = 8;
  constexpr std::size_t kSeeds = 50;
  constexpr double kEps = 0.5;
  std::vector<double> regrets;
  std::size_t max_packing = 0;
  for (std::size_t s = 0; s < kSeeds; ++s) {
    const auto env = make_clustered_binary(kT, kK, kN, Rng::derive_seed(seed, 2 * s));
    Rng rng = Rng::derive(seed, 2 * s + 1);
    const GameTrajectory t = play_many_experts(*env, kT, kEps, rng);
    max_packing = std::max(max_packing, t.final_packing_size());
    regrets.push_back(empirical_regret(t, *env).regret);
  }
  const double n = static_cast<double>(kN);
  const double bound =
      n + 8.0 * std::sqrt(static_cast<double>(kT) * n * std::log(n));
  SuiteReport report;
  report.passed = max_packing <= kN && mean_of(regrets) <= bound;
  report.headline = "max K_p " + std::to_string(max_packing) + " <= " +
                    std::to_string(kN) + "; mean regret " + num(mean_of(regrets)) +
                    " (se " + num(stderr_of(regrets)) + ", " +
                    std::to_string(kSeeds) + " seeds) <= N + 8 sqrt(T N ln N) = " +
                    num(bound);
  return report;
}

SuiteReport lower_bound_suite(std::uint64_t seed) {
  constexpr Round kT = 12;
  constexpr std::size_t kK = 4096;
  constexpr std::size_t kSeeds = 200;
  std::vector<double> regrets;
  double max_variation = 0.0;
  for (std::size_t s = 0; s < kSeeds; ++s) {
    const BoundedVariationEnvironment env =
        make_bounded_variation_adversary(kT, kK, Rng::derive_seed(seed, 2 * s));
    Rng rng = Rng::derive(seed, 2 * s + 1);
    regrets.push_back(
        empirical_regret(play_hedge(env.oracle, kT, rng), env.oracle).regret);
    max_variation =
        std::max(max_variation, variation_profile(env.oracle.matrix()).max());
  }
  const double floor = 0.9 * static_cast<double>(kT);
  SuiteReport report;
  report.passed = mean_of(regrets) >= floor && max_variation <= 2.0;
  report.headline = "mean regret " + num(mean_of(regrets)) + " (se " +
                    num(stderr_of(regrets)) + ", " + std::to_string(kSeeds) +
                    " seeds) >= 0.9 T = " + num(floor) +
                    "; max expert variation " + num(max_variation) + " <= 2";
  return report;
}

SuiteReport meta_suite(std::uint64_t seed) {
  constexpr std::size_t kSeeds = 50;
  struct Fixture {
    std::string label;
    EnvironmentSpec spec;
  };
  const std::vector<Fixture> fixtures{
      {"clustered_binary",
       make_spec(EnvironmentKind::kClusteredBinary, {{"T", 2000}, {"K", 2000}, {"N", 8}})},
      {"low_rank", make_spec(EnvironmentKind::kLowRank,
                             {{"T", 256}, {"K", 300}, {"d", 2}, {"epsilon_noise", 0.05}})}};
  SuiteReport report;
  bool all_ok = true;
  std::size_t identity_failures = 0;
  std::vector<std::string> parts;
  for (std::size_t f = 0; f < fixtures.size(); ++f) {
    const Round horizon = static_cast<Round>(fixtures[f].spec.get_count("T"));
    const std::size_t copies = build_grid(horizon).size();
    std::vector<double> meta_regrets;
    std::vector<std::vector<double>> copy_regrets(copies);
    for (std::size_t s = 0; s < kSeeds; ++s) {
      const std::uint64_t run_seed = Rng::derive_seed(seed, 100 * (f + 1) + s);
      const GeneratedEnvironment env =
          make_environment(fixtures[f].spec, Rng::derive_seed(run_seed, 0));
      const LossOracle& oracle = *env.oracle;
      const std::uint64_t meta_seed = Rng::derive_seed(run_seed, 1);
      const MetaRun run = play_meta(oracle, horizon, meta_seed);
      const RegretLedger ledger = empirical_regret(run.trajectory, oracle);
      meta_regrets.push_back(ledger.regret);
      for (std::size_t r = 0; r < copies; ++r) {
        copy_regrets[r].push_back(run.copy_cumulative[r] - ledger.best_cumulative);
        Rng standalone = Rng::derive(meta_seed, r);
        const GameTrajectory alone = play_many_experts(
            oracle, horizon, run.grid.levels[r].epsilon, standalone);
        if (!(alone == run.copies[r])) {
          ++identity_failures;
          report.details.push_back(fixtures[f].label + ": copy " + std::to_string(r) +
                                   " differs from its standalone run");
        }
      }
    }
    double best_copy = std::numeric_limits<double>::infinity();
    std::size_t best_r = 0;
    for (std::size_t r = 0; r < copies; ++r) {
      if (mean_of(copy_regrets[r]) < best_copy) {
        best_copy = mean_of(copy_regrets[r]);
        best_r = r;
      }
    }
    const double overhead = meta_overhead_bound(horizon, copies);
    const double se = stderr_of(meta_regrets);
    const double limit = best_copy + overhead + 3.0 * se;
    const bool ok = mean_of(meta_regrets) <= limit;
    all_ok = all_ok && ok;
    parts.push_back(fixtures[f].label + " mean " + num(mean_of(meta_regrets)) +
                    " <= " + num(limit));
    std::string line = fixtures[f].label + ": mean meta regret " +
                       num(mean_of(meta_regrets)) + " (se " + num(se) +
                       ") vs best copy eps=" +
                       num(std::ldexp(1.0, -static_cast<int>(best_r)), 4) +
                       " mean " + num(best_copy) + " + 4 sqrt(T ln R) " +
                       num(overhead) + " + 3 se; copy means:";
    for (std::size_t r = 0; r < copies; ++r) line += " " + num(mean_of(copy_regrets[r]), 1);
    report.details.push_back(line);
  }
  report.passed = all_ok && identity_failures == 0;
  report.headline = parts[0] + "; " + parts[1] + "; " +
                    std::to_string(identity_failures) +
                    " copies differing from standalone runs";
  return report;
}

SuiteReport logsum_suite(std::uint64_t seed) {
  constexpr std::size_t kSequences = 1000;
  constexpr std::uint64_t kMax = 10000;
  Rng rng(seed);
  std::size_t violations = 0;
  std::size_t longest = 0;
  for (std::size_t n = 0; n < kSequences; ++n) {
    const std::uint64_t last = 1 + rng.below(kMax);
    // Random subset of (1, last) plus both ends, in increasing order.
    std::vector<std::uint64_t> a{1};
    if (last > 2) {
      const std::uint64_t inner = last - 2;
      const std::uint64_t picks = rng.below(std::min<std::uint64_t>(inner, 200) + 1);
      std::vector<std::uint64_t> chosen;
      for (std::uint64_t i = 0; i < picks; ++i) chosen.push_back(2 + rng.below(inner));
      std::sort(chosen.begin(), chosen.end());
      chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
      a.insert(a.end(), chosen.begin(), chosen.end());
    }
    if (last > 1) a.push_back(last);
    longest = std::max(longest, a.size());
    if (!logsum_bound_check(a)) ++violations;
  }
  SuiteReport report;
  report.passed = violations == 0;
  report.headline = std::to_string(kSequences) + " sequences (a_n <= " +
                    std::to_string(kMax) + ", up to " + std::to_string(longest) +
                    " terms): " + std::to_string(violations) + " violations";
  return report;
}

SuiteReport robustness_suite(std::uint64_t seed) {
  SuiteReport report;
  // Direct-weight reference: w <- w * exp(-eta_t l), p = w / sum w.
  constexpr Round kT = 100;
  constexpr std::size_t kK = 8;
  constexpr std::size_t kSeeds = 20;
  double worst = 0.0;
  for (std::size_t s = 0; s < kSeeds; ++s) {
    Rng rng = Rng::derive(seed, s);
    HedgeState state(kK);
    std::vector<double> w(kK, 1.0);
    std::vector<double> losses(kK);
    for (Round t = 1; t <= kT; ++t) {
      const std::vector<double> p = state.distribution();
      const double total = std::accumulate(w.begin(), w.end(), 0.0);
      for (std::size_t i = 0; i < kK; ++i) {
        worst = std::max(worst, std::abs(p[i] - w[i] / total));
      }
      for (double& l : losses) l = rng.uniform(-1.0, 1.0);
      const double eta =
          std::sqrt(8.0 * std::log(static_cast<double>(kK)) / static_cast<double>(t));
      for (std::size_t i = 0; i < kK; ++i) w[i] *= std::exp(-eta * losses[i]);
      state.update(losses);
    }
  }

  // Long game with deterministic, strongly separating losses.
  constexpr Round kLongT = 1000000;
  constexpr std::size_t kLongK = 1000;
  constexpr Round kCheckEvery = 100000;
  HedgeState state(kLongK);
  std::vector<double> losses(kLongK);
  bool finite = true;
  double mass_error = 0.0;
  for (Round t = 1; t <= kLongT; ++t) {
    for (std::size_t i = 0; i < kLongK; ++i) {
      const auto phase = (i * 2654435761ULL + static_cast<std::uint64_t>(t)) % 7;
      losses[i] = (static_cast<double>(phase) - 3.0) / 3.0;
      if (i % 2 == 0) losses[i] = -1.0;
    }
    state.update(losses);
    if (t % kCheckEvery == 0) {
      const std::vector<double> p = state.distribution();
      double mass = 0.0;
      for (double x : p) {
        finite = finite && std::isfinite(x) && x >= 0.0 && x <= 1.0;
        mass += x;
      }
      mass_error = std::max(mass_error, std::abs(mass - 1.0));
    }
  }
  report.passed = worst <= 1e-9 && finite && mass_error <= 1e-9;
  report.headline = "max |p_log - p_direct| " + sci(worst) +
                    " <= 1e-9 over " + std::to_string(kSeeds) +
                    " games (T=100, K=8); T=1e6, K=1e3 distributions " +
                    (finite ? "finite" : "NOT finite") + ", mass error " +
                    sci(mass_error);
  return report;
}

SuiteReport reproducibility_suite(std::uint64_t seed) {
  std::vector<RunConfig> configs(3);
  configs[0].game.algorithm = Algorithm::kHedge;
  configs[0].game.horizon = 200;
  configs[0].environment =
      make_spec(EnvironmentKind::kIidStochastic, {{"T", 200}, {"K", 5}, {"noise", 0.5}});
  configs[1].game.algorithm = Algorithm::kManyExperts;
  configs[1].game.horizon = 100;
  configs[1].game.epsilon = 0.25;
  configs[1].environment = make_spec(
      EnvironmentKind::kLowRank, {{"T", 100}, {"K", 50}, {"d", 2}, {"epsilon_noise", 0.05}});
  configs[2].game.algorithm = Algorithm::kMetaTuner;
  configs[2].game.horizon = 64;
  configs[2].environment =
      make_spec(EnvironmentKind::kClusteredBinary, {{"T", 64}, {"K", 100}, {"N", 4}});

  auto slurp = [](const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
  };

  ScratchDir scratch(seed);
  SuiteReport report;
  std::size_t differing = 0;
  std::size_t regret_mismatch = 0;
  for (std::size_t c = 0; c < configs.size(); ++c) {
    const std::string algo(to_string(configs[c].game.algorithm));
    const auto first = write_run(run_game(configs[c], seed), scratch.path / (algo + "_a"), 0.0);
    const auto second = write_run(run_game(configs[c], seed), scratch.path / (algo + "_b"), 0.0);
    const std::string csv = slurp(first.trajectory);
    const bool same = csv == slurp(second.trajectory) &&
                      slurp(first.summary) == slurp(second.summary);
    if (!same) {
      ++differing;
      report.details.push_back(algo + ": outputs differ between runs");
    }
    // Regret re-derived from the CSV's last cumulative loss.
    const nlohmann::json summary = load_json(first.summary);
    const auto last_line = csv.substr(csv.rfind('\n', csv.size() - 2) + 1);
    const double cumulative = std::stod(last_line.substr(last_line.rfind(',') + 1));
    const double rederived = cumulative - summary["best_cumulative"].get<double>();
    if (std::abs(rederived - summary["regret"].get<double>()) > 1e-9) {
      ++regret_mismatch;
      report.details.push_back(algo + ": regret from CSV " + num(rederived, 12) +
                               " vs summary " + summary["regret"].dump());
    }
    report.details.push_back(algo + ": " + std::to_string(csv.size()) +
                             " CSV bytes, regret " + summary["regret"].dump());
  }
  report.passed = differing == 0 && regret_mismatch == 0;
  report.headline = std::to_string(configs.size()) + " configs (hedge, many_experts, "
                    "meta_tuner) run twice: " + std::to_string(differing) +
                    " with differing trajectory/summary bytes, " +
                    std::to_string(regret_mismatch) +
                    " with regret not reproducible from the CSV";
  return report;
}

}  // namespace expertcover::cli
