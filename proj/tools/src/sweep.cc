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

#include "expertcover/cli/sweep.h"

#include <atomic>
#include <cmath>
#include <exception>
#include <numeric>
#include <ostream>
#include <thread>

#include "expertcover/cli/runner.h"
#include "expertcover/matrix_io.h"

namespace expertcover::cli {
namespace {

using Combo = std::map<std::string, double>;

std::vector<Combo> expand(const std::map<std::string, std::vector<double>>& grid) {
  std::vector<Combo> combos{Combo{}};
  for (const auto& [name, values] : grid) {
    std::vector<Combo> next;
    for (const Combo& base : combos) {
      for (double v : values) {
        Combo c = base;
        c[name] = v;
        next.push_back(std::move(c));
      }
    }
    combos = std::move(next);
  }
  return combos;
}

RunConfig cell_config(const RunConfig& base, const SweepRow& row) {
  RunConfig config = base;
  config.sweep.reset();
  config.game.algorithm = row.algorithm;
  if (row.epsilon) config.game.epsilon = *row.epsilon;
  for (const auto& [name, value] : row.parameters) {
    config.environment.parameters[name] = value;
    if (name == "T") config.game.horizon = static_cast<Round>(value);
  }
  return config;
}

struct Outcome {
  bool ok = false;
  double regret = 0.0;
  double packing_size = 0.0;
  double phases = 0.0;
  std::string error;
};

}  // namespace

double SweepRow::mean_regret() const {
  if (regrets.empty()) return std::nan("");
  return std::accumulate(regrets.begin(), regrets.end(), 0.0) /
         static_cast<double>(regrets.size());
}

double SweepRow::stderr_regret() const {
  const std::size_t n = regrets.size();
  if (n < 2) return 0.0;
  const double mean = mean_regret();
  double ss = 0.0;
  for (double r : regrets) ss += (r - mean) * (r - mean);
  return std::sqrt(ss / static_cast<double>(n - 1)) / std::sqrt(static_cast<double>(n));
}

SweepTable run_sweep(const RunConfig& config, std::uint64_t seed,
                     std::size_t parallelism) {
  const SweepSpec spec = config.sweep.value_or(SweepSpec{});
  SweepTable table;
  for (const auto& [name, values] : spec.environment) {
    table.parameter_names.push_back(name);
  }
  const std::vector<Combo> combos = expand(spec.environment);
  const Algorithm algorithm = config.game.algorithm;
  std::vector<double> epsilons = spec.epsilons;
  if (epsilons.empty()) epsilons.push_back(config.game.epsilon);
  const bool include_meta =
      spec.include_meta.value_or(algorithm == Algorithm::kManyExperts &&
                                 epsilons.size() > 1);

  for (const Combo& combo : combos) {
    if (algorithm == Algorithm::kManyExperts) {
      for (double eps : epsilons) {
        SweepRow row;
        row.algorithm = algorithm;
        row.epsilon = eps;
        row.parameters = combo;
        table.rows.push_back(std::move(row));
      }
    } else {
      SweepRow row;
      row.algorithm = algorithm;
      row.parameters = combo;
      table.rows.push_back(std::move(row));
    }
  }
  if (include_meta && algorithm != Algorithm::kMetaTuner) {
    for (const Combo& combo : combos) {
      SweepRow row;
      row.row_type = "meta_tuner";
      row.algorithm = Algorithm::kMetaTuner;
      row.parameters = combo;
      table.rows.push_back(std::move(row));
    }
  }

  const std::size_t seeds = spec.seeds;
  const std::size_t tasks = table.rows.size() * seeds;
  std::vector<Outcome> outcomes(tasks);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t task = next++; task < tasks; task = next++) {
      const SweepRow& row = table.rows[task / seeds];
      Outcome& outcome = outcomes[task];
      try {
        const RunResult result =
            run_game(cell_config(config, row), seed + task % seeds);
        outcome.regret = result.ledger.regret;
        outcome.packing_size =
            static_cast<double>(result.trajectory.final_packing_size());
        outcome.phases = result.trajectory.final_phase();
        outcome.ok = true;
      } catch (const std::exception& e) {
        outcome.error = e.what();
      }
    }
  };
  const std::size_t width = std::max<std::size_t>(1, std::min(parallelism, tasks));
  std::vector<std::thread> pool;
  for (std::size_t w = 1; w < width; ++w) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  for (std::size_t task = 0; task < tasks; ++task) {
    SweepRow& row = table.rows[task / seeds];
    const Outcome& outcome = outcomes[task];
    if (outcome.ok) {
      row.regrets.push_back(outcome.regret);
      row.packing_sizes.push_back(outcome.packing_size);
      row.phases.push_back(outcome.phases);
    } else {
      ++row.failures;
      ++table.failed_runs;
      if (row.first_error.empty()) row.first_error = outcome.error;
    }
  }

  if (algorithm == Algorithm::kManyExperts && epsilons.size() > 1) {
    std::vector<SweepRow> best;
    for (const Combo& combo : combos) {
      const SweepRow* pick = nullptr;
      for (const SweepRow& row : table.rows) {
        if (row.row_type != "cell" || row.parameters != combo ||
            row.regrets.empty()) {
          continue;
        }
        if (pick == nullptr || row.mean_regret() < pick->mean_regret()) pick = &row;
      }
      if (pick != nullptr) {
        best.push_back(*pick);
        best.back().row_type = "best_epsilon";
      }
    }
    table.rows.insert(table.rows.end(), best.begin(), best.end());
  }
  return table;
}

void write_sweep_csv(std::ostream& out, const SweepTable& table) {
  out << "row_type,algorithm,epsilon";
  for (const std::string& name : table.parameter_names) out << ',' << name;
  out << ",seeds,mean_regret,stderr_regret,mean_K_p,mean_p,failures,error\n";
  auto mean = [](const std::vector<double>& v) {
    return v.empty() ? std::nan("")
                     : std::accumulate(v.begin(), v.end(), 0.0) /
                           static_cast<double>(v.size());
  };
  auto number = [](double v) { return std::isnan(v) ? std::string() : format_double(v); };
  for (const SweepRow& row : table.rows) {
    out << row.row_type << ',' << to_string(row.algorithm) << ','
        << (row.epsilon ? format_double(*row.epsilon) : std::string());
    for (const std::string& name : table.parameter_names) {
      out << ',' << format_double(row.parameters.at(name));
    }
    std::string error = row.first_error;
    for (char& c : error) {
      if (c == ',' || c == '\n' || c == '"') c = ' ';
    }
    out << ',' << row.regrets.size() << ',' << number(row.mean_regret()) << ','
        << number(row.stderr_regret()) << ',' << number(mean(row.packing_sizes))
        << ',' << number(mean(row.phases)) << ',' << row.failures << ','
        << error << '\n';
  }
}

}  // namespace expertcover::cli
