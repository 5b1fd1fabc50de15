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

#include "expertcover/meta_tuner.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "expertcover/hedge.h"

namespace expertcover {

EpsilonGrid build_grid(Round horizon) {
  if (horizon < 2) throw std::invalid_argument("build_grid: T must be >= 2");
  // ceil(log2 T) == bit_width(T - 1) for T >= 2.
  const int levels =
      static_cast<int>(std::bit_width(static_cast<std::uint64_t>(horizon - 1)));
  EpsilonGrid grid;
  grid.levels.reserve(static_cast<std::size_t>(levels));
  for (int r = 1; r <= levels; ++r) {
    grid.levels.push_back(EpsilonLevel{r, std::ldexp(1.0, -r + 1)});
  }
  return grid;
}

std::string_view to_string(MetaFeedback mode) {
  return mode == MetaFeedback::kExpected ? "expected" : "realized";
}

MetaFeedback parse_meta_feedback(std::string_view name) {
  if (name == "expected") return MetaFeedback::kExpected;
  if (name == "realized") return MetaFeedback::kRealized;
  throw std::invalid_argument("feedback: unknown value '" + std::string(name) +
                              "'");
}

double meta_overhead_bound(Round horizon, std::size_t copies) {
  return hedge_regret_bound(horizon, copies);
}

MetaRun play_meta(const LossOracle& oracle, Round horizon, std::uint64_t seed,
                  MetaFeedback mode) {
  if (horizon > oracle.horizon()) {
    throw std::invalid_argument("play_meta: T exceeds the environment horizon");
  }
  MetaRun run{build_grid(horizon), {}, {}, {}, {}, {}, HedgeState(1)};
  const std::size_t copies = run.grid.size();
  run.meta = HedgeState(copies);

  std::vector<Rng> copy_rngs;
  copy_rngs.reserve(copies);
  for (std::size_t r = 0; r < copies; ++r) {
    copy_rngs.push_back(Rng::derive(seed, r));
    run.copy_states.emplace_back(run.grid.levels[r].epsilon);
    run.copies.emplace_back().seed = copy_rngs.back().seed();
    run.copies.back().rounds.reserve(static_cast<std::size_t>(horizon));
  }
  run.copy_cumulative.assign(copies, 0.0);
  Rng meta_rng = Rng::derive(seed, kMetaStream);
  run.trajectory.seed = seed;
  run.trajectory.rounds.reserve(static_cast<std::size_t>(horizon));
  run.selected.reserve(static_cast<std::size_t>(horizon));

  std::vector<double> q(copies);
  std::vector<double> feedback(copies);
  std::vector<double> copy_expected(copies);
  for (Round t = 1; t <= horizon; ++t) {
    run.meta.distribution(q);
    const std::size_t pick = sample_categorical(q, meta_rng).index;

    RoundRecord record;
    record.t = t;
    for (std::size_t r = 0; r < copies; ++r) {
      const RoundRecord copy_record =
          play_round(run.copy_states[r], t, oracle, copy_rngs[r]);
      run.copies[r].append(copy_record);
      run.copy_cumulative[r] += copy_record.incurred;
      copy_expected[r] = copy_record.expected;
      feedback[r] = mode == MetaFeedback::kExpected ? copy_record.expected
                                                    : copy_record.incurred;
      record.packing_size =
          std::max(record.packing_size, copy_record.packing_size);
      record.phase = std::max(record.phase, copy_record.phase);
      if (r == pick) {
        record.chosen = copy_record.chosen;
        record.incurred = copy_record.incurred;
      }
    }
    record.expected = expected_loss(q, copy_expected);
    record.entropy = entropy(q);
    run.trajectory.append(record);
    run.selected.push_back(pick);
    run.meta.update(feedback);
  }
  return run;
}

}  // namespace expertcover
