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

#ifndef EXPERTCOVER_CLI_CONFIG_H_
#define EXPERTCOVER_CLI_CONFIG_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "expertcover/environments.h"
#include "expertcover/game.h"
#include "expertcover/meta_tuner.h"

namespace expertcover::cli {

// Invalid or unreadable configuration; the message names the field.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Grid of sweep cells: every epsilon crossed with every combination of the
// listed environment parameters. Each cell is run for `seeds` seeds
// master, master + 1, ....
struct SweepSpec {
  std::size_t seeds = 1;
  std::vector<double> epsilons;  // empty: the game's epsilon only
  std::map<std::string, std::vector<double>> environment;
  // Adds a meta_tuner row per environment combination. Defaults to true for
  // many_experts sweeps over more than one epsilon.
  std::optional<bool> include_meta;
};

// Schema:
//   game:        algorithm (hedge | many_experts | meta_tuner), T, epsilon,
//                feedback (expected | realized, meta_tuner only)
//   environment: kind plus the kind's parameters (see EnvironmentSpec)
//   sweep:       seeds, epsilon [list], environment {name: [values]},
//                include_meta
// T may be given in either section; when both are present the game's T must
// not exceed the environment's.
struct RunConfig {
  GameConfig game;
  MetaFeedback feedback = MetaFeedback::kExpected;
  EnvironmentSpec environment;
  std::optional<SweepSpec> sweep;
  // True when game.horizon should follow the environment's horizon (a
  // finite matrix with no T given).
  bool horizon_from_environment = false;

  nlohmann::json to_json() const;
};

// Sets root[a][b]... from "a.b=value". The value is parsed as JSON when
// possible and taken as a string otherwise.
void apply_override(nlohmann::json& root, std::string_view assignment);

RunConfig parse_config(const nlohmann::json& root);

// Reads the file and applies overrides; relative environment.path values are
// resolved against the file's directory. Throws ConfigError.
nlohmann::json read_config_json(const std::filesystem::path& path,
                                std::span<const std::string> overrides = {});

// Reads, overrides and validates. Throws ConfigError.
RunConfig load_config(const std::filesystem::path& path,
                      std::span<const std::string> overrides = {});

}  // namespace expertcover::cli

#endif  // EXPERTCOVER_CLI_CONFIG_H_
