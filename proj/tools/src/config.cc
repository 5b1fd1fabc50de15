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

#include "expertcover/cli/config.h"

#include <fstream>
#include <set>
#include <string>

namespace expertcover::cli {
namespace {

using nlohmann::json;

void reject_unknown(const json& object, const std::string& section,
                    const std::set<std::string>& known) {
  for (const auto& [key, value] : object.items()) {
    if (!known.contains(key)) {
      throw ConfigError(section + key + ": unknown key");
    }
  }
}

std::size_t positive_count(const json& value, const std::string& field) {
  if (!value.is_number_integer() || value.get<long long>() < 1) {
    throw ConfigError(field + ": expected a positive integer");
  }
  return value.get<std::size_t>();
}

std::vector<double> number_list(const json& value, const std::string& field) {
  if (!value.is_array() || value.empty()) {
    throw ConfigError(field + ": expected a non-empty list of numbers");
  }
  std::vector<double> out;
  for (const auto& v : value) {
    if (!v.is_number()) throw ConfigError(field + ": expected numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

Round parse_horizon(const json& value, const std::string& field) {
  if (!value.is_number_integer() || value.get<long long>() < 1) {
    throw ConfigError(field + ": must be a positive integer");
  }
  return value.get<Round>();
}

SweepSpec parse_sweep(const json& j) {
  if (!j.is_object()) throw ConfigError("sweep: expected an object");
  reject_unknown(j, "sweep.", {"seeds", "epsilon", "environment", "include_meta"});
  SweepSpec sweep;
  if (j.contains("seeds")) sweep.seeds = positive_count(j["seeds"], "sweep.seeds");
  if (j.contains("epsilon")) {
    sweep.epsilons = number_list(j["epsilon"], "sweep.epsilon");
    for (double e : sweep.epsilons) {
      if (!(e > 0.0 && e <= 1.0)) {
        throw ConfigError("sweep.epsilon: values must lie in (0, 1]");
      }
    }
  }
  if (j.contains("environment")) {
    const json& env = j["environment"];
    if (!env.is_object()) {
      throw ConfigError("sweep.environment: expected an object");
    }
    for (const auto& [name, values] : env.items()) {
      sweep.environment[name] =
          number_list(values, "sweep.environment." + name);
    }
  }
  if (j.contains("include_meta")) {
    if (!j["include_meta"].is_boolean()) {
      throw ConfigError("sweep.include_meta: expected true or false");
    }
    sweep.include_meta = j["include_meta"].get<bool>();
  }
  return sweep;
}

}  // namespace

nlohmann::json RunConfig::to_json() const {
  json game_json{{"algorithm", std::string(to_string(game.algorithm))},
                 {"T", game.horizon},
                 {"epsilon", game.epsilon}};
  if (game.algorithm == Algorithm::kMetaTuner) {
    game_json["feedback"] = std::string(to_string(feedback));
  }
  json j{{"game", std::move(game_json)}, {"environment", environment.to_json()}};
  if (sweep) {
    json s{{"seeds", sweep->seeds}};
    if (!sweep->epsilons.empty()) s["epsilon"] = sweep->epsilons;
    if (!sweep->environment.empty()) s["environment"] = sweep->environment;
    if (sweep->include_meta) s["include_meta"] = *sweep->include_meta;
    j["sweep"] = std::move(s);
  }
  return j;
}

void apply_override(json& root, std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos || eq == 0) {
    throw ConfigError("--set: expected key=value, got '" +
                      std::string(assignment) + "'");
  }
  const std::string key(assignment.substr(0, eq));
  const std::string text(assignment.substr(eq + 1));
  json value = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (value.is_discarded()) value = text;

  json* node = &root;
  std::size_t start = 0;
  while (true) {
    const auto dot = key.find('.', start);
    const std::string part = key.substr(start, dot - start);
    if (part.empty()) throw ConfigError("--set: empty path component in '" + key + "'");
    if (!node->is_object()) {
      throw ConfigError(key + ": cannot descend into a non-object");
    }
    if (dot == std::string::npos) {
      (*node)[part] = std::move(value);
      return;
    }
    node = &(*node)[part];
    if (node->is_null()) *node = json::object();
    start = dot + 1;
  }
}

RunConfig parse_config(const json& root) {
  if (!root.is_object()) throw ConfigError("config: expected an object");
  reject_unknown(root, "", {"game", "environment", "sweep"});
  if (!root.contains("game")) throw ConfigError("game: missing");
  if (!root.contains("environment")) throw ConfigError("environment: missing");
  const json& g = root["game"];
  if (!g.is_object()) throw ConfigError("game: expected an object");
  reject_unknown(g, "game.", {"algorithm", "T", "epsilon", "feedback"});

  RunConfig config;
  try {
    if (!g.contains("algorithm") || !g["algorithm"].is_string()) {
      throw ConfigError("game.algorithm: missing");
    }
    config.game.algorithm = parse_algorithm(g["algorithm"].get<std::string>());
    if (g.contains("epsilon")) {
      if (!g["epsilon"].is_number()) throw ConfigError("game.epsilon: expected a number");
      config.game.epsilon = g["epsilon"].get<double>();
    } else if (config.game.algorithm == Algorithm::kManyExperts) {
      throw ConfigError("game.epsilon: required for many_experts");
    }
    if (g.contains("feedback")) {
      if (!g["feedback"].is_string()) throw ConfigError("game.feedback: expected a string");
      config.feedback = parse_meta_feedback(g["feedback"].get<std::string>());
    }
    config.environment = EnvironmentSpec::from_json(root["environment"]);
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    throw ConfigError(what.rfind("environment", 0) == 0 ? what : "game." + what);
  }

  // Reconcile T between the two sections.
  const bool env_has_t = config.environment.parameters.contains("T");
  const bool finite = config.environment.kind == EnvironmentKind::kFiniteMatrix;
  if (g.contains("T")) {
    config.game.horizon = parse_horizon(g["T"], "game.T");
    if (!env_has_t && !finite) {
      config.environment.parameters["T"] = static_cast<double>(config.game.horizon);
    }
  } else if (env_has_t) {
    config.game.horizon =
        static_cast<Round>(config.environment.parameters["T"]);
  } else if (finite) {
    config.horizon_from_environment = true;
  } else {
    throw ConfigError("game.T: missing (set it in game or environment)");
  }
  if (env_has_t && !finite &&
      config.game.horizon >
          static_cast<Round>(config.environment.parameters["T"])) {
    throw ConfigError("game.T: exceeds environment.T");
  }

  try {
    config.environment.validate();
    if (!config.horizon_from_environment) config.game.validate();
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    throw ConfigError(what.rfind("environment", 0) == 0 ? what : "game." + what);
  }

  if (root.contains("sweep")) config.sweep = parse_sweep(root["sweep"]);
  return config;
}

nlohmann::json read_config_json(const std::filesystem::path& path,
                                std::span<const std::string> overrides) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path.string());
  json root = json::parse(in, nullptr, /*allow_exceptions=*/false);
  if (root.is_discarded()) {
    throw ConfigError("config: " + path.string() + " is not valid JSON");
  }
  for (const auto& assignment : overrides) apply_override(root, assignment);
  // Relative matrix paths are resolved against the config file.
  if (root.is_object() && root.contains("environment") &&
      root["environment"].is_object() && root["environment"].contains("path") &&
      root["environment"]["path"].is_string()) {
    const std::filesystem::path matrix = root["environment"]["path"].get<std::string>();
    if (matrix.is_relative()) {
      root["environment"]["path"] =
          (path.parent_path() / matrix).lexically_normal().string();
    }
  }
  return root;
}

RunConfig load_config(const std::filesystem::path& path,
                      std::span<const std::string> overrides) {
  return parse_config(read_config_json(path, overrides));
}

}  // namespace expertcover::cli
