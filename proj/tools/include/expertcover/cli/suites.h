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

#ifndef EXPERTCOVER_CLI_SUITES_H_
#define EXPERTCOVER_CLI_SUITES_H_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace expertcover::cli {

// Bound-validation suites. Each one runs a fixed experiment, compares the
// measured quantity with its bound and reports pass/fail. All randomness
// derives from the seed argument.
struct SuiteReport {
  std::string name;
  bool passed = false;
  std::string headline;              // measured vs bound, one line
  std::vector<std::string> details;  // per-group numbers, logged violations
  double seconds = 0.0;
};

struct SuiteInfo {
  std::string_view name;
  std::string_view criterion;  // acceptance criterion tag, e.g. "AC1"
  std::string_view description;
};

std::span<const SuiteInfo> suites();
bool is_suite(std::string_view name);

// Throws std::invalid_argument for an unknown suite name.
SuiteReport run_suite(std::string_view name, std::uint64_t seed);

// The individual suites.
SuiteReport lemma1_suite(std::uint64_t seed);
SuiteReport duality_suite(std::uint64_t seed);
SuiteReport theorem1_suite(std::uint64_t seed);
SuiteReport packing_suite(std::uint64_t seed);
SuiteReport corollary3_suite(std::uint64_t seed);
SuiteReport lower_bound_suite(std::uint64_t seed);
SuiteReport meta_suite(std::uint64_t seed);
SuiteReport logsum_suite(std::uint64_t seed);
SuiteReport robustness_suite(std::uint64_t seed);
SuiteReport reproducibility_suite(std::uint64_t seed);

}  // namespace expertcover::cli

#endif  // EXPERTCOVER_CLI_SUITES_H_
