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

#ifndef EXPERTCOVER_MATRIX_IO_H_
#define EXPERTCOVER_MATRIX_IO_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "expertcover/types.h"

namespace expertcover {

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class MatrixFormat { kCsv, kBinary };

std::string_view to_string(MatrixFormat format);
MatrixFormat parse_matrix_format(std::string_view name);

// Shortest decimal text that parses back to the same double.
std::string format_double(double value);

// CSV: one line per round, K comma-separated values, no header.
void write_csv_matrix(std::ostream& out, const LossMatrix& matrix);
LossMatrix read_csv_matrix(std::istream& in);

// Binary: "CHLM", version byte (1), u32 T, u32 K, then T*K little-endian
// IEEE-754 doubles in row-major order.
inline constexpr char kBinaryMagic[4] = {'C', 'H', 'L', 'M'};
inline constexpr std::uint8_t kBinaryVersion = 1;

void write_binary_matrix(std::ostream& out, const LossMatrix& matrix);
LossMatrix read_binary_matrix(std::istream& in);

// File wrappers. Errors (missing file, malformed content) throw IoError with
// the path in the message. Reading does not validate the loss range.
void save_matrix(const std::filesystem::path& path, const LossMatrix& matrix,
                 MatrixFormat format);
LossMatrix load_matrix(const std::filesystem::path& path, MatrixFormat format);
// Picks the format from the file's first bytes.
LossMatrix load_matrix(const std::filesystem::path& path);

void save_json(const std::filesystem::path& path, const nlohmann::json& value);
nlohmann::json load_json(const std::filesystem::path& path);

}  // namespace expertcover

#endif  // EXPERTCOVER_MATRIX_IO_H_
