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

#include "expertcover/matrix_io.h"

#include <array>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <system_error>
#include <vector>

namespace expertcover {
namespace {

void put_u32(std::ostream& out, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) out.put(static_cast<char>((v >> (8 * b)) & 0xff));
}

void put_f64(std::ostream& out, double v) {
  const auto bits = std::bit_cast<std::uint64_t>(v);
  for (int b = 0; b < 8; ++b) {
    out.put(static_cast<char>((bits >> (8 * b)) & 0xff));
  }
}

template <std::size_t N>
std::array<unsigned char, N> get_bytes(std::istream& in, const char* what) {
  std::array<unsigned char, N> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()), N);
  if (in.gcount() != static_cast<std::streamsize>(N)) {
    throw IoError(std::string("binary matrix: truncated ") + what);
  }
  return bytes;
}

std::uint32_t get_u32(std::istream& in, const char* what) {
  const auto b = get_bytes<4>(in, what);
  std::uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
  return v;
}

double get_f64(std::istream& in) {
  const auto b = get_bytes<8>(in, "payload");
  std::uint64_t v = 0;
  for (int i = 7; i >= 0; --i) v = (v << 8) | b[static_cast<std::size_t>(i)];
  return std::bit_cast<double>(v);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

}  // namespace

std::string_view to_string(MatrixFormat format) {
  return format == MatrixFormat::kCsv ? "csv" : "binary";
}

MatrixFormat parse_matrix_format(std::string_view name) {
  if (name == "csv") return MatrixFormat::kCsv;
  if (name == "binary") return MatrixFormat::kBinary;
  throw std::invalid_argument("format: expected 'csv' or 'binary', got '" +
                              std::string(name) + "'");
}

std::string format_double(double value) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf.data(), end);
}

void write_csv_matrix(std::ostream& out, const LossMatrix& matrix) {
  for (Round t = 1; t <= static_cast<Round>(matrix.rounds()); ++t) {
    const auto row = matrix.row(t);
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out << ',';
      out << format_double(row[i]);
    }
    out << '\n';
  }
}

LossMatrix read_csv_matrix(std::istream& in) {
  std::vector<double> values;
  std::size_t columns = 0;
  std::size_t rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    std::size_t count = 0;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      const std::string_view cell = trim(rest.substr(0, comma));
      double v = 0.0;
      const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
      if (ec != std::errc{} || ptr != cell.data() + cell.size() || cell.empty()) {
        throw IoError("csv matrix: bad number '" + std::string(cell) +
                      "' on line " + std::to_string(rows + 1));
      }
      values.push_back(v);
      ++count;
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (rows == 0) {
      columns = count;
    } else if (count != columns) {
      throw IoError("csv matrix: line " + std::to_string(rows + 1) + " has " +
                    std::to_string(count) + " columns, expected " +
                    std::to_string(columns));
    }
    ++rows;
  }
  if (rows == 0) throw IoError("csv matrix: empty input");
  return LossMatrix(rows, columns, std::move(values));
}

void write_binary_matrix(std::ostream& out, const LossMatrix& matrix) {
  if (matrix.rounds() > 0xffffffffULL || matrix.experts() > 0xffffffffULL) {
    throw IoError("binary matrix: dimensions exceed u32");
  }
  out.write(kBinaryMagic, 4);
  out.put(static_cast<char>(kBinaryVersion));
  put_u32(out, static_cast<std::uint32_t>(matrix.rounds()));
  put_u32(out, static_cast<std::uint32_t>(matrix.experts()));
  for (double v : matrix.values()) put_f64(out, v);
}

LossMatrix read_binary_matrix(std::istream& in) {
  const auto magic = get_bytes<4>(in, "magic");
  for (std::size_t i = 0; i < 4; ++i) {
    if (magic[i] != static_cast<unsigned char>(kBinaryMagic[i])) {
      throw IoError("binary matrix: bad magic");
    }
  }
  const auto version = get_bytes<1>(in, "version")[0];
  if (version != kBinaryVersion) {
    throw IoError("binary matrix: unsupported version " +
                  std::to_string(version));
  }
  const std::size_t rounds = get_u32(in, "header");
  const std::size_t experts = get_u32(in, "header");
  std::vector<double> values;
  values.reserve(rounds * experts);
  for (std::size_t i = 0; i < rounds * experts; ++i) values.push_back(get_f64(in));
  if (in.peek() != std::char_traits<char>::eof()) {
    throw IoError("binary matrix: trailing bytes");
  }
  return LossMatrix(rounds, experts, std::move(values));
}

void save_matrix(const std::filesystem::path& path, const LossMatrix& matrix,
                 MatrixFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  if (format == MatrixFormat::kCsv) {
    write_csv_matrix(out, matrix);
  } else {
    write_binary_matrix(out, matrix);
  }
  out.flush();
  if (!out) throw IoError("write failed: '" + path.string() + "'");
}

LossMatrix load_matrix(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return format == MatrixFormat::kCsv ? read_csv_matrix(in)
                                        : read_binary_matrix(in);
  } catch (const IoError& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

LossMatrix load_matrix(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  char head[4] = {};
  in.read(head, 4);
  const bool binary = in.gcount() == 4 && std::equal(head, head + 4, kBinaryMagic);
  in.close();
  return load_matrix(path, binary ? MatrixFormat::kBinary : MatrixFormat::kCsv);
}

void save_json(const std::filesystem::path& path, const nlohmann::json& value) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << value.dump(2) << '\n';
  out.flush();
  if (!out) throw IoError("write failed: '" + path.string() + "'");
}

nlohmann::json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw IoError(path.string() + ": " + e.what());
  }
}

}  // namespace expertcover
