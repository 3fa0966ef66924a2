// Copyright 2026 The spinchain Authors
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

#ifndef SPINCHAIN_IO_CSV_HPP
#define SPINCHAIN_IO_CSV_HPP

#include <charconv>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "spinchain/errors.hpp"

namespace spinchain::io {

/// 12 significant digits, shortest form, independent of the C++ locale.
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 12);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

/// Comma-separated table with a header row.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  /// Column position, or npos.
  std::size_t column(std::string_view name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return i;
    return npos;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    out.emplace_back(line.substr(start, comma == std::string_view::npos ? line.size() - start : comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

/// Reads a numeric CSV (as written by this library). "nan" cells are kept.
inline CsvTable read_csv(std::istream& in, const std::string& label = "csv") {
  CsvTable t;
  std::string line;
  if (!std::getline(in, line)) throw ArgumentError(label + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  t.header = split_csv_line(line);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split_csv_line(line);
    if (cells.size() != t.header.size()) {
      throw ArgumentError(label + ":" + std::to_string(line_no) + ": expected " +
                          std::to_string(t.header.size()) + " fields, got " + std::to_string(cells.size()));
    }
    std::vector<double> row;
    row.reserve(cells.size());
    for (const auto& c : cells) {
      if (c == "nan") {
        row.push_back(std::numeric_limits<double>::quiet_NaN());
        continue;
      }
      double v = 0.0;
      auto [ptr, ec] = std::from_chars(c.data(), c.data() + c.size(), v);
      if (ec != std::errc{} || ptr != c.data() + c.size()) {
        throw ArgumentError(label + ":" + std::to_string(line_no) + ": not a number: '" + c + "'");
      }
      row.push_back(v);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

inline CsvTable read_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_csv(in, path);
}

/// Writes `text` to `path`, throwing on failure.
inline void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << text;
  out.flush();
  if (!out) throw std::runtime_error("failed writing " + path);
}

}  // namespace spinchain::io

#endif  // SPINCHAIN_IO_CSV_HPP
