// Copyright 2026 The NeuroAffect Authors.
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
#ifndef NEUROAFFECT_CSV_HPP
#define NEUROAFFECT_CSV_HPP

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace neuroaffect {

// Minimal comma-separated reader: no quoting, fields trimmed, blank lines
// skipped. All file formats in this project are plain numeric tables.
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based source line per row
};

CsvTable parse_csv(std::string_view text);

// Throws a format error unless the header matches exactly and every row
// has the same number of fields.
void expect_columns(const CsvTable& table,
                    std::initializer_list<std::string_view> columns,
                    std::string_view what);

bool has_columns(const CsvTable& table,
                 std::initializer_list<std::string_view> columns);

std::int64_t parse_int(std::string_view field, std::string_view what);
std::uint64_t parse_uint(std::string_view field, std::string_view what);
double parse_double(std::string_view field, std::string_view what);

// Shortest representation that parses back to the same double.
std::string format_double(double value);

std::vector<std::uint8_t> read_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes);

}  // namespace neuroaffect

#endif  // NEUROAFFECT_CSV_HPP
