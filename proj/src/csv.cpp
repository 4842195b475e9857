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
#include "csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>

#include "error.hpp"

namespace neuroaffect {
namespace {

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r\n";
  const auto first = s.find_first_not_of(kSpace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kSpace);
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.emplace_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

std::string field_error(std::string_view what, std::string_view field) {
  return std::string(what) + ": cannot parse '" + std::string(field) + "'";
}

}  // namespace

CsvTable parse_csv(std::string_view text) {
  CsvTable table;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    const auto line = trim(text.substr(pos, eol - pos));
    ++line_no;
    pos = eol + 1;
    if (line.empty()) continue;
    if (!have_header) {
      table.header = split_fields(line);
      have_header = true;
    } else {
      table.rows.push_back(split_fields(line));
      table.line_numbers.push_back(line_no);
    }
  }
  return table;
}

bool has_columns(const CsvTable& table,
                 std::initializer_list<std::string_view> columns) {
  if (table.header.size() != columns.size()) return false;
  std::size_t i = 0;
  for (const auto& c : columns) {
    if (table.header[i++] != c) return false;
  }
  return true;
}

void expect_columns(const CsvTable& table,
                    std::initializer_list<std::string_view> columns,
                    std::string_view what) {
  if (!has_columns(table, columns)) {
    std::string expected;
    for (const auto& c : columns) {
      if (!expected.empty()) expected += ',';
      expected += c;
    }
    throw_format(std::string(what) + ": expected header '" + expected + "'");
  }
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    if (table.rows[r].size() != columns.size()) {
      throw_format(std::string(what) + ": line " +
                   std::to_string(table.line_numbers[r]) + " has " +
                   std::to_string(table.rows[r].size()) + " fields, expected " +
                   std::to_string(columns.size()));
    }
  }
}

std::int64_t parse_int(std::string_view field, std::string_view what) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  std::int64_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw_format(field_error(what, field));
  }
  return value;
}

std::uint64_t parse_uint(std::string_view field, std::string_view what) {
  std::uint64_t value = 0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end) {
    throw_format(field_error(what, field));
  }
  return value;
}

double parse_double(std::string_view field, std::string_view what) {
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto* end = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(field.data(), end, value);
  if (field.empty() || ec != std::errc() || ptr != end ||
      !std::isfinite(value)) {
    throw_format(field_error(what, field));
  }
  return value;
}

std::string format_double(double value) {
  if (value == 0.0) value = 0.0;  // fold -0 so output is sign-stable
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::vector<std::uint8_t> read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw_io("cannot open '" + path.string() + "' for reading");
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw_io("read failed on '" + path.string() + "'");
  return bytes;
}

std::string read_text_file(const std::filesystem::path& path) {
  const auto bytes = read_file(path);
  return std::string(bytes.begin(), bytes.end());
}

void write_file(const std::filesystem::path& path,
                std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw_io("cannot open '" + path.string() + "' for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
  if (!out) throw_io("write failed on '" + path.string() + "'");
}

}  // namespace neuroaffect
