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
#include "event_io.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "byteio.hpp"
#include "csv.hpp"
#include "error.hpp"

namespace neuroaffect {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {0x45, 0x56, 0x54, 0x31};
constexpr std::uint32_t kMagicWord = 0x31545645;  // "EVT1" little-endian
constexpr std::string_view kCsvHeader = "t_us,x,y,polarity";

EventStream read_binary(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes, "EVT1");
  const auto magic = in.take(4);
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) {
    throw_format("EVT1: bad magic");
  }
  const auto width = in.get<std::uint16_t>();
  const auto height = in.get<std::uint16_t>();
  const auto count = in.get<std::uint64_t>();
  if (width == 0 || height == 0) {
    throw_format("EVT1: header declares empty geometry " +
                 std::to_string(width) + "x" + std::to_string(height));
  }
  if (count > in.remaining() / kEvt1RecordSize ||
      count * kEvt1RecordSize != in.remaining()) {
    throw_format("EVT1: header declares " + std::to_string(count) +
                 " records but payload holds " +
                 std::to_string(in.remaining()) + " bytes");
  }
  std::vector<Event> events;
  events.reserve(count);
  for (std::uint64_t i = 0; i < count; ++i) {
    Event e;
    e.t = in.get<std::uint64_t>();
    e.x = in.get<std::uint16_t>();
    e.y = in.get<std::uint16_t>();
    e.polarity = in.get<std::int8_t>();
    events.push_back(e);
  }
  return EventStream({width, height}, std::move(events));
}

EventStream read_csv(std::span<const std::uint8_t> bytes,
                     SensorGeometry geometry) {
  const std::string_view text(reinterpret_cast<const char*>(bytes.data()),
                              bytes.size());
  const CsvTable table = parse_csv(text);
  expect_columns(table, {"t_us", "x", "y", "polarity"}, "event csv");
  std::vector<Event> events;
  events.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    const auto& row = table.rows[i];
    const auto x = parse_uint(row[1], "event csv x");
    const auto y = parse_uint(row[2], "event csv y");
    const auto p = parse_int(row[3], "event csv polarity");
    if (x >= geometry.width || y >= geometry.height) {
      throw_validation("event " + std::to_string(i) + ": coordinate (" +
                       row[1] + "," + row[2] + ") outside " +
                       std::to_string(geometry.width) + "x" +
                       std::to_string(geometry.height));
    }
    if (p != 1 && p != -1) {
      throw_validation("event " + std::to_string(i) + ": polarity " + row[3] +
                       " is not +1/-1");
    }
    events.push_back({parse_uint(row[0], "event csv t_us"),
                      static_cast<std::uint16_t>(x),
                      static_cast<std::uint16_t>(y),
                      static_cast<std::int8_t>(p)});
  }
  return EventStream(geometry, std::move(events));
}

}  // namespace

EventFormat parse_event_format(std::string_view name) {
  if (name == "binary") return EventFormat::kBinary;
  if (name == "csv") return EventFormat::kCsv;
  throw_argument("unknown event format '" + std::string(name) +
                 "' (expected binary or csv)");
}

EventStream read_events(std::span<const std::uint8_t> bytes, EventFormat format,
                        std::optional<SensorGeometry> csv_geometry) {
  if (format == EventFormat::kBinary) return read_binary(bytes);
  if (!csv_geometry) {
    throw_argument("csv event input requires an explicit geometry");
  }
  return read_csv(bytes, SensorGeometry::checked(csv_geometry->width,
                                                 csv_geometry->height));
}

EventStream read_events_file(const std::filesystem::path& path,
                             EventFormat format,
                             std::optional<SensorGeometry> csv_geometry) {
  return read_events(read_file(path), format, csv_geometry);
}

std::vector<std::uint8_t> write_events(const EventStream& stream,
                                       EventFormat format) {
  std::vector<std::uint8_t> out;
  if (format == EventFormat::kBinary) {
    out.reserve(kEvt1HeaderSize + stream.size() * kEvt1RecordSize);
    put_le(out, kMagicWord);
    put_le(out, static_cast<std::uint16_t>(stream.geometry().width));
    put_le(out, static_cast<std::uint16_t>(stream.geometry().height));
    put_le(out, static_cast<std::uint64_t>(stream.size()));
    for (const Event& e : stream.events()) {
      put_le(out, e.t);
      put_le(out, e.x);
      put_le(out, e.y);
      put_le(out, e.polarity);
    }
    return out;
  }
  std::string text(kCsvHeader);
  text += '\n';
  for (const Event& e : stream.events()) {
    text += std::to_string(e.t);
    text += ',';
    text += std::to_string(e.x);
    text += ',';
    text += std::to_string(e.y);
    text += e.polarity > 0 ? ",1\n" : ",-1\n";
  }
  out.assign(text.begin(), text.end());
  return out;
}

}  // namespace neuroaffect
