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
#ifndef NEUROAFFECT_EVENT_IO_HPP
#define NEUROAFFECT_EVENT_IO_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "event_core.hpp"

namespace neuroaffect {

enum class EventFormat { kBinary, kCsv };

/// Parses "binary" or "csv"; argument error otherwise.
EventFormat parse_event_format(std::string_view name);

// EVT1 layout, little-endian:
//   "EVT1" | u16 width | u16 height | u64 count | count x {u64 t, u16 x, u16 y, i8 p}
inline constexpr std::size_t kEvt1HeaderSize = 16;
inline constexpr std::size_t kEvt1RecordSize = 13;

/// CSV input carries no geometry, so csv_geometry is required for kCsv and
/// ignored for kBinary.
EventStream read_events(std::span<const std::uint8_t> bytes, EventFormat format,
                        std::optional<SensorGeometry> csv_geometry = {});

EventStream read_events_file(const std::filesystem::path& path,
                             EventFormat format,
                             std::optional<SensorGeometry> csv_geometry = {});

std::vector<std::uint8_t> write_events(const EventStream& stream,
                                       EventFormat format);

}  // namespace neuroaffect

#endif  // NEUROAFFECT_EVENT_IO_HPP
