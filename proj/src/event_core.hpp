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
#ifndef NEUROAFFECT_EVENT_CORE_HPP
#define NEUROAFFECT_EVENT_CORE_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace neuroaffect {

/// Microseconds since stream origin. Time is integral everywhere.
using Micros = std::uint64_t;

struct SensorGeometry {
  std::uint32_t width = 0;
  std::uint32_t height = 0;

  static constexpr std::uint32_t kMaxSide = 65535;

  /// Throws an argument error unless 1 <= side <= 65535.
  static SensorGeometry checked(std::uint32_t width, std::uint32_t height);

  std::size_t pixel_count() const noexcept {
    return static_cast<std::size_t>(width) * height;
  }
  bool contains(std::uint32_t x, std::uint32_t y) const noexcept {
    return x < width && y < height;
  }
  friend bool operator==(const SensorGeometry&, const SensorGeometry&) = default;
};

struct Event {
  Micros t = 0;
  std::uint16_t x = 0;
  std::uint16_t y = 0;
  std::int8_t polarity = 1;  // +1 or -1

  friend bool operator==(const Event&, const Event&) = default;
};

/// Time-sorted events over a fixed sensor. Immutable once built; the
/// constructor enforces sortedness, bounds and polarity.
class EventStream {
 public:
  EventStream() = default;
  explicit EventStream(SensorGeometry geometry);
  EventStream(SensorGeometry geometry, std::vector<Event> events);

  const SensorGeometry& geometry() const noexcept { return geometry_; }
  std::span<const Event> events() const noexcept { return events_; }
  std::size_t size() const noexcept { return events_.size(); }
  bool empty() const noexcept { return events_.empty(); }

  Micros first_time() const { return events_.front().t; }
  Micros last_time() const { return events_.back().t; }

  /// Events with t_start <= t < t_end, order preserved, geometry unchanged.
  EventStream slice_by_time(Micros t_start, Micros t_end) const;

  /// Same half-open window as slice_by_time but as a view, no copy.
  std::span<const Event> window(Micros t_start, Micros t_end) const;

  friend bool operator==(const EventStream&, const EventStream&) = default;

 private:
  struct Unchecked {};
  EventStream(SensorGeometry geometry, std::vector<Event> events, Unchecked)
      : geometry_(geometry), events_(std::move(events)) {}

  SensorGeometry geometry_{1, 1};
  std::vector<Event> events_;
};

}  // namespace neuroaffect

#endif  // NEUROAFFECT_EVENT_CORE_HPP
