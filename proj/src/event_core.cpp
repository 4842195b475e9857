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
#include "event_core.hpp"

#include <algorithm>
#include <string>

#include "error.hpp"

namespace neuroaffect {

SensorGeometry SensorGeometry::checked(std::uint32_t width,
                                       std::uint32_t height) {
  if (width < 1 || height < 1 || width > kMaxSide || height > kMaxSide) {
    throw_argument("sensor geometry " + std::to_string(width) + "x" +
                   std::to_string(height) + " outside 1..65535");
  }
  return {width, height};
}

EventStream::EventStream(SensorGeometry geometry)
    : geometry_(SensorGeometry::checked(geometry.width, geometry.height)) {}

EventStream::EventStream(SensorGeometry geometry, std::vector<Event> events)
    : geometry_(SensorGeometry::checked(geometry.width, geometry.height)),
      events_(std::move(events)) {
  for (std::size_t i = 0; i < events_.size(); ++i) {
    const Event& e = events_[i];
    if (!geometry_.contains(e.x, e.y)) {
      throw_validation("event " + std::to_string(i) + ": coordinate (" +
                       std::to_string(e.x) + "," + std::to_string(e.y) +
                       ") outside " + std::to_string(geometry_.width) + "x" +
                       std::to_string(geometry_.height));
    }
    if (e.polarity != 1 && e.polarity != -1) {
      throw_validation("event " + std::to_string(i) + ": polarity " +
                       std::to_string(e.polarity) + " is not +1/-1");
    }
    if (i > 0 && e.t < events_[i - 1].t) {
      throw_validation("event " + std::to_string(i) + ": timestamp " +
                       std::to_string(e.t) + " precedes " +
                       std::to_string(events_[i - 1].t) + " (unsorted)");
    }
  }
}

std::span<const Event> EventStream::window(Micros t_start,
                                           Micros t_end) const {
  if (t_start > t_end) {
    throw_argument("slice window start " + std::to_string(t_start) +
                   " after end " + std::to_string(t_end));
  }
  const auto by_time = [](const Event& e, Micros t) { return e.t < t; };
  const auto lo = std::lower_bound(events_.begin(), events_.end(), t_start,
                                   by_time);
  const auto hi = std::lower_bound(lo, events_.end(), t_end, by_time);
  return {lo, hi};
}

EventStream EventStream::slice_by_time(Micros t_start, Micros t_end) const {
  const auto w = window(t_start, t_end);
  return EventStream(geometry_, std::vector<Event>(w.begin(), w.end()),
                     Unchecked{});
}

}  // namespace neuroaffect
