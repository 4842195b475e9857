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

#include "simulator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>
#include <vector>

#include "error.hpp"

namespace neuroaffect {
namespace {

struct RowRange {
  std::uint32_t begin;
  std::uint32_t end;
};

std::vector<Event> simulate_rows(const FrameSequence& seq,
                                 const SimulatorConfig& config,
                                 RowRange rows) {
  const auto width = seq.geometry().width;
  const std::size_t first = std::size_t{rows.begin} * width;
  const std::size_t count = std::size_t{rows.end - rows.begin} * width;
  const double theta = config.contrast_threshold;
  const double trigger = theta * (1.0 - kThresholdSlack);

  std::vector<double> base(count);
  std::vector<std::int64_t> level(count, 0);
  const auto& plane0 = seq.plane(0);
  for (std::size_t p = 0; p < count; ++p) {
    base[p] = std::log(plane0[first + p] + config.epsilon);
  }

  std::vector<Event> out;
  const auto ts = seq.timestamps();
  for (std::size_t s = 1; s < seq.size(); ++s) {
    const auto& plane = seq.plane(s);
    const Micros t0 = ts[s - 1];
    const Micros span = ts[s] - t0;
    for (std::size_t p = 0; p < count; ++p) {
      const double current = std::log(plane[first + p] + config.epsilon);
      std::int64_t fired = 0;
      int sign = 0;
      while (true) {
        const double diff =
            current - (base[p] + static_cast<double>(level[p]) * theta);
        if (std::abs(diff) < trigger) break;
        sign = diff > 0 ? 1 : -1;
        level[p] += sign;
        ++fired;
      }
      if (fired == 0) continue;
      const auto x = static_cast<std::uint16_t>((first + p) % width);
      const auto y = static_cast<std::uint16_t>((first + p) / width);
      for (std::int64_t j = 1; j <= fired; ++j) {
        const Micros t = t0 + span * static_cast<Micros>(j) /
                                  static_cast<Micros>(fired);
        out.push_back({t, x, y, static_cast<std::int8_t>(sign)});
      }
    }
  }
  return out;
}

}  // namespace

void SimulatorConfig::validate() const {
  if (!(contrast_threshold > 0.0) || !std::isfinite(contrast_threshold)) {
    throw_argument("contrast threshold must be positive");
  }
  if (upsample_factor < 1) throw_argument("upsample factor must be >= 1");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw_argument("epsilon must be positive");
  }
}

EventStream simulate(const FrameSequence& frames,
                     const SimulatorConfig& config) {
  config.validate();
  if (frames.size() < 2) {
    throw_argument("simulation needs at least 2 frames, got " +
                   std::to_string(frames.size()));
  }
  const FrameSequence seq = upsample(frames, config.upsample_factor);
  const std::uint32_t height = seq.geometry().height;

  unsigned workers = config.threads == 0 ? std::thread::hardware_concurrency()
                                         : config.threads;
  workers = std::clamp<unsigned>(workers, 1, height);

  std::vector<std::vector<Event>> parts(workers);
  if (workers == 1) {
    parts[0] = simulate_rows(seq, config, {0, height});
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      const RowRange rows{static_cast<std::uint32_t>(
                              std::uint64_t{height} * w / workers),
                          static_cast<std::uint32_t>(
                              std::uint64_t{height} * (w + 1) / workers)};
      pool.emplace_back([&, w, rows] {
        parts[w] = simulate_rows(seq, config, rows);
      });
    }
    for (auto& th : pool) th.join();
  }

  std::vector<Event> events;
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  events.reserve(total);
  for (auto& part : parts) {
    events.insert(events.end(), part.begin(), part.end());
  }
  std::stable_sort(events.begin(), events.end(),
                   [](const Event& a, const Event& b) {
                     if (a.t != b.t) return a.t < b.t;
                     if (a.y != b.y) return a.y < b.y;
                     return a.x < b.x;
                   });
  return EventStream(seq.geometry(), std::move(events));
}

}  // namespace neuroaffect
