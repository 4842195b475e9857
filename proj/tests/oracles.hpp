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

// Brute-force reference implementations used only by tests. Each one follows
// the definition directly and avoids the library's code paths (no binary
// search, no bit tricks on whole frames, no shared helpers).

#ifndef NEUROAFFECT_TESTS_ORACLES_HPP
#define NEUROAFFECT_TESTS_ORACLES_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "affect.hpp"
#include "event_core.hpp"
#include "simulator.hpp"

namespace neuroaffect::oracle {

inline std::vector<Event> filter_window(std::span<const Event> events,
                                        Micros start, Micros end) {
  std::vector<Event> out;
  for (const auto& e : events) {
    if (e.t >= start && e.t < end) out.push_back(e);
  }
  return out;
}

// Slice -> binarize -> pack, one pixel at a time. Returns codes per frame.
inline std::vector<std::vector<std::uint32_t>> tbr_frames(
    std::span<const Event> events, SensorGeometry g, std::uint32_t bits,
    Micros delta_t, Micros origin) {
  Micros last = 0;
  bool any = false;
  for (const auto& e : events) {
    if (e.t >= origin) {
      any = true;
      if (e.t > last) last = e.t;
    }
  }
  std::vector<std::vector<std::uint32_t>> frames;
  if (!any) return frames;
  const Micros span = delta_t * bits;
  std::size_t count = 0;
  while (origin + count * span <= last) ++count;

  for (std::size_t k = 0; k < count; ++k) {
    std::vector<std::vector<int>> slices;
    for (std::uint32_t i = 0; i < bits; ++i) {
      const Micros start = origin + k * span + i * delta_t;
      std::vector<int> present(g.pixel_count(), 0);
      for (const auto& e : filter_window(events, start, start + delta_t)) {
        present[e.y * g.width + e.x] = 1;
      }
      slices.push_back(present);
    }
    std::vector<std::uint32_t> codes(g.pixel_count(), 0);
    for (std::size_t p = 0; p < codes.size(); ++p) {
      std::uint32_t value = 0;
      for (std::uint32_t i = 0; i < bits; ++i) {
        value = value * 2 + static_cast<std::uint32_t>(slices[i][p]);
      }
      codes[p] = value;
    }
    frames.push_back(codes);
  }
  return frames;
}

// One pixel of the contrast-threshold model, fed with the pixel's raw
// intensity per input frame.
inline std::vector<Event> simulate_pixel(std::span<const double> intensity,
                                         std::span<const Micros> times,
                                         std::uint16_t x, std::uint16_t y,
                                         const SimulatorConfig& c) {
  std::vector<double> values;
  std::vector<Micros> stamps;
  for (std::size_t i = 0; i + 1 < intensity.size(); ++i) {
    for (std::uint32_t j = 0; j < c.upsample_factor; ++j) {
      values.push_back(intensity[i] +
                       (intensity[i + 1] - intensity[i]) * j / c.upsample_factor);
      stamps.push_back(times[i] + (times[i + 1] - times[i]) * j / c.upsample_factor);
    }
  }
  values.push_back(intensity.back());
  stamps.push_back(times.back());

  std::vector<Event> out;
  const double base = std::log(values[0] + c.epsilon);
  const double limit = c.contrast_threshold * (1.0 - kThresholdSlack);
  long long steps = 0;
  for (std::size_t s = 1; s < values.size(); ++s) {
    const double now = std::log(values[s] + c.epsilon);
    std::vector<int> signs;
    for (;;) {
      const double ref = base + static_cast<double>(steps) * c.contrast_threshold;
      if (now - ref >= limit) {
        signs.push_back(1);
        ++steps;
      } else if (ref - now >= limit) {
        signs.push_back(-1);
        --steps;
      } else {
        break;
      }
    }
    const Micros k = signs.size();
    for (Micros j = 1; j <= k; ++j) {
      out.push_back({stamps[s - 1] + (stamps[s] - stamps[s - 1]) * j / k, x, y,
                     static_cast<std::int8_t>(signs[j - 1])});
    }
  }
  return out;
}

inline long double mean_of(std::span<const double> v) {
  long double s = 0;
  for (double x : v) s += x;
  return s / v.size();
}

inline double rmse(std::span<const double> a, std::span<const double> b) {
  long double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    s += (static_cast<long double>(a[i]) - b[i]) *
         (static_cast<long double>(a[i]) - b[i]);
  }
  return static_cast<double>(std::sqrt(s / a.size()));
}

// Raw-moment (one-pass) form, long double: a different route from the
// library's centred two-pass computation.
inline double pcc(std::span<const double> a, std::span<const double> b) {
  long double sa = 0, sb = 0, saa = 0, sbb = 0, sab = 0;
  const long double n = a.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    sa += a[i];
    sb += b[i];
    saa += static_cast<long double>(a[i]) * a[i];
    sbb += static_cast<long double>(b[i]) * b[i];
    sab += static_cast<long double>(a[i]) * b[i];
  }
  const long double num = n * sab - sa * sb;
  const long double den = std::sqrt((n * saa - sa * sa) * (n * sbb - sb * sb));
  return static_cast<double>(num / den);
}

inline double sagr(std::span<const double> a, std::span<const double> b) {
  int agree = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const bool same = (a[i] > 0 && b[i] > 0) || (a[i] < 0 && b[i] < 0) ||
                      (a[i] == 0 && b[i] == 0);
    if (same) ++agree;
  }
  return static_cast<double>(agree) / a.size();
}

inline Micros mean_time(std::span<const Event> events, Micros start,
                        Micros end) {
  const auto in = filter_window(events, start, end);
  if (in.empty()) return start + (end - start) / 2;
  long double sum = 0;
  for (const auto& e : in) sum += e.t;
  return static_cast<Micros>(std::floor(sum / in.size() + 0.5L));
}

inline std::size_t nearest(std::span<const Micros> stamps, Micros t) {
  std::size_t best = 0;
  Micros best_d = std::numeric_limits<Micros>::max();
  for (std::size_t i = 0; i < stamps.size(); ++i) {
    const Micros d = stamps[i] > t ? stamps[i] - t : t - stamps[i];
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

inline std::size_t farthest_from_mean(std::span<const VaPair> s) {
  long double mv = 0, ma = 0;
  for (const auto& p : s) {
    mv += p.valence;
    ma += p.arousal;
  }
  mv /= s.size();
  ma /= s.size();
  std::size_t best = 0;
  long double best_d = -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const long double d = std::hypot(s[i].valence - mv, s[i].arousal - ma);
    if (d > best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

inline std::size_t nearest_template(const VaPair& p,
                                    std::span<const VaPair> templates) {
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < templates.size(); ++i) {
    const double d = std::hypot(p.valence - templates[i].valence,
                                p.arousal - templates[i].arousal);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

}  // namespace neuroaffect::oracle

#endif  // NEUROAFFECT_TESTS_ORACLES_HPP
