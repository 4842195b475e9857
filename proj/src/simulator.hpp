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

#ifndef NEUROAFFECT_SIMULATOR_HPP
#define NEUROAFFECT_SIMULATOR_HPP

#include <cstdint>

#include "event_core.hpp"
#include "frames.hpp"

namespace neuroaffect {

struct SimulatorConfig {
  double contrast_threshold = 0.2;  // log-intensity units
  std::uint32_t upsample_factor = 1;
  double epsilon = 1.0;  // L = ln(I + epsilon)
  unsigned threads = 1;  // 0 = hardware concurrency

  void validate() const;
};

// Relative slack on the threshold comparison. A change of exactly k
// thresholds must yield k events even when ln() rounds a few ulps low.
inline constexpr double kThresholdSlack = 1e-9;

/// Contrast-threshold event simulation over (optionally upsampled) frames.
///
/// Each pixel keeps a reference level L0 + n*theta, where L0 = ln(I0 + eps)
/// and n is an integer step count. For every consecutive pair of sub-frames,
/// while |L - reference| >= theta one event of polarity sign(L - reference)
/// fires and n moves one step towards L. The k events of one pixel in one
/// sub-frame interval [t0, t1] are stamped t0 + floor((t1 - t0) * j / k),
/// j = 1..k. Output is sorted by (t, y, x), stable for equal keys, so it does
/// not depend on the thread count.
EventStream simulate(const FrameSequence& frames,
                     const SimulatorConfig& config);

}  // namespace neuroaffect

#endif  // NEUROAFFECT_SIMULATOR_HPP
