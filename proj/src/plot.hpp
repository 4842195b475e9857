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

#ifndef NEUROAFFECT_PLOT_HPP
#define NEUROAFFECT_PLOT_HPP

#include <optional>
#include <span>
#include <string>

#include "affect.hpp"

namespace neuroaffect {

// Static SVG renderings. Output is a pure function of the input (no dates,
// no random ids), so files diff cleanly.

inline constexpr double kWheelSize = 480.0;
inline constexpr double kWheelRadius = 200.0;

/// Valence and arousal against frame index on a fixed [-1, 1] axis. Truth,
/// when given, is drawn dashed.
std::string plot_timeline(std::span<const VaSample> pred,
                          std::span<const VaSample> truth = {});

/// Unit circle, valence horizontal and arousal vertical (up is positive).
/// Predicted points are filled circles (class "pred"), truth points hollow
/// squares (class "truth"), templates labelled diamonds (class "template").
std::string plot_wheel(std::span<const VaSample> pred,
                       std::span<const VaSample> truth = {},
                       const EmotionTemplateSet* templates = nullptr);

struct SvgPoint {
  double x;
  double y;
};

/// Where plot_wheel puts a valence-arousal point.
SvgPoint wheel_position(const VaPair& p);

}  // namespace neuroaffect

#endif  // NEUROAFFECT_PLOT_HPP
