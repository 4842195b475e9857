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

#include "plot.hpp"

#include <algorithm>
#include <cstdio>

#include "error.hpp"

namespace neuroaffect {
namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

void check_samples(std::span<const VaSample> samples) {
  for (const auto& s : samples) {
    VaPair::checked(s.value.valence, s.value.arousal);
  }
}

std::string svg_open(double w, double h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" +
         num(w) + "\" height=\"" + num(h) + "\" viewBox=\"0 0 " + num(w) +
         " " + num(h) + "\">\n<rect width=\"100%\" height=\"100%\" "
         "fill=\"white\"/>\n";
}

// Timeline layout.
constexpr double kWidth = 800.0;
constexpr double kHeight = 360.0;
constexpr double kLeft = 60.0;
constexpr double kRight = 20.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 40.0;

struct TimelineAxes {
  std::uint64_t first;
  std::uint64_t last;

  double x(std::uint64_t frame) const {
    const double span = last > first ? static_cast<double>(last - first) : 1.0;
    return kLeft + (static_cast<double>(frame - first) / span) *
                       (kWidth - kLeft - kRight);
  }
  static double y(double v) {
    return kTop + (1.0 - v) / 2.0 * (kHeight - kTop - kBottom);
  }
};

std::string polyline(std::span<const VaSample> samples, const TimelineAxes& ax,
                     bool valence, const char* cls, const char* color,
                     bool dashed) {
  std::string out = "<polyline class=\"" + std::string(cls) +
                    "\" fill=\"none\" stroke=\"" + color +
                    "\" stroke-width=\"1.5\"";
  if (dashed) out += " stroke-dasharray=\"6 3\"";
  out += " points=\"";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& s = samples[i];
    if (i) out += ' ';
    out += num(ax.x(s.frame_index)) + "," +
           num(TimelineAxes::y(valence ? s.value.valence : s.value.arousal));
  }
  return out + "\"/>\n";
}

}  // namespace

SvgPoint wheel_position(const VaPair& p) {
  const double c = kWheelSize / 2.0;
  return {c + p.valence * kWheelRadius, c - p.arousal * kWheelRadius};
}

std::string plot_timeline(std::span<const VaSample> pred,
                          std::span<const VaSample> truth) {
  if (pred.empty()) throw_argument("plot: empty prediction series");
  check_samples(pred);
  check_samples(truth);

  TimelineAxes ax{pred.front().frame_index, pred.front().frame_index};
  for (auto span : {pred, truth}) {
    for (const auto& s : span) {
      ax.first = std::min(ax.first, s.frame_index);
      ax.last = std::max(ax.last, s.frame_index);
    }
  }

  std::string svg = svg_open(kWidth, kHeight);
  for (double v : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
    const double y = TimelineAxes::y(v);
    svg += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" +
           num(kWidth - kRight) + "\" y2=\"" + num(y) + "\" stroke=\"" +
           (v == 0.0 ? "#888888" : "#dddddd") + "\"/>\n";
    svg += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 4) +
           "\" font-size=\"11\" text-anchor=\"end\">" + num(v) + "</text>\n";
  }
  svg += "<text x=\"" + num(kWidth / 2) + "\" y=\"" + num(kHeight - 8) +
         "\" font-size=\"12\" text-anchor=\"middle\">frame " +
         std::to_string(ax.first) + " to " + std::to_string(ax.last) +
         "</text>\n";
  if (!truth.empty()) {
    svg += polyline(truth, ax, true, "truth-valence", "#1f77b4", true);
    svg += polyline(truth, ax, false, "truth-arousal", "#d62728", true);
  }
  svg += polyline(pred, ax, true, "valence", "#1f77b4", false);
  svg += polyline(pred, ax, false, "arousal", "#d62728", false);
  svg += "<text x=\"" + num(kLeft + 10) + "\" y=\"18\" font-size=\"12\" "
         "fill=\"#1f77b4\">valence</text>\n";
  svg += "<text x=\"" + num(kLeft + 80) + "\" y=\"18\" font-size=\"12\" "
         "fill=\"#d62728\">arousal</text>\n";
  return svg + "</svg>\n";
}

std::string plot_wheel(std::span<const VaSample> pred,
                       std::span<const VaSample> truth,
                       const EmotionTemplateSet* templates) {
  if (pred.empty()) throw_argument("plot: empty prediction series");
  check_samples(pred);
  check_samples(truth);

  const double c = kWheelSize / 2.0;
  std::string svg = svg_open(kWheelSize, kWheelSize);
  svg += "<circle cx=\"" + num(c) + "\" cy=\"" + num(c) + "\" r=\"" +
         num(kWheelRadius) + "\" fill=\"none\" stroke=\"#444444\"/>\n";
  svg += "<line x1=\"" + num(c - kWheelRadius) + "\" y1=\"" + num(c) +
         "\" x2=\"" + num(c + kWheelRadius) + "\" y2=\"" + num(c) +
         "\" stroke=\"#888888\"/>\n";
  svg += "<line x1=\"" + num(c) + "\" y1=\"" + num(c - kWheelRadius) +
         "\" x2=\"" + num(c) + "\" y2=\"" + num(c + kWheelRadius) +
         "\" stroke=\"#888888\"/>\n";
  svg += "<text x=\"" + num(c + kWheelRadius + 4) + "\" y=\"" + num(c - 6) +
         "\" font-size=\"12\" text-anchor=\"end\">Valence</text>\n";
  svg += "<text x=\"" + num(c + 6) + "\" y=\"" + num(c - kWheelRadius - 6) +
         "\" font-size=\"12\">Arousal</text>\n";

  for (const auto& s : truth) {
    const auto p = wheel_position(s.value);
    svg += "<rect class=\"truth\" x=\"" + num(p.x - 3) + "\" y=\"" +
           num(p.y - 3) + "\" width=\"6\" height=\"6\" fill=\"none\" "
           "stroke=\"#2ca02c\"/>\n";
  }
  for (const auto& s : pred) {
    const auto p = wheel_position(s.value);
    svg += "<circle class=\"pred\" cx=\"" + num(p.x) + "\" cy=\"" + num(p.y) +
           "\" r=\"3\" fill=\"#1f77b4\"/>\n";
  }
  if (templates != nullptr) {
    for (Emotion e : kAllEmotions) {
      const auto p = wheel_position(templates->at(e));
      svg += "<polygon class=\"template\" points=\"" + num(p.x) + "," +
             num(p.y - 5) + " " + num(p.x + 5) + "," + num(p.y) + " " +
             num(p.x) + "," + num(p.y + 5) + " " + num(p.x - 5) + "," +
             num(p.y) + "\" fill=\"#ff7f0e\"/>\n";
      svg += "<text x=\"" + num(p.x + 7) + "\" y=\"" + num(p.y - 7) +
             "\" font-size=\"11\">" + std::string(emotion_name(e)) +
             "</text>\n";
    }
  }
  return svg + "</svg>\n";
}

}  // namespace neuroaffect
