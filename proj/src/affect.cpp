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

#include "affect.hpp"

#include <cmath>

#include "csv.hpp"
#include "error.hpp"

namespace neuroaffect {
namespace {

constexpr std::array<std::string_view, kEmotionCount> kNames = {
    "Disgust", "Contempt", "Happiness", "Fear", "Anger", "Surprise", "Sadness"};

double squared_distance(const VaPair& a, const VaPair& b) {
  const double dv = a.valence - b.valence;
  const double da = a.arousal - b.arousal;
  return dv * dv + da * da;
}

bool in_unit_range(double v) { return std::isfinite(v) && v >= -1.0 && v <= 1.0; }

}  // namespace

VaPair VaPair::checked(double valence, double arousal) {
  if (!in_unit_range(valence) || !in_unit_range(arousal)) {
    throw_validation("valence/arousal (" + format_double(valence) + ", " +
                     format_double(arousal) + ") outside [-1, 1]");
  }
  return {valence, arousal};
}

double normalize_va(double raw) {
  if (!std::isfinite(raw) || raw < -10.0 || raw > 10.0) {
    throw_validation("annotation value " + format_double(raw) +
                     " outside [-10, 10]");
  }
  return raw / 10.0;
}

std::string_view emotion_name(Emotion e) {
  return kNames[static_cast<std::size_t>(e)];
}

std::optional<Emotion> emotion_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kEmotionCount; ++i) {
    if (kNames[i] == name) return kAllEmotions[i];
  }
  return std::nullopt;
}

EmotionTemplateSet::EmotionTemplateSet(
    const std::array<VaPair, kEmotionCount>& values)
    : values_(values) {
  for (const auto& v : values_) VaPair::checked(v.valence, v.arousal);
}

RepresentativeFrame select_representative(std::span<const VaPair> series) {
  if (series.empty()) throw_argument("representative frame of empty series");
  double sum_v = 0.0;
  double sum_a = 0.0;
  for (const auto& p : series) {
    sum_v += p.valence;
    sum_a += p.arousal;
  }
  const auto n = static_cast<double>(series.size());
  const VaPair mean{sum_v / n, sum_a / n};

  std::size_t best = 0;
  double best_sq = squared_distance(series[0], mean);
  for (std::size_t i = 1; i < series.size(); ++i) {
    const double d = squared_distance(series[i], mean);
    if (d > best_sq) {
      best = i;
      best_sq = d;
    }
  }
  return {best, series[best], std::sqrt(best_sq)};
}

EmotionTemplateSet build_templates(std::span<const LabeledSeries> labeled) {
  // Extended precision keeps the mean of n equal values equal to that value.
  std::array<long double, kEmotionCount> sum_v{};
  std::array<long double, kEmotionCount> sum_a{};
  std::array<std::size_t, kEmotionCount> frames{};
  for (const auto& item : labeled) {
    const auto i = static_cast<std::size_t>(item.label);
    for (const auto& p : item.series) {
      sum_v[i] += p.valence;
      sum_a[i] += p.arousal;
      ++frames[i];
    }
  }
  std::string missing;
  std::array<VaPair, kEmotionCount> values{};
  for (std::size_t i = 0; i < kEmotionCount; ++i) {
    if (frames[i] == 0) {
      if (!missing.empty()) missing += ", ";
      missing += kNames[i];
      continue;
    }
    const auto n = static_cast<long double>(frames[i]);
    values[i] = {static_cast<double>(sum_v[i] / n),
                 static_cast<double>(sum_a[i] / n)};
  }
  if (!missing.empty()) {
    throw Error(ErrorKind::kCoverage, "no frames for emotion(s): " + missing);
  }
  return EmotionTemplateSet(values);
}

Emotion nearest_emotion(const VaPair& point,
                        const EmotionTemplateSet& templates) {
  std::size_t best = 0;
  double best_sq = squared_distance(point, templates.values()[0]);
  for (std::size_t i = 1; i < kEmotionCount; ++i) {
    const double d = squared_distance(point, templates.values()[i]);
    if (d < best_sq) {
      best = i;
      best_sq = d;
    }
  }
  return kAllEmotions[best];
}

Classification classify(std::span<const VaPair> series,
                        const EmotionTemplateSet& templates) {
  const RepresentativeFrame rep = select_representative(series);
  const Emotion label = nearest_emotion(rep.value, templates);
  return {label, rep,
          std::sqrt(squared_distance(rep.value, templates.at(label)))};
}

std::string write_templates(const EmotionTemplateSet& templates) {
  std::string out = "emotion,valence,arousal\n";
  for (Emotion e : kAllEmotions) {
    const auto& v = templates.at(e);
    out += emotion_name(e);
    out += ',' + format_double(v.valence) + ',' + format_double(v.arousal) +
           '\n';
  }
  return out;
}

EmotionTemplateSet read_templates(std::string_view text) {
  const CsvTable table = parse_csv(text);
  expect_columns(table, {"emotion", "valence", "arousal"}, "template csv");
  std::array<VaPair, kEmotionCount> values{};
  std::array<bool, kEmotionCount> seen{};
  for (const auto& row : table.rows) {
    const auto e = emotion_from_name(row[0]);
    if (!e) throw_format("template csv: unknown emotion '" + row[0] + "'");
    const auto i = static_cast<std::size_t>(*e);
    if (seen[i]) throw_format("template csv: duplicate emotion '" + row[0] + "'");
    seen[i] = true;
    values[i] = VaPair::checked(parse_double(row[1], "template valence"),
                                parse_double(row[2], "template arousal"));
  }
  std::string missing;
  for (std::size_t i = 0; i < kEmotionCount; ++i) {
    if (!seen[i]) {
      if (!missing.empty()) missing += ", ";
      missing += kNames[i];
    }
  }
  if (!missing.empty()) {
    throw Error(ErrorKind::kCoverage, "template csv: missing " + missing);
  }
  return EmotionTemplateSet(values);
}

std::string write_predictions(std::span<const VaSample> samples) {
  std::string out = "frame_index,timestamp_us,valence,arousal\n";
  for (const auto& s : samples) {
    out += std::to_string(s.frame_index) + ',' + std::to_string(s.timestamp) +
           ',' + format_double(s.value.valence) + ',' +
           format_double(s.value.arousal) + '\n';
  }
  return out;
}

std::vector<VaSample> read_predictions(std::string_view text) {
  const CsvTable table = parse_csv(text);
  std::vector<VaSample> out;
  out.reserve(table.rows.size());
  if (has_columns(table, {"tbr_frame_index", "t_start_us", "valence_norm",
                          "arousal_norm", "source_annotation_index"})) {
    expect_columns(table, {"tbr_frame_index", "t_start_us", "valence_norm",
                           "arousal_norm", "source_annotation_index"},
                   "labeled csv");
  } else {
    expect_columns(table, {"frame_index", "timestamp_us", "valence", "arousal"},
                   "prediction csv");
  }
  for (const auto& row : table.rows) {
    out.push_back({parse_uint(row[0], "frame index"),
                   parse_uint(row[1], "timestamp"),
                   VaPair::checked(parse_double(row[2], "valence"),
                                   parse_double(row[3], "arousal"))});
  }
  return out;
}

VaSeries values_of(std::span<const VaSample> samples) {
  VaSeries out;
  out.reserve(samples.size());
  for (const auto& s : samples) out.push_back(s.value);
  return out;
}

}  // namespace neuroaffect
