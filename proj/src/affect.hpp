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

#ifndef NEUROAFFECT_AFFECT_HPP
#define NEUROAFFECT_AFFECT_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "event_core.hpp"

namespace neuroaffect {

/// A point of the valence-arousal plane, both components in [-1, 1].
struct VaPair {
  double valence = 0.0;
  double arousal = 0.0;

  /// Validation error unless both components are finite and in [-1, 1].
  static VaPair checked(double valence, double arousal);

  friend bool operator==(const VaPair&, const VaPair&) = default;
};

using VaSeries = std::vector<VaPair>;

/// Raw annotation units [-10, 10] to [-1, 1] (raw / 10).
double normalize_va(double raw);

// Declaration order is the tie-break order for classification.
enum class Emotion : std::uint8_t {
  kDisgust,
  kContempt,
  kHappiness,
  kFear,
  kAnger,
  kSurprise,
  kSadness,
};

inline constexpr std::size_t kEmotionCount = 7;
inline constexpr std::array<Emotion, kEmotionCount> kAllEmotions = {
    Emotion::kDisgust, Emotion::kContempt, Emotion::kHappiness,
    Emotion::kFear,    Emotion::kAnger,    Emotion::kSurprise,
    Emotion::kSadness};

std::string_view emotion_name(Emotion e);
std::optional<Emotion> emotion_from_name(std::string_view name);

/// One prototype VaPair per emotion.
class EmotionTemplateSet {
 public:
  explicit EmotionTemplateSet(const std::array<VaPair, kEmotionCount>& values);

  const VaPair& at(Emotion e) const {
    return values_[static_cast<std::size_t>(e)];
  }
  const std::array<VaPair, kEmotionCount>& values() const noexcept {
    return values_;
  }

  friend bool operator==(const EmotionTemplateSet&,
                         const EmotionTemplateSet&) = default;

 private:
  std::array<VaPair, kEmotionCount> values_;
};

struct RepresentativeFrame {
  std::size_t index = 0;
  VaPair value;
  double distance = 0.0;  // from the series mean
};

/// Frame farthest (Euclidean) from the componentwise mean; ties go to the
/// lowest index.
RepresentativeFrame select_representative(std::span<const VaPair> series);

struct LabeledSeries {
  Emotion label;
  VaSeries series;
};

/// Per label, the mean over every frame of every series with that label.
/// Frames are pooled, so long videos weigh more than short ones. Coverage
/// error naming the missing labels when any emotion has no frames.
EmotionTemplateSet build_templates(std::span<const LabeledSeries> labeled);

struct Classification {
  Emotion label;
  RepresentativeFrame representative;
  double template_distance = 0.0;
};

/// Nearest template to `point`; ties resolve in Emotion declaration order.
Emotion nearest_emotion(const VaPair& point,
                        const EmotionTemplateSet& templates);

Classification classify(std::span<const VaPair> series,
                        const EmotionTemplateSet& templates);

// Template CSV: "emotion,valence,arousal", one row per emotion.
std::string write_templates(const EmotionTemplateSet& templates);
EmotionTemplateSet read_templates(std::string_view text);

/// One row of a prediction CSV "frame_index,timestamp_us,valence,arousal".
struct VaSample {
  std::uint64_t frame_index = 0;
  Micros timestamp = 0;
  VaPair value;

  friend bool operator==(const VaSample&, const VaSample&) = default;
};

std::string write_predictions(std::span<const VaSample> samples);

/// Accepts the prediction CSV, or the labeled-dataset CSV (mapped to
/// frame_index = tbr_frame_index, timestamp = t_start_us).
std::vector<VaSample> read_predictions(std::string_view text);

VaSeries values_of(std::span<const VaSample> samples);

}  // namespace neuroaffect

#endif  // NEUROAFFECT_AFFECT_HPP
