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

#ifndef NEUROAFFECT_LABELING_HPP
#define NEUROAFFECT_LABELING_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "affect.hpp"
#include "event_core.hpp"
#include "tbr.hpp"

namespace neuroaffect {

/// Per-RGB-frame annotation in raw units [-10, 10].
struct Annotation {
  std::uint64_t frame_index = 0;
  Micros timestamp = 0;
  double valence = 0.0;
  double arousal = 0.0;
};

class AnnotationTrack {
 public:
  /// Validation error on decreasing timestamps or values outside [-10, 10].
  explicit AnnotationTrack(std::vector<Annotation> annotations);

  std::span<const Annotation> annotations() const noexcept { return items_; }
  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }
  const Annotation& operator[](std::size_t i) const { return items_[i]; }

 private:
  std::vector<Annotation> items_;
};

/// CSV "frame_index,timestamp_us,valence,arousal". With `period_us` every
/// timestamp is replaced by frame_index * period_us; without it an empty
/// timestamp field is a format error.
AnnotationTrack read_annotations(std::string_view text,
                                 std::optional<Micros> period_us = {});

/// Mean timestamp (round half up) of the events in [t_start, t_start + span),
/// or the window midpoint when the window holds no events.
Micros frame_event_mean_time(const EventStream& stream, Micros t_start,
                             Micros span);

/// Index of the annotation closest in time to `t`; the earlier one on ties.
std::size_t nearest_annotation(const AnnotationTrack& track, Micros t);

struct LabeledTbrFrame {
  std::size_t frame_index = 0;
  Micros t_start = 0;
  VaPair value;
  std::size_t source_annotation = 0;

  friend bool operator==(const LabeledTbrFrame&,
                         const LabeledTbrFrame&) = default;
};

/// Labels every TBR frame with the annotation nearest to the mean time of
/// the events inside it, normalized to [-1, 1].
std::vector<LabeledTbrFrame> align(const AnnotationTrack& track,
                                   const TbrTensorSet& tensors,
                                   const EventStream& stream);

// "tbr_frame_index,t_start_us,valence_norm,arousal_norm,source_annotation_index"
std::string write_labeled(std::span<const LabeledTbrFrame> labeled);
std::vector<LabeledTbrFrame> read_labeled(std::string_view text);

}  // namespace neuroaffect

#endif  // NEUROAFFECT_LABELING_HPP
