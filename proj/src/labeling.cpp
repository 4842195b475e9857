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

#include "labeling.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

#include "csv.hpp"
#include "error.hpp"

namespace neuroaffect {

AnnotationTrack::AnnotationTrack(std::vector<Annotation> annotations)
    : items_(std::move(annotations)) {
  for (std::size_t i = 0; i < items_.size(); ++i) {
    const auto& a = items_[i];
    for (double v : {a.valence, a.arousal}) {
      if (!std::isfinite(v) || v < -10.0 || v > 10.0) {
        throw_validation("annotation " + std::to_string(i) + ": value " +
                         format_double(v) + " outside [-10, 10]");
      }
    }
    if (i > 0 && a.timestamp < items_[i - 1].timestamp) {
      throw_validation("annotation " + std::to_string(i) +
                       ": timestamps must be non-decreasing");
    }
  }
}

AnnotationTrack read_annotations(std::string_view text,
                                 std::optional<Micros> period_us) {
  if (period_us && *period_us == 0) {
    throw_argument("frame period must be positive");
  }
  const CsvTable table = parse_csv(text);
  expect_columns(table, {"frame_index", "timestamp_us", "valence", "arousal"},
                 "annotation csv");
  std::vector<Annotation> items;
  items.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    Annotation a;
    a.frame_index = parse_uint(row[0], "annotation frame_index");
    if (period_us) {
      a.timestamp = a.frame_index * *period_us;
    } else {
      a.timestamp = parse_uint(row[1], "annotation timestamp_us");
    }
    a.valence = parse_double(row[2], "annotation valence");
    a.arousal = parse_double(row[3], "annotation arousal");
    items.push_back(a);
  }
  return AnnotationTrack(std::move(items));
}

Micros frame_event_mean_time(const EventStream& stream, Micros t_start,
                             Micros span) {
  const auto events = stream.window(t_start, t_start + span);
  if (events.empty()) return t_start + span / 2;
  __extension__ typedef unsigned __int128 Wide;
  Wide sum = 0;
  for (const Event& e : events) sum += e.t;
  const auto n = static_cast<Wide>(events.size());
  return static_cast<Micros>((sum + n / 2) / n);
}

std::size_t nearest_annotation(const AnnotationTrack& track, Micros t) {
  if (track.empty()) throw_argument("annotation track is empty");
  const auto items = track.annotations();
  // First annotation at or after t; its predecessor group is the other
  // candidate. Equal timestamps resolve to the lowest index via lower_bound.
  const auto it = std::lower_bound(
      items.begin(), items.end(), t,
      [](const Annotation& a, Micros v) { return a.timestamp < v; });
  if (it == items.begin()) return 0;
  if (it == items.end()) {
    const Micros last = items.back().timestamp;
    const auto first_of_last = std::lower_bound(
        items.begin(), items.end(), last,
        [](const Annotation& a, Micros v) { return a.timestamp < v; });
    return static_cast<std::size_t>(first_of_last - items.begin());
  }
  const Micros before = std::prev(it)->timestamp;
  const auto before_it = std::lower_bound(
      items.begin(), items.end(), before,
      [](const Annotation& a, Micros v) { return a.timestamp < v; });
  const Micros d_before = t - before;
  const Micros d_after = it->timestamp - t;
  return static_cast<std::size_t>(
      (d_before <= d_after ? before_it : it) - items.begin());
}

std::vector<LabeledTbrFrame> align(const AnnotationTrack& track,
                                   const TbrTensorSet& tensors,
                                   const EventStream& stream) {
  if (track.empty()) throw_argument("cannot align with an empty annotation track");
  std::vector<LabeledTbrFrame> out;
  out.reserve(tensors.size());
  for (std::size_t k = 0; k < tensors.size(); ++k) {
    const Micros t_start = tensors.frame(k).t_start;
    const Micros mean =
        frame_event_mean_time(stream, t_start, tensors.frame_span());
    const std::size_t src = nearest_annotation(track, mean);
    out.push_back({k, t_start,
                   VaPair::checked(normalize_va(track[src].valence),
                                   normalize_va(track[src].arousal)),
                   src});
  }
  return out;
}

std::string write_labeled(std::span<const LabeledTbrFrame> labeled) {
  std::string out =
      "tbr_frame_index,t_start_us,valence_norm,arousal_norm,"
      "source_annotation_index\n";
  for (const auto& l : labeled) {
    out += std::to_string(l.frame_index) + ',' + std::to_string(l.t_start) +
           ',' + format_double(l.value.valence) + ',' +
           format_double(l.value.arousal) + ',' +
           std::to_string(l.source_annotation) + '\n';
  }
  return out;
}

std::vector<LabeledTbrFrame> read_labeled(std::string_view text) {
  const CsvTable table = parse_csv(text);
  expect_columns(table, {"tbr_frame_index", "t_start_us", "valence_norm",
                         "arousal_norm", "source_annotation_index"},
                 "labeled csv");
  std::vector<LabeledTbrFrame> out;
  out.reserve(table.rows.size());
  for (const auto& row : table.rows) {
    out.push_back({parse_uint(row[0], "tbr_frame_index"),
                   parse_uint(row[1], "t_start_us"),
                   VaPair::checked(parse_double(row[2], "valence_norm"),
                                   parse_double(row[3], "arousal_norm")),
                   parse_uint(row[4], "source_annotation_index")});
  }
  return out;
}

}  // namespace neuroaffect
