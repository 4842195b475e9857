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

#include "neuroaffect/neuroaffect.h"

#include <exception>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "affect.hpp"
#include "baseline.hpp"
#include "error.hpp"
#include "event_core.hpp"
#include "event_io.hpp"
#include "frames.hpp"
#include "labeling.hpp"
#include "metrics.hpp"
#include "plot.hpp"
#include "simulator.hpp"
#include "tbr.hpp"

namespace na = neuroaffect;

struct na_bytes {
  std::vector<std::uint8_t> data;
};
struct na_events {
  na::EventStream value;
};
struct na_frames {
  na::FrameSequence value;
};
struct na_tbr {
  na::TbrTensorSet value;
};
struct na_annotations {
  na::AnnotationTrack value;
};
struct na_labels {
  std::vector<na::LabeledTbrFrame> value;
};
struct na_series {
  std::vector<na::VaSample> value;
};
struct na_model {
  na::RidgeModel value;
};
struct na_templates {
  na::EmotionTemplateSet value;
};

namespace {

thread_local std::string g_last_error;

na_status to_status(na::ErrorKind kind) {
  switch (kind) {
    case na::ErrorKind::kArgument: return NA_ERR_ARGUMENT;
    case na::ErrorKind::kValidation: return NA_ERR_VALIDATION;
    case na::ErrorKind::kFormat: return NA_ERR_FORMAT;
    case na::ErrorKind::kIo: return NA_ERR_IO;
    case na::ErrorKind::kUndefinedCorrelation: return NA_ERR_UNDEFINED;
    case na::ErrorKind::kCoverage: return NA_ERR_COVERAGE;
  }
  return NA_ERR_INTERNAL;
}

template <typename F>
na_status guard(F&& body) noexcept {
  try {
    body();
    return NA_OK;
  } catch (const na::Error& e) {
    g_last_error = e.what();
    return to_status(e.kind());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
  } catch (const std::filesystem::filesystem_error& e) {
    g_last_error = e.what();
    return NA_ERR_IO;
  } catch (const std::exception& e) {
    g_last_error = e.what();
  } catch (...) {
    g_last_error = "unknown error";
  }
  return NA_ERR_INTERNAL;
}

void require(bool ok, const char* what) {
  if (!ok) na::throw_argument(what);
}

std::span<const std::uint8_t> input(const std::uint8_t* data, std::size_t size) {
  require(data != nullptr || size == 0, "null input buffer");
  return {data, size};
}

std::string_view text(const std::uint8_t* data, std::size_t size) {
  const auto in = input(data, size);
  return {reinterpret_cast<const char*>(in.data()), in.size()};
}

na_bytes* bytes_of(std::vector<std::uint8_t> data) {
  return new na_bytes{std::move(data)};
}

na_bytes* bytes_of(const std::string& s) {
  return new na_bytes{std::vector<std::uint8_t>(s.begin(), s.end())};
}

na::EventFormat event_format(na_event_format f) {
  switch (f) {
    case NA_EVENTS_BINARY: return na::EventFormat::kBinary;
    case NA_EVENTS_CSV: return na::EventFormat::kCsv;
  }
  na::throw_argument("unknown event format");
}

na::Emotion emotion_of(na_emotion e) {
  if (e < 0 || e >= NA_EMOTION_COUNT) na::throw_argument("unknown emotion");
  return static_cast<na::Emotion>(e);
}

na_dimension_report dimension_of(const na::DimensionReport& d) {
  return {d.rmse, d.pcc.value_or(0.0), d.pcc.has_value() ? 1 : 0, d.sagr};
}

na::DimensionReport dimension_from(const na_dimension_report& d) {
  na::DimensionReport r;
  r.rmse = d.rmse;
  r.sagr = d.sagr;
  if (d.pcc_defined) r.pcc = d.pcc;
  return r;
}

}  // namespace

extern "C" {

const char* na_version(void) { return "0.1.0"; }

const char* na_status_name(na_status status) {
  switch (status) {
    case NA_OK: return "ok";
    case NA_ERR_ARGUMENT: return "argument error";
    case NA_ERR_VALIDATION: return "validation error";
    case NA_ERR_FORMAT: return "format error";
    case NA_ERR_IO: return "I/O error";
    case NA_ERR_UNDEFINED: return "undefined result";
    case NA_ERR_COVERAGE: return "coverage error";
    case NA_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* na_last_error(void) { return g_last_error.c_str(); }

const uint8_t* na_bytes_data(const na_bytes* bytes) {
  return bytes ? bytes->data.data() : nullptr;
}
size_t na_bytes_size(const na_bytes* bytes) {
  return bytes ? bytes->data.size() : 0;
}
void na_bytes_free(na_bytes* bytes) { delete bytes; }

// ---- events

na_status na_events_create(uint32_t width, uint32_t height,
                           const na_event* events, size_t count,
                           na_events** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    require(events != nullptr || count == 0, "null event array");
    std::vector<na::Event> v;
    v.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      v.push_back({events[i].t_us, events[i].x, events[i].y,
                   events[i].polarity});
    }
    *out = new na_events{na::EventStream({width, height}, std::move(v))};
  });
}

na_status na_events_parse(const uint8_t* data, size_t size,
                          na_event_format format, uint32_t width,
                          uint32_t height, na_events** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    std::optional<na::SensorGeometry> geometry;
    if (width != 0 || height != 0) geometry = na::SensorGeometry{width, height};
    *out = new na_events{
        na::read_events(input(data, size), event_format(format), geometry)};
  });
}

na_status na_events_serialize(const na_events* events, na_event_format format,
                              na_bytes** out) {
  return guard([&] {
    require(events != nullptr && out != nullptr, "null handle");
    *out = bytes_of(na::write_events(events->value, event_format(format)));
  });
}

size_t na_events_count(const na_events* events) {
  return events ? events->value.size() : 0;
}

void na_events_geometry(const na_events* events, uint32_t* width,
                        uint32_t* height) {
  if (!events) return;
  if (width) *width = events->value.geometry().width;
  if (height) *height = events->value.geometry().height;
}

size_t na_events_copy(const na_events* events, size_t first, na_event* dst,
                      size_t capacity) {
  if (!events || !dst) return 0;
  const auto all = events->value.events();
  size_t n = 0;
  for (size_t i = first; i < all.size() && n < capacity; ++i, ++n) {
    dst[n] = {all[i].t, all[i].x, all[i].y, all[i].polarity};
  }
  return n;
}

na_status na_events_slice(const na_events* events, uint64_t t_start,
                          uint64_t t_end, na_events** out) {
  return guard([&] {
    require(events != nullptr && out != nullptr, "null handle");
    *out = new na_events{events->value.slice_by_time(t_start, t_end)};
  });
}

void na_events_free(na_events* events) { delete events; }

// ---- frames and simulation

na_status na_frames_create(uint32_t width, uint32_t height, size_t count,
                           const double* planes, const uint64_t* timestamps_us,
                           na_frames** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    require(count == 0 || (planes != nullptr && timestamps_us != nullptr),
            "null frame data");
    const auto geometry = na::SensorGeometry::checked(width, height);
    const size_t px = geometry.pixel_count();
    std::vector<na::IntensityPlane> v;
    v.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      v.emplace_back(planes + i * px, planes + (i + 1) * px);
    }
    *out = new na_frames{na::FrameSequence(
        geometry, std::move(v),
        std::vector<na::Micros>(timestamps_us, timestamps_us + count))};
  });
}

na_status na_frames_load_dir(const char* dir, uint64_t period_us,
                             na_frames** out) {
  return guard([&] {
    require(dir != nullptr && out != nullptr, "null argument");
    *out = new na_frames{na::load_frame_directory(dir, period_us)};
  });
}

na_status na_frames_load_manifest(const char* manifest_path, na_frames** out) {
  return guard([&] {
    require(manifest_path != nullptr && out != nullptr, "null argument");
    *out = new na_frames{na::load_frame_manifest(manifest_path)};
  });
}

size_t na_frames_count(const na_frames* frames) {
  return frames ? frames->value.size() : 0;
}

void na_frames_free(na_frames* frames) { delete frames; }

na_sim_config na_sim_config_default(void) {
  const na::SimulatorConfig d;
  return {d.contrast_threshold, d.upsample_factor, d.epsilon, d.threads};
}

na_status na_simulate(const na_frames* frames, const na_sim_config* config,
                      na_events** out) {
  return guard([&] {
    require(frames != nullptr && out != nullptr, "null handle");
    na::SimulatorConfig c;
    if (config) {
      c.contrast_threshold = config->contrast_threshold;
      c.upsample_factor = config->upsample_factor;
      c.epsilon = config->epsilon;
      c.threads = config->threads;
    }
    *out = new na_events{na::simulate(frames->value, c)};
  });
}

// ---- TBR

na_tbr_config na_tbr_config_default(void) {
  const na::TbrConfig d;
  return {d.delta_t, d.bits, 0, 0};
}

na_status na_tbr_encode(const na_events* events, const na_tbr_config* config,
                        na_tbr** out) {
  return guard([&] {
    require(events != nullptr && out != nullptr, "null handle");
    na::TbrConfig c;
    if (config) {
      c.delta_t = config->delta_t_us;
      c.bits = config->bits;
      if (config->has_origin) c.origin = config->origin_us;
    }
    *out = new na_tbr{na::encode(events->value, c)};
  });
}

na_status na_tbr_parse(const uint8_t* data, size_t size, na_tbr** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = new na_tbr{na::read_tensors(input(data, size))};
  });
}

na_status na_tbr_serialize(const na_tbr* tbr, na_bytes** out) {
  return guard([&] {
    require(tbr != nullptr && out != nullptr, "null handle");
    *out = bytes_of(na::write_tensors(tbr->value));
  });
}

void na_tbr_get_info(const na_tbr* tbr, na_tbr_info* info) {
  if (!tbr || !info) return;
  const auto& t = tbr->value;
  *info = {t.geometry().width, t.geometry().height, t.bits(), t.delta_t(),
           t.origin(), t.size()};
}

na_status na_tbr_frame(const na_tbr* tbr, size_t k, uint64_t* t_start_us,
                       uint16_t* pixels, size_t capacity) {
  return guard([&] {
    require(tbr != nullptr, "null handle");
    require(k < tbr->value.size(), "TBR frame index out of range");
    const auto& f = tbr->value.frame(k);
    if (t_start_us) *t_start_us = f.t_start;
    if (pixels) {
      require(capacity >= f.pixels.size(), "pixel buffer too small");
      std::copy(f.pixels.begin(), f.pixels.end(), pixels);
    }
  });
}

uint32_t na_tbr_padded_slices(const na_tbr* tbr, const na_events* events) {
  if (!tbr || !events) return 0;
  return na::padded_slice_count(tbr->value, events->value);
}

void na_tbr_free(na_tbr* tbr) { delete tbr; }

// ---- annotations and alignment

na_status na_annotations_parse(const uint8_t* data, size_t size,
                               uint64_t period_us, na_annotations** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    std::optional<na::Micros> period;
    if (period_us > 0) period = period_us;
    *out = new na_annotations{na::read_annotations(text(data, size), period)};
  });
}

size_t na_annotations_count(const na_annotations* track) {
  return track ? track->value.size() : 0;
}

void na_annotations_free(na_annotations* track) { delete track; }

na_status na_frame_mean_time(const na_events* events, uint64_t t_start_us,
                             uint64_t span_us, uint64_t* out) {
  return guard([&] {
    require(events != nullptr && out != nullptr, "null handle");
    *out = na::frame_event_mean_time(events->value, t_start_us, span_us);
  });
}

na_status na_align(const na_annotations* track, const na_tbr* tbr,
                   const na_events* events, na_labels** out) {
  return guard([&] {
    require(track && tbr && events && out, "null handle");
    *out = new na_labels{na::align(track->value, tbr->value, events->value)};
  });
}

na_status na_labels_parse(const uint8_t* data, size_t size, na_labels** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = new na_labels{na::read_labeled(text(data, size))};
  });
}

na_status na_labels_serialize(const na_labels* labels, na_bytes** out) {
  return guard([&] {
    require(labels != nullptr && out != nullptr, "null handle");
    *out = bytes_of(na::write_labeled(labels->value));
  });
}

size_t na_labels_count(const na_labels* labels) {
  return labels ? labels->value.size() : 0;
}

na_status na_labels_get(const na_labels* labels, size_t i, na_label* out) {
  return guard([&] {
    require(labels != nullptr && out != nullptr, "null handle");
    require(i < labels->value.size(), "label index out of range");
    const auto& l = labels->value[i];
    *out = {l.frame_index, l.t_start, l.value.valence, l.value.arousal,
            l.source_annotation};
  });
}

void na_labels_free(na_labels* labels) { delete labels; }

// ---- series

na_status na_series_create(const na_va_sample* samples, size_t count,
                           na_series** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    require(samples != nullptr || count == 0, "null sample array");
    std::vector<na::VaSample> v;
    v.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      v.push_back({samples[i].frame_index, samples[i].timestamp_us,
                   na::VaPair::checked(samples[i].valence,
                                       samples[i].arousal)});
    }
    *out = new na_series{std::move(v)};
  });
}

na_status na_series_parse(const uint8_t* data, size_t size, na_series** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = new na_series{na::read_predictions(text(data, size))};
  });
}

na_status na_series_serialize(const na_series* series, na_bytes** out) {
  return guard([&] {
    require(series != nullptr && out != nullptr, "null handle");
    *out = bytes_of(na::write_predictions(series->value));
  });
}

size_t na_series_count(const na_series* series) {
  return series ? series->value.size() : 0;
}

na_status na_series_get(const na_series* series, size_t i, na_va_sample* out) {
  return guard([&] {
    require(series != nullptr && out != nullptr, "null handle");
    require(i < series->value.size(), "sample index out of range");
    const auto& s = series->value[i];
    *out = {s.frame_index, s.timestamp, s.value.valence, s.value.arousal};
  });
}

void na_series_free(na_series* series) { delete series; }

// ---- ridge baseline

na_status na_pool_features(const na_tbr* tbr, size_t k, uint32_t grid_rows,
                           uint32_t grid_cols, double* features,
                           size_t capacity) {
  return guard([&] {
    require(tbr != nullptr && features != nullptr, "null argument");
    require(k < tbr->value.size(), "TBR frame index out of range");
    const auto f = na::pool_features(tbr->value.frame(k).pixels,
                                     tbr->value.geometry(), tbr->value.bits(),
                                     {grid_rows, grid_cols});
    require(capacity >= f.size(), "feature buffer too small");
    std::copy(f.begin(), f.end(), features);
  });
}

na_status na_fit(const na_tbr* const* tensors, const na_labels* const* labels,
                 size_t count, uint32_t grid_rows, uint32_t grid_cols,
                 double lambda, na_model** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    require(count == 0 || (tensors != nullptr && labels != nullptr),
            "null training arrays");
    std::vector<na::TrainingClip> clips;
    for (size_t i = 0; i < count; ++i) {
      require(tensors[i] != nullptr && labels[i] != nullptr,
              "null training handle");
      clips.push_back({&tensors[i]->value, labels[i]->value});
    }
    *out = new na_model{na::fit(clips, {grid_rows, grid_cols}, lambda)};
  });
}

na_status na_predict(const na_model* model, const na_tbr* tbr,
                     na_series** out) {
  return guard([&] {
    require(model && tbr && out, "null handle");
    *out = new na_series{na::predict_all(model->value, tbr->value)};
  });
}

na_status na_model_parse(const uint8_t* data, size_t size, na_model** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = new na_model{na::read_model(text(data, size))};
  });
}

na_status na_model_serialize(const na_model* model, na_bytes** out) {
  return guard([&] {
    require(model != nullptr && out != nullptr, "null handle");
    *out = bytes_of(na::write_model(model->value));
  });
}

void na_model_get_info(const na_model* model, na_model_info* info) {
  if (!model || !info) return;
  const auto& m = model->value;
  *info = {m.grid().rows, m.grid().cols, m.bits(), m.lambda(),
           m.feature_length()};
}

void na_model_free(na_model* model) { delete model; }

// ---- metrics

na_status na_rmse(const double* truth, const double* pred, size_t n,
                  double* out) {
  return guard([&] {
    require(out && (n == 0 || (truth && pred)), "null argument");
    *out = na::rmse({truth, n}, {pred, n});
  });
}

na_status na_pcc(const double* truth, const double* pred, size_t n,
                 double* out) {
  return guard([&] {
    require(out && (n == 0 || (truth && pred)), "null argument");
    *out = na::pcc({truth, n}, {pred, n});
  });
}

na_status na_sagr(const double* truth, const double* pred, size_t n,
                  double* out) {
  return guard([&] {
    require(out && (n == 0 || (truth && pred)), "null argument");
    *out = na::sagr({truth, n}, {pred, n});
  });
}

na_status na_evaluate(const na_series* truth, const na_series* pred,
                      na_report* out) {
  return guard([&] {
    require(truth && pred && out, "null handle");
    const auto r = na::evaluate(na::values_of(truth->value),
                                na::values_of(pred->value));
    *out = {dimension_of(r.arousal), dimension_of(r.valence)};
  });
}

na_status na_report_format(const na_report* report, int as_table,
                           na_bytes** out) {
  return guard([&] {
    require(report && out, "null argument");
    const na::MetricsReport r{dimension_from(report->arousal),
                              dimension_from(report->valence)};
    *out = bytes_of(as_table ? na::format_report_table(r)
                             : na::format_report_csv(r));
  });
}

// ---- emotions

const char* na_emotion_name(na_emotion emotion) {
  if (emotion < 0 || emotion >= NA_EMOTION_COUNT) return "";
  return na::emotion_name(static_cast<na::Emotion>(emotion)).data();
}

na_status na_emotion_from_name(const char* name, na_emotion* out) {
  return guard([&] {
    require(name && out, "null argument");
    const auto e = na::emotion_from_name(name);
    if (!e) na::throw_argument(std::string("unknown emotion '") + name + "'");
    *out = static_cast<na_emotion>(*e);
  });
}

na_status na_normalize_va(double raw, double* out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = na::normalize_va(raw);
  });
}

na_status na_select_representative(const na_series* series, size_t* index,
                                   double* distance) {
  return guard([&] {
    require(series != nullptr, "null handle");
    const auto rep = na::select_representative(na::values_of(series->value));
    if (index) *index = rep.index;
    if (distance) *distance = rep.distance;
  });
}

na_status na_templates_create(const double* valences, const double* arousals,
                              na_templates** out) {
  return guard([&] {
    require(valences && arousals && out, "null argument");
    std::array<na::VaPair, na::kEmotionCount> v{};
    for (size_t i = 0; i < na::kEmotionCount; ++i) {
      v[i] = na::VaPair::checked(valences[i], arousals[i]);
    }
    *out = new na_templates{na::EmotionTemplateSet(v)};
  });
}

na_status na_templates_build(const na_emotion* labels,
                             const na_series* const* series, size_t count,
                             na_templates** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    require(count == 0 || (labels && series), "null input arrays");
    std::vector<na::LabeledSeries> items;
    items.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      require(series[i] != nullptr, "null series handle");
      items.push_back({emotion_of(labels[i]), na::values_of(series[i]->value)});
    }
    *out = new na_templates{na::build_templates(items)};
  });
}

na_status na_templates_parse(const uint8_t* data, size_t size,
                             na_templates** out) {
  return guard([&] {
    require(out != nullptr, "null output pointer");
    *out = new na_templates{na::read_templates(text(data, size))};
  });
}

na_status na_templates_serialize(const na_templates* templates,
                                 na_bytes** out) {
  return guard([&] {
    require(templates && out, "null handle");
    *out = bytes_of(na::write_templates(templates->value));
  });
}

void na_templates_get(const na_templates* templates, na_emotion emotion,
                      double* valence, double* arousal) {
  if (!templates || emotion < 0 || emotion >= NA_EMOTION_COUNT) return;
  const auto& v = templates->value.at(static_cast<na::Emotion>(emotion));
  if (valence) *valence = v.valence;
  if (arousal) *arousal = v.arousal;
}

void na_templates_free(na_templates* templates) { delete templates; }

na_status na_classify(const na_series* series, const na_templates* templates,
                      na_classification* out) {
  return guard([&] {
    require(series && templates && out, "null handle");
    const auto c =
        na::classify(na::values_of(series->value), templates->value);
    *out = {static_cast<na_emotion>(c.label), c.representative.index,
            c.representative.value.valence, c.representative.value.arousal,
            c.template_distance};
  });
}

// ---- plots

na_status na_plot_timeline(const na_series* pred, const na_series* truth,
                           na_bytes** out) {
  return guard([&] {
    require(pred && out, "null handle");
    *out = bytes_of(na::plot_timeline(
        pred->value, truth ? std::span<const na::VaSample>(truth->value)
                           : std::span<const na::VaSample>()));
  });
}

na_status na_plot_wheel(const na_series* pred, const na_series* truth,
                        const na_templates* templates, na_bytes** out) {
  return guard([&] {
    require(pred && out, "null handle");
    *out = bytes_of(na::plot_wheel(
        pred->value,
        truth ? std::span<const na::VaSample>(truth->value)
              : std::span<const na::VaSample>(),
        templates ? &templates->value : nullptr));
  });
}

}  // extern "C"
