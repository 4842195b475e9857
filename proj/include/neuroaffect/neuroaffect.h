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

/*
 * C interface of the neuroaffect library: event streams, frame-to-event
 * simulation, TBR encoding, annotation alignment, ridge baseline, metrics,
 * zero-shot emotion classification and SVG plots.
 *
 * Conventions:
 *  - Every object is an opaque handle created by a function taking an
 *    `out` pointer and released with its matching *_free (NULL is a no-op).
 *  - Every fallible function returns na_status. On failure *out is left
 *    untouched and na_last_error() describes the problem (per thread, valid
 *    until the next failing call on that thread).
 *  - Serialized data comes back as na_bytes; read-only input is passed as
 *    (pointer, size).
 *  - Handles are immutable after creation and may be shared across threads.
 */
#ifndef NEUROAFFECT_NEUROAFFECT_H
#define NEUROAFFECT_NEUROAFFECT_H

#include <stddef.h>
#include <stdint.h>

#if defined(NEUROAFFECT_BUILDING)
#define NA_API __attribute__((visibility("default")))
#else
#define NA_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum na_status {
  NA_OK = 0,
  NA_ERR_ARGUMENT = 1,
  NA_ERR_VALIDATION = 2,
  NA_ERR_FORMAT = 3,
  NA_ERR_IO = 4,
  NA_ERR_UNDEFINED = 5, /* e.g. correlation of a constant series */
  NA_ERR_COVERAGE = 6,  /* an emotion label has no data */
  NA_ERR_INTERNAL = 7
} na_status;

NA_API const char* na_version(void);
NA_API const char* na_status_name(na_status status);
NA_API const char* na_last_error(void);

/* ---- byte buffers ---------------------------------------------------- */

typedef struct na_bytes na_bytes;

NA_API const uint8_t* na_bytes_data(const na_bytes* bytes);
NA_API size_t na_bytes_size(const na_bytes* bytes);
NA_API void na_bytes_free(na_bytes* bytes);

/* ---- events ---------------------------------------------------------- */

typedef struct na_event {
  uint64_t t_us;
  uint16_t x;
  uint16_t y;
  int8_t polarity; /* +1 or -1 */
} na_event;

typedef enum na_event_format {
  NA_EVENTS_BINARY = 0, /* EVT1 */
  NA_EVENTS_CSV = 1     /* t_us,x,y,polarity */
} na_event_format;

typedef struct na_events na_events;

NA_API na_status na_events_create(uint32_t width, uint32_t height,
                                  const na_event* events, size_t count,
                                  na_events** out);
/* width/height are only used (and required) for CSV input. */
NA_API na_status na_events_parse(const uint8_t* data, size_t size,
                                 na_event_format format, uint32_t width,
                                 uint32_t height, na_events** out);
NA_API na_status na_events_serialize(const na_events* events,
                                     na_event_format format, na_bytes** out);
NA_API size_t na_events_count(const na_events* events);
NA_API void na_events_geometry(const na_events* events, uint32_t* width,
                               uint32_t* height);
/* Copies up to `capacity` events starting at `first`; returns the number
 * copied. */
NA_API size_t na_events_copy(const na_events* events, size_t first,
                             na_event* dst, size_t capacity);
/* Events with t_start <= t < t_end. */
NA_API na_status na_events_slice(const na_events* events, uint64_t t_start,
                                 uint64_t t_end, na_events** out);
NA_API void na_events_free(na_events* events);

/* ---- frames and simulation ------------------------------------------ */

typedef struct na_frames na_frames;

/* `planes` holds count * width * height row-major intensities in [0, 255]. */
NA_API na_status na_frames_create(uint32_t width, uint32_t height,
                                  size_t count, const double* planes,
                                  const uint64_t* timestamps_us,
                                  na_frames** out);
/* *.pgm / *.ppm files of `dir` in lexicographic order, i * period_us apart. */
NA_API na_status na_frames_load_dir(const char* dir, uint64_t period_us,
                                    na_frames** out);
/* CSV "filename,timestamp_us", paths relative to the manifest. */
NA_API na_status na_frames_load_manifest(const char* manifest_path,
                                         na_frames** out);
NA_API size_t na_frames_count(const na_frames* frames);
NA_API void na_frames_free(na_frames* frames);

typedef struct na_sim_config {
  double contrast_threshold;
  uint32_t upsample_factor;
  double epsilon;
  uint32_t threads; /* 0 = hardware concurrency */
} na_sim_config;

NA_API na_sim_config na_sim_config_default(void);
NA_API na_status na_simulate(const na_frames* frames,
                             const na_sim_config* config, na_events** out);

/* ---- TBR ------------------------------------------------------------- */

typedef struct na_tbr na_tbr;

typedef struct na_tbr_config {
  uint64_t delta_t_us;
  uint32_t bits;      /* 1..16 */
  int has_origin;     /* 0: first event time floored to delta_t */
  uint64_t origin_us;
} na_tbr_config;

typedef struct na_tbr_info {
  uint32_t width;
  uint32_t height;
  uint32_t bits;
  uint64_t delta_t_us;
  uint64_t origin_us;
  size_t frame_count;
} na_tbr_info;

NA_API na_tbr_config na_tbr_config_default(void);
NA_API na_status na_tbr_encode(const na_events* events,
                               const na_tbr_config* config, na_tbr** out);
NA_API na_status na_tbr_parse(const uint8_t* data, size_t size, na_tbr** out);
NA_API na_status na_tbr_serialize(const na_tbr* tbr, na_bytes** out);
NA_API void na_tbr_get_info(const na_tbr* tbr, na_tbr_info* info);
/* Copies frame k (width * height codes) into `pixels`. */
NA_API na_status na_tbr_frame(const na_tbr* tbr, size_t k, uint64_t* t_start_us,
                              uint16_t* pixels, size_t capacity);
/* Zero-padded trailing slices of the last frame relative to `events`. */
NA_API uint32_t na_tbr_padded_slices(const na_tbr* tbr,
                                     const na_events* events);
NA_API void na_tbr_free(na_tbr* tbr);

/* ---- annotations and alignment -------------------------------------- */

typedef struct na_annotations na_annotations;
typedef struct na_labels na_labels;

typedef struct na_label {
  uint64_t tbr_frame_index;
  uint64_t t_start_us;
  double valence; /* normalized, [-1, 1] */
  double arousal;
  uint64_t source_annotation_index;
} na_label;

/* CSV "frame_index,timestamp_us,valence,arousal" in raw units [-10, 10].
 * period_us > 0 replaces timestamps with frame_index * period_us. */
NA_API na_status na_annotations_parse(const uint8_t* data, size_t size,
                                      uint64_t period_us,
                                      na_annotations** out);
NA_API size_t na_annotations_count(const na_annotations* track);
NA_API void na_annotations_free(na_annotations* track);

NA_API na_status na_frame_mean_time(const na_events* events,
                                    uint64_t t_start_us, uint64_t span_us,
                                    uint64_t* out);
NA_API na_status na_align(const na_annotations* track, const na_tbr* tbr,
                          const na_events* events, na_labels** out);
NA_API na_status na_labels_parse(const uint8_t* data, size_t size,
                                 na_labels** out);
NA_API na_status na_labels_serialize(const na_labels* labels, na_bytes** out);
NA_API size_t na_labels_count(const na_labels* labels);
NA_API na_status na_labels_get(const na_labels* labels, size_t i,
                               na_label* out);
NA_API void na_labels_free(na_labels* labels);

/* ---- valence-arousal series ----------------------------------------- */

typedef struct na_series na_series;

typedef struct na_va_sample {
  uint64_t frame_index;
  uint64_t timestamp_us;
  double valence;
  double arousal;
} na_va_sample;

NA_API na_status na_series_create(const na_va_sample* samples, size_t count,
                                  na_series** out);
/* Prediction CSV "frame_index,timestamp_us,valence,arousal" or the labeled
 * dataset CSV written by na_labels_serialize. */
NA_API na_status na_series_parse(const uint8_t* data, size_t size,
                                 na_series** out);
NA_API na_status na_series_serialize(const na_series* series, na_bytes** out);
NA_API size_t na_series_count(const na_series* series);
NA_API na_status na_series_get(const na_series* series, size_t i,
                               na_va_sample* out);
NA_API void na_series_free(na_series* series);

/* ---- ridge baseline --------------------------------------------------- */

typedef struct na_model na_model;

typedef struct na_model_info {
  uint32_t grid_rows;
  uint32_t grid_cols;
  uint32_t bits;
  double lambda;
  size_t feature_length;
} na_model_info;

/* Pooled features of frame k: grid_rows * grid_cols cell means scaled to
 * [0, 1] plus a trailing 1. `capacity` must be at least that length. */
NA_API na_status na_pool_features(const na_tbr* tbr, size_t k,
                                  uint32_t grid_rows, uint32_t grid_cols,
                                  double* features, size_t capacity);
/* Fits one model on `count` (tensor set, labels) pairs. */
NA_API na_status na_fit(const na_tbr* const* tensors,
                        const na_labels* const* labels, size_t count,
                        uint32_t grid_rows, uint32_t grid_cols, double lambda,
                        na_model** out);
NA_API na_status na_predict(const na_model* model, const na_tbr* tbr,
                            na_series** out);
NA_API na_status na_model_parse(const uint8_t* data, size_t size,
                                na_model** out);
NA_API na_status na_model_serialize(const na_model* model, na_bytes** out);
NA_API void na_model_get_info(const na_model* model, na_model_info* info);
NA_API void na_model_free(na_model* model);

/* ---- metrics ---------------------------------------------------------- */

NA_API na_status na_rmse(const double* truth, const double* pred, size_t n,
                         double* out);
NA_API na_status na_pcc(const double* truth, const double* pred, size_t n,
                        double* out);
NA_API na_status na_sagr(const double* truth, const double* pred, size_t n,
                         double* out);

typedef struct na_dimension_report {
  double rmse;
  double pcc; /* only meaningful when pcc_defined != 0 */
  int pcc_defined;
  double sagr;
} na_dimension_report;

typedef struct na_report {
  na_dimension_report arousal;
  na_dimension_report valence;
} na_report;

NA_API na_status na_evaluate(const na_series* truth, const na_series* pred,
                             na_report* out);
/* CSV header + row (as_table == 0) or an aligned text table. */
NA_API na_status na_report_format(const na_report* report, int as_table,
                                  na_bytes** out);

/* ---- emotions --------------------------------------------------------- */

typedef enum na_emotion {
  NA_DISGUST = 0,
  NA_CONTEMPT,
  NA_HAPPINESS,
  NA_FEAR,
  NA_ANGER,
  NA_SURPRISE,
  NA_SADNESS,
  NA_EMOTION_COUNT
} na_emotion;

NA_API const char* na_emotion_name(na_emotion emotion);
NA_API na_status na_emotion_from_name(const char* name, na_emotion* out);

NA_API na_status na_normalize_va(double raw, double* out);
NA_API na_status na_select_representative(const na_series* series,
                                          size_t* index, double* distance);

typedef struct na_templates na_templates;

/* valences/arousals indexed by na_emotion. */
NA_API na_status na_templates_create(const double* valences,
                                     const double* arousals,
                                     na_templates** out);
/* Frame-level pooled means: series[i] is a video labelled labels[i]. */
NA_API na_status na_templates_build(const na_emotion* labels,
                                    const na_series* const* series,
                                    size_t count, na_templates** out);
NA_API na_status na_templates_parse(const uint8_t* data, size_t size,
                                    na_templates** out);
NA_API na_status na_templates_serialize(const na_templates* templates,
                                        na_bytes** out);
NA_API void na_templates_get(const na_templates* templates, na_emotion emotion,
                             double* valence, double* arousal);
NA_API void na_templates_free(na_templates* templates);

typedef struct na_classification {
  na_emotion emotion;
  size_t representative_index;
  double representative_valence;
  double representative_arousal;
  double template_distance;
} na_classification;

NA_API na_status na_classify(const na_series* series,
                             const na_templates* templates,
                             na_classification* out);

/* ---- plots ------------------------------------------------------------ */

/* truth and templates may be NULL. */
NA_API na_status na_plot_timeline(const na_series* pred,
                                  const na_series* truth, na_bytes** out);
NA_API na_status na_plot_wheel(const na_series* pred, const na_series* truth,
                               const na_templates* templates, na_bytes** out);

#ifdef __cplusplus
}
#endif

#endif /* NEUROAFFECT_NEUROAFFECT_H */
