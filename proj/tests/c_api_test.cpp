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

#include <gtest/gtest.h>

#include <cmath>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "neuroaffect/neuroaffect.h"

extern "C" int na_c_header_smoke(void);

namespace {

// Owning wrappers so a failed assertion never leaks a handle.
template <typename T, void (*Free)(T*)>
struct Deleter {
  void operator()(T* p) const { Free(p); }
};
using Bytes = std::unique_ptr<na_bytes, Deleter<na_bytes, na_bytes_free>>;
using Events = std::unique_ptr<na_events, Deleter<na_events, na_events_free>>;
using Frames = std::unique_ptr<na_frames, Deleter<na_frames, na_frames_free>>;
using Tbr = std::unique_ptr<na_tbr, Deleter<na_tbr, na_tbr_free>>;
using Track =
    std::unique_ptr<na_annotations, Deleter<na_annotations, na_annotations_free>>;
using Labels = std::unique_ptr<na_labels, Deleter<na_labels, na_labels_free>>;
using Series = std::unique_ptr<na_series, Deleter<na_series, na_series_free>>;
using Model = std::unique_ptr<na_model, Deleter<na_model, na_model_free>>;
using Templates =
    std::unique_ptr<na_templates, Deleter<na_templates, na_templates_free>>;

template <typename H, typename F>
H make(F&& create) {
  typename H::pointer raw = nullptr;
  const na_status s = create(&raw);
  EXPECT_EQ(s, NA_OK) << na_last_error();
  return H(raw);
}

std::vector<std::uint8_t> bytes_of(const na_bytes* b) {
  return {na_bytes_data(b), na_bytes_data(b) + na_bytes_size(b)};
}

const std::uint8_t* text(const std::string& s) {
  return reinterpret_cast<const std::uint8_t*>(s.data());
}

TEST(CApiTest, HeaderCompilesAsC) { EXPECT_EQ(na_c_header_smoke(), 0); }

TEST(CApiTest, StatusNamesAndVersion) {
  EXPECT_STREQ(na_version(), "0.1.0");
  EXPECT_STREQ(na_status_name(NA_OK), "ok");
  EXPECT_STRNE(na_status_name(NA_ERR_UNDEFINED), na_status_name(NA_ERR_COVERAGE));
}

TEST(CApiTest, EventsRoundTripAndErrors) {
  const na_event raw[] = {{10, 0, 0, 1}, {20, 3, 1, -1}, {40, 2, 2, 1}};
  auto ev = make<Events>([&](auto o) { return na_events_create(4, 3, raw, 3, o); });
  ASSERT_TRUE(ev);
  EXPECT_EQ(na_events_count(ev.get()), 3u);
  std::uint32_t w = 0, h = 0;
  na_events_geometry(ev.get(), &w, &h);
  EXPECT_EQ(w, 4u);
  EXPECT_EQ(h, 3u);

  for (auto format : {NA_EVENTS_BINARY, NA_EVENTS_CSV}) {
    auto b = make<Bytes>([&](auto o) { return na_events_serialize(ev.get(), format, o); });
    auto back = make<Events>([&](auto o) {
      return na_events_parse(na_bytes_data(b.get()), na_bytes_size(b.get()), format,
                             4, 3, o);
    });
    ASSERT_TRUE(back);
    na_event got[3];
    ASSERT_EQ(na_events_copy(back.get(), 0, got, 3), 3u);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(got[i].t_us, raw[i].t_us);
      EXPECT_EQ(got[i].x, raw[i].x);
      EXPECT_EQ(got[i].polarity, raw[i].polarity);
    }
  }
  auto sl = make<Events>([&](auto o) { return na_events_slice(ev.get(), 10, 40, o); });
  EXPECT_EQ(na_events_count(sl.get()), 2u);

  // failures leave *out alone and set the message
  na_events* out = reinterpret_cast<na_events*>(0x1);
  const na_event bad[] = {{5, 9, 0, 1}};
  EXPECT_EQ(na_events_create(4, 3, bad, 1, &out), NA_ERR_VALIDATION);
  EXPECT_EQ(out, reinterpret_cast<na_events*>(0x1));
  EXPECT_NE(std::string(na_last_error()).find("event 0"), std::string::npos);
  const std::uint8_t junk[] = {'N', 'O', 'P', 'E'};
  EXPECT_EQ(na_events_parse(junk, 4, NA_EVENTS_BINARY, 0, 0, &out), NA_ERR_FORMAT);
  EXPECT_EQ(na_events_slice(ev.get(), 50, 10, &out), NA_ERR_ARGUMENT);
  EXPECT_EQ(na_events_create(4, 3, raw, 3, nullptr), NA_ERR_ARGUMENT);
  na_events_free(nullptr);
}

TEST(CApiTest, SimulateEncodeAlignFitPredict) {
  // 8x8 frames whose left half flickers: events only on the left.
  const std::uint32_t w = 8, h = 8;
  const std::size_t n = 40;
  std::vector<double> planes(n * w * h, 100.0);
  std::vector<std::uint64_t> times(n);
  for (std::size_t i = 0; i < n; ++i) {
    times[i] = i * 5000;
    for (std::uint32_t y = 0; y < h; ++y) {
      for (std::uint32_t x = 0; x < w / 2; ++x) {
        planes[i * w * h + y * w + x] = (i % 2) ? 150.0 : 100.0;
      }
    }
  }
  auto frames = make<Frames>([&](auto o) {
    return na_frames_create(w, h, n, planes.data(), times.data(), o);
  });
  ASSERT_TRUE(frames);
  EXPECT_EQ(na_frames_count(frames.get()), n);
  const na_sim_config sim = na_sim_config_default();
  auto events = make<Events>([&](auto o) { return na_simulate(frames.get(), &sim, o); });
  ASSERT_TRUE(events);
  EXPECT_EQ(na_events_count(events.get()), (n - 1) * (w / 2) * h * 2);

  const na_tbr_config cfg = na_tbr_config_default();
  auto tbr = make<Tbr>([&](auto o) { return na_tbr_encode(events.get(), &cfg, o); });
  ASSERT_TRUE(tbr);
  na_tbr_info info{};
  na_tbr_get_info(tbr.get(), &info);
  EXPECT_EQ(info.bits, 8u);
  EXPECT_EQ(info.origin_us, 0u);  // two events per toggle, the first at 2500
  ASSERT_GT(info.frame_count, 2u);
  std::vector<std::uint16_t> px(w * h);
  std::uint64_t t0 = 0;
  ASSERT_EQ(na_tbr_frame(tbr.get(), 0, &t0, px.data(), px.size()), NA_OK);
  EXPECT_EQ(t0, 0u);
  EXPECT_EQ(px[0], 255);
  EXPECT_EQ(px[w - 1], 0);
  EXPECT_EQ(na_tbr_frame(tbr.get(), 0, &t0, px.data(), 3), NA_ERR_ARGUMENT);
  EXPECT_EQ(na_tbr_padded_slices(tbr.get(), events.get()), 0u);

  auto ser = make<Bytes>([&](auto o) { return na_tbr_serialize(tbr.get(), o); });
  auto tbr2 = make<Tbr>([&](auto o) {
    return na_tbr_parse(na_bytes_data(ser.get()), na_bytes_size(ser.get()), o);
  });
  auto ser2 = make<Bytes>([&](auto o) { return na_tbr_serialize(tbr2.get(), o); });
  EXPECT_EQ(bytes_of(ser.get()), bytes_of(ser2.get()));

  std::string ann = "frame_index,timestamp_us,valence,arousal\n";
  for (int i = 0; i < 60; ++i) {
    ann += std::to_string(i) + ",," + std::to_string(i % 5 - 2) + "," +
           std::to_string(3) + "\n";
  }
  auto track = make<Track>([&](auto o) {
    return na_annotations_parse(text(ann), ann.size(), 5000, o);
  });
  ASSERT_TRUE(track);
  EXPECT_EQ(na_annotations_count(track.get()), 60u);
  auto labels = make<Labels>([&](auto o) {
    return na_align(track.get(), tbr.get(), events.get(), o);
  });
  ASSERT_TRUE(labels);
  ASSERT_EQ(na_labels_count(labels.get()), info.frame_count);
  na_label l{};
  ASSERT_EQ(na_labels_get(labels.get(), 0, &l), NA_OK);
  EXPECT_DOUBLE_EQ(l.arousal, 0.3);
  std::uint64_t mean = 0;
  ASSERT_EQ(na_frame_mean_time(events.get(), 0, 40000, &mean), NA_OK);
  EXPECT_EQ(l.source_annotation_index, (mean + 2500) / 5000);

  std::vector<double> feats(3);
  EXPECT_EQ(na_pool_features(tbr.get(), 0, 1, 2, feats.data(), feats.size()), NA_OK);
  EXPECT_DOUBLE_EQ(feats[0], 1.0);
  EXPECT_DOUBLE_EQ(feats[1], 0.0);
  EXPECT_DOUBLE_EQ(feats[2], 1.0);

  const na_tbr* tbrs[] = {tbr.get()};
  const na_labels* labs[] = {labels.get()};
  auto model = make<Model>([&](auto o) { return na_fit(tbrs, labs, 1, 2, 2, 1.0, o); });
  ASSERT_TRUE(model);
  na_model_info mi{};
  na_model_get_info(model.get(), &mi);
  EXPECT_EQ(mi.feature_length, 5u);
  auto pred = make<Series>([&](auto o) { return na_predict(model.get(), tbr.get(), o); });
  ASSERT_TRUE(pred);
  EXPECT_EQ(na_series_count(pred.get()), info.frame_count);

  auto msave = make<Bytes>([&](auto o) { return na_model_serialize(model.get(), o); });
  auto model2 = make<Model>([&](auto o) {
    return na_model_parse(na_bytes_data(msave.get()), na_bytes_size(msave.get()), o);
  });
  auto pred2 = make<Series>([&](auto o) { return na_predict(model2.get(), tbr.get(), o); });
  auto p1 = make<Bytes>([&](auto o) { return na_series_serialize(pred.get(), o); });
  auto p2 = make<Bytes>([&](auto o) { return na_series_serialize(pred2.get(), o); });
  EXPECT_EQ(bytes_of(p1.get()), bytes_of(p2.get()));

  // labels as a series, then evaluate
  auto lsave = make<Bytes>([&](auto o) { return na_labels_serialize(labels.get(), o); });
  auto truth = make<Series>([&](auto o) {
    return na_series_parse(na_bytes_data(lsave.get()), na_bytes_size(lsave.get()), o);
  });
  na_report report{};
  ASSERT_EQ(na_evaluate(truth.get(), pred.get(), &report), NA_OK);
  EXPECT_FALSE(report.arousal.pcc_defined);  // arousal truth is constant
  EXPECT_LT(report.arousal.rmse, 1e-6);
  auto csv = make<Bytes>([&](auto o) { return na_report_format(&report, 0, o); });
  const auto csv_text = bytes_of(csv.get());
  EXPECT_NE(std::string(csv_text.begin(), csv_text.end()).find("undefined"),
            std::string::npos);
}

TEST(CApiTest, Metrics) {
  const double a[] = {1, -1};
  const double b[] = {-1, 1};
  double v = 0;
  ASSERT_EQ(na_rmse(a, b, 2, &v), NA_OK);
  EXPECT_DOUBLE_EQ(v, 2.0);
  ASSERT_EQ(na_pcc(a, b, 2, &v), NA_OK);
  EXPECT_DOUBLE_EQ(v, -1.0);
  ASSERT_EQ(na_sagr(a, b, 2, &v), NA_OK);
  EXPECT_EQ(v, 0.0);
  const double c[] = {0.3, 0.3};
  EXPECT_EQ(na_pcc(a, c, 2, &v), NA_ERR_UNDEFINED);
  EXPECT_EQ(na_rmse(a, b, 0, &v), NA_ERR_ARGUMENT);
  EXPECT_EQ(na_normalize_va(11, &v), NA_ERR_VALIDATION);
}

TEST(CApiTest, EmotionsTemplatesClassifyPlot) {
  EXPECT_STREQ(na_emotion_name(NA_SURPRISE), "Surprise");
  na_emotion e{};
  ASSERT_EQ(na_emotion_from_name("Contempt", &e), NA_OK);
  EXPECT_EQ(e, NA_CONTEMPT);
  EXPECT_EQ(na_emotion_from_name("Joy", &e), NA_ERR_ARGUMENT);

  const double val[] = {-0.6, -0.4, 0.8, -0.5, -0.7, 0.3, -0.7};
  const double aro[] = {0.5, 0.1, 0.5, 0.7, 0.8, 0.9, -0.4};
  auto t = make<Templates>([&](auto o) { return na_templates_create(val, aro, o); });
  ASSERT_TRUE(t);
  double tv = 0, ta = 0;
  na_templates_get(t.get(), NA_HAPPINESS, &tv, &ta);
  EXPECT_EQ(tv, 0.8);

  const na_va_sample s[] = {{0, 0, 0.0, 0.0}, {1, 1, 0.0, 0.0}, {2, 2, 0.75, 0.45}};
  auto series = make<Series>([&](auto o) { return na_series_create(s, 3, o); });
  std::size_t idx = 0;
  double dist = 0;
  ASSERT_EQ(na_select_representative(series.get(), &idx, &dist), NA_OK);
  EXPECT_EQ(idx, 2u);
  na_classification c{};
  ASSERT_EQ(na_classify(series.get(), t.get(), &c), NA_OK);
  EXPECT_EQ(c.emotion, NA_HAPPINESS);
  EXPECT_EQ(c.representative_index, 2u);

  // build from videos; one label missing -> coverage
  std::vector<Series> videos;
  std::vector<const na_series*> ptrs;
  std::vector<na_emotion> labels;
  for (int i = 0; i < 6; ++i) {
    const na_va_sample one[] = {{0, 0, val[i], aro[i]}};
    videos.push_back(make<Series>([&](auto o) { return na_series_create(one, 1, o); }));
    ptrs.push_back(videos.back().get());
    labels.push_back(static_cast<na_emotion>(i));
  }
  na_templates* built = nullptr;
  EXPECT_EQ(na_templates_build(labels.data(), ptrs.data(), 6, &built), NA_ERR_COVERAGE);
  EXPECT_NE(std::string(na_last_error()).find("Sadness"), std::string::npos);
  ptrs.push_back(series.get());
  labels.push_back(NA_SADNESS);
  auto full = make<Templates>([&](auto o) {
    return na_templates_build(labels.data(), ptrs.data(), 7, o);
  });
  auto ts = make<Bytes>([&](auto o) { return na_templates_serialize(full.get(), o); });
  auto tb = bytes_of(ts.get());
  auto reparsed = make<Templates>([&](auto o) {
    return na_templates_parse(tb.data(), tb.size(), o);
  });
  na_templates_get(reparsed.get(), NA_SADNESS, &tv, &ta);
  EXPECT_DOUBLE_EQ(tv, 0.25);
  EXPECT_DOUBLE_EQ(ta, 0.15);

  auto svg = make<Bytes>([&](auto o) {
    return na_plot_wheel(series.get(), nullptr, t.get(), o);
  });
  const auto svg_bytes = bytes_of(svg.get());
  EXPECT_NE(std::string(svg_bytes.begin(), svg_bytes.end()).find("<svg"),
            std::string::npos);
  auto line = make<Bytes>([&](auto o) {
    return na_plot_timeline(series.get(), series.get(), o);
  });
  EXPECT_GT(na_bytes_size(line.get()), 0u);
  na_bytes* none = nullptr;
  const na_va_sample off[] = {{0, 0, 0.0, 0.0}};
  auto empty = make<Series>([&](auto o) { return na_series_create(off, 0, o); });
  EXPECT_EQ(na_plot_wheel(empty.get(), nullptr, nullptr, &none), NA_ERR_ARGUMENT);
  na_series* bad = nullptr;
  const na_va_sample wild[] = {{0, 0, 1.5, 0.0}};
  EXPECT_EQ(na_series_create(wild, 1, &bad), NA_ERR_VALIDATION);
}

}  // namespace
