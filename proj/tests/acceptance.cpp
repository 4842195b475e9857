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

// Acceptance suite: one PASS/FAIL line per criterion. Exit status is nonzero
// when any gated criterion fails; criterion 10 is a throughput report.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "affect.hpp"
#include "baseline.hpp"
#include "csv.hpp"
#include "error.hpp"
#include "event_io.hpp"
#include "generators.hpp"
#include "labeling.hpp"
#include "metrics.hpp"
#include "oracles.hpp"
#include "simulator.hpp"
#include "tbr.hpp"

namespace neuroaffect {
namespace {

using Clock = std::chrono::steady_clock;
using testing::Rng;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Failure counter that keeps the first message for the report.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first;

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures++ == 0) first = what;
  }
  std::string summary() const {
    std::string s = std::to_string(failures) + " failures / " +
                    std::to_string(checks) + " checks";
    if (failures) s += " (first: " + first + ")";
    return s;
  }
};

template <typename F>
ErrorKind kind_of(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  return static_cast<ErrorKind>(-1);
}

// ---------------------------------------------------------------------------

Outcome tbr_bit_exactness() {
  const auto start = Clock::now();
  Rng rng(1001);
  Tally t;
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = testing::random_stream(rng, {32, 32}, 1000, 1000000);
    for (std::uint32_t bits : {8u, 16u}) {
      TbrConfig c;
      c.bits = bits;
      const auto set = encode(s, c);
      const auto expected = oracle::tbr_frames(s.events(), s.geometry(), bits,
                                               c.delta_t, set.origin());
      bool same = set.size() == expected.size();
      for (std::size_t k = 0; same && k < set.size(); ++k) {
        same = std::equal(set.frame(k).pixels.begin(), set.frame(k).pixels.end(),
                          expected[k].begin(), expected[k].end());
      }
      t.expect(same, "stream " + std::to_string(trial) + " N=" + std::to_string(bits));
    }
  }
  const double secs = seconds_since(start);
  char buf[64];
  std::snprintf(buf, sizeof(buf), ", %.2f s (limit 5 s)", secs);
  return {t.failures == 0 && secs < 5.0, t.summary() + buf};
}

Outcome tbr_invariants() {
  Rng rng(1002);
  Tally t;
  for (int trial = 0; trial < 1000; ++trial) {
    const SensorGeometry g{static_cast<std::uint32_t>(1 + rng() % 12),
                           static_cast<std::uint32_t>(1 + rng() % 12)};
    TbrConfig c;
    c.bits = 1 + rng() % 16;
    c.delta_t = 1 + rng() % 4000;
    const auto events = testing::random_events(rng, g, 1 + rng() % 300,
                                               rng() % (60 * c.delta_t));
    const EventStream s(g, events);
    const auto set = encode(s, c);
    const std::string id = "case " + std::to_string(trial);
    const std::uint32_t max_code = (1u << c.bits) - 1;

    for (std::size_t k = 0; k < set.size(); ++k) {
      bool in_range = true;
      for (auto v : set.frame(k).pixels) in_range = in_range && v <= max_code;
      t.expect(in_range, id + ": code above 2^N-1");

      // every decoded slice must match the stream and re-pack to the code
      const auto slices = decode_slices(set, k);
      std::vector<std::uint32_t> repacked(g.pixel_count(), 0);
      for (const auto& sl : slices) {
        t.expect(sl == binarize(s, sl.t_start, c.delta_t), id + ": slice mismatch");
        for (std::size_t p = 0; p < repacked.size(); ++p) {
          repacked[p] = (repacked[p] << 1) | sl.bits[p];
        }
      }
      t.expect(std::equal(repacked.begin(), repacked.end(),
                          set.frame(k).pixels.begin()),
               id + ": decode/re-encode mismatch");
    }

    auto flipped = events;
    for (auto& e : flipped) e.polarity = static_cast<std::int8_t>(-e.polarity);
    t.expect(encode(EventStream(g, flipped), c) == set, id + ": polarity changed codes");

    // tail frame: count and zero padding
    const Micros span = c.frame_span();
    const Micros last = s.last_time();
    t.expect(set.size() == (last - set.origin() + 1 + span - 1) / span,
             id + ": frame count");
    const auto& tail = set.frame(set.size() - 1);
    const std::uint32_t used =
        static_cast<std::uint32_t>((last - tail.t_start) / c.delta_t) + 1;
    const std::uint32_t padded = c.bits - used;
    t.expect(padded_slice_count(set, s) == padded, id + ": padded slice count");
    bool zero_tail = true;
    for (auto v : tail.pixels) zero_tail = zero_tail && (v & ((1u << padded) - 1)) == 0;
    t.expect(zero_tail, id + ": padded slices not zero");
  }
  return {t.failures == 0, t.summary() + " over 1000 randomized cases"};
}

Outcome simulator_properties() {
  Tally t;
  const double theta = 0.2;
  const double eps = 1.0;
  Rng rng(1003);

  // static input
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = SensorGeometry{16, 16};
    auto f = testing::random_frames(rng, g, 1, 1000);
    std::vector<IntensityPlane> planes(6, f.planes()[0]);
    std::vector<Micros> times{0, 1000, 2000, 3000, 4000, 5000};
    SimulatorConfig cfg;
    cfg.upsample_factor = 1 + trial % 3;
    t.expect(simulate(FrameSequence(g, planes, times), cfg).size() == 0,
             "static clip produced events");
  }

  // single-pixel steps of k*theta + r
  for (int trial = 0; trial < 600; ++trial) {
    const int k = trial % 6;
    const int sign = (trial / 6) % 2 ? 1 : -1;
    const double r = (trial / 12) % 5 == 0 ? 0.0 : testing::uniform(rng, 0.0, 0.99 * theta);
    if (k == 0 && r == 0.0) continue;
    const double i0 = 60.0;
    const double i1 = std::exp(std::log(i0 + eps) + sign * (k * theta + r)) - eps;
    const SensorGeometry g{3, 2};
    IntensityPlane a(6, 90.0), b(6, 90.0);
    a[4] = i0;
    b[4] = i1;
    SimulatorConfig cfg;
    cfg.contrast_threshold = theta;
    const auto out = simulate(FrameSequence(g, {a, b}, {0, 1000}), cfg);
    bool ok = out.size() == static_cast<std::size_t>(k);
    for (const auto& e : out.events()) {
      ok = ok && e.x == 1 && e.y == 1 && e.polarity == sign;
    }
    t.expect(ok, "step k=" + std::to_string(k) + " r=" + format_double(r) +
                     " gave " + std::to_string(out.size()) + " events");
  }

  // count monotone in theta; serial equals parallel
  for (int clip = 0; clip < 50; ++clip) {
    const auto frames = testing::random_frames(rng, {24, 18}, 5, 2000);
    std::size_t previous = SIZE_MAX;
    for (int step = 1; step <= 10; ++step) {
      SimulatorConfig cfg;
      cfg.contrast_threshold = step / 10.0;
      const std::size_t n = simulate(frames, cfg).size();
      t.expect(n <= previous, "clip " + std::to_string(clip) + " theta " +
                                  format_double(cfg.contrast_threshold));
      previous = n;
    }
    SimulatorConfig serial, parallel;
    serial.upsample_factor = parallel.upsample_factor = 2;
    parallel.threads = 4;
    t.expect(write_events(simulate(frames, serial), EventFormat::kBinary) ==
                 write_events(simulate(frames, parallel), EventFormat::kBinary),
             "clip " + std::to_string(clip) + ": thread count changed output");
  }
  return {t.failures == 0, t.summary()};
}

Outcome metric_oracles() {
  Rng rng(1004);
  Tally t;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 300;
    auto a = testing::random_values(rng, n);
    auto b = testing::random_values(rng, n);
    for (std::size_t i = rng() % 5; i < n; i += 5 + rng() % 10) a[i] = 0.0;
    for (std::size_t i = rng() % 5; i < n; i += 5 + rng() % 10) b[i] = 0.0;
    const std::string id = "series " + std::to_string(trial);
    t.expect(std::abs(rmse(a, b) - oracle::rmse(a, b)) <= 1e-12, id + ": rmse");
    t.expect(std::abs(pcc(a, b) - oracle::pcc(a, b)) <= 1e-12, id + ": pcc");
    t.expect(sagr(a, b) == oracle::sagr(a, b), id + ": sagr");
    std::vector<double> neg(n);
    for (std::size_t i = 0; i < n; ++i) neg[i] = -a[i];
    t.expect(std::abs(pcc(a, a) - 1.0) <= 1e-12, id + ": pcc(x,x)");
    t.expect(std::abs(pcc(a, neg) + 1.0) <= 1e-12, id + ": pcc(x,-x)");
    t.expect(sagr(a, a) == 1.0, id + ": sagr(x,x)");
    const std::vector<double> flat(n, testing::uniform(rng, -1, 1));
    t.expect(kind_of([&] { pcc(flat, b); }) == ErrorKind::kUndefinedCorrelation,
             id + ": constant truth");
    t.expect(kind_of([&] { pcc(a, flat); }) == ErrorKind::kUndefinedCorrelation,
             id + ": constant prediction");
  }
  return {t.failures == 0, t.summary()};
}

Outcome alignment() {
  Rng rng(1005);
  Tally t;
  for (int trial = 0; trial < 1000; ++trial) {
    const auto s = testing::random_stream(rng, {8, 8}, 1 + rng() % 300,
                                          rng() % 400000);
    std::vector<Micros> stamps(1 + rng() % 30);
    for (auto& x : stamps) x = rng() % 450000;
    std::sort(stamps.begin(), stamps.end());
    std::vector<Annotation> items;
    for (std::size_t i = 0; i < stamps.size(); ++i) {
      items.push_back({i, stamps[i], double(int(rng() % 21) - 10), 0.0});
    }
    TbrConfig c;
    c.delta_t = 100 + rng() % 5000;
    const auto tensors = encode(s, c);
    const auto labeled = align(AnnotationTrack(items), tensors, s);
    bool ok = labeled.size() == tensors.size();
    for (std::size_t k = 0; ok && k < labeled.size(); ++k) {
      const Micros t0 = tensors.frame(k).t_start;
      const Micros mean = oracle::mean_time(s.events(), t0, t0 + c.frame_span());
      ok = labeled[k].source_annotation == oracle::nearest(stamps, mean);
    }
    t.expect(ok, "instance " + std::to_string(trial));
  }
  // equidistant tie
  const EventStream s({2, 2}, {{10000, 0, 0, 1}, {30000, 1, 1, -1}});
  TbrConfig c;
  c.origin = 0;
  const auto labeled = align(AnnotationTrack({{0, 0, 5, 5}, {1, 40000, -5, -5}}),
                             encode(s, c), s);
  t.expect(labeled.size() == 1 && labeled[0].source_annotation == 0,
           "tie did not resolve to the earlier annotation");
  return {t.failures == 0, t.summary()};
}

Outcome zero_shot() {
  Rng rng(1006);
  Tally t;
  // Templates by sequential rejection inside [-0.75, 0.75]^2 so every
  // radius-0.25 disk stays inside the unit square.
  std::array<VaPair, kEmotionCount> values;
  std::size_t placed = 0;
  for (int attempt = 0; placed < kEmotionCount; ++attempt) {
    if (attempt % 10000 == 0) placed = 0;  // jammed layout: start over
    const VaPair p{testing::uniform(rng, -0.75, 0.75), testing::uniform(rng, -0.75, 0.75)};
    bool far = true;
    for (std::size_t i = 0; i < placed; ++i) {
      far = far && std::hypot(p.valence - values[i].valence,
                              p.arousal - values[i].arousal) >= 0.6;
    }
    if (far) values[placed++] = p;
  }
  const EmotionTemplateSet templates(values);
  std::size_t correct = 0;
  for (int video = 0; video < 700; ++video) {
    const auto label = kAllEmotions[video % kEmotionCount];
    const VaPair centre = templates.at(label);
    VaSeries series(5 + rng() % 60);
    for (auto& p : series) {
      const double r = 0.25 * std::sqrt(testing::uniform(rng, 0, 1));
      const double a = testing::uniform(rng, 0, 2 * M_PI);
      p = {centre.valence + r * std::cos(a), centre.arousal + r * std::sin(a)};
    }
    const auto result = classify(series, templates);
    const VaPair rep = result.representative.value;
    t.expect(std::hypot(rep.valence - centre.valence, rep.arousal - centre.arousal) <= 0.25,
             "representative outside radius");
    if (result.label == label) ++correct;
  }
  t.expect(correct == 700, "accuracy " + std::to_string(correct) + "/700");

  for (int trial = 0; trial < 1000; ++trial) {
    std::array<VaPair, kEmotionCount> random_values;
    for (auto& v : random_values) {
      v = {testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)};
    }
    const auto series = testing::random_series(rng, 1 + rng() % 40);
    const auto rep = series[oracle::farthest_from_mean(series)];
    const auto got = classify(series, EmotionTemplateSet(random_values));
    t.expect(static_cast<std::size_t>(got.label) ==
                 oracle::nearest_template(rep, random_values),
             "oracle instance " + std::to_string(trial));
  }
  return {t.failures == 0,
          "accuracy " + std::to_string(correct) + "/700, " + t.summary()};
}

// Synthetic corpus for the end-to-end run. A 32x32 sensor is split into
// 2x2 regions; at every frame step each pixel of region r toggles between two
// grey levels with probability p_r, giving one event per toggle. The p_r
// change every 8 steps, one TBR window, and the annotated valence and arousal
// are affine in them.
struct Clip {
  FrameSequence frames;
  AnnotationTrack track;
};

Clip make_clip(Rng& rng, int segments) {
  const SensorGeometry g{32, 32};
  const int steps = 8 * segments;
  std::vector<std::array<double, 4>> p(segments);
  for (auto& seg : p) {
    for (auto& v : seg) v = testing::uniform(rng, 0.1, 0.9);
  }
  std::vector<IntensityPlane> planes;
  std::vector<Micros> times;
  IntensityPlane current(g.pixel_count(), 100.0);
  planes.push_back(current);
  times.push_back(0);
  std::bernoulli_distribution coin;
  for (int i = 0; i < steps; ++i) {
    for (std::uint32_t y = 0; y < g.height; ++y) {
      for (std::uint32_t x = 0; x < g.width; ++x) {
        const int region = (y >= 16 ? 2 : 0) + (x >= 16 ? 1 : 0);
        if (std::bernoulli_distribution(p[i / 8][region])(rng)) {
          auto& v = current[y * g.width + x];
          v = v == 100.0 ? 135.0 : 100.0;
        }
      }
    }
    planes.push_back(current);
    times.push_back(Micros(i + 1) * 5000);
  }
  std::vector<Annotation> items;
  for (int j = 0; j <= steps; ++j) {
    const auto& q = p[j == 0 ? 0 : (j - 1) / 8];
    items.push_back({Micros(j), Micros(j) * 5000,
                     10 * 0.5 * (q[0] + q[1] - q[2] - q[3]),
                     10 * 0.5 * (q[0] - q[1] + q[2] - q[3])});
  }
  return {FrameSequence(g, std::move(planes), std::move(times)),
          AnnotationTrack(std::move(items))};
}

Outcome end_to_end() {
  const auto start = Clock::now();
  Rng rng(1007);
  struct Prepared {
    TbrTensorSet tensors;
    std::vector<LabeledTbrFrame> labels;
  };
  std::vector<Prepared> clips;
  for (int c = 0; c < 8; ++c) {
    const Clip clip = make_clip(rng, 20);
    const auto events = simulate(clip.frames, SimulatorConfig{});
    TbrConfig cfg;  // N = 8, delta_t = 5000
    auto tensors = encode(events, cfg);
    auto labels = align(clip.track, tensors, events);
    clips.push_back({std::move(tensors), std::move(labels)});
  }
  std::vector<TrainingClip> train;
  for (int c = 0; c < 6; ++c) train.push_back({&clips[c].tensors, clips[c].labels});
  const auto model = fit(train, {2, 2}, 1e-3);

  VaSeries truth, pred;
  for (int c = 6; c < 8; ++c) {
    for (const auto& s : predict_all(model, clips[c].tensors)) pred.push_back(s.value);
    for (const auto& l : clips[c].labels) truth.push_back(l.value);
  }
  const auto report = evaluate(truth, pred);
  const double secs = seconds_since(start);
  const bool ok = truth.size() == pred.size() && report.arousal.rmse < 0.05 &&
                  report.valence.rmse < 0.05 && report.arousal.pcc &&
                  *report.arousal.pcc > 0.95 && report.valence.pcc &&
                  *report.valence.pcc > 0.95 && secs < 60.0;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "held-out %zu frames: arousal rmse %.4f pcc %.4f, valence rmse "
                "%.4f pcc %.4f, %.2f s (limits rmse < 0.05, pcc > 0.95, 60 s)",
                truth.size(), report.arousal.rmse,
                report.arousal.pcc.value_or(NAN), report.valence.rmse,
                report.valence.pcc.value_or(NAN), secs);
  return {ok, buf};
}

Outcome ridge_optimality() {
  Rng rng(1008);
  Tally t;
  double worst = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 20 + rng() % 80;
    const int d = 2 + rng() % 15;
    Eigen::MatrixXd x(n, d), y(n, 2);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j + 1 < d; ++j) x(i, j) = testing::uniform(rng, 0, 1);
      x(i, d - 1) = 1.0;
      y(i, 0) = testing::uniform(rng, -1, 1);
      y(i, 1) = testing::uniform(rng, -1, 1);
    }
    const double lambda = std::pow(10.0, testing::uniform(rng, -3, 2));
    const auto w = fit_ridge(x, y, lambda);
    double residual = 0;
    for (int j = 0; j < d; ++j) {
      for (int c = 0; c < 2; ++c) {
        long double r = (j + 1 < d ? lambda : 0.0) * w(j, c);
        for (int i = 0; i < n; ++i) {
          long double xw = 0;
          for (int m = 0; m < d; ++m) xw += x(i, m) * w(m, c);
          r += x(i, j) * (xw - y(i, c));
        }
        residual = std::max(residual, static_cast<double>(std::fabs(r)));
      }
    }
    worst = std::max(worst, residual);
    t.expect(residual < 1e-8, "problem " + std::to_string(trial));

    Eigen::MatrixXd truth_w(d, 2);
    for (int i = 0; i < truth_w.size(); ++i) truth_w(i) = testing::uniform(rng, -1, 1);
    const auto recovered = fit_ridge(x, x * truth_w, 1e-8);
    t.expect((recovered - truth_w).cwiseAbs().maxCoeff() <= 1e-6,
             "recovery " + std::to_string(trial));
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), ", worst residual %.2e", worst);
  return {t.failures == 0, t.summary() + buf};
}

Outcome formats() {
  Rng rng(1009);
  Tally t;
  for (int it = 0; it < 10000; ++it) {
    const SensorGeometry g{static_cast<std::uint32_t>(1 + rng() % 700),
                           static_cast<std::uint32_t>(1 + rng() % 500)};
    const auto s = testing::random_stream(rng, g, rng() % 40, rng() % 5000000000ull);
    const auto bin = write_events(s, EventFormat::kBinary);
    const auto back = read_events(bin, EventFormat::kBinary);
    t.expect(back == s && write_events(back, EventFormat::kBinary) == bin, "EVT1");
    const auto csv = write_events(s, EventFormat::kCsv);
    t.expect(read_events(csv, EventFormat::kCsv, g) == s, "event csv");

    TbrConfig c;
    c.bits = 1 + rng() % 16;
    c.delta_t = 1 + rng() % 10000;
    const SensorGeometry tg{static_cast<std::uint32_t>(1 + rng() % 64),
                            static_cast<std::uint32_t>(1 + rng() % 64)};
    const auto ts = testing::random_stream(rng, tg, rng() % 60,
                                           rng() % (40 * c.frame_span()));
    const auto set = encode(ts, c);
    const auto tb = write_tensors(set);
    t.expect(read_tensors(tb) == set && write_tensors(read_tensors(tb)) == tb, "TBR1");

    std::vector<LabeledTbrFrame> labeled;
    std::vector<VaSample> samples;
    for (std::size_t k = 0; k < rng() % 6; ++k) {
      const VaPair v{testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)};
      labeled.push_back({k, rng() % 1000000, v, rng() % 50});
      samples.push_back({k, rng() % 1000000, v});
    }
    t.expect(read_labeled(write_labeled(labeled)) == labeled, "labeled csv");
    t.expect(read_predictions(write_predictions(samples)) == samples, "prediction csv");
    if (it % 10 == 0) {
      std::array<VaPair, kEmotionCount> tv;
      for (auto& v : tv) v = {testing::uniform(rng, -1, 1), testing::uniform(rng, -1, 1)};
      const EmotionTemplateSet templates(tv);
      t.expect(read_templates(write_templates(templates)) == templates, "template csv");
      Eigen::MatrixXd w(5, 2);
      for (int i = 0; i < w.size(); ++i) w(i) = testing::uniform(rng, -1e3, 1e3);
      const RidgeModel m({2, 2}, c.bits, testing::uniform(rng, 1e-6, 10), w);
      const auto text = write_model(m);
      t.expect(write_model(read_model(text)) == text, "model csv");
    }
  }

  // Mutated-header corpus with the expected error class for each entry.
  const EventStream s({4, 3}, {{5, 1, 1, 1}, {9, 3, 2, -1}, {40, 0, 0, 1}});
  const auto evt = write_events(s, EventFormat::kBinary);
  TbrConfig c;
  c.bits = 3;
  c.delta_t = 10;
  const auto tbr = write_tensors(encode(s, c));
  struct Mutation {
    const char* name;
    bool tbr;
    std::size_t offset;
    std::uint8_t value;
    ErrorKind expected;
  };
  const Mutation corpus[] = {
      {"EVT1 magic byte 0", false, 0, 'X', ErrorKind::kFormat},
      {"EVT1 magic byte 3", false, 3, '2', ErrorKind::kFormat},
      {"EVT1 zero width", false, 4, 0, ErrorKind::kFormat},
      {"EVT1 zero height", false, 6, 0, ErrorKind::kFormat},
      {"EVT1 count too high", false, 8, 4, ErrorKind::kFormat},
      {"EVT1 count too low", false, 8, 2, ErrorKind::kFormat},
      {"EVT1 count high byte", false, 15, 1, ErrorKind::kFormat},
      {"EVT1 width shrinks below x", false, 4, 2, ErrorKind::kValidation},
      {"EVT1 polarity 0", false, 16 + 12, 0, ErrorKind::kValidation},
      {"TBR1 magic byte 0", true, 0, 'X', ErrorKind::kFormat},
      {"TBR1 magic byte 3", true, 3, '2', ErrorKind::kFormat},
      {"TBR1 zero width", true, 4, 0, ErrorKind::kFormat},
      {"TBR1 bits 0", true, 8, 0, ErrorKind::kFormat},
      {"TBR1 bits 17", true, 8, 17, ErrorKind::kFormat},
      {"TBR1 reserved byte", true, 9, 1, ErrorKind::kFormat},
      {"TBR1 zero delta_t", true, 10, 0, ErrorKind::kFormat},
      {"TBR1 frame count", true, 14, 7, ErrorKind::kFormat},
      {"TBR1 code above range", true, 22 + 8, 8, ErrorKind::kFormat},
      {"TBR1 second frame start", true, 22 + 8 + 12, 1, ErrorKind::kFormat},
  };
  for (const auto& m : corpus) {
    auto bytes = m.tbr ? tbr : evt;
    bytes[m.offset] = m.value;
    const auto got = kind_of([&] {
      if (m.tbr) {
        read_tensors(bytes);
      } else {
        read_events(bytes, EventFormat::kBinary);
      }
    });
    t.expect(got == m.expected, m.name);
  }
  // truncation at every length
  for (std::size_t n = 0; n < evt.size(); ++n) {
    t.expect(kind_of([&] {
               read_events(std::span(evt).first(n), EventFormat::kBinary);
             }) == ErrorKind::kFormat,
             "EVT1 truncated to " + std::to_string(n));
  }
  for (std::size_t n = 0; n < tbr.size(); ++n) {
    t.expect(kind_of([&] { read_tensors(std::span(tbr).first(n)); }) ==
                 ErrorKind::kFormat,
             "TBR1 truncated to " + std::to_string(n));
  }
  const std::string bad_headers[] = {"", "t,x,y,p\n1,0,0,1\n", "t_us,x,y\n1,0,0\n"};
  for (const auto& h : bad_headers) {
    t.expect(kind_of([&] {
               read_events(std::span(reinterpret_cast<const std::uint8_t*>(h.data()),
                                     h.size()),
                           EventFormat::kCsv, SensorGeometry{4, 4});
             }) == ErrorKind::kFormat,
             "event csv header '" + h.substr(0, h.find('\n')) + "'");
  }
  t.expect(kind_of([] { read_labeled("frame,t\n0,0\n"); }) == ErrorKind::kFormat,
           "labeled csv header");
  t.expect(kind_of([] { read_predictions("a,b,c,d\n0,0,0,0\n"); }) == ErrorKind::kFormat,
           "prediction csv header");
  t.expect(kind_of([] { read_model("lambda\n1\n"); }) == ErrorKind::kFormat,
           "model csv header");
  return {t.failures == 0, t.summary() + " (10000 round-trip iterations + mutation corpus)"};
}

Outcome throughput() {
  Rng rng(1010);
  const SensorGeometry g{640, 480};
  const std::size_t n = 2000000;
  const auto stream = testing::random_stream(rng, g, n, 1000000);
  double best = 0;
  for (int rep = 0; rep < 3; ++rep) {
    const auto start = Clock::now();
    const auto set = encode(stream, TbrConfig{});
    const double secs = seconds_since(start);
    if (set.empty()) return {false, "empty encoding"};
    best = std::max(best, static_cast<double>(n) / secs);
  }
  char buf[128];
  std::snprintf(buf, sizeof(buf),
                "%.2fM events/s single-threaded on 640x480 (target >= 1M, not gated)",
                best / 1e6);
  return {best >= 1e6, buf};
}

}  // namespace
}  // namespace neuroaffect

int main() {
  using namespace neuroaffect;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    bool gated;
  };
  const Criterion criteria[] = {
      {1, "TBR bit-exactness vs slice/binarize/pack oracle", tbr_bit_exactness, true},
      {2, "TBR structural invariants", tbr_invariants, true},
      {3, "simulator threshold semantics, monotonicity, determinism",
       simulator_properties, true},
      {4, "metrics vs direct-formula oracles", metric_oracles, true},
      {5, "alignment vs exhaustive argmin", alignment, true},
      {6, "zero-shot classifier", zero_shot, true},
      {7, "end-to-end simulate/encode/align/fit/predict", end_to_end, true},
      {8, "ridge normal-equation optimality", ridge_optimality, true},
      {9, "format round trips and mutated headers", formats, true},
      {10, "TBR encoding throughput", throughput, false},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("unexpected exception: ") + e.what()};
    }
    std::printf("%s criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", c.id,
                c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass && c.gated) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
