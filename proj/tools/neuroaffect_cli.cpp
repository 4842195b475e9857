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

// Command-line front end. Every subcommand is a thin shell over one call of
// the C API; files are the only interchange between stages.

#include <charconv>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "neuroaffect/neuroaffect.h"

namespace {

template <typename T, void (*Free)(T*)>
struct HandleDeleter {
  void operator()(T* p) const { Free(p); }
};
template <typename T, void (*Free)(T*)>
using Handle = std::unique_ptr<T, HandleDeleter<T, Free>>;

using Bytes = Handle<na_bytes, na_bytes_free>;
using Events = Handle<na_events, na_events_free>;
using Frames = Handle<na_frames, na_frames_free>;
using Tbr = Handle<na_tbr, na_tbr_free>;
using Annotations = Handle<na_annotations, na_annotations_free>;
using Labels = Handle<na_labels, na_labels_free>;
using Series = Handle<na_series, na_series_free>;
using Model = Handle<na_model, na_model_free>;
using Templates = Handle<na_templates, na_templates_free>;

constexpr int kExitValidation = 1;
constexpr int kExitIo = 2;

// Carries an exit code out of a subcommand.
struct Failure {
  int code;
};

int exit_code_for(na_status s) {
  switch (s) {
    case NA_OK: return 0;
    case NA_ERR_FORMAT:
    case NA_ERR_IO:
    case NA_ERR_INTERNAL: return kExitIo;
    default: return kExitValidation;
  }
}

void check(na_status s) {
  if (s == NA_OK) return;
  std::cerr << "error: " << na_status_name(s) << ": " << na_last_error()
            << "\n";
  throw Failure{exit_code_for(s)};
}

[[noreturn]] void usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  throw Failure{kExitValidation};
}

std::vector<std::uint8_t> slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    std::cerr << "error: cannot open '" << path << "'\n";
    throw Failure{kExitIo};
  }
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Writes to `path`, or standard output when it is empty.
void emit(const std::string& path, const std::uint8_t* data, std::size_t n) {
  if (path.empty()) {
    std::fwrite(data, 1, n, stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(data),
            static_cast<std::streamsize>(n));
  if (!out) {
    std::cerr << "error: cannot write '" << path << "'\n";
    throw Failure{kExitIo};
  }
}

void emit(const std::string& path, const Bytes& bytes) {
  emit(path, na_bytes_data(bytes.get()), na_bytes_size(bytes.get()));
}

void emit(const std::string& path, const std::string& text) {
  emit(path, reinterpret_cast<const std::uint8_t*>(text.data()), text.size());
}

struct Dims {
  std::uint32_t first = 0;
  std::uint32_t second = 0;
};

Dims parse_dims(const std::string& text, const char* flag) {
  const auto x = text.find('x');
  try {
    if (x == std::string::npos) throw std::invalid_argument(text);
    std::size_t used = 0;
    const auto a = std::stoul(text.substr(0, x), &used);
    if (used != x) throw std::invalid_argument(text);
    const auto b = std::stoul(text.substr(x + 1), &used);
    if (used != text.size() - x - 1) throw std::invalid_argument(text);
    if (a == 0 || b == 0 || a > 65535 || b > 65535) {
      throw std::out_of_range(text);
    }
    return {static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b)};
  } catch (const std::exception&) {
    usage_error(std::string(flag) + " expects AxB with positive integers, got '" +
                text + "'");
  }
}

na_event_format event_format(const std::string& name) {
  return name == "csv" ? NA_EVENTS_CSV : NA_EVENTS_BINARY;
}

Events load_events(const std::string& path, const std::string& format,
                   const std::string& geometry) {
  std::uint32_t w = 0, h = 0;
  if (format == "csv") {
    if (geometry.empty()) usage_error("csv event input requires --geometry WxH");
    const auto d = parse_dims(geometry, "--geometry");
    w = d.first;
    h = d.second;
  }
  const auto bytes = slurp(path);
  na_events* raw = nullptr;
  check(na_events_parse(bytes.data(), bytes.size(), event_format(format), w, h,
                        &raw));
  return Events(raw);
}

Tbr load_tbr(const std::string& path) {
  const auto bytes = slurp(path);
  na_tbr* raw = nullptr;
  check(na_tbr_parse(bytes.data(), bytes.size(), &raw));
  return Tbr(raw);
}

Series load_series(const std::string& path) {
  const auto bytes = slurp(path);
  na_series* raw = nullptr;
  check(na_series_parse(bytes.data(), bytes.size(), &raw));
  return Series(raw);
}

Templates load_templates(const std::string& path) {
  const auto bytes = slurp(path);
  na_templates* raw = nullptr;
  check(na_templates_parse(bytes.data(), bytes.size(), &raw));
  return Templates(raw);
}

std::string shortest(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v == 0.0 ? 0.0 : v);
  return std::string(buf, end);
}

// ---- subcommands

struct SimulateArgs {
  std::string in;
  std::string manifest;
  std::uint64_t period_us = 0;
  double fps = 0.0;
  na_sim_config config = na_sim_config_default();
  std::string format = "binary";
  std::string out;
};

int run_simulate(const SimulateArgs& a) {
  if (a.in.empty() == a.manifest.empty()) {
    usage_error("simulate needs exactly one of --in DIR or --manifest CSV");
  }
  na_frames* raw = nullptr;
  if (!a.in.empty()) {
    std::uint64_t period = a.period_us;
    if (a.fps > 0.0) {
      if (period != 0) usage_error("give --fps or --period-us, not both");
      period = static_cast<std::uint64_t>(std::llround(1e6 / a.fps));
    }
    if (period == 0) usage_error("--in DIR requires --period-us or --fps");
    check(na_frames_load_dir(a.in.c_str(), period, &raw));
  } else {
    check(na_frames_load_manifest(a.manifest.c_str(), &raw));
  }
  const Frames frames(raw);
  na_events* ev = nullptr;
  check(na_simulate(frames.get(), &a.config, &ev));
  const Events events(ev);
  na_bytes* b = nullptr;
  check(na_events_serialize(events.get(), event_format(a.format), &b));
  emit(a.out, Bytes(b));
  std::cerr << "simulated " << na_events_count(events.get()) << " events from "
            << na_frames_count(frames.get()) << " frames\n";
  return 0;
}

struct EncodeArgs {
  std::string in;
  std::string format = "binary";
  std::string geometry;
  na_tbr_config config = na_tbr_config_default();
  std::optional<std::uint64_t> origin_us;
  std::string out;
};

int run_encode(EncodeArgs a) {
  const Events events = load_events(a.in, a.format, a.geometry);
  if (a.origin_us) {
    a.config.has_origin = 1;
    a.config.origin_us = *a.origin_us;
  }
  na_tbr* raw = nullptr;
  check(na_tbr_encode(events.get(), &a.config, &raw));
  const Tbr tbr(raw);
  na_bytes* b = nullptr;
  check(na_tbr_serialize(tbr.get(), &b));
  emit(a.out, Bytes(b));
  na_tbr_info info{};
  na_tbr_get_info(tbr.get(), &info);
  std::cerr << "encoded " << info.frame_count << " TBR frames (" << info.bits
            << " bits x " << info.delta_t_us << " us)\n";
  if (const auto padded = na_tbr_padded_slices(tbr.get(), events.get())) {
    std::cerr << "note: final frame " << info.frame_count - 1
              << " is zero-padded in its last " << padded << " slice(s)\n";
  }
  return 0;
}

struct AlignArgs {
  std::string annotations;
  std::string in;
  std::string events;
  std::string format = "binary";
  std::string geometry;
  std::uint64_t period_us = 0;
  std::string out;
};

int run_align(const AlignArgs& a) {
  const auto ann_bytes = slurp(a.annotations);
  na_annotations* ann = nullptr;
  check(na_annotations_parse(ann_bytes.data(), ann_bytes.size(), a.period_us,
                             &ann));
  const Annotations track(ann);
  const Tbr tbr = load_tbr(a.in);
  const Events events = load_events(a.events, a.format, a.geometry);
  na_labels* raw = nullptr;
  check(na_align(track.get(), tbr.get(), events.get(), &raw));
  const Labels labels(raw);
  na_bytes* b = nullptr;
  check(na_labels_serialize(labels.get(), &b));
  emit(a.out, Bytes(b));
  return 0;
}

struct FitArgs {
  std::vector<std::string> in;
  std::vector<std::string> labels;
  std::string grid = "16x16";
  double lambda = 1.0;
  std::string out;
};

int run_fit(const FitArgs& a) {
  if (a.in.size() != a.labels.size()) {
    usage_error("fit needs one --labels file per --in tensor file");
  }
  const auto grid = parse_dims(a.grid, "--grid");
  std::vector<Tbr> tensors;
  std::vector<Labels> labels;
  for (std::size_t i = 0; i < a.in.size(); ++i) {
    tensors.push_back(load_tbr(a.in[i]));
    const auto bytes = slurp(a.labels[i]);
    na_labels* raw = nullptr;
    check(na_labels_parse(bytes.data(), bytes.size(), &raw));
    labels.emplace_back(raw);
  }
  std::vector<const na_tbr*> tp;
  std::vector<const na_labels*> lp;
  for (std::size_t i = 0; i < tensors.size(); ++i) {
    tp.push_back(tensors[i].get());
    lp.push_back(labels[i].get());
  }
  na_model* raw = nullptr;
  check(na_fit(tp.data(), lp.data(), tp.size(), grid.first, grid.second,
               a.lambda, &raw));
  const Model model(raw);
  na_bytes* b = nullptr;
  check(na_model_serialize(model.get(), &b));
  emit(a.out, Bytes(b));
  return 0;
}

struct PredictArgs {
  std::string model;
  std::string in;
  std::string out;
};

int run_predict(const PredictArgs& a) {
  const auto bytes = slurp(a.model);
  na_model* m = nullptr;
  check(na_model_parse(bytes.data(), bytes.size(), &m));
  const Model model(m);
  const Tbr tbr = load_tbr(a.in);
  na_series* raw = nullptr;
  check(na_predict(model.get(), tbr.get(), &raw));
  const Series series(raw);
  na_bytes* b = nullptr;
  check(na_series_serialize(series.get(), &b));
  emit(a.out, Bytes(b));
  return 0;
}

struct EvalArgs {
  std::string truth;
  std::string pred;
  std::string out;
};

int run_eval(const EvalArgs& a) {
  const Series truth = load_series(a.truth);
  const Series pred = load_series(a.pred);
  na_report report{};
  check(na_evaluate(truth.get(), pred.get(), &report));
  na_bytes* csv = nullptr;
  check(na_report_format(&report, 0, &csv));
  emit(a.out, Bytes(csv));
  na_bytes* table = nullptr;
  check(na_report_format(&report, 1, &table));
  const Bytes t(table);
  std::cerr.write(reinterpret_cast<const char*>(na_bytes_data(t.get())),
                  static_cast<std::streamsize>(na_bytes_size(t.get())));
  return 0;
}

struct TemplatesArgs {
  std::string in;
  std::string out;
};

// Manifest rows "emotion,path"; each path is a prediction CSV of one video.
int run_templates(const TemplatesArgs& a) {
  const auto bytes = slurp(a.in);
  const std::string text(bytes.begin(), bytes.end());
  const auto base = std::filesystem::path(a.in).parent_path();
  std::vector<na_emotion> emotions;
  std::vector<Series> series;
  std::size_t line_no = 0;
  bool header = true;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string::npos) eol = text.size();
    std::string line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty()) continue;
    if (header) {
      if (line != "emotion,path") {
        std::cerr << "error: templates manifest must start with 'emotion,path'\n";
        throw Failure{kExitIo};
      }
      header = false;
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      std::cerr << "error: templates manifest line " << line_no
                << " needs 'emotion,path'\n";
      throw Failure{kExitIo};
    }
    na_emotion e{};
    check(na_emotion_from_name(line.substr(0, comma).c_str(), &e));
    emotions.push_back(e);
    series.push_back(load_series((base / line.substr(comma + 1)).string()));
  }
  std::vector<const na_series*> sp;
  for (const auto& s : series) sp.push_back(s.get());
  na_templates* raw = nullptr;
  check(na_templates_build(emotions.data(), sp.data(), sp.size(), &raw));
  const Templates templates(raw);
  na_bytes* b = nullptr;
  check(na_templates_serialize(templates.get(), &b));
  emit(a.out, Bytes(b));
  return 0;
}

struct ClassifyArgs {
  std::string templates;
  std::vector<std::string> pred;
  std::string out;
};

int run_classify(const ClassifyArgs& a) {
  const Templates templates = load_templates(a.templates);
  std::string out = "input,emotion,representative_index,valence,arousal,distance\n";
  for (const auto& path : a.pred) {
    const Series series = load_series(path);
    na_classification c{};
    check(na_classify(series.get(), templates.get(), &c));
    out += path + ',' + na_emotion_name(c.emotion) + ',' +
           std::to_string(c.representative_index) + ',' +
           shortest(c.representative_valence) + ',' +
           shortest(c.representative_arousal) + ',' +
           shortest(c.template_distance) + '\n';
  }
  emit(a.out, out);
  return 0;
}

struct PlotArgs {
  std::string pred;
  std::string truth;
  std::string templates;
  std::string kind = "timeline";
  std::string out;
};

int run_plot(const PlotArgs& a) {
  const Series pred = load_series(a.pred);
  Series truth;
  if (!a.truth.empty()) truth = load_series(a.truth);
  na_bytes* b = nullptr;
  if (a.kind == "wheel") {
    Templates templates;
    if (!a.templates.empty()) templates = load_templates(a.templates);
    check(na_plot_wheel(pred.get(), truth.get(), templates.get(), &b));
  } else {
    if (!a.templates.empty()) usage_error("--templates only applies to --kind wheel");
    check(na_plot_timeline(pred.get(), truth.get(), &b));
  }
  emit(a.out, Bytes(b));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"neuroaffect: frames -> events -> TBR -> valence/arousal"};
  app.require_subcommand(1);
  app.set_version_flag("--version", na_version());
  const std::vector<std::string> formats = {"binary", "csv"};

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "frames (PGM/PPM) to events");
  simulate->add_option("--in", sim.in, "directory of frame files");
  simulate->add_option("--manifest", sim.manifest, "CSV filename,timestamp_us");
  simulate->add_option("--period-us", sim.period_us, "frame period (us)");
  simulate->add_option("--fps", sim.fps, "frame rate, alternative to --period-us")
      ->check(CLI::PositiveNumber);
  simulate->add_option("--theta", sim.config.contrast_threshold,
                       "contrast threshold (log units)")
      ->capture_default_str()->check(CLI::PositiveNumber);
  simulate->add_option("--upsample", sim.config.upsample_factor,
                       "sub-frames per input interval")
      ->capture_default_str()->check(CLI::Range(1u, 1u << 16));
  simulate->add_option("--epsilon", sim.config.epsilon, "log offset")
      ->capture_default_str()->check(CLI::PositiveNumber);
  simulate->add_option("--threads", sim.config.threads, "0 = all cores")
      ->capture_default_str();
  simulate->add_option("--format", sim.format)->check(CLI::IsMember(formats))
      ->capture_default_str();
  simulate->add_option("--out", sim.out, "output file (default stdout)");

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "events to TBR tensors");
  encode->add_option("--in", enc.in, "event file")->required();
  encode->add_option("--format", enc.format)->check(CLI::IsMember(formats))
      ->capture_default_str();
  encode->add_option("--geometry", enc.geometry, "WxH, required for csv");
  encode->add_option("--bits", enc.config.bits, "slices per frame (N)")
      ->capture_default_str()->check(CLI::Range(1u, 16u));
  encode->add_option("--delta-t-us", enc.config.delta_t_us, "slice length")
      ->capture_default_str()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{0xFFFFFFFF}));
  encode->add_option("--origin-us", enc.origin_us,
                     "first frame start (default: first event, floored)");
  encode->add_option("--out", enc.out, "output file (default stdout)");

  AlignArgs al;
  auto* align = app.add_subcommand("align", "label TBR frames from annotations");
  align->add_option("--annotations", al.annotations,
                    "CSV frame_index,timestamp_us,valence,arousal")->required();
  align->add_option("--in", al.in, "TBR1 file")->required();
  align->add_option("--events", al.events, "event file the TBR came from")
      ->required();
  align->add_option("--format", al.format)->check(CLI::IsMember(formats))
      ->capture_default_str();
  align->add_option("--geometry", al.geometry, "WxH, required for csv");
  align->add_option("--period-us", al.period_us,
                    "synthesize timestamps as frame_index * period");
  align->add_option("--out", al.out, "output file (default stdout)");

  FitArgs fa;
  auto* fitc = app.add_subcommand("fit", "fit the ridge baseline");
  fitc->add_option("--in", fa.in, "TBR1 file (repeatable)")->required();
  fitc->add_option("--labels", fa.labels, "labeled CSV per --in")->required();
  fitc->add_option("--grid", fa.grid, "pooling grid GHxGW")->capture_default_str();
  fitc->add_option("--lambda", fa.lambda, "ridge penalty")
      ->capture_default_str()->check(CLI::PositiveNumber);
  fitc->add_option("--out", fa.out, "model CSV (default stdout)");

  PredictArgs pa;
  auto* predict = app.add_subcommand("predict", "predict VA per TBR frame");
  predict->add_option("--model", pa.model, "model CSV")->required();
  predict->add_option("--in", pa.in, "TBR1 file")->required();
  predict->add_option("--out", pa.out, "prediction CSV (default stdout)");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "RMSE / PCC / SAGR per dimension");
  eval->add_option("--truth", ea.truth, "ground-truth CSV")->required();
  eval->add_option("--pred", ea.pred, "prediction CSV")->required();
  eval->add_option("--out", ea.out, "metrics CSV (default stdout)");

  TemplatesArgs ta;
  auto* templates = app.add_subcommand("templates", "build emotion templates");
  templates->add_option("--in", ta.in, "manifest CSV emotion,path")->required();
  templates->add_option("--out", ta.out, "template CSV (default stdout)");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "zero-shot emotion per video");
  classify->add_option("--templates", ca.templates, "template CSV")->required();
  classify->add_option("--pred", ca.pred, "prediction CSV (repeatable)")
      ->required();
  classify->add_option("--out", ca.out, "output CSV (default stdout)");

  PlotArgs pl;
  auto* plot = app.add_subcommand("plot", "SVG timeline or VA wheel");
  plot->add_option("--pred", pl.pred, "prediction CSV")->required();
  plot->add_option("--truth", pl.truth, "optional ground truth CSV");
  plot->add_option("--templates", pl.templates, "optional templates (wheel)");
  plot->add_option("--kind", pl.kind)
      ->check(CLI::IsMember({"timeline", "wheel"}))->capture_default_str();
  plot->add_option("--out", pl.out, "SVG file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitValidation;
  }

  try {
    if (simulate->parsed()) return run_simulate(sim);
    if (encode->parsed()) return run_encode(enc);
    if (align->parsed()) return run_align(al);
    if (fitc->parsed()) return run_fit(fa);
    if (predict->parsed()) return run_predict(pa);
    if (eval->parsed()) return run_eval(ea);
    if (templates->parsed()) return run_templates(ta);
    if (classify->parsed()) return run_classify(ca);
    if (plot->parsed()) return run_plot(pl);
  } catch (const Failure& f) {
    return f.code;
  }
  return kExitValidation;
}
