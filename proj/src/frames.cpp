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

#include "frames.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "csv.hpp"
#include "error.hpp"

namespace neuroaffect {
namespace {

class PnmHeader {
 public:
  explicit PnmHeader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::string token() {
    skip_space_and_comments();
    std::string tok;
    while (pos_ < bytes_.size() && !std::isspace(bytes_[pos_])) {
      tok.push_back(static_cast<char>(bytes_[pos_++]));
    }
    if (tok.empty()) throw_format("pnm: truncated header");
    return tok;
  }

  std::uint32_t number() {
    const auto tok = token();
    const auto v = parse_uint(tok, "pnm header");
    if (v > 65535) throw_format("pnm: header value " + tok + " too large");
    return static_cast<std::uint32_t>(v);
  }

  // Exactly one whitespace byte separates maxval from the raster.
  std::size_t raster_offset() {
    if (pos_ >= bytes_.size()) throw_format("pnm: missing raster");
    return pos_ + 1;
  }

 private:
  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      if (std::isspace(bytes_[pos_])) {
        ++pos_;
      } else if (bytes_[pos_] == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

bool is_frame_file(const std::filesystem::path& p) {
  auto ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return ext == ".pgm" || ext == ".ppm";
}

FrameSequence assemble(const std::vector<std::filesystem::path>& files,
                       std::vector<Micros> timestamps) {
  if (files.empty()) throw_format("no frame files found");
  std::vector<IntensityPlane> planes;
  planes.reserve(files.size());
  SensorGeometry geometry;
  for (std::size_t i = 0; i < files.size(); ++i) {
    Image img = decode_pnm(read_file(files[i]));
    if (i == 0) {
      geometry = img.geometry;
    } else if (!(img.geometry == geometry)) {
      throw_format("frame '" + files[i].string() + "' has geometry " +
                   std::to_string(img.geometry.width) + "x" +
                   std::to_string(img.geometry.height) + ", expected " +
                   std::to_string(geometry.width) + "x" +
                   std::to_string(geometry.height));
    }
    planes.push_back(std::move(img.pixels));
  }
  return FrameSequence(geometry, std::move(planes), std::move(timestamps));
}

}  // namespace

FrameSequence::FrameSequence(SensorGeometry geometry,
                             std::vector<IntensityPlane> planes,
                             std::vector<Micros> timestamps)
    : geometry_(SensorGeometry::checked(geometry.width, geometry.height)),
      planes_(std::move(planes)),
      timestamps_(std::move(timestamps)) {
  if (planes_.size() != timestamps_.size()) {
    throw_argument("frame sequence: " + std::to_string(planes_.size()) +
                   " planes but " + std::to_string(timestamps_.size()) +
                   " timestamps");
  }
  for (std::size_t i = 0; i < planes_.size(); ++i) {
    if (planes_[i].size() != geometry_.pixel_count()) {
      throw_argument("frame " + std::to_string(i) +
                     ": plane size does not match geometry");
    }
    for (double v : planes_[i]) {
      if (!(v >= 0.0 && v <= 255.0)) {
        throw_validation("frame " + std::to_string(i) +
                         ": intensity outside [0, 255]");
      }
    }
    if (i > 0 && timestamps_[i] <= timestamps_[i - 1]) {
      throw_validation("frame " + std::to_string(i) +
                       ": timestamps must be strictly increasing");
    }
  }
}

FrameSequence upsample(const FrameSequence& frames, std::uint32_t factor) {
  if (factor < 1) throw_argument("upsample factor must be >= 1");
  if (factor == 1 || frames.size() < 2) return frames;

  const auto ts = frames.timestamps();
  std::vector<IntensityPlane> planes;
  std::vector<Micros> times;
  planes.reserve((frames.size() - 1) * factor + 1);
  times.reserve(planes.capacity());
  for (std::size_t i = 0; i + 1 < frames.size(); ++i) {
    const auto& a = frames.plane(i);
    const auto& b = frames.plane(i + 1);
    const Micros gap = ts[i + 1] - ts[i];
    if (gap < factor) {
      throw_argument("frame gap of " + std::to_string(gap) +
                     " us is too short for upsample factor " +
                     std::to_string(factor));
    }
    planes.push_back(a);
    times.push_back(ts[i]);
    for (std::uint32_t j = 1; j < factor; ++j) {
      IntensityPlane mid(a.size());
      for (std::size_t p = 0; p < a.size(); ++p) {
        mid[p] = a[p] + (b[p] - a[p]) * j / factor;
      }
      planes.push_back(std::move(mid));
      times.push_back(ts[i] + gap * j / factor);
    }
  }
  planes.push_back(frames.plane(frames.size() - 1));
  times.push_back(ts.back());
  return FrameSequence(frames.geometry(), std::move(planes), std::move(times));
}

Image decode_pnm(std::span<const std::uint8_t> bytes) {
  PnmHeader header(bytes);
  const auto magic = header.token();
  if (magic != "P5" && magic != "P6") {
    throw_format("pnm: unsupported magic '" + magic + "' (need P5 or P6)");
  }
  const auto width = header.number();
  const auto height = header.number();
  const auto maxval = header.number();
  if (maxval != 255) {
    throw_format("pnm: maxval " + std::to_string(maxval) + " (need 255)");
  }
  if (width == 0 || height == 0) throw_format("pnm: empty image");
  const std::size_t channels = magic == "P6" ? 3 : 1;
  const std::size_t offset = header.raster_offset();
  const std::size_t need = std::size_t{width} * height * channels;
  if (bytes.size() < offset || bytes.size() - offset < need) {
    throw_format("pnm: raster truncated");
  }
  Image img{{width, height}, IntensityPlane(std::size_t{width} * height)};
  const auto* raster = bytes.data() + offset;
  for (std::size_t p = 0; p < img.pixels.size(); ++p) {
    if (channels == 1) {
      img.pixels[p] = raster[p];
    } else {
      img.pixels[p] = rgb_to_luma(raster[3 * p], raster[3 * p + 1],
                                  raster[3 * p + 2]);
    }
  }
  return img;
}

std::vector<std::uint8_t> encode_pgm(SensorGeometry geometry,
                                     std::span<const std::uint8_t> pixels) {
  if (pixels.size() != geometry.pixel_count()) {
    throw_argument("pgm: pixel count does not match geometry");
  }
  const std::string header = "P5\n" + std::to_string(geometry.width) + " " +
                             std::to_string(geometry.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), pixels.begin(), pixels.end());
  return out;
}

FrameSequence load_frame_directory(const std::filesystem::path& dir,
                                   Micros period_us) {
  if (period_us == 0) throw_argument("frame period must be positive");
  std::error_code ec;
  if (!std::filesystem::is_directory(dir, ec)) {
    throw_io("'" + dir.string() + "' is not a directory");
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && is_frame_file(entry.path())) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end(), [](const auto& a, const auto& b) {
    return a.filename().string() < b.filename().string();
  });
  std::vector<Micros> times(files.size());
  for (std::size_t i = 0; i < times.size(); ++i) times[i] = i * period_us;
  return assemble(files, std::move(times));
}

FrameSequence load_frame_manifest(const std::filesystem::path& manifest) {
  const CsvTable table = parse_csv(read_text_file(manifest));
  expect_columns(table, {"filename", "timestamp_us"}, "frame manifest");
  const auto base = manifest.parent_path();
  std::vector<std::filesystem::path> files;
  std::vector<Micros> times;
  for (const auto& row : table.rows) {
    files.push_back(base / row[0]);
    times.push_back(parse_uint(row[1], "frame manifest timestamp_us"));
  }
  return assemble(files, std::move(times));
}

}  // namespace neuroaffect
