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

#ifndef NEUROAFFECT_FRAMES_HPP
#define NEUROAFFECT_FRAMES_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "event_core.hpp"

namespace neuroaffect {

/// Row-major grayscale plane, intensities in [0, 255].
using IntensityPlane = std::vector<double>;

/// Grayscale frames with strictly increasing timestamps.
class FrameSequence {
 public:
  FrameSequence(SensorGeometry geometry, std::vector<IntensityPlane> planes,
                std::vector<Micros> timestamps);

  const SensorGeometry& geometry() const noexcept { return geometry_; }
  std::size_t size() const noexcept { return planes_.size(); }
  const IntensityPlane& plane(std::size_t i) const { return planes_[i]; }
  std::span<const IntensityPlane> planes() const noexcept { return planes_; }
  std::span<const Micros> timestamps() const noexcept { return timestamps_; }

 private:
  SensorGeometry geometry_;
  std::vector<IntensityPlane> planes_;
  std::vector<Micros> timestamps_;
};

/// Inserts factor-1 linearly interpolated planes between each consecutive
/// pair. Interpolated timestamps are floor-interpolated, so every gap must be
/// at least `factor` microseconds.
FrameSequence upsample(const FrameSequence& frames, std::uint32_t factor);

/// Rec.601 luma.
inline double rgb_to_luma(double r, double g, double b) {
  return 0.299 * r + 0.587 * g + 0.114 * b;
}

struct Image {
  SensorGeometry geometry;
  IntensityPlane pixels;
};

/// Binary PGM (P5) or PPM (P6, converted to luma), maxval 255.
Image decode_pnm(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> encode_pgm(SensorGeometry geometry,
                                     std::span<const std::uint8_t> pixels);

/// All *.pgm / *.ppm files of `dir` in lexicographic order, frame i at
/// i * period_us.
FrameSequence load_frame_directory(const std::filesystem::path& dir,
                                   Micros period_us);

/// Manifest CSV "filename,timestamp_us"; filenames relative to the manifest.
FrameSequence load_frame_manifest(const std::filesystem::path& manifest);

}  // namespace neuroaffect

#endif  // NEUROAFFECT_FRAMES_HPP
