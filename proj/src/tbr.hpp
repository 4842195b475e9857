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

#ifndef NEUROAFFECT_TBR_HPP
#define NEUROAFFECT_TBR_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <vector>

#include "event_core.hpp"

namespace neuroaffect {

struct TbrConfig {
  Micros delta_t = 5000;
  std::uint32_t bits = 8;
  // Unset: first event timestamp floored to a multiple of delta_t.
  std::optional<Micros> origin;

  static constexpr std::uint32_t kMaxBits = 16;

  void validate() const;
  Micros frame_span() const noexcept { return delta_t * bits; }
};

/// Presence plane for one accumulation interval [t_start, t_start + duration).
struct BinarySlice {
  SensorGeometry geometry;
  Micros t_start = 0;
  Micros duration = 0;
  std::vector<std::uint8_t> bits;  // row-major, each 0 or 1

  friend bool operator==(const BinarySlice&, const BinarySlice&) = default;
};

/// One decimal-coded frame covering [t_start, t_start + bits * delta_t).
/// Pixel code = sum_i b_i * 2^(bits-1-i), slice 0 (earliest) in the MSB.
struct TbrFrame {
  Micros t_start = 0;
  std::vector<std::uint16_t> pixels;  // row-major

  friend bool operator==(const TbrFrame&, const TbrFrame&) = default;
};

/// Consecutive TBR frames of one clip. Frame k starts at
/// origin + k * bits * delta_t; every code is below 2^bits.
class TbrTensorSet {
 public:
  TbrTensorSet(SensorGeometry geometry, std::uint32_t bits, Micros delta_t,
               Micros origin, std::vector<TbrFrame> frames);

  const SensorGeometry& geometry() const noexcept { return geometry_; }
  std::uint32_t bits() const noexcept { return bits_; }
  Micros delta_t() const noexcept { return delta_t_; }
  Micros origin() const noexcept { return origin_; }
  Micros frame_span() const noexcept { return delta_t_ * bits_; }
  std::uint32_t max_code() const noexcept { return (1u << bits_) - 1; }

  std::span<const TbrFrame> frames() const noexcept { return frames_; }
  const TbrFrame& frame(std::size_t k) const { return frames_.at(k); }
  std::size_t size() const noexcept { return frames_.size(); }
  bool empty() const noexcept { return frames_.empty(); }

  friend bool operator==(const TbrTensorSet&, const TbrTensorSet&) = default;

 private:
  SensorGeometry geometry_;
  std::uint32_t bits_;
  Micros delta_t_;
  Micros origin_;
  std::vector<TbrFrame> frames_;
};

BinarySlice binarize(const EventStream& stream, Micros t_start,
                     Micros duration);

Micros default_origin(const EventStream& stream, Micros delta_t);

/// Frame count is ceil((t_last - origin + 1) / (bits * delta_t)); the tail
/// frame is zero-padded. Polarity is ignored. Events before an explicit
/// origin are dropped.
TbrTensorSet encode(const EventStream& stream, const TbrConfig& config);

/// Splits frame k back into its `bits` presence slices, earliest first.
std::vector<BinarySlice> decode_slices(const TbrTensorSet& set,
                                       std::size_t k);

/// Trailing slices of the last frame that start after the stream's last
/// event, i.e. slices that exist only as zero padding.
std::uint32_t padded_slice_count(const TbrTensorSet& set,
                                 const EventStream& stream);

// TBR1 layout, little-endian:
//   "TBR1" | u16 width | u16 height | u8 bits | u8 0 | u32 delta_t | u64 n |
//   n x {u64 t_start, row-major payload (u8 when bits <= 8, else u16)}
inline constexpr std::size_t kTbr1HeaderSize = 22;

std::vector<std::uint8_t> write_tensors(const TbrTensorSet& set);
TbrTensorSet read_tensors(std::span<const std::uint8_t> bytes);
TbrTensorSet read_tensors_file(const std::filesystem::path& path);

}  // namespace neuroaffect

#endif  // NEUROAFFECT_TBR_HPP
