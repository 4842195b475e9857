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

#include "tbr.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "byteio.hpp"
#include "csv.hpp"
#include "error.hpp"

namespace neuroaffect {
namespace {

constexpr std::array<std::uint8_t, 4> kMagic = {0x54, 0x42, 0x52, 0x31};
constexpr std::uint32_t kMagicWord = 0x31524254;  // "TBR1" little-endian

}  // namespace

void TbrConfig::validate() const {
  if (delta_t == 0) throw_argument("delta_t must be positive");
  if (delta_t > std::numeric_limits<std::uint32_t>::max()) {
    throw_argument("delta_t must fit in 32 bits");
  }
  if (bits < 1 || bits > kMaxBits) {
    throw_argument("bits must be in [1, 16], got " + std::to_string(bits));
  }
}

TbrTensorSet::TbrTensorSet(SensorGeometry geometry, std::uint32_t bits,
                           Micros delta_t, Micros origin,
                           std::vector<TbrFrame> frames)
    : geometry_(SensorGeometry::checked(geometry.width, geometry.height)),
      bits_(bits),
      delta_t_(delta_t),
      origin_(origin),
      frames_(std::move(frames)) {
  TbrConfig{delta_t, bits, origin}.validate();
  const Micros span = frame_span();
  for (std::size_t k = 0; k < frames_.size(); ++k) {
    if (frames_[k].t_start != origin_ + k * span) {
      throw_validation("tbr frame " + std::to_string(k) + " starts at " +
                       std::to_string(frames_[k].t_start) + ", expected " +
                       std::to_string(origin_ + k * span));
    }
    if (frames_[k].pixels.size() != geometry_.pixel_count()) {
      throw_validation("tbr frame " + std::to_string(k) +
                       ": pixel count does not match geometry");
    }
    for (auto v : frames_[k].pixels) {
      if (v > max_code()) {
        throw_validation("tbr frame " + std::to_string(k) + ": code " +
                         std::to_string(v) + " exceeds " +
                         std::to_string(max_code()));
      }
    }
  }
}

BinarySlice binarize(const EventStream& stream, Micros t_start,
                     Micros duration) {
  BinarySlice slice{stream.geometry(), t_start, duration,
                    std::vector<std::uint8_t>(
                        stream.geometry().pixel_count(), 0)};
  const auto width = stream.geometry().width;
  for (const Event& e : stream.window(t_start, t_start + duration)) {
    slice.bits[std::size_t{e.y} * width + e.x] = 1;
  }
  return slice;
}

Micros default_origin(const EventStream& stream, Micros delta_t) {
  if (stream.empty() || delta_t == 0) return 0;
  return stream.first_time() / delta_t * delta_t;
}

TbrTensorSet encode(const EventStream& stream, const TbrConfig& config) {
  config.validate();
  const Micros origin =
      config.origin.value_or(default_origin(stream, config.delta_t));
  const SensorGeometry geometry = stream.geometry();
  if (stream.empty() || stream.last_time() < origin) {
    return TbrTensorSet(geometry, config.bits, config.delta_t, origin, {});
  }

  const Micros span = config.frame_span();
  const Micros frame_count = (stream.last_time() - origin) / span + 1;
  std::vector<TbrFrame> frames(frame_count);
  for (Micros k = 0; k < frame_count; ++k) {
    frames[k].t_start = origin + k * span;
    frames[k].pixels.assign(geometry.pixel_count(), 0);
  }

  const std::size_t width = geometry.width;
  const std::uint32_t top_bit = config.bits - 1;
  for (const Event& e : stream.window(origin, stream.last_time() + 1)) {
    const Micros slice = (e.t - origin) / config.delta_t;
    const auto k = slice / config.bits;
    const auto i = static_cast<std::uint32_t>(slice % config.bits);
    frames[k].pixels[e.y * width + e.x] |=
        static_cast<std::uint16_t>(1u << (top_bit - i));
  }
  return TbrTensorSet(geometry, config.bits, config.delta_t, origin,
                      std::move(frames));
}

std::vector<BinarySlice> decode_slices(const TbrTensorSet& set,
                                       std::size_t k) {
  const TbrFrame& frame = set.frame(k);
  std::vector<BinarySlice> slices;
  slices.reserve(set.bits());
  for (std::uint32_t i = 0; i < set.bits(); ++i) {
    BinarySlice s{set.geometry(), frame.t_start + i * set.delta_t(),
                  set.delta_t(),
                  std::vector<std::uint8_t>(frame.pixels.size(), 0)};
    const std::uint32_t shift = set.bits() - 1 - i;
    for (std::size_t p = 0; p < frame.pixels.size(); ++p) {
      s.bits[p] = static_cast<std::uint8_t>((frame.pixels[p] >> shift) & 1u);
    }
    slices.push_back(std::move(s));
  }
  return slices;
}

std::uint32_t padded_slice_count(const TbrTensorSet& set,
                                 const EventStream& stream) {
  if (set.empty()) return 0;
  const Micros last_start = set.frames().back().t_start;
  if (stream.empty() || stream.last_time() < last_start) return set.bits();
  const Micros covered = (stream.last_time() - last_start) / set.delta_t() + 1;
  return covered >= set.bits() ? 0
                               : set.bits() - static_cast<std::uint32_t>(covered);
}

std::vector<std::uint8_t> write_tensors(const TbrTensorSet& set) {
  const bool wide = set.bits() > 8;
  const std::size_t pixel_bytes = wide ? 2 : 1;
  std::vector<std::uint8_t> out;
  out.reserve(kTbr1HeaderSize +
              set.size() * (8 + set.geometry().pixel_count() * pixel_bytes));
  put_le(out, kMagicWord);
  put_le(out, static_cast<std::uint16_t>(set.geometry().width));
  put_le(out, static_cast<std::uint16_t>(set.geometry().height));
  put_le(out, static_cast<std::uint8_t>(set.bits()));
  put_le(out, std::uint8_t{0});
  put_le(out, static_cast<std::uint32_t>(set.delta_t()));
  put_le(out, static_cast<std::uint64_t>(set.size()));
  for (const TbrFrame& f : set.frames()) {
    put_le(out, f.t_start);
    for (auto v : f.pixels) {
      if (wide) {
        put_le(out, v);
      } else {
        out.push_back(static_cast<std::uint8_t>(v));
      }
    }
  }
  return out;
}

TbrTensorSet read_tensors(std::span<const std::uint8_t> bytes) {
  ByteReader in(bytes, "TBR1");
  const auto magic = in.take(4);
  if (!std::equal(magic.begin(), magic.end(), kMagic.begin())) {
    throw_format("TBR1: bad magic");
  }
  const auto width = in.get<std::uint16_t>();
  const auto height = in.get<std::uint16_t>();
  const auto bits = in.get<std::uint8_t>();
  const auto reserved = in.get<std::uint8_t>();
  const auto delta_t = in.get<std::uint32_t>();
  const auto count = in.get<std::uint64_t>();
  if (width == 0 || height == 0) throw_format("TBR1: empty geometry");
  if (bits < 1 || bits > TbrConfig::kMaxBits) {
    throw_format("TBR1: bits " + std::to_string(bits) + " outside [1, 16]");
  }
  if (reserved != 0) throw_format("TBR1: reserved byte is not zero");
  if (delta_t == 0) throw_format("TBR1: zero delta_t");

  const bool wide = bits > 8;
  const std::size_t pixels = std::size_t{width} * height;
  const std::size_t record = 8 + pixels * (wide ? 2 : 1);
  if (count > in.remaining() / record || count * record != in.remaining()) {
    throw_format("TBR1: header declares " + std::to_string(count) +
                 " frames but payload holds " +
                 std::to_string(in.remaining()) + " bytes");
  }

  std::vector<TbrFrame> frames(count);
  const std::uint32_t max_code = (1u << bits) - 1;
  for (auto& f : frames) {
    f.t_start = in.get<std::uint64_t>();
    f.pixels.resize(pixels);
    for (auto& v : f.pixels) {
      v = wide ? in.get<std::uint16_t>() : in.get<std::uint8_t>();
      if (v > max_code) {
        throw_format("TBR1: code " + std::to_string(v) + " exceeds " +
                     std::to_string(bits) + "-bit range");
      }
    }
  }
  const Micros span = Micros{delta_t} * bits;
  const Micros origin = frames.empty() ? 0 : frames.front().t_start;
  for (std::size_t k = 0; k < frames.size(); ++k) {
    if (frames[k].t_start != origin + k * span) {
      throw_format("TBR1: frame " + std::to_string(k) +
                   " is not consecutive with frame 0");
    }
  }
  return TbrTensorSet({width, height}, bits, delta_t, origin,
                      std::move(frames));
}

TbrTensorSet read_tensors_file(const std::filesystem::path& path) {
  return read_tensors(read_file(path));
}

}  // namespace neuroaffect
