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

#include "baseline.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Cholesky>

#include "csv.hpp"
#include "error.hpp"

namespace neuroaffect {
namespace {

void check_grid(PoolGrid grid, SensorGeometry geometry) {
  if (grid.rows < 1 || grid.cols < 1) throw_argument("pool grid must be >= 1x1");
  if (grid.rows > geometry.height || grid.cols > geometry.width) {
    throw_argument("pool grid " + std::to_string(grid.rows) + "x" +
                   std::to_string(grid.cols) + " larger than frame " +
                   std::to_string(geometry.height) + "x" +
                   std::to_string(geometry.width) + " (rows x cols)");
  }
}

}  // namespace

std::vector<double> pool_features(std::span<const std::uint16_t> pixels,
                                  SensorGeometry geometry, std::uint32_t bits,
                                  PoolGrid grid) {
  check_grid(grid, geometry);
  if (pixels.size() != geometry.pixel_count()) {
    throw_argument("pool_features: pixel count does not match geometry");
  }
  if (bits < 1 || bits > TbrConfig::kMaxBits) throw_argument("bits outside [1, 16]");
  const double scale = 1.0 / static_cast<double>((1u << bits) - 1);
  const std::size_t height = geometry.height;
  const std::size_t width = geometry.width;

  std::vector<double> features;
  features.reserve(std::size_t{grid.rows} * grid.cols + 1);
  for (std::size_t gy = 0; gy < grid.rows; ++gy) {
    const std::size_t y0 = gy * height / grid.rows;
    const std::size_t y1 = (gy + 1) * height / grid.rows;
    for (std::size_t gx = 0; gx < grid.cols; ++gx) {
      const std::size_t x0 = gx * width / grid.cols;
      const std::size_t x1 = (gx + 1) * width / grid.cols;
      std::uint64_t sum = 0;
      for (std::size_t y = y0; y < y1; ++y) {
        for (std::size_t x = x0; x < x1; ++x) sum += pixels[y * width + x];
      }
      const auto cells = static_cast<double>((y1 - y0) * (x1 - x0));
      features.push_back(static_cast<double>(sum) / cells * scale);
    }
  }
  features.push_back(1.0);
  return features;
}

Eigen::MatrixXd fit_ridge(const Eigen::MatrixXd& features,
                          const Eigen::MatrixXd& targets, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    throw_argument("ridge lambda must be positive and finite");
  }
  if (features.rows() < 1 || features.cols() < 1) {
    throw_argument("ridge fit needs at least one sample and one feature");
  }
  if (targets.rows() != features.rows()) {
    throw_argument("ridge fit: feature and target row counts differ");
  }
  if (!features.allFinite() || !targets.allFinite()) {
    throw_validation("ridge fit: non-finite input");
  }
  const Eigen::Index d = features.cols();
  Eigen::MatrixXd gram = features.transpose() * features;
  gram.diagonal().head(d - 1).array() += lambda;
  const Eigen::LLT<Eigen::MatrixXd> llt(gram);
  if (llt.info() != Eigen::Success) {
    throw_validation("ridge fit: normal matrix is not positive definite");
  }
  Eigen::MatrixXd weights = llt.solve(features.transpose() * targets);
  if (!weights.allFinite()) throw_validation("ridge fit: non-finite solution");
  return weights;
}

RidgeModel::RidgeModel(PoolGrid grid, std::uint32_t bits, double lambda,
                       Eigen::MatrixXd weights)
    : grid_(grid), bits_(bits), lambda_(lambda), weights_(std::move(weights)) {
  if (grid_.rows < 1 || grid_.cols < 1) throw_argument("pool grid must be >= 1x1");
  if (bits_ < 1 || bits_ > TbrConfig::kMaxBits) throw_argument("bits outside [1, 16]");
  if (!(lambda_ > 0.0) || !std::isfinite(lambda_)) {
    throw_argument("ridge lambda must be positive and finite");
  }
  if (weights_.rows() != static_cast<Eigen::Index>(feature_length()) ||
      weights_.cols() != 2) {
    throw_validation("ridge model: weight matrix must be " +
                     std::to_string(feature_length()) + "x2");
  }
  if (!weights_.allFinite()) throw_validation("ridge model: non-finite weights");
}

RidgeModel fit(std::span<const TrainingClip> clips, PoolGrid grid,
               double lambda) {
  std::size_t n = 0;
  std::uint32_t bits = 0;
  for (const auto& clip : clips) {
    if (clip.tensors == nullptr) throw_argument("training clip without tensors");
    if (bits == 0) bits = clip.tensors->bits();
    if (clip.tensors->bits() != bits) {
      throw_argument("training clips mix TBR bit depths");
    }
    check_grid(grid, clip.tensors->geometry());
    n += clip.labels.size();
  }
  if (n == 0) throw_argument("ridge fit needs at least one labeled frame");

  const std::size_t d = std::size_t{grid.rows} * grid.cols + 1;
  Eigen::MatrixXd x(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(d));
  Eigen::MatrixXd y(static_cast<Eigen::Index>(n), 2);
  Eigen::Index row = 0;
  for (const auto& clip : clips) {
    for (const auto& label : clip.labels) {
      if (label.frame_index >= clip.tensors->size()) {
        throw_argument("label references TBR frame " +
                       std::to_string(label.frame_index) + " of " +
                       std::to_string(clip.tensors->size()));
      }
      const auto f = pool_features(
          clip.tensors->frame(label.frame_index).pixels,
          clip.tensors->geometry(), bits, grid);
      for (std::size_t j = 0; j < d; ++j) {
        x(row, static_cast<Eigen::Index>(j)) = f[j];
      }
      y(row, 0) = label.value.valence;
      y(row, 1) = label.value.arousal;
      ++row;
    }
  }
  return RidgeModel(grid, bits, lambda, fit_ridge(x, y, lambda));
}

VaPair predict(const RidgeModel& model, const TbrTensorSet& tensors,
               std::size_t k) {
  if (tensors.bits() != model.bits()) {
    throw_argument("model expects " + std::to_string(model.bits()) +
                   "-bit TBR frames, got " + std::to_string(tensors.bits()));
  }
  if (k >= tensors.size()) throw_argument("TBR frame index out of range");
  const auto f = pool_features(tensors.frame(k).pixels, tensors.geometry(),
                               tensors.bits(), model.grid());
  const Eigen::Map<const Eigen::RowVectorXd> row(
      f.data(), static_cast<Eigen::Index>(f.size()));
  const Eigen::RowVector2d out = row * model.weights();
  return {std::clamp(out(0), -1.0, 1.0), std::clamp(out(1), -1.0, 1.0)};
}

std::vector<VaSample> predict_all(const RidgeModel& model,
                                  const TbrTensorSet& tensors) {
  std::vector<VaSample> out;
  out.reserve(tensors.size());
  for (std::size_t k = 0; k < tensors.size(); ++k) {
    out.push_back({k, tensors.frame(k).t_start, predict(model, tensors, k)});
  }
  return out;
}

std::string write_model(const RidgeModel& model) {
  std::string out = "grid_h,grid_w,bits,lambda\n";
  out += std::to_string(model.grid().rows) + ',' +
         std::to_string(model.grid().cols) + ',' +
         std::to_string(model.bits()) + ',' + format_double(model.lambda()) +
         "\nvalence,arousal\n";
  for (Eigen::Index i = 0; i < model.weights().rows(); ++i) {
    out += format_double(model.weights()(i, 0)) + ',' +
           format_double(model.weights()(i, 1)) + '\n';
  }
  return out;
}

RidgeModel read_model(std::string_view text) {
  const CsvTable table = parse_csv(text);
  if (!has_columns(table, {"grid_h", "grid_w", "bits", "lambda"}) ||
      table.rows.size() < 2 || table.rows[0].size() != 4 ||
      table.rows[1] != std::vector<std::string>{"valence", "arousal"}) {
    throw_format("model csv: expected 'grid_h,grid_w,bits,lambda' header, a "
                 "value row, then 'valence,arousal' weight rows");
  }
  const auto& head = table.rows[0];
  const auto rows = parse_uint(head[0], "model grid_h");
  const auto cols = parse_uint(head[1], "model grid_w");
  const auto bits = parse_uint(head[2], "model bits");
  const double lambda = parse_double(head[3], "model lambda");
  if (rows < 1 || cols < 1 || rows > 65535 || cols > 65535 || bits < 1 ||
      bits > TbrConfig::kMaxBits) {
    throw_format("model csv: grid or bits out of range");
  }
  const std::size_t d = rows * cols + 1;
  if (table.rows.size() - 2 != d) {
    throw_format("model csv: expected " + std::to_string(d) +
                 " weight rows, found " + std::to_string(table.rows.size() - 2));
  }
  Eigen::MatrixXd weights(static_cast<Eigen::Index>(d), 2);
  for (std::size_t i = 0; i < d; ++i) {
    const auto& r = table.rows[i + 2];
    if (r.size() != 2) throw_format("model csv: weight row needs 2 fields");
    weights(static_cast<Eigen::Index>(i), 0) = parse_double(r[0], "weight");
    weights(static_cast<Eigen::Index>(i), 1) = parse_double(r[1], "weight");
  }
  return RidgeModel({static_cast<std::uint32_t>(rows),
                     static_cast<std::uint32_t>(cols)},
                    static_cast<std::uint32_t>(bits), lambda,
                    std::move(weights));
}

}  // namespace neuroaffect
