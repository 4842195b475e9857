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

#ifndef NEUROAFFECT_BASELINE_HPP
#define NEUROAFFECT_BASELINE_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>

#include "affect.hpp"
#include "labeling.hpp"
#include "tbr.hpp"

namespace neuroaffect {

// Linear ridge regressor from pooled TBR codes to (valence, arousal). A small
// stand-in model that lets the whole pipeline run and be scored.

struct PoolGrid {
  std::uint32_t rows = 16;
  std::uint32_t cols = 16;

  friend bool operator==(const PoolGrid&, const PoolGrid&) = default;
};

/// Cell means of the frame over a rows x cols grid of near-equal cells
/// (cell i spans [i*H/rows, (i+1)*H/rows)), scaled by 1/(2^bits - 1), plus a
/// trailing constant 1. Length rows*cols + 1.
std::vector<double> pool_features(std::span<const std::uint16_t> pixels,
                                  SensorGeometry geometry, std::uint32_t bits,
                                  PoolGrid grid);

/// Solves (X^T X + lambda * D) W = X^T Y, D = identity with a zero in the
/// last (bias) diagonal entry, via Cholesky. X is n x d, Y is n x 2.
Eigen::MatrixXd fit_ridge(const Eigen::MatrixXd& features,
                          const Eigen::MatrixXd& targets, double lambda);

class RidgeModel {
 public:
  RidgeModel(PoolGrid grid, std::uint32_t bits, double lambda,
             Eigen::MatrixXd weights);

  const PoolGrid& grid() const noexcept { return grid_; }
  std::uint32_t bits() const noexcept { return bits_; }
  double lambda() const noexcept { return lambda_; }
  /// (rows*cols + 1) x 2; column 0 valence, column 1 arousal; bias row last.
  const Eigen::MatrixXd& weights() const noexcept { return weights_; }
  std::size_t feature_length() const noexcept {
    return std::size_t{grid_.rows} * grid_.cols + 1;
  }

 private:
  PoolGrid grid_;
  std::uint32_t bits_;
  double lambda_;
  Eigen::MatrixXd weights_;
};

struct TrainingClip {
  const TbrTensorSet* tensors = nullptr;
  std::span<const LabeledTbrFrame> labels;
};

RidgeModel fit(std::span<const TrainingClip> clips, PoolGrid grid,
               double lambda);

/// Affine map of the pooled features, each component clamped to [-1, 1].
VaPair predict(const RidgeModel& model, const TbrTensorSet& tensors,
               std::size_t k);

/// One sample per TBR frame; timestamp is the frame start.
std::vector<VaSample> predict_all(const RidgeModel& model,
                                  const TbrTensorSet& tensors);

std::string write_model(const RidgeModel& model);
RidgeModel read_model(std::string_view text);

}  // namespace neuroaffect

#endif  // NEUROAFFECT_BASELINE_HPP
