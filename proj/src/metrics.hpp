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

#ifndef NEUROAFFECT_METRICS_HPP
#define NEUROAFFECT_METRICS_HPP

#include <optional>
#include <span>
#include <string>

#include "affect.hpp"

namespace neuroaffect {

// All metrics take (truth, pred) of equal, nonzero length; argument error
// otherwise.

struct SeriesStats {
  double mean = 0.0;
  double stddev = 0.0;  // population (divisor n)
};

SeriesStats series_stats(std::span<const double> values);

double rmse(std::span<const double> truth, std::span<const double> pred);

/// Pearson correlation with population moments. Needs n >= 2; throws
/// ErrorKind::kUndefinedCorrelation when either series is constant.
double pcc(std::span<const double> truth, std::span<const double> pred);

/// Fraction of entries whose three-valued signs (sign(0) = 0) agree.
double sagr(std::span<const double> truth, std::span<const double> pred);

struct DimensionReport {
  double rmse = 0.0;
  std::optional<double> pcc;  // empty when undefined
  double sagr = 0.0;
};

/// Arousal first, as in the usual results tables.
struct MetricsReport {
  DimensionReport arousal;
  DimensionReport valence;
};

MetricsReport evaluate(std::span<const VaPair> truth,
                       std::span<const VaPair> pred);

/// Header line plus one row:
/// arousal_rmse,arousal_pcc,arousal_sagr,valence_rmse,valence_pcc,valence_sagr
std::string format_report_csv(const MetricsReport& report);

/// Fixed-width text table, arousal block then valence block.
std::string format_report_table(const MetricsReport& report);

}  // namespace neuroaffect

#endif  // NEUROAFFECT_METRICS_HPP
