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

#include "metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <vector>

#include "csv.hpp"
#include "error.hpp"

namespace neuroaffect {
namespace {

void check_pair(std::span<const double> truth, std::span<const double> pred,
                const char* metric) {
  if (truth.size() != pred.size()) {
    throw_argument(std::string(metric) + ": length mismatch (" +
                   std::to_string(truth.size()) + " vs " +
                   std::to_string(pred.size()) + ")");
  }
  if (truth.empty()) throw_argument(std::string(metric) + ": empty series");
}

int sign(double v) { return (v > 0.0) - (v < 0.0); }

DimensionReport dimension(std::span<const double> truth,
                          std::span<const double> pred) {
  DimensionReport r;
  r.rmse = rmse(truth, pred);
  r.sagr = sagr(truth, pred);
  try {
    r.pcc = pcc(truth, pred);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kUndefinedCorrelation) throw;
  }
  return r;
}

std::string pcc_text(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string("undefined");
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

}  // namespace

SeriesStats series_stats(std::span<const double> values) {
  if (values.empty()) throw_argument("statistics of empty series");
  double sum = 0.0;
  for (double v : values) sum += v;
  const double mean = sum / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return {mean, std::sqrt(ss / static_cast<double>(values.size()))};
}

double rmse(std::span<const double> truth, std::span<const double> pred) {
  check_pair(truth, pred, "rmse");
  double ss = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double d = truth[i] - pred[i];
    ss += d * d;
  }
  return std::sqrt(ss / static_cast<double>(truth.size()));
}

double pcc(std::span<const double> truth, std::span<const double> pred) {
  check_pair(truth, pred, "pcc");
  if (truth.size() < 2) throw_argument("pcc: needs at least 2 values");
  // Rounding in the mean can leave a tiny nonzero spread on a constant
  // series, so constancy is tested on the values themselves.
  auto constant = [](std::span<const double> v) {
    return std::all_of(v.begin(), v.end(),
                       [&](double x) { return x == v.front(); });
  };
  const SeriesStats st = series_stats(truth);
  const SeriesStats sp = series_stats(pred);
  if (constant(truth) || constant(pred)) {
    throw Error(ErrorKind::kUndefinedCorrelation,
                "pcc: undefined for a constant series");
  }
  double cov = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    cov += (truth[i] - st.mean) * (pred[i] - sp.mean);
  }
  cov /= static_cast<double>(truth.size());
  return std::clamp(cov / (st.stddev * sp.stddev), -1.0, 1.0);
}

double sagr(std::span<const double> truth, std::span<const double> pred) {
  check_pair(truth, pred, "sagr");
  std::size_t agree = 0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    agree += sign(truth[i]) == sign(pred[i]);
  }
  return static_cast<double>(agree) / static_cast<double>(truth.size());
}

MetricsReport evaluate(std::span<const VaPair> truth,
                       std::span<const VaPair> pred) {
  if (truth.size() != pred.size()) {
    throw_argument("evaluate: length mismatch (" +
                   std::to_string(truth.size()) + " vs " +
                   std::to_string(pred.size()) + ")");
  }
  std::vector<double> tv, ta, pv, pa;
  for (const auto& p : truth) {
    tv.push_back(p.valence);
    ta.push_back(p.arousal);
  }
  for (const auto& p : pred) {
    pv.push_back(p.valence);
    pa.push_back(p.arousal);
  }
  return {dimension(ta, pa), dimension(tv, pv)};
}

std::string format_report_csv(const MetricsReport& r) {
  return "arousal_rmse,arousal_pcc,arousal_sagr,valence_rmse,valence_pcc,"
         "valence_sagr\n" +
         format_double(r.arousal.rmse) + ',' + pcc_text(r.arousal.pcc) + ',' +
         format_double(r.arousal.sagr) + ',' + format_double(r.valence.rmse) +
         ',' + pcc_text(r.valence.pcc) + ',' + format_double(r.valence.sagr) +
         '\n';
}

std::string format_report_table(const MetricsReport& r) {
  char line[160];
  std::string out;
  std::snprintf(line, sizeof(line), "%-10s %-29s %-29s\n", "", "Arousal",
                "Valence");
  out += line;
  std::snprintf(line, sizeof(line), "%-10s %-9s %-9s %-9s %-9s %-9s %-9s\n",
                "", "RMSE", "PCC", "SAGR", "RMSE", "PCC", "SAGR");
  out += line;
  const auto p = [](const std::optional<double>& v) {
    return v ? fixed(*v) : std::string("n/a");
  };
  std::snprintf(line, sizeof(line), "%-10s %-9s %-9s %-9s %-9s %-9s %-9s\n",
                "model", fixed(r.arousal.rmse).c_str(), p(r.arousal.pcc).c_str(),
                fixed(r.arousal.sagr).c_str(), fixed(r.valence.rmse).c_str(),
                p(r.valence.pcc).c_str(), fixed(r.valence.sagr).c_str());
  out += line;
  return out;
}

}  // namespace neuroaffect
