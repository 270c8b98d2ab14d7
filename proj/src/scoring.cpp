// Copyright 2026 The hybc Authors.
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

#include "hybc/scoring.hpp"

#include <algorithm>
#include <cmath>

#include "hybc/error.hpp"

namespace hybc {
namespace {

constexpr double kWeightSumTolerance = 1e-12;

bool in_unit_interval(double v) { return v >= 0.0 && v <= 1.0; }

}  // namespace

Weights Weights::make(double cr, double cs, double ds) {
  for (double w : {cr, cs, ds}) {
    if (!std::isfinite(w) || !in_unit_interval(w)) {
      throw Error(ErrorCode::kDomainError, "weights must lie in [0, 1]");
    }
  }
  if (std::abs(cr + cs + ds - 1.0) > kWeightSumTolerance) {
    throw Error(ErrorCode::kDomainError, "weights must sum to 1");
  }
  return Weights(cr, cs, ds);
}

RawMetrics raw_metrics(const Measurement& m, DsBasis basis) {
  return {.pipeline = m.pipeline,
          .dataset = m.dataset,
          .size_class = classify_size(m.original_bytes),
          .cr = compression_ratio(m),
          .cs = compression_speed(m),
          .ds = decompression_speed(m, basis)};
}

std::vector<double> minmax_normalize(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorCode::kPrecondition, "nothing to normalize");
  for (double v : values) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kNonFiniteInput, "non-finite metric");
  }
  const auto [lo, hi] = std::ranges::minmax(values);
  std::vector<double> out(values.size(), 0.5);
  if (hi == lo) return out;
  const double span = hi - lo;
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = (values[i] - lo) / span;
  return out;
}

double efficiency_score(double cr_norm, double cs_norm, double ds_norm,
                        const Weights& weights) {
  if (!in_unit_interval(cr_norm) || !in_unit_interval(cs_norm) ||
      !in_unit_interval(ds_norm)) {
    throw Error(ErrorCode::kDomainError, "normalized metrics must lie in [0, 1]");
  }
  return weights.cr() * cr_norm + weights.cs() * cs_norm + weights.ds() * ds_norm;
}

std::vector<EfficiencyRow> rank_pipelines(std::span<const RawMetrics> cohort,
                                          const Weights& weights) {
  if (cohort.size() < 2) {
    throw Error(ErrorCode::kPrecondition, "a cohort needs at least two rows");
  }
  for (const RawMetrics& row : cohort) {
    if (row.dataset != cohort.front().dataset) {
      throw Error(ErrorCode::kMixedCohort, "cohort mixes datasets '" +
                                               cohort.front().dataset + "' and '" +
                                               row.dataset + "'");
    }
  }

  std::vector<double> cr, cs, ds;
  for (const RawMetrics& row : cohort) {
    cr.push_back(row.cr);
    cs.push_back(row.cs);
    ds.push_back(row.ds);
  }
  const auto cr_norm = minmax_normalize(cr);
  const auto cs_norm = minmax_normalize(cs);
  const auto ds_norm = minmax_normalize(ds);

  std::vector<EfficiencyRow> rows;
  rows.reserve(cohort.size());
  for (std::size_t i = 0; i < cohort.size(); ++i) {
    const RawMetrics& raw = cohort[i];
    rows.push_back({.pipeline = raw.pipeline,
                    .dataset = raw.dataset,
                    .size_class = raw.size_class,
                    .cr = raw.cr,
                    .cs = raw.cs,
                    .ds = raw.ds,
                    .cr_norm = cr_norm[i],
                    .cs_norm = cs_norm[i],
                    .ds_norm = ds_norm[i],
                    .efficiency = efficiency_score(cr_norm[i], cs_norm[i],
                                                   ds_norm[i], weights)});
  }
  std::ranges::stable_sort(rows, [](const EfficiencyRow& a, const EfficiencyRow& b) {
    if (a.efficiency != b.efficiency) return a.efficiency > b.efficiency;
    return a.pipeline.display_name() < b.pipeline.display_name();
  });
  return rows;
}

std::vector<EfficiencyRow> rank_pipelines(std::span<const Measurement> cohort,
                                          const Weights& weights, DsBasis basis) {
  std::vector<RawMetrics> raw;
  raw.reserve(cohort.size());
  for (const Measurement& m : cohort) raw.push_back(raw_metrics(m, basis));
  return rank_pipelines(raw, weights);
}

std::map<CodecId, std::size_t> component_frequency(
    std::span<const EfficiencyRow> rows, std::size_t k, FrequencyRule rule) {
  std::map<CodecId, std::size_t> counts;
  for (CodecId codec : kAllCodecs) counts[codec] = 0;

  std::vector<std::pair<std::string, std::size_t>> taken;  // dataset -> rows seen
  for (const EfficiencyRow& row : rows) {
    auto it = std::ranges::find(taken, row.dataset,
                                &std::pair<std::string, std::size_t>::first);
    if (it == taken.end()) {
      taken.emplace_back(row.dataset, 0);
      it = std::prev(taken.end());
    }
    if (it->second >= k) continue;
    ++it->second;
    if (!row.pipeline.is_hybrid() && rule == FrequencyRule::kHybridsOnly) continue;
    for (CodecId codec : row.pipeline.stages()) ++counts[codec];
  }
  return counts;
}

std::vector<BalancePoint> balance_table(std::span<const EfficiencyRow> rows) {
  std::vector<BalancePoint> points;
  points.reserve(rows.size());
  for (const EfficiencyRow& row : rows) {
    points.push_back({row.pipeline, row.dataset, row.cr, row.cs});
  }
  std::ranges::stable_sort(points, std::greater<>{}, &BalancePoint::cr);
  return points;
}

std::vector<EfficiencyRow> head_to_head(std::span<const EfficiencyRow> ranked,
                                        const PipelineSpec& chosen) {
  std::vector<EfficiencyRow> out;
  for (const EfficiencyRow& row : ranked) {
    if (row.pipeline == chosen) out.push_back(row);
  }
  for (const EfficiencyRow& row : ranked) {
    if (!row.pipeline.is_hybrid() && row.pipeline != chosen) out.push_back(row);
  }
  return out;
}

}  // namespace hybc
