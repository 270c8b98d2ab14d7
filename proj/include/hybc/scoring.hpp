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

#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "hybc/corpus.hpp"
#include "hybc/metrics.hpp"
#include "hybc/pipeline.hpp"

namespace hybc {

/// Metric weights of the efficiency score. Each weight lies in [0, 1] and
/// the three sum to 1.
class Weights {
 public:
  /// 0.40 ratio, 0.30 compression speed, 0.30 decompression speed.
  Weights() noexcept = default;

  /// Throws Error(kDomainError) on out-of-range weights or a sum that
  /// differs from 1 by more than 1e-12.
  static Weights make(double cr, double cs, double ds);

  double cr() const noexcept { return cr_; }
  double cs() const noexcept { return cs_; }
  double ds() const noexcept { return ds_; }

 private:
  Weights(double cr, double cs, double ds) noexcept
      : cr_(cr), cs_(cs), ds_(ds) {}

  double cr_ = 0.40;
  double cs_ = 0.30;
  double ds_ = 0.30;
};

/// Raw metrics of one pipeline on one dataset, ready for scoring.
struct RawMetrics {
  PipelineSpec pipeline = PipelineSpec::single(CodecId::kZstd);
  std::string dataset;
  SizeClass size_class = SizeClass::kSmall;
  double cr = 0.0;
  double cs = 0.0;
  double ds = 0.0;
};

RawMetrics raw_metrics(const Measurement& m,
                       DsBasis basis = DsBasis::kCompressed);

struct EfficiencyRow {
  PipelineSpec pipeline = PipelineSpec::single(CodecId::kZstd);
  std::string dataset;
  SizeClass size_class = SizeClass::kSmall;
  double cr = 0.0;
  double cs = 0.0;
  double ds = 0.0;
  double cr_norm = 0.0;
  double cs_norm = 0.0;
  double ds_norm = 0.0;
  double efficiency = 0.0;
};

/// (x - min) / (max - min) per element; all 0.5 when max == min.
/// Throws Error(kNonFiniteInput) for NaN/inf and Error(kPrecondition) for
/// an empty list.
std::vector<double> minmax_normalize(std::span<const double> values);

/// Weighted sum of the normalized metrics. Throws Error(kDomainError) if a
/// normalized value lies outside [0, 1].
double efficiency_score(double cr_norm, double cs_norm, double ds_norm,
                        const Weights& weights = {});

/// Normalizes each metric across the cohort, scores, and sorts by
/// descending efficiency with ties broken by ascending display name.
/// The cohort must hold at least two rows of a single dataset
/// (Error(kPrecondition) / Error(kMixedCohort) otherwise).
std::vector<EfficiencyRow> rank_pipelines(std::span<const RawMetrics> cohort,
                                          const Weights& weights = {});
std::vector<EfficiencyRow> rank_pipelines(std::span<const Measurement> cohort,
                                          const Weights& weights = {},
                                          DsBasis basis = DsBasis::kCompressed);

/// Whether single-codec rows contribute to component counts.
enum class FrequencyRule { kIncludeSingles, kHybridsOnly };

/// Codec appearances among the first `k` rows of each dataset group
/// (groups keep first-seen order). A hybrid counts each member once.
/// Every codec is present in the result, possibly with count 0.
std::map<CodecId, std::size_t> component_frequency(
    std::span<const EfficiencyRow> rows, std::size_t k,
    FrequencyRule rule = FrequencyRule::kIncludeSingles);

struct BalancePoint {
  PipelineSpec pipeline = PipelineSpec::single(CodecId::kZstd);
  std::string dataset;
  double cr = 0.0;
  double cs = 0.0;
};

/// (CR, CS) per row, sorted by descending CR (stable).
std::vector<BalancePoint> balance_table(std::span<const EfficiencyRow> rows);

/// The chosen pipeline's row followed by the five singles, in ranked
/// order, taken from an already ranked cohort.
std::vector<EfficiencyRow> head_to_head(std::span<const EfficiencyRow> ranked,
                                        const PipelineSpec& chosen);

}  // namespace hybc
