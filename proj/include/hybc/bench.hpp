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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "hybc/metrics.hpp"
#include "hybc/pipeline.hpp"
#include "hybc/report.hpp"
#include "hybc/scoring.hpp"

namespace hybc {

struct BenchConfig {
  std::vector<std::filesystem::path> inputs;
  // Empty means all 25.
  std::vector<PipelineSpec> pipelines;
  int repetitions = 5;
  Weights weights;
  DsBasis ds_basis = DsBasis::kCompressed;
  std::filesystem::path output_dir = "hybc-report";
  std::set<ReportFormat> formats = {ReportFormat::kCsv, ReportFormat::kJson,
                                    ReportFormat::kMarkdown,
                                    ReportFormat::kSvg};
  // Pipeline compared against the five singles in the head-to-head table.
  PipelineSpec head_to_head = PipelineSpec::hybrid(CodecId::kZstd,
                                                   CodecId::kLz4hc);
  std::size_t top_k = 10;
  // Progress lines go here when set.
  std::ostream* progress = nullptr;

  /// Throws Error(kPrecondition) when the invariants do not hold.
  void validate() const;
};

/// One benchmark cell; `error` is set when the pipeline failed.
struct BenchRow {
  std::string dataset;
  SizeClass size_class = SizeClass::kSmall;
  PipelineSpec pipeline = PipelineSpec::single(CodecId::kZstd);
  std::optional<Measurement> measurement;
  std::string error;
};

struct BenchResult {
  std::vector<BenchRow> rows;
  std::vector<std::string> written_files;
  bool all_succeeded() const;
};

/// Environment provenance embedded in machine-readable reports.
nlohmann::json environment_metadata(const BenchConfig& config);

/// Measurement table with one line per input x pipeline, error rows
/// included.
std::string emit_measurements_csv(std::span<const BenchRow> rows,
                                  DsBasis basis);
nlohmann::json measurements_to_json(std::span<const BenchRow> rows,
                                    const BenchConfig& config);
/// Reads the "measurements" array written by measurements_to_json.
std::vector<BenchRow> measurements_from_json(const nlohmann::json& doc);

/// Scores `rows` and writes every report in `config.formats` under
/// `config.output_dir`. Cohorts with fewer than two successful rows are
/// listed but not ranked. Returns the written paths.
std::vector<std::string> write_reports(std::span<const BenchRow> rows,
                                       const BenchConfig& config);

/// Measures every input x pipeline (failures become error rows and the
/// run continues), then writes the reports.
BenchResult run_bench(const BenchConfig& config);

}  // namespace hybc
