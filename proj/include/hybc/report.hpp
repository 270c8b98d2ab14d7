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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hybc/scoring.hpp"

namespace hybc {

enum class ReportFormat { kCsv, kJson, kMarkdown, kSvg };

std::string_view report_format_extension(ReportFormat format) noexcept;
std::optional<ReportFormat> report_format_from_name(std::string_view name) noexcept;

inline constexpr std::string_view kRankingCsvHeader =
    "rank,pipeline,dataset,size_class,cr,cs_mb_s,ds_mb_s,cr_norm,cs_norm,"
    "ds_norm,efficiency";

/// Shortest decimal that round-trips the double; stable across runs.
std::string format_full(double value);
/// Fixed four decimals, as in human-readable tables.
std::string format_fixed4(double value);

/// Ranking report of already sorted rows. CSV and JSON carry full
/// precision; Markdown rounds to four decimals; SVG is a horizontal bar
/// chart with the three weighted normalized components stacked per row.
std::string emit_report(std::span<const EfficiencyRow> rows,
                        ReportFormat format, const Weights& weights = {});

std::string emit_balance(std::span<const BalancePoint> points,
                         ReportFormat format);

std::string emit_frequency(const std::map<CodecId, std::size_t>& counts,
                           std::size_t rows_considered, ReportFormat format);

/// Top-k rows of several ranked cohorts side by side, one column pair per
/// dataset.
std::string emit_top_k_markdown(
    std::span<const std::vector<EfficiencyRow>> cohorts, std::size_t k);

}  // namespace hybc
