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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "hybc/report.hpp"
#include "xml_check.hpp"

namespace hybc {
namespace {

using testing::check_xml;

std::vector<EfficiencyRow> sample_rows() {
  std::vector<RawMetrics> cohort = {
      {.pipeline = parse_pipeline("Zstd + LZ4HC"), .dataset = "large",
       .size_class = SizeClass::kLarge, .cr = 94.82, .cs = 1055.69, .ds = 663.78},
      {.pipeline = parse_pipeline("Zstd"), .dataset = "large",
       .size_class = SizeClass::kLarge, .cr = 94.49, .cs = 546.22, .ds = 593.79},
      {.pipeline = parse_pipeline("LZMA"), .dataset = "large",
       .size_class = SizeClass::kLarge, .cr = 141.91, .cs = 5.96, .ds = 16.56}};
  return rank_pipelines(cohort);
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

TEST_CASE("CSV shape and schema") {
  const auto rows = sample_rows();
  const std::vector<EfficiencyRow> two(rows.begin(), rows.begin() + 2);
  const auto lines = lines_of(emit_report(two, ReportFormat::kCsv));
  REQUIRE(lines.size() == 3);
  CHECK(lines[0] ==
        "rank,pipeline,dataset,size_class,cr,cs_mb_s,ds_mb_s,cr_norm,cs_norm,ds_norm,efficiency");
  CHECK(lines[1].starts_with("1,Zstd + LZ4HC,large,large,94.82,1055.69,663.78,"));
  CHECK(lines[2].starts_with("2,Zstd,large,large,94.49,"));
}

TEST_CASE("CSV output is byte-stable") {
  const auto rows = sample_rows();
  CHECK(emit_report(rows, ReportFormat::kCsv) == emit_report(sample_rows(), ReportFormat::kCsv));
}

TEST_CASE("full-precision numbers round-trip") {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int i = 0; i < 1000; ++i) {
    const double v = u(rng);
    CHECK(std::stod(format_full(v)) == v);
  }
  CHECK(format_fixed4(0.8597) == "0.8597");
  CHECK(format_fixed4(0.85965) == "0.8597");
  CHECK(format_fixed4(1.0) == "1.0000");
}

TEST_CASE("Markdown renders four decimals") {
  auto rows = sample_rows();
  rows[0].efficiency = 0.8597;
  const std::string md = emit_report(rows, ReportFormat::kMarkdown);
  CHECK(md.find("| 0.8597 |") != std::string::npos);
  CHECK(md.find("Zstd (Independent)") != std::string::npos);
  CHECK(lines_of(md).size() == 2 + rows.size());
}

TEST_CASE("SVG is well-formed with one bar group per row") {
  const auto rows = sample_rows();
  const auto stats = check_xml(emit_report(rows, ReportFormat::kSvg));
  CHECK(stats.well_formed);
  CHECK(stats.root == "svg");
  CHECK(stats.bars == rows.size());

  const auto empty = check_xml(emit_report({}, ReportFormat::kSvg));
  CHECK(empty.well_formed);
  CHECK(empty.bars == 0);
}

TEST_CASE("JSON carries every row at full precision") {
  const auto rows = sample_rows();
  const std::string json = emit_report(rows, ReportFormat::kJson);
  CHECK(json.find("\"efficiency\"") != std::string::npos);
  CHECK(json.find(format_full(rows[0].efficiency)) != std::string::npos);
}

TEST_CASE("names that need escaping") {
  auto rows = sample_rows();
  for (auto& r : rows) r.dataset = "a,b <c> & \"d\"";
  const std::string csv = emit_report(rows, ReportFormat::kCsv);
  CHECK(csv.find("\"a,b <c> & \"\"d\"\"\"") != std::string::npos);
  CHECK(check_xml(emit_report(rows, ReportFormat::kSvg)).well_formed);
}

TEST_CASE("balance and frequency reports") {
  const auto points = balance_table(sample_rows());
  for (ReportFormat f : {ReportFormat::kCsv, ReportFormat::kJson, ReportFormat::kMarkdown}) {
    CHECK_FALSE(emit_balance(points, f).empty());
  }
  const auto csv = lines_of(emit_balance(points, ReportFormat::kCsv));
  REQUIRE(csv.size() == 4);
  CHECK(csv[1].starts_with("LZMA,large,141.91,5.96"));
  const auto svg = check_xml(emit_balance(points, ReportFormat::kSvg));
  CHECK(svg.well_formed);
  CHECK(svg.points == 3);
  CHECK(check_xml(emit_balance({}, ReportFormat::kSvg)).well_formed);

  std::map<CodecId, std::size_t> counts = {{CodecId::kZstd, 15}, {CodecId::kBrotli, 11},
                                           {CodecId::kBzip2, 10}, {CodecId::kLz4hc, 8},
                                           {CodecId::kLzma, 3}};
  const auto freq = lines_of(emit_frequency(counts, 30, ReportFormat::kCsv));
  REQUIRE(freq.size() == 6);
  CHECK(freq[1] == "Zstd,15,0.5");
  CHECK(emit_frequency(counts, 30, ReportFormat::kMarkdown).find("36.7%") != std::string::npos);
  const auto fsvg = check_xml(emit_frequency(counts, 30, ReportFormat::kSvg));
  CHECK(fsvg.well_formed);
  CHECK(fsvg.bars == 5);
}

TEST_CASE("side-by-side top-k table") {
  const std::vector<std::vector<EfficiencyRow>> cohorts = {sample_rows(), sample_rows()};
  const auto lines = lines_of(emit_top_k_markdown(cohorts, 2));
  REQUIRE(lines.size() == 4);
  CHECK(lines[2].starts_with("| 1 | Zstd + LZ4HC |"));
}

}  // namespace
}  // namespace hybc
