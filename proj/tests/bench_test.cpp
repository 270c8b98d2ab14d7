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

#include <fstream>
#include <sstream>

#include "hybc/bench.hpp"
#include "hybc/corpus.hpp"
#include "hybc/error.hpp"
#include "test_util.hpp"

namespace hybc {
namespace {

using testing::repeat;
using testing::TempDir;
using testing::to_bytes;
using testing::write_bytes;

std::vector<std::string> read_lines(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::vector<std::string> lines;
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

// Column `index` of every data line.
std::vector<std::string> column(const std::vector<std::string>& lines, std::size_t index) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::stringstream in(lines[i]);
    std::string cell;
    for (std::size_t c = 0; c <= index; ++c) std::getline(in, cell, ',');
    out.push_back(cell);
  }
  return out;
}

TEST_CASE("three inputs times all pipelines gives 75 rows") {
  TempDir dir("bench");
  const char* texts[] = {"राम वन को गए। ", "यह एक परीक्षण है। ", "दिल्ली भारत की राजधानी है। "};
  BenchConfig config;
  for (int i = 0; i < 3; ++i) {
    const auto path = dir / ("d" + std::to_string(i) + ".txt");
    write_bytes(path, repeat(texts[i], 200 + 50 * i));
    config.inputs.push_back(path);
  }
  config.repetitions = 1;
  config.output_dir = dir / "out";

  const BenchResult result = run_bench(config);
  CHECK(result.rows.size() == 75);
  CHECK(result.all_succeeded());
  CHECK(std::ranges::count_if(result.rows, [](const BenchRow& r) {
          return r.pipeline.is_hybrid();
        }) == 60);

  const auto lines = read_lines(dir / "out" / "measurements.csv");
  CHECK(lines.size() == 76);
  CHECK(lines[0].starts_with("dataset,size_class,pipeline,status,"));

  for (const char* name : {"ranking_d0.csv", "ranking_d1.md", "ranking_d2.svg",
                           "head_to_head_d0.json", "balance_d1.csv", "frequency.svg",
                           "summary.md", "measurements.json"}) {
    CAPTURE(name);
    CHECK(std::filesystem::exists(dir / "out" / name));
  }
  CHECK(read_lines(dir / "out" / "ranking_d0.csv").size() == 26);
  CHECK(read_lines(dir / "out" / "head_to_head_d0.csv").size() == 7);

  SUBCASE("sizes are deterministic across runs") {
    config.output_dir = dir / "again";
    run_bench(config);
    const auto again = read_lines(dir / "again" / "measurements.csv");
    CHECK(column(again, 5) == column(lines, 5));  // compressed_bytes
    CHECK(column(again, 9) == column(lines, 9));  // cr
  }
}

TEST_CASE("pipeline filter") {
  TempDir dir("bench1");
  write_bytes(dir / "one.txt", repeat("एक ", 100));
  BenchConfig config;
  config.inputs = {dir / "one.txt"};
  config.pipelines = {parse_pipeline("Zstd")};
  config.repetitions = 1;
  config.output_dir = dir / "out";
  const BenchResult result = run_bench(config);
  CHECK(result.rows.size() == 1);
  CHECK(read_lines(dir / "out" / "measurements.csv").size() == 2);
  // A single-row cohort cannot be normalized; it is reported, not ranked.
  CHECK_FALSE(std::filesystem::exists(dir / "out" / "ranking_one.csv"));
  std::ifstream summary(dir / "out" / "summary.md");
  std::string text((std::istreambuf_iterator<char>(summary)), std::istreambuf_iterator<char>());
  CHECK(text.find("not ranked") != std::string::npos);
}

TEST_CASE("failing inputs become error rows and the run continues") {
  TempDir dir("bench2");
  write_bytes(dir / "good.txt", repeat("अच्छा ", 100));
  write_bytes(dir / "bad.txt", to_bytes("\xFF\xFE"));
  BenchConfig config;
  config.inputs = {dir / "bad.txt", dir / "good.txt", dir / "missing.txt"};
  config.pipelines = {parse_pipeline("Zstd"), parse_pipeline("LZMA+Brotli")};
  config.repetitions = 1;
  config.output_dir = dir / "out";
  config.formats = {ReportFormat::kCsv};
  const BenchResult result = run_bench(config);
  CHECK(result.rows.size() == 6);
  CHECK_FALSE(result.all_succeeded());
  const auto lines = read_lines(dir / "out" / "measurements.csv");
  REQUIRE(lines.size() == 7);
  CHECK(lines[1].find(",error,") != std::string::npos);
  CHECK(lines[1].find("InvalidUtf8") != std::string::npos);
  CHECK(lines[3].find(",ok,") != std::string::npos);
  CHECK(lines[5].find("IoFailure") != std::string::npos);
  CHECK(std::filesystem::exists(dir / "out" / "ranking_good.csv"));
}

TEST_CASE("measurements survive a JSON round trip") {
  TempDir dir("bench3");
  write_bytes(dir / "a.txt", repeat("क ख ग ", 300));
  BenchConfig config;
  config.inputs = {dir / "a.txt", dir / "nope.txt"};
  config.pipelines = {parse_pipeline("Zstd"), parse_pipeline("Bzip2+LZ4HC")};
  config.repetitions = 2;
  config.output_dir = dir / "out";
  config.formats = {ReportFormat::kJson};
  const BenchResult result = run_bench(config);

  const nlohmann::json doc = measurements_to_json(result.rows, config);
  CHECK(doc["environment"]["codecs"]["Brotli"]["window_log"] == 22);
  CHECK(doc["environment"]["repetitions"] == 2);
  CHECK(doc["environment"]["ds_basis"] == "compressed");
  const auto rows = measurements_from_json(nlohmann::json::parse(doc.dump()));
  REQUIRE(rows.size() == result.rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].pipeline == result.rows[i].pipeline);
    CHECK(rows[i].error.empty() == result.rows[i].error.empty());
    if (rows[i].measurement) {
      CHECK(rows[i].measurement->compressed_bytes ==
            result.rows[i].measurement->compressed_bytes);
      CHECK(rows[i].measurement->compress_seconds ==
            result.rows[i].measurement->compress_seconds);
    }
  }
  CHECK_THROWS_AS(measurements_from_json(nlohmann::json::parse("{}")), Error);
}

TEST_CASE("config validation") {
  BenchConfig config;
  CHECK_THROWS_AS(config.validate(), Error);
  config.inputs = {"x"};
  config.repetitions = 0;
  CHECK_THROWS_AS(config.validate(), Error);
  config.repetitions = 1;
  config.formats.clear();
  CHECK_THROWS_AS(config.validate(), Error);
}

}  // namespace
}  // namespace hybc
