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

// Acceptance suite: one PASS/FAIL/SKIP line per criterion. Exits non-zero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hybc/bench.hpp"
#include "hybc/codec.hpp"
#include "hybc/corpus.hpp"
#include "hybc/error.hpp"
#include "hybc/metrics.hpp"
#include "hybc/pipeline.hpp"
#include "hybc/report.hpp"
#include "hybc/scoring.hpp"

namespace hybc {
namespace {

struct Outcome {
  enum Status { kPass, kFail, kSkip } status = kPass;
  std::string detail;
};

Outcome pass(std::string detail) { return {Outcome::kPass, std::move(detail)}; }
Outcome fail(std::string detail) { return {Outcome::kFail, std::move(detail)}; }
Outcome skip(std::string detail) { return {Outcome::kSkip, std::move(detail)}; }

std::string fixed(double v, int digits = 4) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(digits);
  out << v;
  return out.str();
}

Bytes random_bytes(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Bytes out(n);
  for (auto& b : out) b = static_cast<std::uint8_t>(rng() >> 56);
  return out;
}

RawMetrics raw(std::string_view pipeline, double cr, double cs, double ds) {
  RawMetrics r;
  r.pipeline = parse_pipeline(pipeline);
  r.dataset = "large";
  r.size_class = SizeClass::kLarge;
  r.cr = cr;
  r.cs = cs;
  r.ds = ds;
  return r;
}

Outcome round_trips() {
  const std::vector<std::pair<std::string, Bytes>> inputs = {
      {"empty", {}},
      {"1 byte", {0x41}},
      {"small synthetic", generate_synthetic(SizeClass::kSmall, 1)},
      {"64 KiB random", random_bytes(64 * 1024, 2)},
  };
  int cases = 0;
  for (const auto& spec : enumerate_pipelines()) {
    for (const auto& [label, data] : inputs) {
      ++cases;
      Bytes back;
      try {
        back = decompress_pipeline(compress_pipeline(spec, data));
      } catch (const std::exception& e) {
        return fail(spec.display_name() + " on " + label + ": " + e.what());
      }
      if (back != data) return fail(spec.display_name() + " on " + label + ": mismatch");
    }
  }
  return pass(std::to_string(cases) + " cases byte-identical");
}

Outcome enumeration_counts() {
  const auto specs = enumerate_pipelines();
  const auto hybrids = std::ranges::count_if(specs, [](const auto& s) { return s.is_hybrid(); });
  if (specs.size() != 25 || hybrids != 20) {
    return fail(std::to_string(specs.size()) + " specs, " + std::to_string(hybrids) + " hybrids");
  }

  const auto dir = std::filesystem::temp_directory_path() /
                   ("hybc-accept-" + std::to_string(std::random_device{}()));
  std::filesystem::create_directories(dir);
  BenchConfig config;
  const char* words[] = {"नमस्ते ", "भारत ", "हिन्दी "};
  for (int i = 0; i < 3; ++i) {
    const auto path = dir / ("corpus" + std::to_string(i) + ".txt");
    std::ofstream out(path, std::ios::binary);
    for (int j = 0; j < 300; ++j) out << words[i] << j << "। ";
    config.inputs.push_back(path);
  }
  config.repetitions = 1;
  config.output_dir = dir / "out";
  config.formats = {ReportFormat::kCsv};
  const BenchResult result = run_bench(config);
  const auto ok = std::ranges::count_if(result.rows, [](const BenchRow& r) {
    return r.measurement.has_value();
  });
  const auto hybrid_rows = std::ranges::count_if(result.rows, [](const BenchRow& r) {
    return r.pipeline.is_hybrid();
  });
  std::filesystem::remove_all(dir);
  const std::string detail = "25 specs, 20 hybrids; bench rows " + std::to_string(ok) + "/" +
                             std::to_string(result.rows.size()) + ", hybrid rows " +
                             std::to_string(hybrid_rows);
  if (result.rows.size() != 75 || ok != 75 || hybrid_rows != 60) return fail(detail);
  return pass(detail);
}

Outcome scoring_oracle() {
  const std::vector<RawMetrics> cohort = {
      raw("Zstd + LZ4HC", 94.82, 1055.69, 663.78), raw("Zstd", 94.49, 546.22, 593.79),
      raw("Brotli", 117.11, 312.66, 426.47),      raw("Bzip2", 9.77, 18.75, 4.88),
      raw("LZ4HC", 3.79, 32.51, 554.34),          raw("LZMA", 141.91, 5.96, 16.56)};
  const auto ranked = rank_pipelines(cohort);
  const std::string detail = "#1 " + ranked[0].pipeline.display_name() + " " +
                             fixed(ranked[0].efficiency) + ", #2 " +
                             ranked[1].pipeline.display_name() + " " +
                             fixed(ranked[1].efficiency);
  const bool ok = ranked[0].pipeline.display_name() == "Zstd + LZ4HC" &&
                  std::abs(ranked[0].efficiency - 0.864) <= 0.005 &&
                  ranked[1].pipeline.display_name() == "Zstd" &&
                  std::abs(ranked[1].efficiency - 0.685) <= 0.005;
  return ok ? pass(detail) : fail(detail);
}

// Top-10 names per dataset size from the published efficiency ranking.
const std::vector<std::pair<std::string, std::vector<std::string>>> kPublishedTop10 = {
    {"small",
     {"Zstd + LZ4HC", "LZ4HC + Zstd", "Bzip2 + LZ4HC", "Bzip2 + Zstd", "Bzip2 + Brotli",
      "Brotli + Zstd", "Zstd", "Zstd + Brotli", "LZMA", "Bzip2 + LZMA"}},
    {"medium",
     {"Zstd", "Zstd + Brotli", "Zstd + LZ4HC", "Bzip2 + Zstd", "Bzip2 + Brotli",
      "Bzip2 + LZ4HC", "LZ4HC + Zstd", "Bzip2", "Bzip2 + LZMA", "Brotli + Zstd"}},
    {"large",
     {"Zstd + LZ4HC", "Zstd + Brotli", "Zstd", "Zstd + Bzip2", "Brotli + Zstd", "Zstd + LZMA",
      "Brotli + LZ4HC", "Brotli", "Brotli + LZMA", "Brotli + Bzip2"}},
};

std::string counts_text(const std::map<CodecId, std::size_t>& counts) {
  std::string out;
  for (CodecId id : {CodecId::kZstd, CodecId::kBrotli, CodecId::kBzip2, CodecId::kLz4hc,
                     CodecId::kLzma}) {
    if (!out.empty()) out += ' ';
    out += std::string(codec_name(id)) + "=" + std::to_string(counts.at(id));
  }
  return out;
}

Outcome frequency_oracle() {
  std::vector<EfficiencyRow> rows;
  for (const auto& [dataset, names] : kPublishedTop10) {
    for (const auto& name : names) {
      EfficiencyRow r;
      r.pipeline = parse_pipeline(name);
      r.dataset = dataset;
      rows.push_back(r);
    }
  }
  const auto counts = component_frequency(rows, 10);
  const std::map<CodecId, std::size_t> expected = {
      {CodecId::kZstd, 15}, {CodecId::kBrotli, 11}, {CodecId::kBzip2, 10},
      {CodecId::kLz4hc, 8}, {CodecId::kLzma, 3}};
  const auto hybrids_only = component_frequency(rows, 10, FrequencyRule::kHybridsOnly);
  const std::string detail = "got " + counts_text(counts) + "; expected " +
                             counts_text(expected) + "; hybrids-only count " +
                             counts_text(hybrids_only);
  return counts == expected ? pass(detail) : fail(detail);
}

Outcome normalization_properties() {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> value(-1e3, 1e3);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    std::vector<double> x(n);
    for (auto& v : x) v = value(rng);
    const auto y = minmax_normalize(x);
    const auto lo = std::ranges::min_element(x) - x.begin();
    const auto hi = std::ranges::max_element(x) - x.begin();
    if (y[lo] != 0.0 || y[hi] != 1.0) return fail("min/max not mapped to 0/1");
    if (std::ranges::any_of(y, [](double v) { return v < 0.0 || v > 1.0; })) {
      return fail("output outside [0, 1]");
    }
    if (std::ranges::max_element(y) - y.begin() != hi) return fail("argmax moved");
    const double a = scale(rng);
    const double b = value(rng);
    std::vector<double> ax(n);
    std::ranges::transform(x, ax.begin(), [&](double v) { return a * v + b; });
    const auto ay = minmax_normalize(ax);
    for (std::size_t i = 0; i < n; ++i) {
      if (std::abs(ay[i] - y[i]) > 1e-12) {
        return fail("affine drift " + std::to_string(std::abs(ay[i] - y[i])));
      }
    }
    const std::vector<double> flat(n, x[0]);
    if (std::ranges::any_of(minmax_normalize(flat), [](double v) { return v != 0.5; })) {
      return fail("degenerate vector not mapped to 0.5");
    }
  }
  return pass("1000 random vectors");
}

Outcome efficiency_formula() {
  if (efficiency_score(1, 1, 1) != 1.0) return fail("E(1,1,1) != 1");
  if (efficiency_score(1, 0, 0) != 0.4) return fail("E(1,0,0) != 0.4");
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 1000; ++trial) {
    double v[3] = {u(rng), u(rng), u(rng)};
    const double before = efficiency_score(v[0], v[1], v[2]);
    const auto k = rng() % 3;
    v[k] += (1.0 - v[k]) * u(rng);
    if (efficiency_score(v[0], v[1], v[2]) < before) return fail("not monotone");
  }
  return pass("exact unit cases, 1000 monotone triples");
}

double ratio_of(const PipelineSpec& spec, ByteView data, const std::string& dataset) {
  MeasureOptions options;
  options.warmup = false;
  return compression_ratio(measure(spec, data, 1, dataset, options));
}

Outcome compression_trend() {
  const Bytes data = generate_synthetic(SizeClass::kLarge, 7);
  std::map<CodecId, double> single;
  for (CodecId id : kAllCodecs) single[id] = ratio_of(PipelineSpec::single(id), data, "large");
  std::string detail;
  bool ok = true;
  for (const auto& [id, cr] : single) {
    detail += std::string(codec_name(id)) + "=" + fixed(cr, 2) + " ";
    ok = ok && cr > 1.0;
  }
  for (CodecId second : kAllCodecs) {
    if (second == CodecId::kLzma) continue;
    const auto spec = PipelineSpec::hybrid(CodecId::kLzma, second);
    const double cr = ratio_of(spec, data, "large");
    detail += "[" + spec.display_name() + "]=" + fixed(cr, 2) + " ";
    ok = ok && cr >= single[CodecId::kLz4hc];
  }
  detail.pop_back();
  return ok ? pass(detail) : fail(detail);
}

Outcome published_dataset() {
  const char* path = std::getenv("HYBC_LARGE_DATASET");
  if (path == nullptr || *path == '\0') return skip("set HYBC_LARGE_DATASET to run");
  const auto [desc, data] = load_dataset(path);
  const double brotli = ratio_of(PipelineSpec::single(CodecId::kBrotli), data, desc.name);
  const double bzip2 = ratio_of(PipelineSpec::single(CodecId::kBzip2), data, desc.name);
  const std::string detail = "Brotli " + fixed(brotli, 2) + " (117.11), Bzip2 " +
                             fixed(bzip2, 2) + " (9.77)";
  const bool ok = std::abs(brotli / 117.11 - 1.0) <= 0.10 && std::abs(bzip2 / 9.77 - 1.0) <= 0.10;
  return ok ? pass(detail) : fail(detail);
}

Outcome report_stability() {
  const std::vector<RawMetrics> cohort = {raw("Zstd + LZ4HC", 94.82, 1055.69, 663.78),
                                          raw("Zstd", 94.49, 546.22, 593.79),
                                          raw("LZMA", 141.91, 5.96, 16.56)};
  const auto first = emit_report(rank_pipelines(cohort), ReportFormat::kCsv, {});
  const auto second = emit_report(rank_pipelines(cohort), ReportFormat::kCsv, {});
  if (first != second) return fail("CSV differs between runs");
  const std::string header = first.substr(0, first.find('\n'));
  if (header != kRankingCsvHeader) return fail("header: " + header);
  return pass("byte-identical, header matches");
}

}  // namespace
}  // namespace hybc

int main() {
  using namespace hybc;
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria = {
      {1, "round-trip suite", round_trips},
      {2, "enumeration counts", enumeration_counts},
      {3, "large-file scoring oracle", scoring_oracle},
      {4, "component frequency oracle", frequency_oracle},
      {5, "normalization properties", normalization_properties},
      {6, "efficiency formula", efficiency_formula},
      {7, "large synthetic compression trend", compression_trend},
      {8, "published large dataset ratios", published_dataset},
      {9, "report stability", report_stability},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.check();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const char* label = outcome.status == Outcome::kPass   ? "PASS"
                        : outcome.status == Outcome::kSkip ? "SKIP"
                                                           : "FAIL";
    if (outcome.status == Outcome::kFail) ++failures;
    std::cout << label << " [" << c.id << "] " << c.name << ": " << outcome.detail << " ("
              << fixed(seconds, 2) << " s)\n"
              << std::flush;
  }
  std::cout << (failures == 0 ? "all criteria met" : std::to_string(failures) + " failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
