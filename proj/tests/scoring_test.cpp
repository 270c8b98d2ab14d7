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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "hybc/error.hpp"
#include "hybc/scoring.hpp"

namespace hybc {
namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hybc::Error");
  return ErrorCode::kPrecondition;
}

RawMetrics raw(std::string_view pipeline, double cr, double cs, double ds,
               std::string dataset = "large") {
  return {.pipeline = parse_pipeline(pipeline),
          .dataset = std::move(dataset),
          .size_class = SizeClass::kLarge,
          .cr = cr,
          .cs = cs,
          .ds = ds};
}

// Large-file comparison table: (CR, CS MB/s, DS MB/s).
std::vector<RawMetrics> published_large_cohort() {
  return {raw("Zstd + LZ4HC", 94.82, 1055.69, 663.78), raw("Zstd", 94.49, 546.22, 593.79),
          raw("Brotli", 117.11, 312.66, 426.47),      raw("Bzip2", 9.77, 18.75, 4.88),
          raw("LZ4HC", 3.79, 32.51, 554.34),          raw("LZMA", 141.91, 5.96, 16.56)};
}

EfficiencyRow row_for(std::string_view pipeline, std::string dataset) {
  EfficiencyRow r;
  r.pipeline = parse_pipeline(pipeline);
  r.dataset = std::move(dataset);
  return r;
}

TEST_CASE("weights") {
  const Weights w;
  CHECK(w.cr() == 0.40);
  CHECK(w.cs() == 0.30);
  CHECK(w.ds() == 0.30);
  CHECK_NOTHROW(Weights::make(1, 0, 0));
  CHECK(code_of([] { Weights::make(0.5, 0.5, 0.5); }) == ErrorCode::kDomainError);
  CHECK(code_of([] { Weights::make(-0.1, 0.6, 0.5); }) == ErrorCode::kDomainError);
  CHECK(code_of([] { Weights::make(NAN, 0.5, 0.5); }) == ErrorCode::kDomainError);
}

TEST_CASE("min-max normalization examples") {
  CHECK(minmax_normalize(std::vector{10.0, 20.0, 30.0}) == std::vector{0.0, 0.5, 1.0});
  CHECK(minmax_normalize(std::vector{5.0, 5.0, 5.0}) == std::vector{0.5, 0.5, 0.5});
  const auto cr = minmax_normalize(std::vector{94.82, 94.49, 117.11, 9.77, 3.79, 141.91});
  CHECK(cr[0] == doctest::Approx(0.6591).epsilon(1e-4));
  CHECK(code_of([] { minmax_normalize(std::vector<double>{1.0, INFINITY}); }) ==
        ErrorCode::kNonFiniteInput);
  CHECK(code_of([] { minmax_normalize(std::vector<double>{NAN}); }) == ErrorCode::kNonFiniteInput);
  CHECK(code_of([] { minmax_normalize(std::vector<double>{}); }) == ErrorCode::kPrecondition);
}

TEST_CASE("min-max normalization properties") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> value(-1000.0, 1000.0);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> x(2 + rng() % 30);
    for (double& v : x) v = value(rng);
    const auto n = minmax_normalize(x);
    const auto imin = std::ranges::min_element(x) - x.begin();
    const auto imax = std::ranges::max_element(x) - x.begin();
    CHECK(n[imin] == 0.0);
    CHECK(n[imax] == 1.0);
    CHECK(std::ranges::max_element(n) - n.begin() == imax);
    for (double v : n) CHECK((v >= 0.0 && v <= 1.0));

    const double a = scale(rng);
    const double b = value(rng);
    std::vector<double> y(x.size());
    std::ranges::transform(x, y.begin(), [&](double v) { return a * v + b; });
    const auto m = minmax_normalize(y);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(m[i] - n[i]) <= 1e-12);
  }
}

TEST_CASE("efficiency score") {
  CHECK(efficiency_score(1, 1, 1) == 1.0);
  CHECK(efficiency_score(1, 0, 0) == 0.4);
  CHECK(efficiency_score(0.6591, 1.0, 1.0) == doctest::Approx(0.8636).epsilon(1e-4));
  CHECK(code_of([] { efficiency_score(1.2, 0, 0); }) == ErrorCode::kDomainError);
  CHECK(code_of([] { efficiency_score(0, -0.1, 0); }) == ErrorCode::kDomainError);

  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    double v[3] = {u(rng), u(rng), u(rng)};
    const double base = efficiency_score(v[0], v[1], v[2]);
    CHECK((base >= 0.0 && base <= 1.0));
    const int k = static_cast<int>(rng() % 3);
    v[k] = v[k] + (1.0 - v[k]) * u(rng);
    CHECK(efficiency_score(v[0], v[1], v[2]) >= base);
  }
}

TEST_CASE("ranking the published large-file cohort") {
  const auto cohort = published_large_cohort();
  const auto ranked = rank_pipelines(cohort);
  REQUIRE(ranked.size() == 6);
  CHECK(ranked[0].pipeline.display_name() == "Zstd + LZ4HC");
  CHECK(ranked[0].efficiency == doctest::Approx(0.8636).epsilon(1e-3));
  CHECK(ranked[0].cs_norm == 1.0);
  CHECK(ranked[0].ds_norm == 1.0);
  CHECK(ranked[1].pipeline.display_name() == "Zstd");
  CHECK(ranked[1].efficiency == doctest::Approx(0.6852).epsilon(1e-3));
  CHECK(ranked.back().pipeline.display_name() == "Bzip2");
  for (const auto& r : ranked) {
    CHECK(r.efficiency == doctest::Approx(0.4 * r.cr_norm + 0.3 * r.cs_norm + 0.3 * r.ds_norm)
                              .epsilon(1e-12));
  }
}

TEST_CASE("ranking rules") {
  SUBCASE("dominant pipeline scores 1") {
    const std::vector<RawMetrics> c = {raw("LZMA", 5, 1, 1), raw("Zstd", 9, 9, 9),
                                       raw("Brotli", 7, 3, 2)};
    const auto r = rank_pipelines(c);
    CHECK(r[0].pipeline.display_name() == "Zstd");
    CHECK(r[0].efficiency == 1.0);
  }
  SUBCASE("ties break by name") {
    const std::vector<RawMetrics> c = {raw("Zstd", 2, 2, 2), raw("Brotli", 2, 2, 2)};
    const auto r = rank_pipelines(c);
    CHECK(r[0].efficiency == r[1].efficiency);
    CHECK(r[0].pipeline.display_name() == "Brotli");
  }
  SUBCASE("mixed cohort") {
    const std::vector<RawMetrics> c = {raw("Zstd", 2, 2, 2, "a"), raw("LZMA", 3, 2, 2, "b")};
    CHECK(code_of([&] { rank_pipelines(c); }) == ErrorCode::kMixedCohort);
  }
  SUBCASE("too small") {
    const std::vector<RawMetrics> c = {raw("Zstd", 2, 2, 2)};
    CHECK(code_of([&] { rank_pipelines(c); }) == ErrorCode::kPrecondition);
  }
}

TEST_CASE("ranking measurements uses the decompression-speed basis") {
  Measurement a;
  a.pipeline = parse_pipeline("Zstd");
  a.dataset = "d";
  a.original_bytes = 4 << 20;
  a.compressed_bytes = 1 << 20;
  a.compress_seconds = 1.0;
  a.decompress_seconds = 1.0;
  a.repetitions = 1;
  Measurement b = a;
  b.pipeline = parse_pipeline("LZMA");
  b.compressed_bytes = 2 << 20;
  b.decompress_seconds = 1.5;
  const std::vector<Measurement> cohort = {a, b};
  const auto compressed = rank_pipelines(cohort, {}, DsBasis::kCompressed);
  const auto original = rank_pipelines(cohort, {}, DsBasis::kOriginal);
  // Compressed basis: a 1.0 MB/s vs b 1.333 MB/s. Original basis: 4 vs 2.67.
  CHECK(compressed[0].pipeline.display_name() == "Zstd");
  CHECK(compressed[0].ds_norm == 0.0);
  CHECK(original[0].ds_norm == 1.0);
  CHECK(compressed[0].size_class == SizeClass::kLarge);  // 4 MiB is the Large floor
}

TEST_CASE("ranking is a permutation") {
  std::mt19937_64 rng(19);
  const auto specs = enumerate_pipelines();
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<RawMetrics> cohort;
    for (std::size_t i = 0; i < 2 + rng() % 23; ++i) {
      cohort.push_back({.pipeline = specs[i],
                        .dataset = "x",
                        .size_class = SizeClass::kSmall,
                        .cr = 1.0 + static_cast<double>(rng() % 1000) / 10.0,
                        .cs = 1.0 + static_cast<double>(rng() % 1000),
                        .ds = 1.0 + static_cast<double>(rng() % 1000)});
    }
    const auto ranked = rank_pipelines(cohort);
    REQUIRE(ranked.size() == cohort.size());
    std::vector<PipelineSpec> in, out;
    for (const auto& c : cohort) in.push_back(c.pipeline);
    for (const auto& r : ranked) out.push_back(r.pipeline);
    std::ranges::sort(in);
    std::ranges::sort(out);
    CHECK(in == out);
    CHECK(std::ranges::is_sorted(ranked, std::greater<>{}, &EfficiencyRow::efficiency));
  }
}

TEST_CASE("component frequency") {
  const std::vector<EfficiencyRow> two = {row_for("Zstd + LZ4HC", "s"), row_for("Zstd", "s")};
  auto counts = component_frequency(two, 10);
  CHECK(counts[CodecId::kZstd] == 2);
  CHECK(counts[CodecId::kLz4hc] == 1);
  CHECK(counts[CodecId::kLzma] == 0);

  const auto empty = component_frequency({}, 10);
  CHECK(empty.size() == 5);
  for (const auto& [codec, n] : empty) CHECK(n == 0);

  SUBCASE("cutoff applies per dataset group") {
    const std::vector<EfficiencyRow> rows = {row_for("Zstd", "a"), row_for("LZMA", "a"),
                                             row_for("Brotli", "b"), row_for("Bzip2", "b")};
    const auto c = component_frequency(rows, 1);
    CHECK(c.at(CodecId::kZstd) == 1);
    CHECK(c.at(CodecId::kLzma) == 0);
    CHECK(c.at(CodecId::kBrotli) == 1);
    CHECK(c.at(CodecId::kBzip2) == 0);
  }
  SUBCASE("hybrids-only rule") {
    const auto c = component_frequency(two, 10, FrequencyRule::kHybridsOnly);
    CHECK(c.at(CodecId::kZstd) == 1);
    CHECK(c.at(CodecId::kLz4hc) == 1);
  }
}

TEST_CASE("component frequency total") {
  std::mt19937_64 rng(4);
  const auto specs = enumerate_pipelines();
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<EfficiencyRow> rows;
    std::size_t expected = 0;
    for (std::size_t i = 0; i < rng() % 40; ++i) {
      const auto& s = specs[rng() % specs.size()];
      rows.push_back({.pipeline = s, .dataset = "d"});
      expected += s.is_hybrid() ? 2 : 1;
    }
    std::size_t total = 0;
    for (const auto& [codec, n] : component_frequency(rows, rows.size())) total += n;
    CHECK(total == expected);
  }
}

TEST_CASE("balance table") {
  EfficiencyRow lzma_brotli = row_for("LZMA + Brotli", "large");
  lzma_brotli.cr = 141.59;
  lzma_brotli.cs = 6.09;
  EfficiencyRow zstd = row_for("Zstd", "large");
  zstd.cr = 94.59;
  zstd.cs = 546.22;
  const std::vector<EfficiencyRow> rows = {zstd, lzma_brotli};
  const auto points = balance_table(rows);
  REQUIRE(points.size() == 2);
  CHECK(points[0].pipeline.display_name() == "LZMA + Brotli");
  CHECK(points[0].cr == 141.59);
  CHECK(points[0].cs == 6.09);
  CHECK(balance_table({}).empty());
}

TEST_CASE("head to head") {
  const auto ranked = rank_pipelines(published_large_cohort());
  const auto h2h = head_to_head(ranked, parse_pipeline("Zstd+LZ4HC"));
  REQUIRE(h2h.size() == 6);
  CHECK(h2h[0].pipeline.display_name() == "Zstd + LZ4HC");
  for (std::size_t i = 1; i < h2h.size(); ++i) CHECK_FALSE(h2h[i].pipeline.is_hybrid());
}

}  // namespace
}  // namespace hybc
