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

#include <atomic>
#include <chrono>
#include <thread>

#include "hybc/corpus.hpp"
#include "hybc/error.hpp"
#include "hybc/metrics.hpp"
#include "test_util.hpp"

namespace hybc {
namespace {

using testing::random_bytes;

Measurement sized(std::uint64_t original, std::uint64_t compressed,
                  double cs_seconds = 1.0, double ds_seconds = 1.0) {
  Measurement m;
  m.original_bytes = original;
  m.compressed_bytes = compressed;
  m.compress_seconds = cs_seconds;
  m.decompress_seconds = ds_seconds;
  m.repetitions = 1;
  return m;
}

TEST_CASE("compression ratio") {
  CHECK(compression_ratio(sized(102400, 51200)) == 2.0);
  CHECK(compression_ratio(sized(777, 777)) == 1.0);
  // ~13,000 KB large tier against the 94.49 published ratio.
  CHECK(compression_ratio(sized(13312000, 140882)) == doctest::Approx(94.49).epsilon(1e-4));
  CHECK_THROWS_AS(compression_ratio(sized(10, 0)), Error);

  std::mt19937_64 rng(1);
  for (int i = 0; i < 200; ++i) {
    const std::uint64_t o = 1 + rng() % 1000000;
    const std::uint64_t c = 20 + rng() % 1000000;
    CHECK(compression_ratio(sized(2 * o, 2 * c)) == doctest::Approx(compression_ratio(sized(o, c))));
    CHECK(compression_ratio(sized(o, c)) > 0.0);
  }
}

TEST_CASE("speeds use 2^20-byte megabytes") {
  CHECK(compression_speed(sized(13 << 20, 100, 0.5)) == 26.0);
  CHECK(compression_speed(sized(123456, 100, 1.0)) == 123456.0 / 1048576.0);

  const Measurement m = sized(4 << 20, 1 << 20, 1.0, 0.25);
  CHECK(decompression_speed(m) == 4.0);
  CHECK(decompression_speed(m, DsBasis::kCompressed) == 4.0);
  CHECK(decompression_speed(m, DsBasis::kOriginal) == 16.0);

  CHECK_THROWS_AS(compression_speed(sized(1, 20, 0.0)), Error);
  CHECK_THROWS_AS(decompression_speed(sized(1, 20, 1.0, 0.0)), Error);
}

TEST_CASE("median") {
  CHECK(median({3.0}) == 3.0);
  CHECK(median({5.0, 1.0, 3.0}) == 3.0);
  CHECK(median({4.0, 1.0, 3.0, 2.0}) == 2.5);
  CHECK(median({1, 2, 3, 4, 100}) == median({1, 2, 3, 4, 5}));
  CHECK_THROWS_AS(median({}), Error);
}

TEST_CASE("measure verifies round trips and records the container size") {
  const Bytes data = random_bytes(1 << 20, 4);
  const auto spec = PipelineSpec::single(CodecId::kZstd);
  const Measurement m = measure(spec, data, 5, "random");
  CHECK(m.repetitions == 5);
  CHECK(m.pipeline == spec);
  CHECK(m.dataset == "random");
  CHECK(m.original_bytes == data.size());
  CHECK(m.compressed_bytes == compress_pipeline(spec, data).size());
  CHECK(m.compress_seconds > 0.0);
  CHECK(m.decompress_seconds > 0.0);
  CHECK(compression_ratio(m) > 0.0);
  CHECK(compression_speed(m) > 0.0);
  CHECK(decompression_speed(m) > 0.0);
}

TEST_CASE("measure rejects zero repetitions") {
  try {
    measure(PipelineSpec::single(CodecId::kZstd), random_bytes(10, 1), 0);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPrecondition);
  }
}

TEST_CASE("Zstd + LZ4HC on the large synthetic corpus") {
  const Bytes corpus = generate_synthetic(SizeClass::kLarge, 42);
  const Measurement m =
      measure(PipelineSpec::hybrid(CodecId::kZstd, CodecId::kLz4hc), corpus, 5, "large");
  CHECK(m.compress_seconds > 0.0);
  CHECK(m.compressed_bytes < m.original_bytes);
}

TEST_CASE("one slow repetition does not move the median") {
  const Bytes data = random_bytes(4096, 8);
  MeasureOptions options;
  options.inside_timed_region = [](Phase phase, int rep) {
    if (rep == 2) {
      std::this_thread::sleep_for(phase == Phase::kCompress ? std::chrono::milliseconds(300)
                                                            : std::chrono::milliseconds(300));
    }
  };
  const Measurement m = measure(PipelineSpec::single(CodecId::kLz4hc), data, 5, "", options);
  // Four fast repetitions of a 4 KiB buffer take microseconds; the slow one
  // is excluded by the median.
  CHECK(m.compress_seconds < 0.15);
  CHECK(m.decompress_seconds < 0.15);
}

TEST_CASE("timed regions never overlap across threads") {
  std::atomic<int> inside{0};
  std::atomic<int> max_inside{0};
  MeasureOptions options;
  options.warmup = false;
  options.inside_timed_region = [&](Phase, int) {
    const int now = ++inside;
    int seen = max_inside.load();
    while (now > seen && !max_inside.compare_exchange_weak(seen, now)) {
    }
    std::this_thread::sleep_for(std::chrono::milliseconds(2));
    --inside;
  };
  const Bytes data = random_bytes(2048, 2);
  std::vector<std::thread> threads;
  for (int t = 0; t < 4; ++t) {
    threads.emplace_back([&] {
      (void)measure(PipelineSpec::single(CodecId::kZstd), data, 3, "", options);
    });
  }
  for (auto& t : threads) t.join();
  CHECK(max_inside.load() == 1);
}

}  // namespace
}  // namespace hybc
