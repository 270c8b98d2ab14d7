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

#include "hybc/metrics.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>

#include "hybc/error.hpp"

namespace hybc {
namespace {

std::mutex& measurement_lock() {
  static std::mutex lock;
  return lock;
}

// steady_clock ticks are at most 1 ns here; an interval reading zero is
// below resolution and is clamped to one tick.
constexpr double kMinSeconds = 1e-9;

template <typename Fn>
double timed(Fn&& fn) {
  const auto start = std::chrono::steady_clock::now();
  fn();
  const auto stop = std::chrono::steady_clock::now();
  return std::max(std::chrono::duration<double>(stop - start).count(),
                  kMinSeconds);
}

void require_positive(double value, const char* what) {
  if (!(value > 0.0)) {
    throw Error(ErrorCode::kDivisionDomain, std::string(what) + " must be > 0");
  }
}

}  // namespace

std::string_view ds_basis_name(DsBasis basis) noexcept {
  return basis == DsBasis::kCompressed ? "compressed" : "original";
}

double median(std::vector<double> samples) {
  if (samples.empty()) throw Error(ErrorCode::kPrecondition, "median of nothing");
  const std::size_t mid = samples.size() / 2;
  std::nth_element(samples.begin(), samples.begin() + mid, samples.end());
  const double upper = samples[mid];
  if (samples.size() % 2 == 1) return upper;
  const double lower = *std::max_element(samples.begin(), samples.begin() + mid);
  return (lower + upper) / 2.0;
}

Measurement measure(const PipelineSpec& spec, ByteView data, int repetitions,
                    std::string dataset, const MeasureOptions& options) {
  if (repetitions < 1) {
    throw Error(ErrorCode::kPrecondition,
                "repetitions must be >= 1, got " + std::to_string(repetitions));
  }
  std::lock_guard<std::mutex> hold(measurement_lock());

  const auto verify = [&](const Bytes& restored, int rep) {
    if (restored.size() != data.size() ||
        !std::equal(restored.begin(), restored.end(), data.begin())) {
      throw Error(ErrorCode::kRoundTripMismatch,
                  spec.display_name() + " failed to restore its input on repetition " +
                      std::to_string(rep));
    }
  };

  if (options.warmup) {
    verify(decompress_pipeline(compress_pipeline(spec, data)), -1);
  }

  std::vector<double> compress_times;
  std::vector<double> decompress_times;
  compress_times.reserve(repetitions);
  decompress_times.reserve(repetitions);
  std::uint64_t compressed_bytes = 0;

  for (int rep = 0; rep < repetitions; ++rep) {
    Bytes container;
    compress_times.push_back(timed([&] {
      container = compress_pipeline(spec, data);
      if (options.inside_timed_region) options.inside_timed_region(Phase::kCompress, rep);
    }));
    if (rep == 0) {
      compressed_bytes = container.size();
    } else if (container.size() != compressed_bytes) {
      throw Error(ErrorCode::kRoundTripMismatch,
                  spec.display_name() + " produced a different size on repetition " +
                      std::to_string(rep));
    }

    Bytes restored;
    decompress_times.push_back(timed([&] {
      restored = decompress_pipeline(container);
      if (options.inside_timed_region) options.inside_timed_region(Phase::kDecompress, rep);
    }));
    verify(restored, rep);
  }

  Measurement m;
  m.pipeline = spec;
  m.dataset = std::move(dataset);
  m.original_bytes = data.size();
  m.compressed_bytes = compressed_bytes;
  m.compress_seconds = median(std::move(compress_times));
  m.decompress_seconds = median(std::move(decompress_times));
  m.repetitions = repetitions;
  return m;
}

double compression_ratio(const Measurement& m) {
  if (m.compressed_bytes == 0) {
    throw Error(ErrorCode::kDivisionDomain, "compressed size is zero");
  }
  return static_cast<double>(m.original_bytes) /
         static_cast<double>(m.compressed_bytes);
}

double compression_speed(const Measurement& m) {
  require_positive(m.compress_seconds, "compress_seconds");
  return static_cast<double>(m.original_bytes) / kBytesPerMB / m.compress_seconds;
}

double decompression_speed(const Measurement& m, DsBasis basis) {
  require_positive(m.decompress_seconds, "decompress_seconds");
  const auto bytes = basis == DsBasis::kCompressed ? m.compressed_bytes
                                                   : m.original_bytes;
  return static_cast<double>(bytes) / kBytesPerMB / m.decompress_seconds;
}

}  // namespace hybc
