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
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "hybc/codec.hpp"
#include "hybc/pipeline.hpp"

namespace hybc {

inline constexpr double kBytesPerKB = 1024.0;
inline constexpr double kBytesPerMB = 1024.0 * 1024.0;

/// Sizes and median wall times of one pipeline on one dataset. The
/// compressed size is the full container length, header included.
struct Measurement {
  PipelineSpec pipeline = PipelineSpec::single(CodecId::kZstd);
  std::string dataset;
  std::uint64_t original_bytes = 0;
  std::uint64_t compressed_bytes = 0;
  double compress_seconds = 0.0;
  double decompress_seconds = 0.0;
  int repetitions = 0;
};

enum class Phase { kCompress, kDecompress };

/// Which byte count the decompression speed divides by.
enum class DsBasis { kCompressed, kOriginal };

std::string_view ds_basis_name(DsBasis basis) noexcept;

struct MeasureOptions {
  bool warmup = true;
  // Invoked inside the timed region of every repetition. Test hook.
  std::function<void(Phase, int repetition)> inside_timed_region;
};

/// Runs the full chain `repetitions` times per phase on in-memory buffers
/// with a monotonic clock and records the median per phase. Every
/// repetition's output is checked against `data`. Holds a process-wide
/// lock so timed regions never overlap.
///
/// Throws Error(kPrecondition) for repetitions < 1 and
/// Error(kRoundTripMismatch) if any repetition fails to restore `data`.
Measurement measure(const PipelineSpec& spec, ByteView data, int repetitions,
                    std::string dataset = {},
                    const MeasureOptions& options = {});

/// Median of a non-empty sample (mean of the middle pair for even sizes).
double median(std::vector<double> samples);

/// original / compressed. Unit-free.
double compression_ratio(const Measurement& m);
/// Original MB (2^20 bytes) per compression second.
double compression_speed(const Measurement& m);
/// Compressed MB per decompression second by default; original MB under
/// DsBasis::kOriginal.
double decompression_speed(const Measurement& m,
                           DsBasis basis = DsBasis::kCompressed);

}  // namespace hybc
