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

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hybc/codec.hpp"

namespace hybc {

/// A one- or two-stage codec chain. Hybrids always pair distinct codecs.
class PipelineSpec {
 public:
  static PipelineSpec single(CodecId codec) noexcept;
  /// Throws Error(kInvalidPipeline) when first == second.
  static PipelineSpec hybrid(CodecId first, CodecId second);

  CodecId first() const noexcept { return first_; }
  std::optional<CodecId> second() const noexcept { return second_; }
  bool is_hybrid() const noexcept { return second_.has_value(); }

  /// Stages in compression order.
  std::vector<CodecId> stages() const;

  /// "Zstd" for singles, "Zstd + LZ4HC" for hybrids.
  std::string display_name() const;

  friend bool operator==(const PipelineSpec&, const PipelineSpec&) = default;
  friend auto operator<=>(const PipelineSpec&, const PipelineSpec&) = default;

 private:
  PipelineSpec(CodecId first, std::optional<CodecId> second) noexcept
      : first_(first), second_(second) {}

  CodecId first_;
  std::optional<CodecId> second_;
};

/// Parses "Zstd", "zstd+lz4hc", "Zstd + LZ4HC". Case-insensitive;
/// whitespace around '+' is ignored. Throws Error(kInvalidPipeline).
PipelineSpec parse_pipeline(std::string_view text);

/// The 25 benchmarked pipelines: five singles by codec id, then the 20
/// ordered distinct pairs in lexicographic (first, second) order.
std::vector<PipelineSpec> enumerate_pipelines();

inline constexpr std::size_t kHeaderSize = 20;
inline constexpr std::array<std::uint8_t, 4> kMagic = {'H', 'Y', 'B', 'C'};
inline constexpr std::uint8_t kFormatVersion = 1;

/// Fixed 20-byte container header (little-endian integers):
///   0  magic "HYBC"        4  version        5  first codec
///   6  second codec (0 = none)               7  reserved (0)
///   8  original length u64                   16 CRC-32 of original u32
struct ContainerHeader {
  std::uint8_t version = kFormatVersion;
  CodecId first_codec = CodecId::kZstd;
  std::optional<CodecId> second_codec;
  std::uint64_t original_len = 0;
  std::uint32_t original_crc32 = 0;

  PipelineSpec pipeline() const;

  friend bool operator==(const ContainerHeader&,
                         const ContainerHeader&) = default;
};

std::array<std::uint8_t, kHeaderSize> serialize_header(
    const ContainerHeader& header);

/// Decodes the fixed layout without inspecting the payload. Throws
/// Error with kTruncated, kBadMagic, kUnsupportedVersion or
/// kInvalidCodecByte.
ContainerHeader parse_header(ByteView bytes);

/// CRC-32 (IEEE 802.3 polynomial, reflected, as used by zip and gzip).
std::uint32_t crc32_ieee(ByteView data) noexcept;

/// Header followed by second(first(input)), or first(input) for singles.
Bytes compress_pipeline(const PipelineSpec& spec, ByteView input);

/// Decodes stages in reverse order using only the header, then checks the
/// recorded length and CRC-32 (Error(kIntegrityMismatch) on disagreement).
Bytes decompress_pipeline(ByteView container);

}  // namespace hybc
