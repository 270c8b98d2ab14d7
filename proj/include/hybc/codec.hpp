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
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hybc {

using Bytes = std::vector<std::uint8_t>;
using ByteView = std::span<const std::uint8_t>;

/// The five codecs. Values are the on-disk codec bytes of the container.
enum class CodecId : std::uint8_t {
  kLzma = 1,
  kZstd = 2,
  kBrotli = 3,
  kBzip2 = 4,
  kLz4hc = 5,
};

inline constexpr std::array<CodecId, 5> kAllCodecs = {
    CodecId::kLzma, CodecId::kZstd, CodecId::kBrotli, CodecId::kBzip2,
    CodecId::kLz4hc};

/// Fixed encoder settings for one codec. No codec ever uses a preset
/// dictionary, so there is no dictionary field.
struct CodecConfig {
  int level = 0;
  std::optional<int> window_log;
  std::optional<int> block_size_kb;

  friend bool operator==(const CodecConfig&, const CodecConfig&) = default;
};

/// Returns the immutable configuration table row for `codec`.
CodecConfig codec_params(CodecId codec) noexcept;

/// Canonical display name: LZMA, Zstd, Brotli, Bzip2, LZ4HC.
std::string_view codec_name(CodecId codec) noexcept;

/// Case-insensitive lookup of a canonical name.
std::optional<CodecId> codec_from_name(std::string_view name) noexcept;

/// Maps a container byte to a codec; 0 and values above 5 yield nullopt.
std::optional<CodecId> codec_from_byte(std::uint8_t value) noexcept;

/// Version string of the library backing `codec`.
std::string codec_library_version(CodecId codec);

/// Encodes `input` as one self-delimiting stream of `codec`'s native
/// format. Throws Error(kCodecFailure) if the encoder reports a fault.
Bytes compress_one(CodecId codec, ByteView input);

/// Inverse of compress_one. Throws Error(kCorruptStream) when the decoder
/// rejects the stream, the stream is truncated, or bytes trail it.
Bytes decompress_one(CodecId codec, ByteView input);

}  // namespace hybc
