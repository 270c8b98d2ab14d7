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

#include "hybc/pipeline.hpp"

#include <algorithm>
#include <cctype>
#include <limits>

#include <zlib.h>

#include "hybc/error.hpp"

namespace hybc {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

CodecId parse_codec_name(std::string_view name, std::string_view whole) {
  if (auto codec = codec_from_name(trim(name))) return *codec;
  throw Error(ErrorCode::kInvalidPipeline,
              "unknown codec in pipeline '" + std::string(whole) + "'");
}

void put_le(std::uint8_t* dst, std::uint64_t value, int width) {
  for (int i = 0; i < width; ++i) dst[i] = static_cast<std::uint8_t>(value >> (8 * i));
}

std::uint64_t get_le(const std::uint8_t* src, int width) {
  std::uint64_t value = 0;
  for (int i = 0; i < width; ++i) value |= std::uint64_t{src[i]} << (8 * i);
  return value;
}

}  // namespace

PipelineSpec PipelineSpec::single(CodecId codec) noexcept {
  return PipelineSpec(codec, std::nullopt);
}

PipelineSpec PipelineSpec::hybrid(CodecId first, CodecId second) {
  if (first == second) {
    throw Error(ErrorCode::kInvalidPipeline,
                "a hybrid needs two distinct codecs, got " +
                    std::string(codec_name(first)) + " twice");
  }
  return PipelineSpec(first, second);
}

std::vector<CodecId> PipelineSpec::stages() const {
  if (second_) return {first_, *second_};
  return {first_};
}

std::string PipelineSpec::display_name() const {
  std::string name(codec_name(first_));
  if (second_) {
    name += " + ";
    name += codec_name(*second_);
  }
  return name;
}

PipelineSpec parse_pipeline(std::string_view text) {
  const auto plus = text.find('+');
  if (plus == std::string_view::npos) {
    return PipelineSpec::single(parse_codec_name(text, text));
  }
  const std::string_view rest = text.substr(plus + 1);
  if (rest.find('+') != std::string_view::npos) {
    throw Error(ErrorCode::kInvalidPipeline,
                "chains longer than two stages are not supported: '" +
                    std::string(text) + "'");
  }
  return PipelineSpec::hybrid(parse_codec_name(text.substr(0, plus), text),
                              parse_codec_name(rest, text));
}

std::vector<PipelineSpec> enumerate_pipelines() {
  std::vector<PipelineSpec> specs;
  specs.reserve(25);
  for (CodecId codec : kAllCodecs) specs.push_back(PipelineSpec::single(codec));
  for (CodecId first : kAllCodecs) {
    for (CodecId second : kAllCodecs) {
      if (first != second) specs.push_back(PipelineSpec::hybrid(first, second));
    }
  }
  return specs;
}

PipelineSpec ContainerHeader::pipeline() const {
  if (second_codec) return PipelineSpec::hybrid(first_codec, *second_codec);
  return PipelineSpec::single(first_codec);
}

std::array<std::uint8_t, kHeaderSize> serialize_header(
    const ContainerHeader& header) {
  std::array<std::uint8_t, kHeaderSize> out{};
  std::copy(kMagic.begin(), kMagic.end(), out.begin());
  out[4] = header.version;
  out[5] = static_cast<std::uint8_t>(header.first_codec);
  out[6] = header.second_codec ? static_cast<std::uint8_t>(*header.second_codec)
                               : 0;
  out[7] = 0;
  put_le(out.data() + 8, header.original_len, 8);
  put_le(out.data() + 16, header.original_crc32, 4);
  return out;
}

ContainerHeader parse_header(ByteView bytes) {
  if (bytes.size() < kHeaderSize) {
    throw Error(ErrorCode::kTruncated,
                "container header needs 20 bytes, got " +
                    std::to_string(bytes.size()));
  }
  if (!std::equal(kMagic.begin(), kMagic.end(), bytes.begin())) {
    throw Error(ErrorCode::kBadMagic, "not a HYBC container");
  }
  if (bytes[4] != kFormatVersion) {
    throw Error(ErrorCode::kUnsupportedVersion,
                "container version " + std::to_string(bytes[4]));
  }
  ContainerHeader header;
  header.version = bytes[4];
  const auto first = codec_from_byte(bytes[5]);
  if (!first) {
    throw Error(ErrorCode::kInvalidCodecByte,
                "first codec byte " + std::to_string(bytes[5]));
  }
  header.first_codec = *first;
  if (bytes[6] != 0) {
    const auto second = codec_from_byte(bytes[6]);
    if (!second) {
      throw Error(ErrorCode::kInvalidCodecByte,
                  "second codec byte " + std::to_string(bytes[6]));
    }
    if (*second == *first) {
      throw Error(ErrorCode::kInvalidCodecByte,
                  "first and second codec are both " +
                      std::to_string(bytes[6]));
    }
    header.second_codec = *second;
  }
  header.original_len = get_le(bytes.data() + 8, 8);
  header.original_crc32 = static_cast<std::uint32_t>(get_le(bytes.data() + 16, 4));
  return header;
}

std::uint32_t crc32_ieee(ByteView data) noexcept {
  uLong crc = crc32(0L, Z_NULL, 0);
  std::size_t offset = 0;
  while (offset < data.size()) {
    const auto n = static_cast<uInt>(std::min<std::size_t>(
        data.size() - offset, std::numeric_limits<uInt>::max()));
    crc = crc32(crc, data.data() + offset, n);
    offset += n;
  }
  return static_cast<std::uint32_t>(crc);
}

Bytes compress_pipeline(const PipelineSpec& spec, ByteView input) {
  ContainerHeader header;
  header.first_codec = spec.first();
  header.second_codec = spec.second();
  header.original_len = input.size();
  header.original_crc32 = crc32_ieee(input);

  Bytes payload = compress_one(spec.first(), input);
  if (spec.second()) payload = compress_one(*spec.second(), payload);

  Bytes out;
  out.reserve(kHeaderSize + payload.size());
  const auto head = serialize_header(header);
  out.insert(out.end(), head.begin(), head.end());
  out.insert(out.end(), payload.begin(), payload.end());
  return out;
}

Bytes decompress_pipeline(ByteView container) {
  const ContainerHeader header = parse_header(container);
  const ByteView payload = container.subspan(kHeaderSize);

  Bytes data;
  if (header.second_codec) {
    data = decompress_one(header.first_codec,
                          decompress_one(*header.second_codec, payload));
  } else {
    data = decompress_one(header.first_codec, payload);
  }

  if (data.size() != header.original_len) {
    throw Error(ErrorCode::kIntegrityMismatch,
                "decoded " + std::to_string(data.size()) +
                    " bytes, header records " +
                    std::to_string(header.original_len));
  }
  if (crc32_ieee(data) != header.original_crc32) {
    throw Error(ErrorCode::kIntegrityMismatch, "CRC-32 mismatch");
  }
  return data;
}

}  // namespace hybc
