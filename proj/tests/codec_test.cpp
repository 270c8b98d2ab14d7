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

#include "hybc/codec.hpp"
#include "hybc/error.hpp"
#include "test_util.hpp"

namespace hybc {
namespace {

using testing::random_bytes;
using testing::repeat;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hybc::Error");
  return ErrorCode::kPrecondition;
}

TEST_CASE("configuration table") {
  const CodecConfig lzma = codec_params(CodecId::kLzma);
  CHECK(lzma.level == 6);
  CHECK_FALSE(lzma.window_log);
  CHECK_FALSE(lzma.block_size_kb);

  CHECK(codec_params(CodecId::kZstd).level == 6);
  CHECK(codec_params(CodecId::kLz4hc).level == 6);

  const CodecConfig brotli = codec_params(CodecId::kBrotli);
  CHECK(brotli.level == 6);
  CHECK(brotli.window_log == 22);

  CHECK(codec_params(CodecId::kBzip2).block_size_kb == 900);

  for (CodecId c : kAllCodecs) CHECK(codec_params(c) == codec_params(c));
}

TEST_CASE("codec bytes and names") {
  CHECK_FALSE(codec_from_byte(0));
  CHECK_FALSE(codec_from_byte(6));
  CHECK_FALSE(codec_from_byte(255));
  for (CodecId c : kAllCodecs) {
    CHECK(codec_from_byte(static_cast<std::uint8_t>(c)) == c);
    CHECK(codec_from_name(codec_name(c)) == c);
    CHECK_FALSE(codec_library_version(c).empty());
  }
  CHECK(codec_from_name("lz4hc") == CodecId::kLz4hc);
  CHECK(codec_from_name("BZIP2") == CodecId::kBzip2);
  CHECK_FALSE(codec_from_name("gzip"));
}

TEST_CASE("empty input round-trips through every codec") {
  for (CodecId c : kAllCodecs) {
    CAPTURE(codec_name(c));
    const Bytes stream = compress_one(c, {});
    CHECK_FALSE(stream.empty());
    CHECK(decompress_one(c, stream).empty());
  }
}

TEST_CASE("repetitive Devanagari shrinks under LZ4HC") {
  const Bytes text = repeat("अ", 1024);
  REQUIRE(text.size() == 3072);
  CHECK(compress_one(CodecId::kLz4hc, text).size() < 3072);
  for (CodecId c : kAllCodecs) CHECK(compress_one(c, text).size() < 3072);
}

TEST_CASE("64 KiB pseudorandom buffer round-trips through bzip2") {
  const Bytes x = random_bytes(64 * 1024, 11);
  CHECK(decompress_one(CodecId::kBzip2, compress_one(CodecId::kBzip2, x)) == x);
}

TEST_CASE("decoders reject random input") {
  const Bytes junk = random_bytes(16, 3);
  CHECK(code_of([&] { decompress_one(CodecId::kLzma, junk); }) == ErrorCode::kCorruptStream);
  // These formats start with a magic number, so random bytes cannot parse.
  for (CodecId c : {CodecId::kZstd, CodecId::kBzip2, CodecId::kLz4hc}) {
    CAPTURE(codec_name(c));
    CHECK(code_of([&] { decompress_one(c, junk); }) == ErrorCode::kCorruptStream);
  }
}

TEST_CASE("truncated and padded streams are rejected") {
  const Bytes x = random_bytes(5000, 5);
  for (CodecId c : kAllCodecs) {
    CAPTURE(codec_name(c));
    Bytes stream = compress_one(c, x);
    Bytes truncated(stream.begin(), stream.end() - 1);
    CHECK(code_of([&] { decompress_one(c, truncated); }) == ErrorCode::kCorruptStream);
    CHECK(code_of([&] { decompress_one(c, {}); }) == ErrorCode::kCorruptStream);
    stream.push_back(0x42);
    CHECK(code_of([&] { decompress_one(c, stream); }) == ErrorCode::kCorruptStream);
  }
}

TEST_CASE("round-trip property over random and structured inputs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 40; ++trial) {
    Bytes x;
    const std::size_t len = rng() % 20000;
    switch (trial % 4) {
      case 0: x = random_bytes(len, rng()); break;
      case 1: x = Bytes(len, static_cast<std::uint8_t>(rng())); break;
      case 2: x = repeat("क्षत्रिय ", len / 16 + 1); break;
      default:
        // Low-entropy alphabet.
        x.resize(len);
        for (auto& b : x) b = static_cast<std::uint8_t>('a' + rng() % 4);
    }
    for (CodecId c : kAllCodecs) {
      CAPTURE(trial);
      CAPTURE(codec_name(c));
      CHECK(decompress_one(c, compress_one(c, x)) == x);
    }
  }
}

TEST_CASE("large buffers grow the decoder output correctly") {
  // Highly compressible so decoders must grow far past their first guess.
  const Bytes x(3 * 1024 * 1024, 'z');
  for (CodecId c : kAllCodecs) {
    CAPTURE(codec_name(c));
    CHECK(decompress_one(c, compress_one(c, x)) == x);
  }
}

TEST_CASE("encoding is deterministic and stateless") {
  const Bytes x = repeat("नमस्ते दुनिया ", 300);
  const Bytes y = random_bytes(3000, 9);
  for (CodecId c : kAllCodecs) {
    CAPTURE(codec_name(c));
    const Bytes y_alone = compress_one(c, y);
    CHECK(compress_one(c, x) == compress_one(c, x));
    (void)compress_one(c, x);
    CHECK(compress_one(c, y) == y_alone);
  }
}

}  // namespace
}  // namespace hybc
