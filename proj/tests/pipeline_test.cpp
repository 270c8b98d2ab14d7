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

#include <optional>
#include <set>

#include "hybc/corpus.hpp"
#include "hybc/error.hpp"
#include "hybc/pipeline.hpp"
#include "test_util.hpp"

namespace hybc {
namespace {

using testing::random_bytes;
using testing::repeat;
using testing::to_bytes;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected hybc::Error");
  return ErrorCode::kPrecondition;
}

TEST_CASE("enumeration") {
  const auto specs = enumerate_pipelines();
  REQUIRE(specs.size() == 25);
  CHECK(std::ranges::count_if(specs, &PipelineSpec::is_hybrid) == 20);
  for (const auto& s : specs) {
    if (s.second()) CHECK(*s.second() != s.first());
  }
  CHECK(std::set<PipelineSpec>(specs.begin(), specs.end()).size() == 25);

  // Singles by codec id, then pairs lexicographic by (first, second).
  for (int i = 0; i < 5; ++i) CHECK(specs[i] == PipelineSpec::single(kAllCodecs[i]));
  CHECK(std::is_sorted(specs.begin() + 5, specs.end()));
  CHECK(specs[5].display_name() == "LZMA + Zstd");
  CHECK(specs[24].display_name() == "LZ4HC + Bzip2");
}

TEST_CASE("names and parsing") {
  CHECK(PipelineSpec::single(CodecId::kZstd).display_name() == "Zstd");
  CHECK(PipelineSpec::hybrid(CodecId::kZstd, CodecId::kLz4hc).display_name() ==
        "Zstd + LZ4HC");
  CHECK(parse_pipeline("Zstd+LZ4HC") == PipelineSpec::hybrid(CodecId::kZstd, CodecId::kLz4hc));
  CHECK(parse_pipeline("  zstd  +  lz4hc ") ==
        PipelineSpec::hybrid(CodecId::kZstd, CodecId::kLz4hc));
  CHECK(parse_pipeline("BROTLI") == PipelineSpec::single(CodecId::kBrotli));
  for (const auto& s : enumerate_pipelines()) CHECK(parse_pipeline(s.display_name()) == s);

  CHECK(code_of([] { parse_pipeline("Zstd+Zstd"); }) == ErrorCode::kInvalidPipeline);
  CHECK(code_of([] { parse_pipeline("gzip"); }) == ErrorCode::kInvalidPipeline);
  CHECK(code_of([] { parse_pipeline("Zstd+"); }) == ErrorCode::kInvalidPipeline);
  CHECK(code_of([] { parse_pipeline("LZMA+Zstd+Brotli"); }) == ErrorCode::kInvalidPipeline);
  CHECK(code_of([] { PipelineSpec::hybrid(CodecId::kLzma, CodecId::kLzma); }) ==
        ErrorCode::kInvalidPipeline);
}

TEST_CASE("CRC-32 check value") {
  CHECK(crc32_ieee(to_bytes("123456789")) == 0xCBF43926u);
  CHECK(crc32_ieee({}) == 0u);
}

TEST_CASE("header layout is bit-exact") {
  ContainerHeader h;
  h.first_codec = CodecId::kBrotli;
  h.second_codec = CodecId::kZstd;
  h.original_len = 1000;
  h.original_crc32 = 0xDEADBEEF;
  const std::array<std::uint8_t, 20> expected = {
      'H', 'Y', 'B', 'C', 1, 3, 2, 0, 0xE8, 0x03, 0, 0, 0, 0, 0, 0,
      0xEF, 0xBE, 0xAD, 0xDE};
  CHECK(serialize_header(h) == expected);

  const ContainerHeader parsed = parse_header(expected);
  CHECK(static_cast<int>(parsed.first_codec) == 3);
  CHECK(parsed.second_codec == CodecId::kZstd);
  CHECK(parsed.original_len == 1000);
  CHECK(parsed == h);
}

TEST_CASE("header rejects malformed input") {
  ContainerHeader h;
  h.first_codec = CodecId::kLzma;
  const auto good = serialize_header(h);

  CHECK(code_of([&] { parse_header(ByteView(good).first(10)); }) == ErrorCode::kTruncated);

  auto bad = good;
  bad[6] = 7;
  CHECK(code_of([&] { parse_header(bad); }) == ErrorCode::kInvalidCodecByte);
  bad = good;
  bad[5] = 0;
  CHECK(code_of([&] { parse_header(bad); }) == ErrorCode::kInvalidCodecByte);
  bad = good;
  bad[6] = bad[5];
  CHECK(code_of([&] { parse_header(bad); }) == ErrorCode::kInvalidCodecByte);
  bad = good;
  bad[0] = 'X';
  CHECK(code_of([&] { parse_header(bad); }) == ErrorCode::kBadMagic);
  bad = good;
  bad[4] = 2;
  CHECK(code_of([&] { parse_header(bad); }) == ErrorCode::kUnsupportedVersion);
}

TEST_CASE("header serialize/parse inverse over random valid headers") {
  std::mt19937_64 rng(77);
  const auto specs = enumerate_pipelines();
  for (int i = 0; i < 1000; ++i) {
    const PipelineSpec& s = specs[rng() % specs.size()];
    ContainerHeader h;
    h.first_codec = s.first();
    h.second_codec = s.second();
    h.original_len = rng();
    h.original_crc32 = static_cast<std::uint32_t>(rng());
    const auto bytes = serialize_header(h);
    CHECK(parse_header(bytes) == h);
    CHECK(bytes[7] == 0);
    CHECK((bytes[6] == 0) == !s.is_hybrid());
  }
}

TEST_CASE("container header records the pipeline and input") {
  const Bytes x = repeat("हिन्दी ", 100);
  const Bytes out = compress_pipeline(PipelineSpec::single(CodecId::kZstd), x);
  const ContainerHeader h = parse_header(out);
  CHECK(out[5] == 2);
  CHECK(out[6] == 0);
  CHECK(h.original_len == x.size());
  CHECK(h.original_crc32 == crc32_ieee(x));
}

TEST_CASE("all 25 pipelines round-trip") {
  const std::vector<Bytes> inputs = {
      Bytes{}, Bytes{0x41}, repeat("अआइईउऊ क्ष त्र ज्ञ। ", 400), random_bytes(64 * 1024, 1)};
  for (const auto& spec : enumerate_pipelines()) {
    for (const Bytes& x : inputs) {
      CAPTURE(spec.display_name());
      CAPTURE(x.size());
      const Bytes container = compress_pipeline(spec, x);
      CHECK(container.size() >= kHeaderSize);
      CHECK(decompress_pipeline(container) == x);
    }
  }
}

TEST_CASE("incompressible input may expand but still round-trips") {
  const Bytes x = random_bytes(4096, 99);
  const auto spec = PipelineSpec::hybrid(CodecId::kLz4hc, CodecId::kBzip2);
  const Bytes out = compress_pipeline(spec, x);
  CHECK(out.size() > x.size());
  CHECK(decompress_pipeline(out) == x);
}

TEST_CASE("Zstd + LZ4HC shrinks the small synthetic corpus") {
  const Bytes corpus = generate_synthetic(SizeClass::kSmall, 42);
  const Bytes out =
      compress_pipeline(PipelineSpec::hybrid(CodecId::kZstd, CodecId::kLz4hc), corpus);
  CHECK(out.size() < corpus.size());
  CHECK(decompress_pipeline(out) == corpus);
}

TEST_CASE("LZMA + Brotli round-trip") {
  const Bytes x = repeat("भारत एक विशाल देश है। ", 777);
  const auto spec = PipelineSpec::hybrid(CodecId::kLzma, CodecId::kBrotli);
  CHECK(decompress_pipeline(compress_pipeline(spec, x)) == x);
}

TEST_CASE("decompression errors") {
  Bytes container = compress_pipeline(PipelineSpec::single(CodecId::kZstd), repeat("ab", 50));
  Bytes wrong = container;
  std::copy_n("XXXX", 4, wrong.begin());
  CHECK(code_of([&] { decompress_pipeline(wrong); }) == ErrorCode::kBadMagic);

  Bytes lied = container;
  lied[8] ^= 1;  // original_len
  CHECK(code_of([&] { decompress_pipeline(lied); }) == ErrorCode::kIntegrityMismatch);
  lied = container;
  lied[16] ^= 1;  // crc
  CHECK(code_of([&] { decompress_pipeline(lied); }) == ErrorCode::kIntegrityMismatch);

  Bytes cut(container.begin(), container.end() - 3);
  CHECK(code_of([&] { decompress_pipeline(cut); }) == ErrorCode::kCorruptStream);
}

TEST_CASE("single-byte payload corruption never succeeds silently") {
  const Bytes x = repeat("सत्यमेव जयते। ", 200);
  std::mt19937_64 rng(5);
  for (const auto& spec : enumerate_pipelines()) {
    const Bytes container = compress_pipeline(spec, x);
    const std::size_t payload = container.size() - kHeaderSize;
    for (int trial = 0; trial < 12; ++trial) {
      Bytes damaged = container;
      const std::size_t pos = kHeaderSize + rng() % payload;
      damaged[pos] ^= static_cast<std::uint8_t>(1u << (rng() % 8));
      CAPTURE(spec.display_name());
      CAPTURE(pos);
      // A flip in padding bits can leave the data intact; anything else
      // must be caught.
      std::optional<ErrorCode> failure;
      Bytes restored;
      try {
        restored = decompress_pipeline(damaged);
      } catch (const Error& e) {
        failure = e.code();
      }
      if (failure) {
        CHECK((*failure == ErrorCode::kCorruptStream ||
               *failure == ErrorCode::kIntegrityMismatch));
      } else {
        CHECK(restored == x);
      }
    }
  }
}

}  // namespace
}  // namespace hybc
