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

#include "hybc/corpus.hpp"
#include "hybc/error.hpp"
#include "hybc/pipeline.hpp"
#include "test_util.hpp"

namespace hybc {
namespace {

using testing::repeat;
using testing::TempDir;
using testing::to_bytes;
using testing::write_bytes;

TEST_CASE("size classes") {
  CHECK(classify_size(148480) == SizeClass::kSmall);
  CHECK(classify_size(1638400) == SizeClass::kMedium);
  CHECK(classify_size(13312000) == SizeClass::kLarge);
  CHECK(classify_size(0) == SizeClass::kSmall);
  CHECK(classify_size(512 * 1024 - 1) == SizeClass::kSmall);
  CHECK(classify_size(512 * 1024) == SizeClass::kMedium);
  CHECK(classify_size(4 * 1024 * 1024) == SizeClass::kLarge);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t a = rng() % (64ull << 20);
    const std::uint64_t b = a + rng() % (8ull << 20);
    CHECK(classify_size(a) <= classify_size(b));
  }
  CHECK(size_class_from_name("Large") == SizeClass::kLarge);
  CHECK_FALSE(size_class_from_name("huge"));
}

TEST_CASE("strict UTF-8 validation") {
  CHECK_FALSE(find_invalid_utf8(to_bytes("plain ascii")));
  CHECK_FALSE(find_invalid_utf8(to_bytes("हिन्दी 😀 é")));
  CHECK(find_invalid_utf8(to_bytes("ab\xFF")) == 2);
  CHECK(find_invalid_utf8(to_bytes("\xC0\x80")) == 0);          // overlong
  CHECK(find_invalid_utf8(to_bytes("x\xE0\x80\x80")) == 1);     // overlong
  CHECK(find_invalid_utf8(to_bytes("\xED\xA0\x80")) == 0);      // surrogate
  CHECK(find_invalid_utf8(to_bytes("\xF4\x90\x80\x80")) == 0);  // > U+10FFFF
  CHECK(find_invalid_utf8(to_bytes("ok\xE0\xA4")) == 2);        // truncated
  CHECK(find_invalid_utf8(to_bytes("\x80")) == 0);
}

TEST_CASE("Devanagari fraction") {
  CHECK(devanagari_fraction(to_bytes("hello world")) == 0.0);
  CHECK(devanagari_fraction({}) == 0.0);
  CHECK(devanagari_fraction(to_bytes("कखग")) == 1.0);
  CHECK(devanagari_fraction(to_bytes("क a")) == doctest::Approx(1.0 / 3.0));
  // U+0980 (Bengali) sits just past the block.
  CHECK(devanagari_fraction(to_bytes("\xE0\xA6\x80")) == 0.0);
}

TEST_CASE("load_dataset") {
  TempDir dir("corpus");

  const Bytes text = repeat("कखगघ ", 148480 / 13 + 1);
  Bytes small(text.begin(), text.begin() + 148480 - (148480 % 13));
  while (small.size() < 148480) small.push_back(' ');
  write_bytes(dir / "small.txt", small);
  const auto [d, bytes] = load_dataset(dir / "small.txt");
  CHECK(d.name == "small");
  CHECK(d.byte_len == 148480);
  CHECK(bytes == small);
  CHECK(d.size_class == SizeClass::kSmall);
  CHECK(d.devanagari_fraction > 0.7);

  write_bytes(dir / "ascii.txt", to_bytes("only ascii here\n"));
  CHECK(load_dataset(dir / "ascii.txt").first.devanagari_fraction == 0.0);

  write_bytes(dir / "bad.txt", to_bytes("क\xFFx"));
  try {
    load_dataset(dir / "bad.txt");
    FAIL("expected InvalidUtf8");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidUtf8);
    CHECK(std::string(e.what()).find("offset 3") != std::string::npos);
  }

  try {
    load_dataset(dir / "missing.txt");
    FAIL("expected IoFailure");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kIoFailure);
  }
}

TEST_CASE("synthetic corpora") {
  const Bytes a = generate_synthetic(SizeClass::kSmall, 42);
  CHECK(a == generate_synthetic(SizeClass::kSmall, 42));
  CHECK(a != generate_synthetic(SizeClass::kSmall, 43));
  CHECK(a.size() == target_size(SizeClass::kSmall));
  CHECK_FALSE(find_invalid_utf8(a));
  CHECK(describe_dataset("s", a).size_class == SizeClass::kSmall);

  const Bytes medium = generate_synthetic(SizeClass::kMedium, 7);
  CHECK_FALSE(find_invalid_utf8(medium));
  CHECK(devanagari_fraction(medium) > 0.8);
  CHECK(describe_dataset("m", medium).size_class == SizeClass::kMedium);

  const Bytes large = generate_synthetic(SizeClass::kLarge, 42);
  CHECK(std::abs(static_cast<double>(large.size()) - 13312000.0) <= 0.01 * 13312000.0);
  CHECK_FALSE(find_invalid_utf8(large));
  CHECK(describe_dataset("l", large).size_class == SizeClass::kLarge);
}

TEST_CASE("synthetic text is redundant enough for every codec") {
  const Bytes small = generate_synthetic(SizeClass::kSmall, 42);
  for (CodecId c : kAllCodecs) {
    CAPTURE(codec_name(c));
    const Bytes container = compress_pipeline(PipelineSpec::single(c), small);
    CHECK(container.size() < small.size());
  }
}

}  // namespace
}  // namespace hybc
