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
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "hybc/codec.hpp"

namespace hybc {

enum class SizeClass { kSmall, kMedium, kLarge };

std::string_view size_class_name(SizeClass size_class) noexcept;
std::optional<SizeClass> size_class_from_name(std::string_view name) noexcept;

inline constexpr std::uint64_t kSmallUpperBound = 512u * 1024u;
inline constexpr std::uint64_t kMediumUpperBound = 4u * 1024u * 1024u;

/// Small below 512 KiB, Medium below 4 MiB, Large otherwise.
SizeClass classify_size(std::uint64_t byte_len) noexcept;

/// Anchor sizes of the three tiers: 145 KB, 1,600 KB and 13,000 KB.
std::uint64_t target_size(SizeClass size_class) noexcept;

struct DatasetDescriptor {
  std::string name;
  SizeClass size_class = SizeClass::kSmall;
  std::uint64_t byte_len = 0;
  // Fraction of code points in U+0900..U+097F.
  double devanagari_fraction = 0.0;
};

/// Offset of the first byte that breaks strict UTF-8 (overlongs,
/// surrogates and code points above U+10FFFF are rejected), or nullopt.
std::optional<std::size_t> find_invalid_utf8(ByteView data) noexcept;

/// Requires valid UTF-8; returns 0 for empty input.
double devanagari_fraction(ByteView utf8);

/// Builds a descriptor for an in-memory buffer. Throws Error(kInvalidUtf8)
/// naming the offending offset.
DatasetDescriptor describe_dataset(std::string name, ByteView data);

/// Reads a file and validates it. The descriptor name is the file stem.
/// Throws Error(kIoFailure) or Error(kInvalidUtf8).
std::pair<DatasetDescriptor, Bytes> load_dataset(
    const std::filesystem::path& path);

/// Deterministic Devanagari pseudo-text of exactly target_size(size_class)
/// bytes. Words come from a 5,000-entry generated lexicon sampled with a
/// Zipf(1.1) law; sentences end with a danda, paragraphs with a newline.
Bytes generate_synthetic(SizeClass size_class, std::uint64_t seed);

}  // namespace hybc
