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

#include "hybc/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <random>
#include <unordered_set>
#include <vector>

#include "hybc/error.hpp"

namespace hybc {
namespace {

// Length of the UTF-8 sequence starting at `data[i]`, or 0 if invalid.
std::size_t utf8_sequence_length(ByteView data, std::size_t i) noexcept {
  const std::uint8_t lead = data[i];
  if (lead < 0x80) return 1;
  std::size_t len = 0;
  std::uint8_t lo = 0x80;
  std::uint8_t hi = 0xBF;
  if (lead >= 0xC2 && lead <= 0xDF) {
    len = 2;
  } else if (lead == 0xE0) {
    len = 3;
    lo = 0xA0;
  } else if ((lead >= 0xE1 && lead <= 0xEC) || lead == 0xEE || lead == 0xEF) {
    len = 3;
  } else if (lead == 0xED) {
    len = 3;
    hi = 0x9F;  // no surrogates
  } else if (lead == 0xF0) {
    len = 4;
    lo = 0x90;
  } else if (lead >= 0xF1 && lead <= 0xF3) {
    len = 4;
  } else if (lead == 0xF4) {
    len = 4;
    hi = 0x8F;
  } else {
    return 0;
  }
  if (i + len > data.size()) return 0;
  if (data[i + 1] < lo || data[i + 1] > hi) return 0;
  for (std::size_t k = 2; k < len; ++k) {
    if ((data[i + k] & 0xC0) != 0x80) return 0;
  }
  return len;
}

void append_code_point(Bytes& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<std::uint8_t>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<std::uint8_t>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<std::uint8_t>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<std::uint8_t>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<std::uint8_t>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<std::uint8_t>(0x80 | (cp & 0x3F)));
  }
}

constexpr char32_t kVirama = 0x094D;
constexpr char32_t kAnusvara = 0x0902;
constexpr char32_t kDanda = 0x0964;
constexpr std::size_t kLexiconSize = 5000;
constexpr double kZipfExponent = 1.1;

constexpr char32_t kVowels[] = {0x0905, 0x0906, 0x0907, 0x0908, 0x0909,
                                0x090A, 0x090F, 0x0910, 0x0913, 0x0914};
constexpr char32_t kMatras[] = {0x093E, 0x093F, 0x0940, 0x0941, 0x0942,
                                0x0943, 0x0947, 0x0948, 0x094B, 0x094C};

// Portable draws: std::mt19937_64 output is fixed by the standard, the
// standard distributions are not.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

char32_t consonant(Draw& draw) {
  return static_cast<char32_t>(0x0915 + draw.below(0x0939 - 0x0915 + 1));
}

std::u32string make_word(Draw& draw) {
  static constexpr std::uint64_t kSyllableWeights[] = {1, 4, 4, 2};
  std::uint64_t pick = draw.below(11);
  std::size_t syllables = 1;
  for (std::uint64_t w : kSyllableWeights) {
    if (pick < w) break;
    pick -= w;
    ++syllables;
  }

  std::u32string word;
  if (draw.chance(0.12)) word.push_back(kVowels[draw.below(std::size(kVowels))]);
  for (std::size_t s = 0; s < syllables; ++s) {
    word.push_back(consonant(draw));
    if (draw.chance(0.12)) {
      word.push_back(kVirama);
      word.push_back(consonant(draw));
    }
    if (draw.chance(0.6)) word.push_back(kMatras[draw.below(std::size(kMatras))]);
    if (draw.chance(0.05)) word.push_back(kAnusvara);
  }
  return word;
}

std::vector<Bytes> make_lexicon(Draw& draw) {
  std::vector<Bytes> lexicon;
  std::unordered_set<std::u32string> seen;
  while (lexicon.size() < kLexiconSize) {
    std::u32string word = make_word(draw);
    if (!seen.insert(word).second) continue;
    Bytes utf8;
    for (char32_t cp : word) append_code_point(utf8, cp);
    lexicon.push_back(std::move(utf8));
  }
  return lexicon;
}

std::vector<double> zipf_cdf(std::size_t n, double exponent) {
  std::vector<double> cdf(n);
  double total = 0.0;
  for (std::size_t rank = 0; rank < n; ++rank) {
    total += 1.0 / std::pow(static_cast<double>(rank + 1), exponent);
    cdf[rank] = total;
  }
  for (double& c : cdf) c /= total;
  return cdf;
}

}  // namespace

std::string_view size_class_name(SizeClass size_class) noexcept {
  switch (size_class) {
    case SizeClass::kSmall: return "small";
    case SizeClass::kMedium: return "medium";
    case SizeClass::kLarge: return "large";
  }
  return "?";
}

std::optional<SizeClass> size_class_from_name(std::string_view name) noexcept {
  for (SizeClass c : {SizeClass::kSmall, SizeClass::kMedium, SizeClass::kLarge}) {
    const std::string_view canonical = size_class_name(c);
    if (std::ranges::equal(name, canonical, [](char a, char b) {
          return (a | 0x20) == b;
        })) {
      return c;
    }
  }
  return std::nullopt;
}

SizeClass classify_size(std::uint64_t byte_len) noexcept {
  if (byte_len < kSmallUpperBound) return SizeClass::kSmall;
  if (byte_len < kMediumUpperBound) return SizeClass::kMedium;
  return SizeClass::kLarge;
}

std::uint64_t target_size(SizeClass size_class) noexcept {
  switch (size_class) {
    case SizeClass::kSmall: return 145 * 1024;
    case SizeClass::kMedium: return 1600 * 1024;
    case SizeClass::kLarge: return 13000 * 1024;
  }
  return 0;
}

std::optional<std::size_t> find_invalid_utf8(ByteView data) noexcept {
  std::size_t i = 0;
  while (i < data.size()) {
    const std::size_t len = utf8_sequence_length(data, i);
    if (len == 0) return i;
    i += len;
  }
  return std::nullopt;
}

double devanagari_fraction(ByteView utf8) {
  std::size_t code_points = 0;
  std::size_t devanagari = 0;
  std::size_t i = 0;
  while (i < utf8.size()) {
    const std::size_t len = utf8_sequence_length(utf8, i);
    if (len == 0) {
      throw Error(ErrorCode::kInvalidUtf8,
                  "invalid UTF-8 at byte offset " + std::to_string(i));
    }
    // U+0900..U+097F encode as E0 A4 xx / E0 A5 xx.
    if (len == 3 && utf8[i] == 0xE0 && (utf8[i + 1] == 0xA4 || utf8[i + 1] == 0xA5)) {
      ++devanagari;
    }
    ++code_points;
    i += len;
  }
  if (code_points == 0) return 0.0;
  return static_cast<double>(devanagari) / static_cast<double>(code_points);
}

DatasetDescriptor describe_dataset(std::string name, ByteView data) {
  if (auto bad = find_invalid_utf8(data)) {
    throw Error(ErrorCode::kInvalidUtf8,
                name + ": invalid UTF-8 at byte offset " + std::to_string(*bad));
  }
  DatasetDescriptor descriptor;
  descriptor.name = std::move(name);
  descriptor.byte_len = data.size();
  descriptor.size_class = classify_size(data.size());
  descriptor.devanagari_fraction = devanagari_fraction(data);
  return descriptor;
}

std::pair<DatasetDescriptor, Bytes> load_dataset(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)),
             std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "cannot read " + path.string());
  DatasetDescriptor descriptor = describe_dataset(path.stem().string(), data);
  return {std::move(descriptor), std::move(data)};
}

Bytes generate_synthetic(SizeClass size_class, std::uint64_t seed) {
  const std::size_t target = target_size(size_class);
  Draw draw(seed);
  const std::vector<Bytes> lexicon = make_lexicon(draw);
  const std::vector<double> cdf = zipf_cdf(lexicon.size(), kZipfExponent);

  Bytes out;
  out.reserve(target + 256);
  std::size_t sentences_in_paragraph = 0;
  while (out.size() < target) {
    const std::size_t words = 5 + draw.below(11);
    for (std::size_t w = 0; w < words; ++w) {
      const double u = draw.unit();
      const auto rank = std::min<std::size_t>(
          std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin(),
          lexicon.size() - 1);
      if (w > 0) out.push_back(' ');
      out.insert(out.end(), lexicon[rank].begin(), lexicon[rank].end());
    }
    out.push_back(' ');
    append_code_point(out, kDanda);
    if (++sentences_in_paragraph >= 3 + draw.below(4)) {
      out.push_back('\n');
      sentences_in_paragraph = 0;
    } else {
      out.push_back(' ');
    }
  }

  // Cut back to a code point boundary, then pad to the exact target.
  std::size_t cut = target;
  if (out.size() > target) {
    while (cut > 0 && (out[cut] & 0xC0) == 0x80) --cut;
  }
  out.resize(cut);
  out.resize(target, '\n');
  return out;
}

}  // namespace hybc
