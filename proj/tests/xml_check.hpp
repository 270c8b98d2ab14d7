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

#include <algorithm>
#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace hybc::testing {

struct XmlStats {
  bool well_formed = false;
  std::string root;
  std::size_t elements = 0;
  // Count of elements carrying class="bar" / class="point".
  std::size_t bars = 0;
  std::size_t points = 0;
};

// Minimal checker for the SVG we emit: balanced tags, quoted attributes,
// a single root, no stray '<' or '&'.
inline XmlStats check_xml(std::string_view doc) {
  XmlStats stats;
  std::vector<std::string> open;
  std::size_t i = 0;
  bool seen_root = false;
  const auto fail = [&] {
    stats.well_formed = false;
    return stats;
  };
  while (i < doc.size()) {
    if (doc[i] == '&') {
      const auto semi = doc.find(';', i);
      if (semi == std::string_view::npos || semi - i > 6) return fail();
      i = semi + 1;
      continue;
    }
    if (doc[i] != '<') {
      if (open.empty() && !std::isspace(static_cast<unsigned char>(doc[i]))) return fail();
      ++i;
      continue;
    }
    if (doc.substr(i, 2) == "<?") {
      const auto end = doc.find("?>", i);
      if (end == std::string_view::npos || seen_root) return fail();
      i = end + 2;
      continue;
    }
    const auto end = doc.find('>', i);
    if (end == std::string_view::npos) return fail();
    std::string_view tag = doc.substr(i + 1, end - i - 1);
    i = end + 1;
    if (tag.empty()) return fail();
    if (tag.front() == '/') {
      if (open.empty() || open.back() != tag.substr(1)) return fail();
      open.pop_back();
      continue;
    }
    const bool self_closing = tag.back() == '/';
    if (self_closing) tag.remove_suffix(1);
    const auto name_end = tag.find_first_of(" \t\n");
    const std::string name(tag.substr(0, name_end));
    // Attribute quotes must balance.
    if (std::count(tag.begin(), tag.end(), '"') % 2 != 0) return fail();
    if (tag.find('<') != std::string_view::npos) return fail();
    if (open.empty()) {
      if (seen_root) return fail();
      seen_root = true;
      stats.root = name;
    }
    ++stats.elements;
    if (tag.find("class=\"bar\"") != std::string_view::npos) ++stats.bars;
    if (tag.find("class=\"point\"") != std::string_view::npos) ++stats.points;
    if (!self_closing) open.push_back(name);
  }
  stats.well_formed = seen_root && open.empty();
  return stats;
}

}  // namespace hybc::testing
