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

#include "hybc/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

#include <json.hpp>

namespace hybc {
namespace {

using nlohmann::ordered_json;

constexpr const char* kCrColor = "#4e79a7";
constexpr const char* kCsColor = "#f28e2b";
constexpr const char* kDsColor = "#59a14f";

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string md_cell(std::string_view s) {
  std::string out;
  for (char c : s) {
    if (c == '|') out += '\\';
    out += c;
  }
  return out;
}

std::string fixed(double value, int digits) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::fixed, digits);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

// Table label: singles carry the "(Independent)" suffix used in the
// published tables.
std::string table_label(const PipelineSpec& p) {
  return p.is_hybrid() ? p.display_name() : p.display_name() + " (Independent)";
}

std::string svg_open(double width, double height, std::string_view title) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << format_full(width)
      << "\" height=\"" << format_full(height) << "\" viewBox=\"0 0 "
      << format_full(width) << ' ' << format_full(height)
      << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << "<title>" << xml_escape(title) << "</title>\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
      << "<text x=\"10\" y=\"20\" font-size=\"14\" font-weight=\"bold\">"
      << xml_escape(title) << "</text>\n";
  return out.str();
}

// ------------------------------------------------------------- ranking

std::string ranking_csv(std::span<const EfficiencyRow> rows) {
  std::string out(kRankingCsvHeader);
  out += '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const EfficiencyRow& r = rows[i];
    out += std::to_string(i + 1) + ',' + csv_field(r.pipeline.display_name()) +
           ',' + csv_field(r.dataset) + ',' +
           std::string(size_class_name(r.size_class)) + ',' + format_full(r.cr) +
           ',' + format_full(r.cs) + ',' + format_full(r.ds) + ',' +
           format_full(r.cr_norm) + ',' + format_full(r.cs_norm) + ',' +
           format_full(r.ds_norm) + ',' + format_full(r.efficiency) + '\n';
  }
  return out;
}

std::string ranking_json(std::span<const EfficiencyRow> rows,
                         const Weights& weights) {
  ordered_json doc;
  doc["weights"] = {{"cr", weights.cr()}, {"cs", weights.cs()}, {"ds", weights.ds()}};
  doc["rows"] = ordered_json::array();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const EfficiencyRow& r = rows[i];
    doc["rows"].push_back({{"rank", i + 1},
                           {"pipeline", r.pipeline.display_name()},
                           {"dataset", r.dataset},
                           {"size_class", size_class_name(r.size_class)},
                           {"cr", r.cr},
                           {"cs_mb_s", r.cs},
                           {"ds_mb_s", r.ds},
                           {"cr_norm", r.cr_norm},
                           {"cs_norm", r.cs_norm},
                           {"ds_norm", r.ds_norm},
                           {"efficiency", r.efficiency}});
  }
  return doc.dump(2) + '\n';
}

std::string ranking_markdown(std::span<const EfficiencyRow> rows) {
  std::ostringstream out;
  out << "| Rank | Algorithm/Hybrid | Dataset | CR | CS (MB/s) | DS (MB/s) | "
         "CR_norm | CS_norm | DS_norm | Efficiency |\n"
      << "|---:|:---|:---|---:|---:|---:|---:|---:|---:|---:|\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const EfficiencyRow& r = rows[i];
    out << "| " << i + 1 << " | " << md_cell(table_label(r.pipeline)) << " | "
        << md_cell(r.dataset) << " | " << fixed(r.cr, 2) << " | " << fixed(r.cs, 2)
        << " | " << fixed(r.ds, 2) << " | " << format_fixed4(r.cr_norm) << " | "
        << format_fixed4(r.cs_norm) << " | " << format_fixed4(r.ds_norm) << " | "
        << format_fixed4(r.efficiency) << " |\n";
  }
  return out.str();
}

std::string ranking_svg(std::span<const EfficiencyRow> rows,
                        const Weights& weights) {
  constexpr double kLabelWidth = 190;
  constexpr double kBarWidth = 560;
  constexpr double kRowHeight = 22;
  constexpr double kTop = 60;
  const double height = kTop + kRowHeight * static_cast<double>(rows.size()) + 30;
  const std::string title =
      rows.empty() ? std::string("Weighted normalized efficiency")
                   : "Weighted normalized efficiency (" + rows.front().dataset + ")";

  std::ostringstream out;
  out << svg_open(kLabelWidth + kBarWidth + 80, height, title);
  const std::pair<const char*, const char*> legend[] = {
      {kCrColor, "CR"}, {kCsColor, "CS"}, {kDsColor, "DS"}};
  double lx = kLabelWidth;
  for (const auto& [color, name] : legend) {
    out << "<rect x=\"" << format_full(lx) << "\" y=\"30\" width=\"12\" height=\"12\" fill=\""
        << color << "\"/><text x=\"" << format_full(lx + 16) << "\" y=\"40\">"
        << name << " (weighted, normalized)</text>\n";
    lx += 180;
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const EfficiencyRow& r = rows[i];
    const double y = kTop + kRowHeight * static_cast<double>(i);
    out << "<g class=\"bar\" data-pipeline=\"" << xml_escape(r.pipeline.display_name())
        << "\">\n";
    out << "<text x=\"" << format_full(kLabelWidth - 6) << "\" y=\""
        << format_full(y + 15) << "\" text-anchor=\"end\">"
        << xml_escape(r.pipeline.display_name()) << "</text>\n";
    double x = kLabelWidth;
    const std::pair<const char*, double> parts[] = {
        {kCrColor, weights.cr() * r.cr_norm},
        {kCsColor, weights.cs() * r.cs_norm},
        {kDsColor, weights.ds() * r.ds_norm}};
    for (const auto& [color, value] : parts) {
      const double w = value * kBarWidth;
      out << "<rect x=\"" << format_full(x) << "\" y=\"" << format_full(y + 3)
          << "\" width=\"" << format_full(w) << "\" height=\""
          << format_full(kRowHeight - 6) << "\" fill=\"" << color << "\"/>\n";
      x += w;
    }
    out << "<text x=\"" << format_full(x + 4) << "\" y=\"" << format_full(y + 15)
        << "\">" << format_fixed4(r.efficiency) << "</text>\n</g>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string_view report_format_extension(ReportFormat format) noexcept {
  switch (format) {
    case ReportFormat::kCsv: return "csv";
    case ReportFormat::kJson: return "json";
    case ReportFormat::kMarkdown: return "md";
    case ReportFormat::kSvg: return "svg";
  }
  return "txt";
}

std::optional<ReportFormat> report_format_from_name(std::string_view name) noexcept {
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "json") return ReportFormat::kJson;
  if (name == "md" || name == "markdown") return ReportFormat::kMarkdown;
  if (name == "svg") return ReportFormat::kSvg;
  return std::nullopt;
}

std::string format_full(double value) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

std::string format_fixed4(double value) { return fixed(value, 4); }

std::string emit_report(std::span<const EfficiencyRow> rows, ReportFormat format,
                        const Weights& weights) {
  switch (format) {
    case ReportFormat::kCsv: return ranking_csv(rows);
    case ReportFormat::kJson: return ranking_json(rows, weights);
    case ReportFormat::kMarkdown: return ranking_markdown(rows);
    case ReportFormat::kSvg: return ranking_svg(rows, weights);
  }
  return {};
}

std::string emit_balance(std::span<const BalancePoint> points,
                         ReportFormat format) {
  switch (format) {
    case ReportFormat::kCsv: {
      std::string out = "pipeline,dataset,cr,cs_mb_s\n";
      for (const BalancePoint& p : points) {
        out += csv_field(p.pipeline.display_name()) + ',' + csv_field(p.dataset) +
               ',' + format_full(p.cr) + ',' + format_full(p.cs) + '\n';
      }
      return out;
    }
    case ReportFormat::kJson: {
      ordered_json doc = ordered_json::array();
      for (const BalancePoint& p : points) {
        doc.push_back({{"pipeline", p.pipeline.display_name()},
                       {"dataset", p.dataset},
                       {"cr", p.cr},
                       {"cs_mb_s", p.cs}});
      }
      return doc.dump(2) + '\n';
    }
    case ReportFormat::kMarkdown: {
      std::ostringstream out;
      out << "| Algorithm | Compression Ratio | Compression Speed (MB/s) |\n"
          << "|:---|---:|---:|\n";
      for (const BalancePoint& p : points) {
        out << "| " << md_cell(table_label(p.pipeline)) << " | " << fixed(p.cr, 2)
            << " | " << fixed(p.cs, 2) << " |\n";
      }
      return out.str();
    }
    case ReportFormat::kSvg: {
      // CR (linear, y) against CS (log10, x).
      constexpr double kLeft = 70, kTop = 40, kPlotW = 600, kPlotH = 360;
      double cr_max = 1.0, cs_lo = 1.0, cs_hi = 10.0;
      if (!points.empty()) {
        cr_max = 0.0;
        cs_lo = points.front().cs;
        cs_hi = points.front().cs;
        for (const BalancePoint& p : points) {
          cr_max = std::max(cr_max, p.cr);
          cs_lo = std::min(cs_lo, p.cs);
          cs_hi = std::max(cs_hi, p.cs);
        }
      }
      const double lx_lo = std::floor(std::log10(std::max(cs_lo, 1e-9)));
      const double lx_hi = std::max(std::ceil(std::log10(std::max(cs_hi, 1e-9))), lx_lo + 1);
      const double y_hi = cr_max > 0 ? cr_max * 1.1 : 1.0;
      std::ostringstream out;
      out << svg_open(kLeft + kPlotW + 200, kTop + kPlotH + 60,
                      "Compression ratio vs compression speed");
      out << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + kPlotH << "\" x2=\""
          << kLeft + kPlotW << "\" y2=\"" << kTop + kPlotH << "\" stroke=\"black\"/>\n"
          << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft
          << "\" y2=\"" << kTop + kPlotH << "\" stroke=\"black\"/>\n"
          << "<text x=\"" << kLeft + kPlotW / 2 << "\" y=\"" << kTop + kPlotH + 40
          << "\" text-anchor=\"middle\">Compression speed (MB/s, log scale)</text>\n"
          << "<text x=\"15\" y=\"" << kTop + kPlotH / 2
          << "\" transform=\"rotate(-90 15 " << kTop + kPlotH / 2
          << ")\" text-anchor=\"middle\">Compression ratio</text>\n";
      for (double d = lx_lo; d <= lx_hi; d += 1.0) {
        const double x = kLeft + (d - lx_lo) / (lx_hi - lx_lo) * kPlotW;
        out << "<text x=\"" << format_full(x) << "\" y=\"" << kTop + kPlotH + 16
            << "\" text-anchor=\"middle\">" << format_full(std::pow(10.0, d))
            << "</text>\n";
      }
      for (const BalancePoint& p : points) {
        const double lx = std::log10(std::max(p.cs, 1e-9));
        const double x = kLeft + (lx - lx_lo) / (lx_hi - lx_lo) * kPlotW;
        const double y = kTop + kPlotH - p.cr / y_hi * kPlotH;
        out << "<g class=\"point\"><circle cx=\"" << format_full(x) << "\" cy=\""
            << format_full(y) << "\" r=\"4\" fill=\"" << kCrColor << "\"/><text x=\""
            << format_full(x + 6) << "\" y=\"" << format_full(y - 4) << "\">"
            << xml_escape(p.pipeline.display_name()) << "</text></g>\n";
      }
      out << "</svg>\n";
      return out.str();
    }
  }
  return {};
}

std::string emit_frequency(const std::map<CodecId, std::size_t>& counts,
                           std::size_t rows_considered, ReportFormat format) {
  const auto share = [&](std::size_t n) {
    return rows_considered == 0
               ? 0.0
               : static_cast<double>(n) / static_cast<double>(rows_considered);
  };
  std::vector<std::pair<CodecId, std::size_t>> sorted(counts.begin(), counts.end());
  std::ranges::stable_sort(sorted, std::greater<>{},
                           &std::pair<CodecId, std::size_t>::second);
  switch (format) {
    case ReportFormat::kCsv: {
      std::string out = "codec,count,share\n";
      for (const auto& [codec, n] : sorted) {
        out += std::string(codec_name(codec)) + ',' + std::to_string(n) + ',' +
               format_full(share(n)) + '\n';
      }
      return out;
    }
    case ReportFormat::kJson: {
      ordered_json doc;
      doc["rows_considered"] = rows_considered;
      doc["counts"] = ordered_json::array();
      for (const auto& [codec, n] : sorted) {
        doc["counts"].push_back(
            {{"codec", codec_name(codec)}, {"count", n}, {"share", share(n)}});
      }
      return doc.dump(2) + '\n';
    }
    case ReportFormat::kMarkdown: {
      std::ostringstream out;
      out << "Rows considered: " << rows_considered << "\n\n"
          << "| Codec | Appearances | Share |\n|:---|---:|---:|\n";
      for (const auto& [codec, n] : sorted) {
        out << "| " << codec_name(codec) << " | " << n << " | "
            << fixed(100.0 * share(n), 1) << "% |\n";
      }
      return out.str();
    }
    case ReportFormat::kSvg: {
      constexpr double kLeft = 60, kTop = 50, kPlotH = 240, kSlot = 90;
      std::size_t max_n = 1;
      for (const auto& [codec, n] : sorted) max_n = std::max(max_n, n);
      std::ostringstream out;
      out << svg_open(kLeft + kSlot * static_cast<double>(sorted.size()) + 40,
                      kTop + kPlotH + 50, "Component frequency in top-ranked pipelines");
      double x = kLeft;
      for (const auto& [codec, n] : sorted) {
        const double h = static_cast<double>(n) / static_cast<double>(max_n) * kPlotH;
        out << "<g class=\"bar\"><rect x=\"" << format_full(x) << "\" y=\""
            << format_full(kTop + kPlotH - h) << "\" width=\"" << kSlot - 20
            << "\" height=\"" << format_full(h) << "\" fill=\"" << kCrColor
            << "\"/><text x=\"" << format_full(x + (kSlot - 20) / 2) << "\" y=\""
            << kTop + kPlotH + 16 << "\" text-anchor=\"middle\">" << codec_name(codec)
            << "</text><text x=\"" << format_full(x + (kSlot - 20) / 2) << "\" y=\""
            << format_full(kTop + kPlotH - h - 4) << "\" text-anchor=\"middle\">" << n
            << "</text></g>\n";
        x += kSlot;
      }
      out << "</svg>\n";
      return out.str();
    }
  }
  return {};
}

std::string emit_top_k_markdown(std::span<const std::vector<EfficiencyRow>> cohorts,
                                std::size_t k) {
  std::ostringstream out;
  out << "| Rank |";
  for (const auto& cohort : cohorts) {
    const std::string name = cohort.empty() ? std::string("?") : cohort.front().dataset;
    out << " Algorithm/Hybrid (" << md_cell(name) << ") | Efficiency ("
        << md_cell(name) << ") |";
  }
  out << "\n|---:|";
  for (std::size_t i = 0; i < cohorts.size(); ++i) out << ":---|---:|";
  out << '\n';
  std::size_t depth = 0;
  for (const auto& cohort : cohorts) depth = std::max(depth, std::min(k, cohort.size()));
  for (std::size_t rank = 0; rank < depth; ++rank) {
    out << "| " << rank + 1 << " |";
    for (const auto& cohort : cohorts) {
      if (rank < cohort.size()) {
        out << ' ' << md_cell(table_label(cohort[rank].pipeline)) << " | "
            << format_fixed4(cohort[rank].efficiency) << " |";
      } else {
        out << "  |  |";
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hybc
