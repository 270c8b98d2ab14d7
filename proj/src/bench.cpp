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

#include "hybc/bench.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <map>

#include "hybc/corpus.hpp"
#include "hybc/error.hpp"

namespace hybc {
namespace {

using nlohmann::json;

std::string file_safe(std::string_view name) {
  std::string out;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    out += ok ? c : '_';
  }
  return out.empty() ? std::string("dataset") : out;
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void write_file(const std::filesystem::path& path, const std::string& content,
                std::vector<std::string>& written) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  out << content;
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path.string());
  written.push_back(path.string());
}

// Groups successful rows into per-dataset cohorts in first-seen order.
std::vector<std::vector<Measurement>> cohorts_of(std::span<const BenchRow> rows) {
  std::vector<std::vector<Measurement>> cohorts;
  std::map<std::string, std::size_t> index;
  for (const BenchRow& row : rows) {
    auto [it, fresh] = index.try_emplace(row.dataset, cohorts.size());
    if (fresh) cohorts.emplace_back();
    if (row.measurement) cohorts[it->second].push_back(*row.measurement);
  }
  return cohorts;
}

}  // namespace

void BenchConfig::validate() const {
  if (inputs.empty()) throw Error(ErrorCode::kPrecondition, "no input files");
  if (formats.empty()) throw Error(ErrorCode::kPrecondition, "no output format");
  if (repetitions < 1) throw Error(ErrorCode::kPrecondition, "repetitions must be >= 1");
  if (top_k < 1) throw Error(ErrorCode::kPrecondition, "top-k must be >= 1");
}

bool BenchResult::all_succeeded() const {
  return std::ranges::all_of(rows, [](const BenchRow& r) { return r.error.empty(); });
}

json environment_metadata(const BenchConfig& config) {
  json env;
  json codecs = json::object();
  for (CodecId codec : kAllCodecs) {
    const CodecConfig params = codec_params(codec);
    json entry = {{"library", codec_library_version(codec)}, {"level", params.level}};
    if (params.window_log) entry["window_log"] = *params.window_log;
    if (params.block_size_kb) entry["block_size_kb"] = *params.block_size_kb;
    entry["dictionary"] = nullptr;
    codecs[std::string(codec_name(codec))] = entry;
  }
  env["codecs"] = codecs;
  env["clock"] = "std::chrono::steady_clock";
  env["timing"] = "median wall time per phase, one untimed warm-up, in-memory buffers";
  env["repetitions"] = config.repetitions;
  env["ds_basis"] = ds_basis_name(config.ds_basis);
  env["weights"] = {{"cr", config.weights.cr()},
                    {"cs", config.weights.cs()},
                    {"ds", config.weights.ds()}};
  env["bytes_per_mb"] = 1048576;
  env["compressed_size_includes_header_bytes"] = kHeaderSize;
#if defined(__VERSION__)
  env["compiler"] = __VERSION__;
#endif
  env["generated_at"] = utc_timestamp();
  return env;
}

std::string emit_measurements_csv(std::span<const BenchRow> rows, DsBasis basis) {
  std::string out =
      "dataset,size_class,pipeline,status,original_bytes,compressed_bytes,"
      "compress_seconds,decompress_seconds,repetitions,cr,cs_mb_s,ds_mb_s,error\n";
  for (const BenchRow& row : rows) {
    out += row.dataset + ',' + std::string(size_class_name(row.size_class)) + ',' +
           row.pipeline.display_name() + ',';
    if (row.measurement) {
      const Measurement& m = *row.measurement;
      out += "ok," + std::to_string(m.original_bytes) + ',' +
             std::to_string(m.compressed_bytes) + ',' + format_full(m.compress_seconds) +
             ',' + format_full(m.decompress_seconds) + ',' +
             std::to_string(m.repetitions) + ',' + format_full(compression_ratio(m)) +
             ',' + format_full(compression_speed(m)) + ',' +
             format_full(decompression_speed(m, basis)) + ",\n";
    } else {
      std::string message = row.error;
      for (char& c : message) {
        if (c == ',' || c == '\n' || c == '"') c = ';';
      }
      out += "error,,,,,,,,," + message + '\n';
    }
  }
  return out;
}

json measurements_to_json(std::span<const BenchRow> rows, const BenchConfig& config) {
  json doc;
  doc["environment"] = environment_metadata(config);
  doc["measurements"] = json::array();
  for (const BenchRow& row : rows) {
    json entry = {{"dataset", row.dataset},
                  {"size_class", size_class_name(row.size_class)},
                  {"pipeline", row.pipeline.display_name()}};
    if (row.measurement) {
      const Measurement& m = *row.measurement;
      entry["status"] = "ok";
      entry["original_bytes"] = m.original_bytes;
      entry["compressed_bytes"] = m.compressed_bytes;
      entry["compress_seconds"] = m.compress_seconds;
      entry["decompress_seconds"] = m.decompress_seconds;
      entry["repetitions"] = m.repetitions;
      entry["cr"] = compression_ratio(m);
      entry["cs_mb_s"] = compression_speed(m);
      entry["ds_mb_s"] = decompression_speed(m, config.ds_basis);
    } else {
      entry["status"] = "error";
      entry["error"] = row.error;
    }
    doc["measurements"].push_back(entry);
  }
  return doc;
}

std::vector<BenchRow> measurements_from_json(const json& doc) {
  std::vector<BenchRow> rows;
  try {
    for (const json& entry : doc.at("measurements")) {
      BenchRow row;
      row.dataset = entry.at("dataset").get<std::string>();
      row.pipeline = parse_pipeline(entry.at("pipeline").get<std::string>());
      const auto size_class =
          size_class_from_name(entry.at("size_class").get<std::string>());
      if (!size_class) throw Error(ErrorCode::kPrecondition, "unknown size class");
      row.size_class = *size_class;
      if (entry.at("status") == "ok") {
        Measurement m;
        m.pipeline = row.pipeline;
        m.dataset = row.dataset;
        m.original_bytes = entry.at("original_bytes").get<std::uint64_t>();
        m.compressed_bytes = entry.at("compressed_bytes").get<std::uint64_t>();
        m.compress_seconds = entry.at("compress_seconds").get<double>();
        m.decompress_seconds = entry.at("decompress_seconds").get<double>();
        m.repetitions = entry.at("repetitions").get<int>();
        row.measurement = m;
      } else {
        row.error = entry.value("error", std::string("unknown error"));
      }
      rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kPrecondition, std::string("malformed measurements: ") + e.what());
  }
  return rows;
}

std::vector<std::string> write_reports(std::span<const BenchRow> rows,
                                       const BenchConfig& config) {
  std::vector<std::string> written;
  const auto& dir = config.output_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIoFailure, "cannot create " + dir.string());

  const json env = environment_metadata(config);
  const auto has = [&](ReportFormat f) { return config.formats.contains(f); };

  if (has(ReportFormat::kCsv)) {
    write_file(dir / "measurements.csv", emit_measurements_csv(rows, config.ds_basis),
               written);
  }
  if (has(ReportFormat::kJson)) {
    write_file(dir / "measurements.json", measurements_to_json(rows, config).dump(2) + '\n',
               written);
  }

  std::vector<std::vector<EfficiencyRow>> ranked_cohorts;
  std::vector<std::string> skipped;
  for (const auto& cohort : cohorts_of(rows)) {
    if (cohort.size() < 2) {
      if (!cohort.empty()) skipped.push_back(cohort.front().dataset);
      continue;
    }
    ranked_cohorts.push_back(rank_pipelines(cohort, config.weights, config.ds_basis));
  }

  for (const auto& ranked : ranked_cohorts) {
    const std::string stem = file_safe(ranked.front().dataset);
    const auto h2h = head_to_head(ranked, config.head_to_head);
    const auto balance = balance_table(ranked);
    for (ReportFormat f : config.formats) {
      const std::string ext(report_format_extension(f));
      std::string ranking = emit_report(ranked, f, config.weights);
      std::string versus = emit_report(h2h, f, config.weights);
      if (f == ReportFormat::kJson) {
        json doc = json::parse(ranking);
        doc["environment"] = env;
        ranking = doc.dump(2) + '\n';
        json vdoc = json::parse(versus);
        vdoc["environment"] = env;
        versus = vdoc.dump(2) + '\n';
      }
      write_file(dir / ("ranking_" + stem + "." + ext), ranking, written);
      write_file(dir / ("head_to_head_" + stem + "." + ext), versus, written);
      write_file(dir / ("balance_" + stem + "." + ext), emit_balance(balance, f), written);
    }
  }

  std::vector<EfficiencyRow> all_ranked;
  std::size_t considered = 0;
  for (const auto& ranked : ranked_cohorts) {
    all_ranked.insert(all_ranked.end(), ranked.begin(), ranked.end());
    considered += std::min(config.top_k, ranked.size());
  }
  const auto counts = component_frequency(all_ranked, config.top_k);
  for (ReportFormat f : config.formats) {
    write_file(dir / ("frequency." + std::string(report_format_extension(f))),
               emit_frequency(counts, considered, f), written);
  }

  if (has(ReportFormat::kMarkdown)) {
    std::string summary = "# Benchmark summary\n\n";
    summary += "Weights: CR " + format_full(config.weights.cr()) + ", CS " +
               format_full(config.weights.cs()) + ", DS " +
               format_full(config.weights.ds()) + ". Decompression speed basis: " +
               std::string(ds_basis_name(config.ds_basis)) +
               " bytes. Compressed sizes include the 20-byte container header.\n\n";
    if (!ranked_cohorts.empty()) {
      summary += "## Top " + std::to_string(config.top_k) + " per dataset\n\n";
      summary += emit_top_k_markdown(ranked_cohorts, config.top_k) + '\n';
    }
    for (const std::string& name : skipped) {
      summary += "Dataset `" + name + "` has fewer than two successful pipelines; not ranked.\n";
    }
    std::size_t failures = 0;
    for (const BenchRow& row : rows) failures += row.error.empty() ? 0 : 1;
    if (failures > 0) {
      summary += "\n" + std::to_string(failures) + " pipeline run(s) failed; see measurements.\n";
    }
    write_file(dir / "summary.md", summary, written);
  }
  return written;
}

BenchResult run_bench(const BenchConfig& config) {
  config.validate();
  const std::vector<PipelineSpec> pipelines =
      config.pipelines.empty() ? enumerate_pipelines() : config.pipelines;

  BenchResult result;
  std::map<std::string, int> name_uses;
  for (const auto& path : config.inputs) {
    std::string name = path.stem().string();
    if (const int n = name_uses[name]++; n > 0) name += "_" + std::to_string(n + 1);

    Bytes data;
    std::string load_error;
    SizeClass size_class = SizeClass::kSmall;
    try {
      auto [descriptor, bytes] = load_dataset(path);
      size_class = descriptor.size_class;
      data = std::move(bytes);
    } catch (const Error& e) {
      load_error = e.what();
    }

    for (const PipelineSpec& spec : pipelines) {
      BenchRow row;
      row.dataset = name;
      row.size_class = size_class;
      row.pipeline = spec;
      if (!load_error.empty()) {
        row.error = load_error;
      } else {
        try {
          row.measurement = measure(spec, data, config.repetitions, name);
        } catch (const Error& e) {
          row.error = e.what();
        }
      }
      if (config.progress) {
        *config.progress << name << " | " << spec.display_name() << " | "
                         << (row.error.empty() ? "ok" : row.error) << '\n';
      }
      result.rows.push_back(std::move(row));
    }
  }
  result.written_files = write_reports(result.rows, config);
  return result;
}

}  // namespace hybc
