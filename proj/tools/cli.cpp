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

#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hybc/bench.hpp"
#include "hybc/corpus.hpp"
#include "hybc/error.hpp"
#include "hybc/pipeline.hpp"
#include "hybc/report.hpp"

namespace hybc::cli {
namespace {

// Thrown for argument values CLI11 accepts syntactically but we reject.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) parts.push_back(part);
  return parts;
}

Bytes read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + path);
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorCode::kIoFailure, "cannot read " + path);
  return data;
}

void write_file(const std::string& path, const Bytes& data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorCode::kIoFailure, "cannot write " + path);
}

PipelineSpec pipeline_arg(const std::string& text) {
  try {
    return parse_pipeline(text);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

Weights weights_arg(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw UsageError("--weights expects cr,cs,ds");
  double w[3];
  for (int i = 0; i < 3; ++i) {
    const std::string& p = parts[i];
    auto [end, ec] = std::from_chars(p.data(), p.data() + p.size(), w[i]);
    if (ec != std::errc{} || end != p.data() + p.size()) {
      throw UsageError("--weights: not a number: '" + p + "'");
    }
  }
  try {
    return Weights::make(w[0], w[1], w[2]);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

DsBasis ds_basis_arg(const std::string& text) {
  if (text == "compressed") return DsBasis::kCompressed;
  if (text == "original") return DsBasis::kOriginal;
  throw UsageError("--ds-basis must be 'compressed' or 'original'");
}

std::set<ReportFormat> formats_arg(const std::string& text) {
  std::set<ReportFormat> formats;
  for (const std::string& name : split(text, ',')) {
    const auto f = report_format_from_name(name);
    if (!f) throw UsageError("unknown format '" + name + "'");
    formats.insert(*f);
  }
  if (formats.empty()) throw UsageError("--format needs at least one format");
  return formats;
}

int cmd_compress(const std::string& pipeline, const std::string& in_path,
                 const std::string& out_path, std::ostream& out) {
  const PipelineSpec spec = pipeline_arg(pipeline);
  const Bytes input = read_file(in_path);
  const Bytes container = compress_pipeline(spec, input);
  write_file(out_path, container);
  out << "pipeline: " << spec.display_name() << '\n'
      << "original: " << input.size() << " bytes\n"
      << "compressed: " << container.size() << " bytes\n"
      << "ratio: "
      << format_fixed4(static_cast<double>(input.size()) /
                       static_cast<double>(container.size()))
      << '\n';
  return kExitOk;
}

int cmd_decompress(const std::string& in_path, const std::string& out_path,
                   std::ostream& out) {
  const Bytes container = read_file(in_path);
  const ContainerHeader header = parse_header(container);
  const Bytes restored = decompress_pipeline(container);
  write_file(out_path, restored);
  out << "pipeline: " << header.pipeline().display_name() << '\n'
      << "restored: " << restored.size() << " bytes (CRC-32 verified)\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Chained lossless compression and benchmarking", "hybc"};
  app.require_subcommand(1);

  std::string pipeline, in_path, out_path;
  auto* compress = app.add_subcommand("compress", "Compress a file into a .hybc container");
  compress->add_option("--pipeline", pipeline, "e.g. \"Zstd+LZ4HC\"")->required();
  compress->add_option("input", in_path)->required();
  compress->add_option("output", out_path)->required();

  auto* decompress = app.add_subcommand("decompress", "Restore a .hybc container");
  decompress->add_option("input", in_path)->required();
  decompress->add_option("output", out_path)->required();

  std::vector<std::string> inputs;
  std::vector<std::string> pipelines;
  std::vector<std::string> synthetic;
  std::uint64_t seed = 42;
  int reps = 5;
  std::string weights = "0.4,0.3,0.3";
  std::string ds_basis = "compressed";
  std::string out_dir = "hybc-report";
  std::string formats = "csv,json,md,svg";
  std::string versus = "Zstd+LZ4HC";
  std::size_t top_k = 10;

  const auto add_scoring_flags = [&](CLI::App* cmd) {
    cmd->add_option("--weights", weights, "cr,cs,ds weights summing to 1");
    cmd->add_option("--ds-basis", ds_basis, "compressed | original");
    cmd->add_option("--out", out_dir, "Output directory");
    cmd->add_option("--format", formats, "Comma list of csv,json,md,svg");
    cmd->add_option("--head-to-head", versus, "Pipeline compared with the singles");
    cmd->add_option("--top-k", top_k, "Rows per dataset in frequency analysis");
  };

  auto* bench = app.add_subcommand("bench", "Benchmark pipelines on text corpora");
  bench->add_option("inputs", inputs, "UTF-8 text files");
  bench->add_option("--pipelines,--pipeline", pipelines,
                    "Pipelines to run (default: all 25); comma separated or repeated")
      ->delimiter(',');
  bench->add_option("--reps", reps, "Timed repetitions per phase");
  bench->add_option("--synthetic", synthetic,
                    "Also generate a synthetic corpus: small, medium or large")
      ->delimiter(',');
  bench->add_option("--seed", seed, "Seed for --synthetic corpora");
  add_scoring_flags(bench);

  std::string measurements_path;
  auto* report = app.add_subcommand("report", "Re-score saved measurements");
  report->add_option("--in", measurements_path, "measurements.json from bench")->required();
  add_scoring_flags(report);

  std::vector<std::string> argv_tail(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(argv_tail.begin(), argv_tail.end());  // CLI11 consumes from the back
  try {
    app.parse(argv_tail);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compress) return cmd_compress(pipeline, in_path, out_path, out);
    if (*decompress) return cmd_decompress(in_path, out_path, out);

    BenchConfig config;
    config.weights = weights_arg(weights);
    config.ds_basis = ds_basis_arg(ds_basis);
    config.output_dir = out_dir;
    config.formats = formats_arg(formats);
    config.head_to_head = pipeline_arg(versus);
    config.top_k = top_k;
    if (top_k < 1) throw UsageError("--top-k must be >= 1");

    if (*report) {
      std::ifstream in(measurements_path);
      if (!in) throw Error(ErrorCode::kIoFailure, "cannot open " + measurements_path);
      nlohmann::json doc;
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorCode::kIoFailure, measurements_path + ": " + e.what());
      }
      const auto rows = measurements_from_json(doc);
      if (doc.contains("environment") && doc["environment"].contains("repetitions")) {
        config.repetitions = doc["environment"]["repetitions"].get<int>();
      }
      for (const auto& path : write_reports(rows, config)) out << "wrote " << path << '\n';
      return kExitOk;
    }

    // bench
    if (reps < 1) throw UsageError("--reps must be >= 1");
    config.repetitions = reps;
    for (const std::string& p : pipelines) config.pipelines.push_back(pipeline_arg(p));
    for (const std::string& name : inputs) config.inputs.emplace_back(name);
    if (!synthetic.empty()) {
      const std::filesystem::path corpus_dir = config.output_dir / "corpus";
      std::filesystem::create_directories(corpus_dir);
      for (const std::string& name : synthetic) {
        const auto size_class = size_class_from_name(name);
        if (!size_class) throw UsageError("unknown size class '" + name + "'");
        const auto path = corpus_dir / ("synthetic_" + std::string(size_class_name(*size_class)) +
                                        ".txt");
        write_file(path.string(), generate_synthetic(*size_class, seed));
        config.inputs.push_back(path);
      }
    }
    if (config.inputs.empty()) throw UsageError("bench needs at least one input");
    config.progress = &err;

    const BenchResult result = run_bench(config);
    for (const auto& path : result.written_files) out << "wrote " << path << '\n';
    if (!result.all_succeeded()) {
      err << "some pipelines failed; see measurements report\n";
      return kExitFailure;
    }
    return kExitOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace hybc::cli
