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

#include <sstream>

#include "cli.hpp"
#include "hybc/pipeline.hpp"
#include "test_util.hpp"

namespace hybc {
namespace {

using testing::read_bytes;
using testing::repeat;
using testing::TempDir;
using testing::write_bytes;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "hybc");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST_CASE("compress and decompress") {
  TempDir dir("cli");
  const Bytes original = repeat("वसुधैव कुटुम्बकम्। ", 500);
  write_bytes(dir / "in.txt", original);

  const Run c = run({"compress", "--pipeline", "Zstd+LZ4HC", (dir / "in.txt").string(),
                     (dir / "out.hybc").string()});
  CHECK(c.code == 0);
  CHECK(c.out.find("original: " + std::to_string(original.size())) != std::string::npos);
  CHECK(c.out.find("ratio: ") != std::string::npos);

  const Run d = run({"decompress", (dir / "out.hybc").string(), (dir / "back.txt").string()});
  CHECK(d.code == 0);
  CHECK(read_bytes(dir / "back.txt") == original);
}

TEST_CASE("every pipeline decompresses without being named") {
  TempDir dir("cli25");
  const Bytes original = repeat("क ख ग घ ङ ", 80);
  write_bytes(dir / "in.txt", original);
  for (const auto& spec : enumerate_pipelines()) {
    CAPTURE(spec.display_name());
    REQUIRE(run({"compress", "--pipeline", spec.display_name(), (dir / "in.txt").string(),
                 (dir / "c.hybc").string()})
                .code == 0);
    REQUIRE(run({"decompress", (dir / "c.hybc").string(), (dir / "o.txt").string()}).code == 0);
    CHECK(read_bytes(dir / "o.txt") == original);
  }
}

TEST_CASE("exit codes") {
  TempDir dir("clierr");
  write_bytes(dir / "in.txt", repeat("abc", 10));
  CHECK(run({"compress", "--pipeline", "Snappy", (dir / "in.txt").string(), "x"}).code == 2);
  CHECK(run({"compress", "--pipeline", "Zstd+Zstd", (dir / "in.txt").string(), "x"}).code == 2);
  CHECK(run({"compress", (dir / "in.txt").string(), "x"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);

  const Run missing = run({"compress", "--pipeline", "Zstd", (dir / "nope.txt").string(),
                           (dir / "x").string()});
  CHECK(missing.code == 1);
  CHECK(missing.err.find("IoFailure") != std::string::npos);

  REQUIRE(run({"compress", "--pipeline", "Brotli", (dir / "in.txt").string(),
               (dir / "c.hybc").string()})
              .code == 0);
  Bytes container = read_bytes(dir / "c.hybc");
  write_bytes(dir / "short.hybc", Bytes(container.begin(), container.end() - 2));
  const Run truncated = run({"decompress", (dir / "short.hybc").string(), (dir / "o").string()});
  CHECK(truncated.code == 1);
  CHECK(truncated.err.find("CorruptStream") != std::string::npos);

  write_bytes(dir / "plain.txt", repeat("not a container at all", 2));
  const Run magic = run({"decompress", (dir / "plain.txt").string(), (dir / "o").string()});
  CHECK(magic.code == 1);
  CHECK(magic.err.find("BadMagic") != std::string::npos);

  container[container.size() - 1] ^= 0;  // unchanged payload
  container[16] ^= 0xFF;                  // stored CRC
  write_bytes(dir / "crc.hybc", container);
  const Run crc = run({"decompress", (dir / "crc.hybc").string(), (dir / "o").string()});
  CHECK(crc.code == 1);
  CHECK(crc.err.find("IntegrityMismatch") != std::string::npos);

  CHECK(run({"bench", (dir / "in.txt").string(), "--reps", "0"}).code == 2);
  CHECK(run({"bench", (dir / "in.txt").string(), "--weights", "0.5,0.5,0.5"}).code == 2);
  CHECK(run({"bench", (dir / "in.txt").string(), "--ds-basis", "sideways"}).code == 2);
  CHECK(run({"bench", (dir / "in.txt").string(), "--format", "pdf"}).code == 2);
  CHECK(run({"bench"}).code == 2);
}

TEST_CASE("bench and report subcommands") {
  TempDir dir("clibench");
  write_bytes(dir / "a.txt", repeat("पानी ", 400));
  write_bytes(dir / "b.txt", repeat("आकाश ", 300));
  const Run b = run({"bench", (dir / "a.txt").string(), (dir / "b.txt").string(),
                     "--pipelines", "Zstd, Zstd+LZ4HC", "--pipeline", "LZMA", "--reps", "1",
                     "--out", (dir / "out").string(), "--format", "csv,json"});
  CHECK(b.code == 0);
  const Bytes csv = read_bytes(dir / "out" / "measurements.csv");
  CHECK(std::ranges::count(csv, '\n') == 1 + 2 * 3);
  CHECK(std::filesystem::exists(dir / "out" / "ranking_a.json"));
  CHECK_FALSE(std::filesystem::exists(dir / "out" / "ranking_a.md"));

  const Run r = run({"report", "--in", (dir / "out" / "measurements.json").string(), "--out",
                     (dir / "re").string(), "--weights", "1,0,0", "--ds-basis", "original",
                     "--format", "md"});
  CHECK(r.code == 0);
  CHECK(std::filesystem::exists(dir / "re" / "ranking_b.md"));
  CHECK(std::filesystem::exists(dir / "re" / "summary.md"));

  const Run synth = run({"bench", "--synthetic", "small", "--pipelines", "Zstd,LZ4HC",
                         "--reps", "1", "--out", (dir / "syn").string(), "--format", "csv"});
  CHECK(synth.code == 0);
  CHECK(std::filesystem::exists(dir / "syn" / "corpus" / "synthetic_small.txt"));
  CHECK(std::filesystem::exists(dir / "syn" / "ranking_synthetic_small.csv"));
}

}  // namespace
}  // namespace hybc
