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

#include "hybc/codec.hpp"

#include <algorithm>
#include <cctype>
#include <climits>
#include <cstdlib>
#include <memory>

#include <brotli/decode.h>
#include <brotli/encode.h>
#include <bzlib.h>
#include <lz4.h>
#include <lz4frame.h>
#include <lzma.h>
#include <zstd.h>

#include "hybc/error.hpp"

// bzip2 is built without stdio and reports assertion failures here.
extern "C" void bz_internal_error(int errcode) {
  (void)errcode;
  std::abort();
}

namespace hybc {
namespace {

constexpr int kLevel = 6;
constexpr int kBrotliWindowLog = 22;
constexpr int kBzip2BlockSizeKb = 900;

// bzip2 and parts of the lz4/brotli APIs take 32-bit lengths; feed large
// buffers in pieces.
constexpr std::size_t kChunk = std::size_t{1} << 30;

[[noreturn]] void fail(CodecId codec, const std::string& what) {
  throw Error(ErrorCode::kCodecFailure,
              std::string(codec_name(codec)) + " encoder: " + what);
}

[[noreturn]] void corrupt(CodecId codec, const std::string& what) {
  throw Error(ErrorCode::kCorruptStream,
              std::string(codec_name(codec)) + " decoder: " + what);
}

// Grows `out` so at least `min_free` bytes are writable past `used`.
void reserve_tail(Bytes& out, std::size_t used, std::size_t min_free) {
  if (out.size() - used < min_free) {
    out.resize(std::max(out.size() * 2, used + min_free));
  }
}

std::size_t initial_output_guess(std::size_t input_size) {
  return std::max<std::size_t>(input_size * 4, 4096);
}

// ---------------------------------------------------------------- LZMA (xz)

Bytes lzma_compress(ByteView input) {
  Bytes out(lzma_stream_buffer_bound(input.size()));
  std::size_t out_pos = 0;
  const lzma_ret ret = lzma_easy_buffer_encode(
      kLevel, LZMA_CHECK_CRC64, nullptr, input.data(), input.size(),
      out.data(), &out_pos, out.size());
  if (ret != LZMA_OK) fail(CodecId::kLzma, "lzma_ret " + std::to_string(ret));
  out.resize(out_pos);
  return out;
}

Bytes lzma_decompress(ByteView input) {
  lzma_stream strm = LZMA_STREAM_INIT;
  if (lzma_stream_decoder(&strm, UINT64_MAX, 0) != LZMA_OK) {
    corrupt(CodecId::kLzma, "cannot initialise decoder");
  }
  std::unique_ptr<lzma_stream, void (*)(lzma_stream*)> guard(&strm, lzma_end);

  Bytes out(initial_output_guess(input.size()));
  std::size_t used = 0;
  strm.next_in = input.data();
  strm.avail_in = input.size();
  for (;;) {
    reserve_tail(out, used, 1);
    strm.next_out = out.data() + used;
    strm.avail_out = out.size() - used;
    const lzma_ret ret = lzma_code(&strm, LZMA_FINISH);
    used = out.size() - strm.avail_out;
    if (ret == LZMA_STREAM_END) break;
    if (ret == LZMA_OK) continue;
    if (ret == LZMA_BUF_ERROR && strm.avail_out != 0) {
      corrupt(CodecId::kLzma, "truncated stream");
    }
    if (ret == LZMA_BUF_ERROR) continue;
    corrupt(CodecId::kLzma, "lzma_ret " + std::to_string(ret));
  }
  if (strm.avail_in != 0) corrupt(CodecId::kLzma, "trailing bytes");
  out.resize(used);
  return out;
}

// --------------------------------------------------------------------- Zstd

Bytes zstd_compress(ByteView input) {
  std::unique_ptr<ZSTD_CCtx, decltype(&ZSTD_freeCCtx)> cctx(ZSTD_createCCtx(),
                                                           ZSTD_freeCCtx);
  if (!cctx) fail(CodecId::kZstd, "out of memory");
  ZSTD_CCtx_setParameter(cctx.get(), ZSTD_c_compressionLevel, kLevel);
  ZSTD_CCtx_setParameter(cctx.get(), ZSTD_c_nbWorkers, 0);
  Bytes out(ZSTD_compressBound(input.size()));
  const std::size_t n = ZSTD_compress2(cctx.get(), out.data(), out.size(),
                                       input.data(), input.size());
  if (ZSTD_isError(n)) fail(CodecId::kZstd, ZSTD_getErrorName(n));
  out.resize(n);
  return out;
}

Bytes zstd_decompress(ByteView input) {
  std::unique_ptr<ZSTD_DCtx, decltype(&ZSTD_freeDCtx)> dctx(ZSTD_createDCtx(),
                                                           ZSTD_freeDCtx);
  if (!dctx) corrupt(CodecId::kZstd, "out of memory");
  const unsigned long long declared =
      ZSTD_getFrameContentSize(input.data(), input.size());
  if (declared == ZSTD_CONTENTSIZE_ERROR) corrupt(CodecId::kZstd, "bad frame");

  Bytes out(declared != ZSTD_CONTENTSIZE_UNKNOWN &&
                    declared <= (std::size_t{1} << 30)
                ? static_cast<std::size_t>(declared) + 1
                : initial_output_guess(input.size()));
  std::size_t used = 0;
  ZSTD_inBuffer in{input.data(), input.size(), 0};
  std::size_t remaining_hint = 1;
  while (remaining_hint != 0) {
    reserve_tail(out, used, ZSTD_DStreamOutSize());
    ZSTD_outBuffer ob{out.data() + used, out.size() - used, 0};
    const std::size_t before_in = in.pos;
    remaining_hint = ZSTD_decompressStream(dctx.get(), &ob, &in);
    if (ZSTD_isError(remaining_hint)) {
      corrupt(CodecId::kZstd, ZSTD_getErrorName(remaining_hint));
    }
    used += ob.pos;
    if (remaining_hint != 0 && in.pos == in.size && ob.pos < ob.size &&
        in.pos == before_in) {
      corrupt(CodecId::kZstd, "truncated frame");
    }
  }
  if (in.pos != in.size) corrupt(CodecId::kZstd, "trailing bytes");
  out.resize(used);
  return out;
}

// ------------------------------------------------------------------- Brotli

Bytes brotli_compress(ByteView input) {
  std::size_t bound = BrotliEncoderMaxCompressedSize(input.size());
  if (bound == 0) bound = input.size() + (input.size() >> 2) + 1024;
  Bytes out(bound);
  std::size_t encoded = out.size();
  if (!BrotliEncoderCompress(kLevel, kBrotliWindowLog, BROTLI_MODE_GENERIC,
                             input.size(), input.data(), &encoded,
                             out.data())) {
    fail(CodecId::kBrotli, "BrotliEncoderCompress failed");
  }
  out.resize(encoded);
  return out;
}

Bytes brotli_decompress(ByteView input) {
  std::unique_ptr<BrotliDecoderState, decltype(&BrotliDecoderDestroyInstance)>
      state(BrotliDecoderCreateInstance(nullptr, nullptr, nullptr),
            BrotliDecoderDestroyInstance);
  if (!state) corrupt(CodecId::kBrotli, "out of memory");

  Bytes out(initial_output_guess(input.size()));
  std::size_t used = 0;
  std::size_t avail_in = input.size();
  const std::uint8_t* next_in = input.data();
  for (;;) {
    reserve_tail(out, used, 1);
    std::size_t avail_out = out.size() - used;
    std::uint8_t* next_out = out.data() + used;
    const BrotliDecoderResult r = BrotliDecoderDecompressStream(
        state.get(), &avail_in, &next_in, &avail_out, &next_out, nullptr);
    used = out.size() - avail_out;
    if (r == BROTLI_DECODER_RESULT_SUCCESS) break;
    if (r == BROTLI_DECODER_RESULT_NEEDS_MORE_OUTPUT) {
      reserve_tail(out, used, out.size());
      continue;
    }
    if (r == BROTLI_DECODER_RESULT_NEEDS_MORE_INPUT) {
      corrupt(CodecId::kBrotli, "truncated stream");
    }
    corrupt(CodecId::kBrotli,
            BrotliDecoderErrorString(BrotliDecoderGetErrorCode(state.get())));
  }
  if (avail_in != 0) corrupt(CodecId::kBrotli, "trailing bytes");
  out.resize(used);
  return out;
}

// -------------------------------------------------------------------- Bzip2

Bytes bzip2_compress(ByteView input) {
  bz_stream strm{};
  if (BZ2_bzCompressInit(&strm, kBzip2BlockSizeKb / 100, 0, 0) != BZ_OK) {
    fail(CodecId::kBzip2, "BZ2_bzCompressInit failed");
  }
  std::unique_ptr<bz_stream, int (*)(bz_stream*)> guard(&strm,
                                                       BZ2_bzCompressEnd);
  Bytes out(input.size() + input.size() / 100 + 600);
  std::size_t used = 0;
  std::size_t consumed = 0;
  for (;;) {
    const std::size_t feed = std::min(kChunk, input.size() - consumed);
    strm.next_in = const_cast<char*>(
        reinterpret_cast<const char*>(input.data() + consumed));
    strm.avail_in = static_cast<unsigned>(feed);
    reserve_tail(out, used, 4096);
    const std::size_t free_space = std::min(kChunk, out.size() - used);
    strm.next_out = reinterpret_cast<char*>(out.data() + used);
    strm.avail_out = static_cast<unsigned>(free_space);
    const bool last = consumed + feed == input.size();
    const int ret = BZ2_bzCompress(&strm, last ? BZ_FINISH : BZ_RUN);
    consumed += feed - strm.avail_in;
    used += free_space - strm.avail_out;
    if (ret == BZ_STREAM_END) break;
    if (ret != BZ_RUN_OK && ret != BZ_FINISH_OK) {
      fail(CodecId::kBzip2, "BZ2_bzCompress returned " + std::to_string(ret));
    }
  }
  out.resize(used);
  return out;
}

Bytes bzip2_decompress(ByteView input) {
  bz_stream strm{};
  if (BZ2_bzDecompressInit(&strm, 0, 0) != BZ_OK) {
    corrupt(CodecId::kBzip2, "cannot initialise decoder");
  }
  std::unique_ptr<bz_stream, int (*)(bz_stream*)> guard(&strm,
                                                       BZ2_bzDecompressEnd);
  Bytes out(initial_output_guess(input.size()));
  std::size_t used = 0;
  std::size_t consumed = 0;
  for (;;) {
    const std::size_t feed = std::min(kChunk, input.size() - consumed);
    strm.next_in = const_cast<char*>(
        reinterpret_cast<const char*>(input.data() + consumed));
    strm.avail_in = static_cast<unsigned>(feed);
    reserve_tail(out, used, 4096);
    const std::size_t free_space = std::min(kChunk, out.size() - used);
    strm.next_out = reinterpret_cast<char*>(out.data() + used);
    strm.avail_out = static_cast<unsigned>(free_space);
    const int ret = BZ2_bzDecompress(&strm);
    const std::size_t took = feed - strm.avail_in;
    const std::size_t produced = free_space - strm.avail_out;
    consumed += took;
    used += produced;
    if (ret == BZ_STREAM_END) break;
    if (ret != BZ_OK) {
      corrupt(CodecId::kBzip2, "BZ2_bzDecompress returned " +
                                   std::to_string(ret));
    }
    if (took == 0 && produced == 0) {
      corrupt(CodecId::kBzip2, "truncated stream");
    }
  }
  if (consumed != input.size()) corrupt(CodecId::kBzip2, "trailing bytes");
  out.resize(used);
  return out;
}

// ---------------------------------------------------------- LZ4HC (frame)

Bytes lz4hc_compress(ByteView input) {
  LZ4F_preferences_t prefs = LZ4F_INIT_PREFERENCES;
  prefs.compressionLevel = kLevel;
  prefs.frameInfo.contentSize = input.size();
  Bytes out(LZ4F_compressFrameBound(input.size(), &prefs));
  const std::size_t n = LZ4F_compressFrame(out.data(), out.size(),
                                           input.data(), input.size(), &prefs);
  if (LZ4F_isError(n)) fail(CodecId::kLz4hc, LZ4F_getErrorName(n));
  out.resize(n);
  return out;
}

Bytes lz4hc_decompress(ByteView input) {
  LZ4F_dctx* raw = nullptr;
  if (LZ4F_isError(LZ4F_createDecompressionContext(&raw, LZ4F_VERSION))) {
    corrupt(CodecId::kLz4hc, "cannot initialise decoder");
  }
  std::unique_ptr<LZ4F_dctx, decltype(&LZ4F_freeDecompressionContext)> dctx(
      raw, LZ4F_freeDecompressionContext);

  Bytes out(initial_output_guess(input.size()));
  std::size_t used = 0;
  std::size_t consumed = 0;
  std::size_t hint = 1;
  while (hint != 0) {
    reserve_tail(out, used, 64 * 1024);
    std::size_t dst_size = out.size() - used;
    std::size_t src_size = input.size() - consumed;
    hint = LZ4F_decompress(dctx.get(), out.data() + used, &dst_size,
                           input.data() + consumed, &src_size, nullptr);
    if (LZ4F_isError(hint)) corrupt(CodecId::kLz4hc, LZ4F_getErrorName(hint));
    consumed += src_size;
    used += dst_size;
    if (hint != 0 && consumed == input.size() && dst_size == 0) {
      corrupt(CodecId::kLz4hc, "truncated frame");
    }
  }
  if (consumed != input.size()) corrupt(CodecId::kLz4hc, "trailing bytes");
  out.resize(used);
  return out;
}

}  // namespace

CodecConfig codec_params(CodecId codec) noexcept {
  switch (codec) {
    case CodecId::kBrotli:
      return {.level = kLevel, .window_log = kBrotliWindowLog, .block_size_kb = {}};
    case CodecId::kBzip2:
      return {.level = kBzip2BlockSizeKb / 100,
              .window_log = {},
              .block_size_kb = kBzip2BlockSizeKb};
    case CodecId::kLzma:
    case CodecId::kZstd:
    case CodecId::kLz4hc:
      break;
  }
  return {.level = kLevel, .window_log = {}, .block_size_kb = {}};
}

std::string_view codec_name(CodecId codec) noexcept {
  switch (codec) {
    case CodecId::kLzma: return "LZMA";
    case CodecId::kZstd: return "Zstd";
    case CodecId::kBrotli: return "Brotli";
    case CodecId::kBzip2: return "Bzip2";
    case CodecId::kLz4hc: return "LZ4HC";
  }
  return "?";
}

std::optional<CodecId> codec_from_name(std::string_view name) noexcept {
  for (CodecId codec : kAllCodecs) {
    const std::string_view canonical = codec_name(codec);
    if (std::ranges::equal(name, canonical, [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        })) {
      return codec;
    }
  }
  return std::nullopt;
}

std::optional<CodecId> codec_from_byte(std::uint8_t value) noexcept {
  if (value < 1 || value > 5) return std::nullopt;
  return static_cast<CodecId>(value);
}

std::string codec_library_version(CodecId codec) {
  switch (codec) {
    case CodecId::kLzma:
      return std::string("liblzma ") + lzma_version_string();
    case CodecId::kZstd:
      return std::string("zstd ") + ZSTD_versionString();
    case CodecId::kBrotli: {
      const std::uint32_t v = BrotliEncoderVersion();
      return "brotli " + std::to_string(v >> 24) + "." +
             std::to_string((v >> 12) & 0xFFF) + "." +
             std::to_string(v & 0xFFF);
    }
    case CodecId::kBzip2: {
      std::string v = BZ2_bzlibVersion();
      return "bzip2 " + v.substr(0, v.find(','));
    }
    case CodecId::kLz4hc:
      return std::string("lz4 ") + LZ4_versionString();
  }
  return {};
}

Bytes compress_one(CodecId codec, ByteView input) {
  switch (codec) {
    case CodecId::kLzma: return lzma_compress(input);
    case CodecId::kZstd: return zstd_compress(input);
    case CodecId::kBrotli: return brotli_compress(input);
    case CodecId::kBzip2: return bzip2_compress(input);
    case CodecId::kLz4hc: return lz4hc_compress(input);
  }
  throw Error(ErrorCode::kInvalidCodecByte, "unknown codec");
}

Bytes decompress_one(CodecId codec, ByteView input) {
  switch (codec) {
    case CodecId::kLzma: return lzma_decompress(input);
    case CodecId::kZstd: return zstd_decompress(input);
    case CodecId::kBrotli: return brotli_decompress(input);
    case CodecId::kBzip2: return bzip2_decompress(input);
    case CodecId::kLz4hc: return lz4hc_decompress(input);
  }
  throw Error(ErrorCode::kInvalidCodecByte, "unknown codec");
}

}  // namespace hybc
