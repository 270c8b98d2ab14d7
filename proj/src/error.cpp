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

#include "hybc/error.hpp"

namespace hybc {

std::string_view error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kCodecFailure: return "CodecFailure";
    case ErrorCode::kCorruptStream: return "CorruptStream";
    case ErrorCode::kBadMagic: return "BadMagic";
    case ErrorCode::kUnsupportedVersion: return "UnsupportedVersion";
    case ErrorCode::kInvalidCodecByte: return "InvalidCodecByte";
    case ErrorCode::kTruncated: return "Truncated";
    case ErrorCode::kIntegrityMismatch: return "IntegrityMismatch";
    case ErrorCode::kRoundTripMismatch: return "RoundTripMismatch";
    case ErrorCode::kPrecondition: return "Precondition";
    case ErrorCode::kDivisionDomain: return "DivisionDomain";
    case ErrorCode::kNonFiniteInput: return "NonFiniteInput";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kMixedCohort: return "MixedCohort";
    case ErrorCode::kIoFailure: return "IoFailure";
    case ErrorCode::kInvalidUtf8: return "InvalidUtf8";
    case ErrorCode::kInvalidPipeline: return "InvalidPipeline";
  }
  return "Unknown";
}

}  // namespace hybc
