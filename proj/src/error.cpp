// Copyright 2026 The dnncost Authors. All Rights Reserved.
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

#include "dnncost/error.hpp"

namespace dnncost {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateId: return "duplicate-id";
    case ErrorCode::kUnknownId: return "unknown-id";
    case ErrorCode::kCycle: return "cycle";
    case ErrorCode::kInvalidGraph: return "invalid-graph";
    case ErrorCode::kShapeInference: return "shape-inference";
    case ErrorCode::kShapeMismatch: return "shape-mismatch";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kZeroDenominator: return "zero-denominator";
    case ErrorCode::kZeroVariance: return "zero-variance";
    case ErrorCode::kInsufficientData: return "insufficient-data";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kCsvSchema: return "csv-schema";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

}  // namespace dnncost
