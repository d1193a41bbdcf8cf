// Copyright 2026 The qmkl-qsar Authors.
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

#include "qsar/core/error.hpp"

namespace qsar {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::UnmatchedRingClosure: return "UnmatchedRingClosure";
    case ErrorCode::UnmatchedParenthesis: return "UnmatchedParenthesis";
    case ErrorCode::UnknownAtomSymbol: return "UnknownAtomSymbol";
    case ErrorCode::InvalidSyntax: return "InvalidSyntax";
    case ErrorCode::MissingColumn: return "MissingColumn";
    case ErrorCode::EmptyDataset: return "EmptyDataset";
    case ErrorCode::NonBinaryLabel: return "NonBinaryLabel";
    case ErrorCode::NonPositiveActivity: return "NonPositiveActivity";
    case ErrorCode::TooFewRows: return "TooFewRows";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::DegenerateData: return "DegenerateData";
    case ErrorCode::QubitBoundExceeded: return "QubitBoundExceeded";
    case ErrorCode::ZeroMatrix: return "ZeroMatrix";
    case ErrorCode::InvalidWeights: return "InvalidWeights";
    case ErrorCode::SingleClassTraining: return "SingleClassTraining";
    case ErrorCode::NotSymmetric: return "NotSymmetric";
    case ErrorCode::IdMismatch: return "IdMismatch";
    case ErrorCode::SingleClassEval: return "SingleClassEval";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Config: return "Config";
  }
  return "Unknown";
}

}  // namespace qsar
