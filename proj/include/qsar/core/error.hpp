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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qsar {

enum class ErrorCode {
  // chem
  EmptyInput,
  UnmatchedRingClosure,
  UnmatchedParenthesis,
  UnknownAtomSymbol,
  InvalidSyntax,
  // data
  MissingColumn,
  EmptyDataset,
  NonBinaryLabel,
  NonPositiveActivity,
  TooFewRows,
  DimensionMismatch,
  KTooLarge,
  DegenerateData,
  // qsim / kernels
  QubitBoundExceeded,
  ZeroMatrix,
  InvalidWeights,
  // models
  SingleClassTraining,
  NotSymmetric,
  IdMismatch,
  SingleClassEval,
  InvalidParameter,
  // plumbing
  Io,
  Config,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Library-wide exception. Every thrown error carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// SMILES errors also name the byte offset where parsing stopped.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t offset, const std::string& message)
      : Error(code, message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace qsar
