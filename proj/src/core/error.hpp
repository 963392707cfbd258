// Copyright 2026 The majq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MAJQ_CORE_ERROR_HPP
#define MAJQ_CORE_ERROR_HPP

#include <stdexcept>
#include <string>

namespace majq {

enum class ErrorCode {
  InvalidArgument,
  NonSquare,
  NonHermitian,
  NoConvergence,
  BadSpectrum,
  LengthMismatch,
  NotMajorized,
  NotBistochastic,
  NoPerfectMatching,
  DimensionMismatch,
  NotCP,
  NotTP,
  InvalidState,
  NotUnitary,
  LambdaOutOfRange,
  BadDimension,
  SpectrumDegenerate,
  NotUnital,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonSquare: return "NonSquare";
    case ErrorCode::NonHermitian: return "NonHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::BadSpectrum: return "BadSpectrum";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotMajorized: return "NotMajorized";
    case ErrorCode::NotBistochastic: return "NotBistochastic";
    case ErrorCode::NoPerfectMatching: return "NoPerfectMatching";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotCP: return "NotCP";
    case ErrorCode::NotTP: return "NotTP";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorCode::BadDimension: return "BadDimension";
    case ErrorCode::SpectrumDegenerate: return "SpectrumDegenerate";
    case ErrorCode::NotUnital: return "NotUnital";
  }
  return "UnknownError";
}

}  // namespace majq

#endif  // MAJQ_CORE_ERROR_HPP
