// Copyright 2026 The qtamper Authors
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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtamper {

enum class ErrorCode {
    ModulusMismatch,
    DivisionByZero,
    ZeroPolynomial,
    NotPrime,
    DimMismatch,
    RankDeficient,
    BudgetExceeded,
    OutOfRange,
    SingularGram,
    NotUnitary,
    NotNormalized,
    IdentityTampering,
    InvalidParams,
    NonScalarMismatch,
    InvalidPermutation,
    InternalConsistency,
    UsageError,
    InputError,
};

std::string_view error_code_name(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::ModulusMismatch: return "ModulusMismatch";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ZeroPolynomial: return "ZeroPolynomial";
        case ErrorCode::NotPrime: return "NotPrime";
        case ErrorCode::DimMismatch: return "DimMismatch";
        case ErrorCode::RankDeficient: return "RankDeficient";
        case ErrorCode::BudgetExceeded: return "BudgetExceeded";
        case ErrorCode::OutOfRange: return "OutOfRange";
        case ErrorCode::SingularGram: return "SingularGram";
        case ErrorCode::NotUnitary: return "NotUnitary";
        case ErrorCode::NotNormalized: return "NotNormalized";
        case ErrorCode::IdentityTampering: return "IdentityTampering";
        case ErrorCode::InvalidParams: return "InvalidParams";
        case ErrorCode::NonScalarMismatch: return "NonScalarMismatch";
        case ErrorCode::InvalidPermutation: return "InvalidPermutation";
        case ErrorCode::InternalConsistency: return "InternalConsistency";
        case ErrorCode::UsageError: return "UsageError";
        case ErrorCode::InputError: return "InputError";
    }
    return "Unknown";
}

}  // namespace qtamper
