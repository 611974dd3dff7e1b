// Copyright 2026 The meskit Authors
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

namespace meskit {

enum class ErrorCode {
    NonHermitian,
    MismatchedTrace,
    DegenerateSeed,
    SingularLocal,
    NotPositiveDefinite,
    NotInMes,
    TargetInMes,
    WrongShape,
    BadConstraint,
    BadProbabilities,
    NotStandardForm,
    NonUnitaryGroup,
    IncompletePovm,
    NonUnitaryCorrection,
    BadSpec,
    InvalidInput,
    InternalInvariant,
};

std::string_view error_code_name(ErrorCode code);

/// Every domain failure in the library is reported through this type; the
/// code is stable and is what the CLI maps onto exit statuses.
class MeskitError : public std::runtime_error {
public:
    MeskitError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace meskit
