/*
   Copyright 2026 The torfix Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace torfix {

/// Domain failures raised by the library. The kind doubles as the error name
/// printed by the command-line tool.
enum class ErrorKind {
    NonIntegral,
    InvalidStructure,
    InvalidEndomorphism,
    ZeroEndomorphism,
    NotDivisionAlgebra,
    ZeroNorm,
    OutOfRange,
    EndpointRoot,
    Precondition,
};

constexpr std::string_view error_name(ErrorKind kind) noexcept {
    switch (kind) {
        case ErrorKind::NonIntegral: return "NonIntegral";
        case ErrorKind::InvalidStructure: return "InvalidStructure";
        case ErrorKind::InvalidEndomorphism: return "InvalidEndomorphism";
        case ErrorKind::ZeroEndomorphism: return "ZeroEndomorphism";
        case ErrorKind::NotDivisionAlgebra: return "NotDivisionAlgebra";
        case ErrorKind::ZeroNorm: return "ZeroNorm";
        case ErrorKind::OutOfRange: return "OutOfRange";
        case ErrorKind::EndpointRoot: return "EndpointRoot";
        case ErrorKind::Precondition: return "Precondition";
    }
    return "Unknown";
}

class MathError : public std::runtime_error {
public:
    MathError(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

    [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::string_view name() const noexcept { return error_name(kind_); }

private:
    ErrorKind kind_;
};

/// Malformed textual input (bad number, wrong shape, unknown key).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace torfix
