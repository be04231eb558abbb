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

#include "torfix/arith/numbers.hpp"

namespace torfix::arith {

/// True for m != 0 with no square factor > 1; m = 1 and m = -1 qualify.
bool is_square_free(long m);

/// u + v sqrt(m) for a fixed radicand carried by the caller.
struct QuadNumber {
    BigRational u{0};
    BigRational v{0};

    [[nodiscard]] QuadNumber conj() const { return {u, -v}; }
    [[nodiscard]] bool is_rational() const { return v == 0; }
    friend bool operator==(const QuadNumber&, const QuadNumber&) = default;
};

/// Arithmetic in Q(sqrt m). For m = 1 the field is Q and values are kept
/// collapsed (v = 0).
class QuadField {
public:
    /// Throws InvalidStructure unless m is square-free.
    explicit QuadField(long m);

    [[nodiscard]] long radicand() const noexcept { return m_; }
    [[nodiscard]] QuadNumber make(BigRational u, BigRational v) const;
    [[nodiscard]] QuadNumber add(const QuadNumber& a, const QuadNumber& b) const;
    [[nodiscard]] QuadNumber sub(const QuadNumber& a, const QuadNumber& b) const;
    [[nodiscard]] QuadNumber mul(const QuadNumber& a, const QuadNumber& b) const;
    /// a * conj(a), rational.
    [[nodiscard]] BigRational norm(const QuadNumber& a) const;

private:
    long m_;
};

}  // namespace torfix::arith
