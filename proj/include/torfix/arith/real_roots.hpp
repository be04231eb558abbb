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

#include <vector>

#include "torfix/arith/numbers.hpp"
#include "torfix/arith/polynomial.hpp"

namespace torfix::arith {

/// Default isolation refinement width, 2^-32.
BigRational default_isolation_width();

/// Integer B with every complex root of p strictly inside |z| < B.
BigInt cauchy_bound(const IntPolynomial& p);

/// Sturm chain of a square-free polynomial, stored with positive scalings
/// only so sign variations are preserved.
class SturmSequence {
public:
    explicit SturmSequence(const IntPolynomial& square_free);

    [[nodiscard]] int sign_variations(const BigRational& x) const;
    /// Distinct real roots in (lo, hi]. Throws EndpointRoot if lo or hi is a root.
    [[nodiscard]] int count(const BigRational& lo, const BigRational& hi) const;
    [[nodiscard]] const IntPolynomial& base() const { return chain_.front(); }

private:
    std::vector<IntPolynomial> chain_;
};

/// Number of distinct real roots of a square-free p in (lo, hi].
int sturm_count(const IntPolynomial& p, const RationalInterval& interval);

/// Number of distinct real roots of any non-zero p.
int count_distinct_real_roots(const IntPolynomial& p);

/// Isolating intervals (lo, hi] for the distinct real roots of p, sorted
/// ascending, each refined to width <= max_width. A rational root found
/// exactly is returned as the point interval [r, r].
std::vector<RationalInterval> real_root_isolation(const IntPolynomial& p,
                                                  const BigRational& max_width = default_isolation_width());

/// Shrinks an isolating interval (lo, hi] of a root of the square-free p
/// until its width is <= max_width.
RationalInterval refine_root(const IntPolynomial& square_free, RationalInterval interval,
                             const BigRational& max_width);

/// The distinct integer roots of p, ascending.
std::vector<BigInt> integer_roots(const IntPolynomial& p);

}  // namespace torfix::arith
