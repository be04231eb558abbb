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

#include <variant>
#include <vector>

#include "torfix/arith/numbers.hpp"
#include "torfix/arith/polynomial.hpp"

namespace torfix::eig {

using arith::BigInt;
using arith::BigRational;
using arith::IntPolynomial;
using arith::RationalInterval;

/// A real root of a square-free integer polynomial together with an
/// isolating interval (lo, hi].
struct IsolatedRoot {
    IntPolynomial square_free;
    RationalInterval interval;

    [[nodiscard]] RationalInterval refined(const BigRational& width) const;
};

/// Exact representation of |mu|^2 for a root mu of an integer polynomial.
///
/// Three closed forms cover every non-zero, off-circle root of a quartic
/// with conjugate-pair structure:
///   - an exact rational,
///   - r^2 for a real root r of a square-free quadratic,
///   - (y + s * sqrt(y^2 - 4c)) / 2 where y is the largest real root of the
///     resolvent cubic (or an integer) and c is the constant term. This is
///     |mu|^2 for the two conjugate pairs of a square-free quartic without
///     real roots: y = |mu_1|^2 + |mu_2|^2 and c = |mu_1|^2 * |mu_2|^2.
/// Whenever the value is rational the exact form is used, so a non-exact
/// value is always irrational and comparisons against rationals terminate.
class ModulusSquared {
public:
    struct SquareOf {
        IsolatedRoot root;
    };
    struct ResolventBranch {
        std::variant<BigRational, IsolatedRoot> sum;  // y
        BigRational product;                          // c
        int sign = 1;
    };

    static ModulusSquared exact(BigRational value);
    static ModulusSquared square_of(IsolatedRoot root);
    static ModulusSquared resolvent_branch(std::variant<BigRational, IsolatedRoot> sum, BigRational product, int sign);

    [[nodiscard]] bool is_exact() const { return std::holds_alternative<BigRational>(form_); }
    [[nodiscard]] const BigRational& exact_value() const { return std::get<BigRational>(form_); }

    /// Enclosure of width <= width (a point interval when exact).
    [[nodiscard]] RationalInterval enclosure(const BigRational& width) const;

    /// Sign of (value - q), decided exactly.
    [[nodiscard]] int compare(const BigRational& q) const;

private:
    using Form = std::variant<BigRational, SquareOf, ResolventBranch>;
    explicit ModulusSquared(Form form) : form_(std::move(form)) {}
    [[nodiscard]] RationalInterval enclosure_at(unsigned bits) const;
    Form form_;
};

/// Resolvent cubic y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2) of the
/// monic quartic t^4 + a t^3 + b t^2 + c t + d; its roots are the three
/// pairings r1 r2 + r3 r4.
IntPolynomial resolvent_cubic(const IntPolynomial& monic_quartic);

/// |mu|^2 for every root of the monic polynomial r, with multiplicity.
/// Requires r(0) != 0, no roots on the unit circle, every real root of even
/// multiplicity and degree <= 4. Throws InvalidStructure otherwise.
std::vector<ModulusSquared> modulus_squared_census(const IntPolynomial& r);

}  // namespace torfix::eig
