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

#include <array>
#include <variant>
#include <vector>

#include "torfix/algebra/elements.hpp"
#include "torfix/arith/quadratic.hpp"
#include "torfix/eig/classify.hpp"

namespace torfix::endo {

using arith::BigInt;
using arith::BigRational;
using arith::IntPolynomial;
using eig::CharPolyQuartic;

using Matrix4 = std::array<std::array<BigInt, 4>, 4>;

/// Action on the lattice Z^4.
struct RationalRep {
    Matrix4 matrix;

    static RationalRep scalar(long m);
    friend bool operator==(const RationalRep&, const RationalRep&) = default;
};

/// Action on C^2 with entries u + v sqrt(field) in Q(sqrt field); field = 1
/// means Q.
struct AnalyticRep {
    long field = 1;
    std::array<std::array<arith::QuadNumber, 2>, 2> matrix;

    friend bool operator==(const AnalyticRep&, const AnalyticRep&) = default;
};

using EndomorphismInput = std::variant<RationalRep, AnalyticRep, CharPolyQuartic, algebra::AlgebraElement>;

/// Characteristic polynomial of a 4x4 integer matrix (Faddeev-LeVerrier).
IntPolynomial matrix_char_poly(const Matrix4& m);

/// P_a(t) * conj(P_a)(t), conj negating the sqrt(field) parts. Throws
/// NonIntegral when the product has non-integer coefficients.
IntPolynomial analytic_char_poly_product(const AnalyticRep& rep);

/// P^r_f. Throws InvalidStructure when the quartic fails
/// validate_conjugate_pair_structure.
CharPolyQuartic char_poly_rational(const EndomorphismInput& e);

/// det(I - M^n) by binary powering and fraction-free elimination.
BigInt det_identity_minus_power(const Matrix4& m, unsigned long n);

/// fix(f^n); 0 stands for an infinite fixed-point set.
BigInt fix_count(const EndomorphismInput& e, unsigned long n);

/// [fix(f), ..., fix(f^n_max)].
std::vector<BigInt> fix_sequence(const EndomorphismInput& e, unsigned long n_max);

}  // namespace torfix::endo
