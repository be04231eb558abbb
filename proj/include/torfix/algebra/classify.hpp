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

#include "torfix/algebra/elements.hpp"
#include "torfix/behavior/behavior.hpp"

namespace torfix::algebra {

using behavior::BehaviorReport;

/// B2 exactly for x = +-1, B1 otherwise. Throws ZeroEndomorphism for x = 0.
BehaviorReport rm_classify(const RealQuadElement& x);

/// Res(chi_x, 1 - t^n)^2.
BigInt quat_fix(const QuaternionElement& x, unsigned long n);

/// B2 when both roots of chi_x lie on the unit circle, B1 otherwise.
/// Throws ZeroNorm when N(x) = 0 and NotDivisionAlgebra when x is not a
/// scalar but chi_x has a rational root; either certifies that (alpha, beta)
/// does not give a division algebra.
BehaviorReport quat_classify(const QuaternionElement& x);

/// The one-root phrasing |a + sqrt(disc)| = 1 of the periodicity criterion.
bool quat_one_root_criterion(const QuaternionElement& x);

/// Res(cm_char_poly(x), 1 - t^n).
BigInt cm_fix(const CMElement& x, unsigned long n);

/// B2 when the norm form is a product of cyclotomic polynomials, B1 otherwise.
BehaviorReport cm_classify(const CMElement& x);

struct TableEntry {
    int order;
    IntPolynomial min_poly;
};

/// Minimal polynomials of the roots of unity of degree <= 2 (Quaternion) or
/// <= 4 (CM), ordered by degree then order. Throws Precondition for other kinds.
std::vector<TableEntry> periodic_eigenvalue_table(AlgebraKind kind);

}  // namespace torfix::algebra
