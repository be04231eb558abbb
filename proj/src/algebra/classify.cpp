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

#include "torfix/algebra/classify.hpp"

#include <algorithm>

#include "torfix/errors.hpp"

namespace torfix::algebra {

namespace {

BehaviorReport never_b3(BehaviorReport report) {
    if (report.verdict == behavior::Verdict::B3) throw std::logic_error("simple abelian surface endomorphism classified B3");
    return report;
}

}  // namespace

BehaviorReport rm_classify(const RealQuadElement& x) {
    x.validate();
    return never_b3(behavior::classify(AlgebraElement{x}));
}

BigInt quat_fix(const QuaternionElement& x, unsigned long n) {
    if (n == 0) throw MathError(ErrorKind::Precondition, "iterate index must be positive");
    const BigInt r = arith::resultant_with_one_minus_power(quat_reduced_charpoly(x), n);
    return r * r;
}

BehaviorReport quat_classify(const QuaternionElement& x) {
    if (x.is_zero()) throw MathError(ErrorKind::ZeroEndomorphism, "zero quaternion");
    (void)quat_reduced_charpoly(x);
    if (quat_reduced_norm(x) == 0) {
        throw MathError(ErrorKind::ZeroNorm, "non-zero element of norm 0: the algebra is not a division algebra");
    }
    const QuatRootData roots = quat_root_data(x);
    if (!x.is_scalar() && roots.kind == RootPairKind::Rational) {
        throw MathError(ErrorKind::NotDivisionAlgebra, "non-scalar element with rational eigenvalue (" + roots.describe() +
                                                           "): the algebra is not a division algebra");
    }
    return never_b3(behavior::classify(AlgebraElement{x}));
}

bool quat_one_root_criterion(const QuaternionElement& x) {
    const QuatRootData roots = quat_root_data(x);
    if (roots.kind == RootPairKind::ComplexPair) return roots.a * roots.a - roots.disc == 1;
    // a + sqrt(disc) = +-1
    for (int s : {1, -1}) {
        const BigRational shift = s - roots.a;
        if (shift >= 0 && shift * shift == roots.disc) return true;
    }
    return false;
}

BigInt cm_fix(const CMElement& x, unsigned long n) {
    if (n == 0) throw MathError(ErrorKind::Precondition, "iterate index must be positive");
    return arith::resultant_with_one_minus_power(cm_char_poly(x), n);
}

BehaviorReport cm_classify(const CMElement& x) {
    if (x.is_zero()) throw MathError(ErrorKind::ZeroEndomorphism, "zero CM element");
    return never_b3(behavior::classify(AlgebraElement{x}));
}

std::vector<TableEntry> periodic_eigenvalue_table(AlgebraKind kind) {
    if (kind != AlgebraKind::Quaternion && kind != AlgebraKind::CM) {
        throw MathError(ErrorKind::Precondition, "periodic eigenvalue tables exist for quaternion and cm only");
    }
    const int max_degree = kind == AlgebraKind::Quaternion ? 2 : 4;
    std::vector<TableEntry> out;
    for (int k : eig::kAllowedUnityOrders) {
        IntPolynomial phi = arith::cyclotomic(k);
        if (phi.degree() <= max_degree) out.push_back({k, std::move(phi)});
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const TableEntry& a, const TableEntry& b) { return a.min_poly.degree() < b.min_poly.degree(); });
    return out;
}

}  // namespace torfix::algebra
