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

#include "torfix/families.hpp"

#include "torfix/errors.hpp"

namespace torfix {

using arith::BigInt;
using arith::BigRational;
using arith::IntPolynomial;
using arith::QuadNumber;

namespace {

endo::AnalyticRep analytic(long field, QuadNumber a, QuadNumber b, QuadNumber c, QuadNumber d) {
    endo::AnalyticRep rep;
    rep.field = field;
    rep.matrix = {{{a, b}, {c, d}}};
    return rep;
}

QuadNumber q(long u, long v = 0) { return {BigRational(u), BigRational(v)}; }

}  // namespace

endo::EndomorphismInput mcmullen_family(unsigned long a) {
    return eig::CharPolyQuartic(IntPolynomial(std::vector<BigInt>{BigInt(1), BigInt(1), BigInt(a), BigInt(0), BigInt(1)}));
}

unsigned long find_small_eigenvalue_parameter(const BigRational& eps) {
    if (eps <= 0 || eps > 1) throw MathError(ErrorKind::Precondition, "eps must lie in (0, 1]");
    const BigRational target = eps * eps;
    for (unsigned long a = 0;; ++a) {
        const auto p = std::get<eig::CharPolyQuartic>(mcmullen_family(a));
        for (const auto& m : eig::off_circle_moduli(p)) {
            if (m.compare(target) < 0) return a;
        }
    }
}

endo::EndomorphismInput sl2_family(long a, long b, long c, long d) {
    if (a * d - b * c != 1) {
        throw MathError(ErrorKind::InvalidStructure, "matrix is not in SL2(Z): determinant " + std::to_string(a * d - b * c));
    }
    return analytic(1, q(a), q(b), q(c), q(d));
}

std::vector<std::pair<std::string, endo::EndomorphismInput>> builtin_examples() {
    return {
        {"rotation_e_times_e", analytic(1, q(1), q(-1), q(1), q(0))},
        {"gaussian_i_2i", analytic(-1, q(0, 1), q(0), q(0), q(0, 2))},
        {"rm_sqrt2", algebra::AlgebraElement{algebra::RealQuadElement{2, BigInt(-1), BigInt(1)}}},
        {"mcmullen_0", mcmullen_family(0)},
        {"neg_identity", endo::RationalRep::scalar(-1)},
        {"mult_2", endo::RationalRep::scalar(2)},
    };
}

std::optional<endo::EndomorphismInput> builtin_example(const std::string& name) {
    for (auto& [key, value] : builtin_examples()) {
        if (key == name) return value;
    }
    return std::nullopt;
}

}  // namespace torfix
