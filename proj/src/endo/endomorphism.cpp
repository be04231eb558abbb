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

#include "torfix/endo/endomorphism.hpp"

#include "torfix/errors.hpp"

namespace torfix::endo {

namespace {

Matrix4 multiply(const Matrix4& a, const Matrix4& b) {
    Matrix4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            BigInt s = 0;
            for (std::size_t k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            out[i][j] = s;
        }
    return out;
}

Matrix4 identity() {
    Matrix4 out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out[i][j] = i == j ? 1 : 0;
    return out;
}

BigInt trace(const Matrix4& m) { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }

// Bareiss elimination with row pivoting.
BigInt determinant(Matrix4 m) {
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k < 4; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < 4 && m[p][k] == 0) ++p;
            if (p == 4) return 0;
            std::swap(m[k], m[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < 4; ++i) {
            for (std::size_t j = k + 1; j < 4; ++j) {
                BigInt v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = v;
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return sign * m[3][3];
}

BigInt to_integer(const BigRational& q, const char* what) {
    if (!arith::is_integer(q)) {
        throw MathError(ErrorKind::NonIntegral, std::string(what) + " has non-integer coefficient " + arith::to_string(q));
    }
    return q.get_num();
}

}  // namespace

RationalRep RationalRep::scalar(long m) {
    RationalRep out{};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) out.matrix[i][j] = i == j ? m : 0;
    return out;
}

IntPolynomial matrix_char_poly(const Matrix4& a) {
    // c_4 = 1, M_k = A M_{k-1} + c_{5-k} I, c_{4-k} = -tr(A M_k) / k
    std::vector<BigInt> c(5);
    c[4] = 1;
    Matrix4 mk{};
    for (std::size_t k = 1; k <= 4; ++k) {
        mk = multiply(a, mk);
        for (std::size_t i = 0; i < 4; ++i) mk[i][i] += c[5 - k];
        BigInt t = -trace(multiply(a, mk));
        mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(k));
        c[4 - k] = t;
    }
    return IntPolynomial(std::move(c));
}

IntPolynomial analytic_char_poly_product(const AnalyticRep& rep) {
    const arith::QuadField field(rep.field);
    auto entry = [&](std::size_t i, std::size_t j) { return field.make(rep.matrix[i][j].u, rep.matrix[i][j].v); };
    const arith::QuadNumber tr = field.add(entry(0, 0), entry(1, 1));
    const arith::QuadNumber det = field.sub(field.mul(entry(0, 0), entry(1, 1)), field.mul(entry(0, 1), entry(1, 0)));
    // (t^2 - T t + D)(t^2 - T' t + D')
    const arith::QuadNumber t1 = field.add(tr, tr.conj());
    const arith::QuadNumber t2 = field.add(field.add(det, det.conj()), field.mul(tr, tr.conj()));
    const arith::QuadNumber t3 = field.add(field.mul(tr, det.conj()), field.mul(tr.conj(), det));
    const arith::QuadNumber t4 = field.mul(det, det.conj());
    for (const auto* q : {&t1, &t2, &t3, &t4}) {
        if (!q->is_rational()) throw std::logic_error("conjugate-symmetric expression with irrational part");
    }
    const char* what = "analytic characteristic polynomial product";
    return IntPolynomial(std::vector<BigInt>{to_integer(t4.u, what), -to_integer(t3.u, what), to_integer(t2.u, what),
                                             -to_integer(t1.u, what), BigInt(1)});
}

CharPolyQuartic char_poly_rational(const EndomorphismInput& e) {
    CharPolyQuartic p = std::visit(
        [](const auto& x) -> CharPolyQuartic {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, RationalRep>) {
                return CharPolyQuartic(matrix_char_poly(x.matrix));
            } else if constexpr (std::is_same_v<T, AnalyticRep>) {
                return CharPolyQuartic(analytic_char_poly_product(x));
            } else if constexpr (std::is_same_v<T, CharPolyQuartic>) {
                return x;
            } else {
                return CharPolyQuartic(algebra::algebra_char_poly(x));
            }
        },
        e);
    if (!eig::validate_conjugate_pair_structure(p)) {
        throw MathError(ErrorKind::InvalidStructure, "characteristic polynomial " + arith::pretty(p.poly()) +
                                                         " has a real root of odd multiplicity");
    }
    return p;
}

BigInt det_identity_minus_power(const Matrix4& m, unsigned long n) {
    Matrix4 power = identity();
    Matrix4 base = m;
    for (unsigned long k = n; k > 0; k >>= 1) {
        if (k & 1UL) power = multiply(power, base);
        if (k > 1) base = multiply(base, base);
    }
    Matrix4 diff = identity();
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) diff[i][j] -= power[i][j];
    return determinant(diff);
}

BigInt fix_count(const EndomorphismInput& e, unsigned long n) {
    if (n == 0) throw MathError(ErrorKind::Precondition, "iterate index must be positive");
    CharPolyQuartic p = char_poly_rational(e);
    if (const auto* rep = std::get_if<RationalRep>(&e)) return det_identity_minus_power(rep->matrix, n);
    return arith::resultant_with_one_minus_power(p.poly(), n);
}

std::vector<BigInt> fix_sequence(const EndomorphismInput& e, unsigned long n_max) {
    if (n_max == 0) throw MathError(ErrorKind::Precondition, "n_max must be positive");
    CharPolyQuartic p = char_poly_rational(e);
    std::vector<BigInt> out;
    out.reserve(n_max);
    if (const auto* rep = std::get_if<RationalRep>(&e)) {
        Matrix4 power = identity();
        for (unsigned long n = 1; n <= n_max; ++n) {
            power = multiply(power, rep->matrix);
            Matrix4 diff = identity();
            for (std::size_t i = 0; i < 4; ++i)
                for (std::size_t j = 0; j < 4; ++j) diff[i][j] -= power[i][j];
            out.push_back(determinant(diff));
        }
        return out;
    }
    for (unsigned long n = 1; n <= n_max; ++n) out.push_back(arith::resultant_with_one_minus_power(p.poly(), n));
    return out;
}

}  // namespace torfix::endo
