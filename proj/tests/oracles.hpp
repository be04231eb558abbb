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

// Test-only reference computations. Nothing here is shared with the library's
// algorithms: determinants go through Bareiss elimination, resultants through
// the Sylvester matrix, and root censuses through floating-point eigenvalues.

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "torfix/arith/polynomial.hpp"

namespace oracle {

using torfix::arith::BigInt;
using torfix::arith::BigRational;
using torfix::arith::IntPolynomial;
using Matrix = std::vector<std::vector<BigInt>>;

/// Fraction-free Gaussian elimination with row pivoting.
inline BigInt bareiss_determinant(Matrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return 0;
            std::swap(m[k], m[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                BigInt v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                m[i][j] = v;
            }
        }
        prev = m[k][k];
    }
    return sign * m[n - 1][n - 1];
}

/// Res(p, q) as the determinant of the Sylvester matrix.
inline BigInt sylvester_resultant(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return 0;
    const int m = p.degree();
    const int n = q.degree();
    if (m == 0 && n == 0) return 1;
    const std::size_t size = static_cast<std::size_t>(m + n);
    Matrix s(size, std::vector<BigInt>(size, BigInt(0)));
    for (int r = 0; r < n; ++r) {
        for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = p.coeff(static_cast<std::size_t>(m - i));
    }
    for (int r = 0; r < m; ++r) {
        for (int i = 0; i <= n; ++i) {
            s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = q.coeff(static_cast<std::size_t>(n - i));
        }
    }
    return bareiss_determinant(std::move(s));
}

inline Matrix identity(std::size_t n) {
    Matrix m(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.size();
    Matrix c(n, std::vector<BigInt>(n, BigInt(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

/// det(I - M^n) by repeated multiplication (no binary powering).
inline BigInt det_identity_minus_power(const Matrix& m, unsigned n) {
    Matrix p = identity(m.size());
    for (unsigned i = 0; i < n; ++i) p = multiply(p, m);
    Matrix d = identity(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) d[i][j] -= p[i][j];
    return bareiss_determinant(std::move(d));
}

/// Complex roots from the companion matrix, in double precision.
inline std::vector<std::complex<double>> numeric_roots(const IntPolynomial& p) {
    const int n = p.degree();
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(n, n);
    const double lead = p.leading().get_d();
    for (int i = 1; i < n; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) c(i, n - 1) = -p.coeff(static_cast<std::size_t>(i)).get_d() / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    std::vector<std::complex<double>> out;
    for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
    return out;
}

inline IntPolynomial random_polynomial(std::mt19937_64& rng, int degree, long range) {
    std::uniform_int_distribution<long> coeff(-range, range);
    std::vector<BigInt> c;
    for (int i = 0; i <= degree; ++i) c.emplace_back(coeff(rng));
    if (c.back() == 0) c.back() = 1;
    return IntPolynomial(std::move(c));
}

}  // namespace oracle
