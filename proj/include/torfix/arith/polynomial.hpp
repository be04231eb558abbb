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

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "torfix/arith/numbers.hpp"

namespace torfix::arith {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored in ascending degree order. The leading coefficient is non-zero
/// unless the polynomial is zero (empty coefficient list, degree -1).
class IntPolynomial {
public:
    IntPolynomial() = default;
    IntPolynomial(std::initializer_list<long> coeffs);
    explicit IntPolynomial(std::vector<BigInt> coeffs);

    static IntPolynomial constant(const BigInt& c);
    static IntPolynomial monomial(const BigInt& c, std::size_t degree);
    /// t - root
    static IntPolynomial linear(const BigInt& root);

    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    [[nodiscard]] bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }
    [[nodiscard]] const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of t^i, zero beyond the degree.
    [[nodiscard]] BigInt coeff(std::size_t i) const;
    [[nodiscard]] const BigInt& leading() const;
    [[nodiscard]] const BigInt& constant_term() const;

    [[nodiscard]] BigInt evaluate(const BigInt& x) const;
    [[nodiscard]] BigRational evaluate(const BigRational& x) const;
    /// Sign of p(x) in {-1, 0, 1}, computed without building the rational value.
    [[nodiscard]] int sign_at(const BigRational& x) const;

    [[nodiscard]] IntPolynomial derivative() const;
    [[nodiscard]] BigInt content() const;
    /// Divides by the content and makes the leading coefficient positive.
    [[nodiscard]] IntPolynomial primitive_part() const;
    /// p(-t)
    [[nodiscard]] IntPolynomial negate_variable() const;
    /// p(t + shift)
    [[nodiscard]] IntPolynomial shifted(const BigInt& shift) const;

    IntPolynomial& operator+=(const IntPolynomial& other);
    IntPolynomial& operator-=(const IntPolynomial& other);
    IntPolynomial& operator*=(const IntPolynomial& other);
    IntPolynomial& operator*=(const BigInt& scalar);

    friend IntPolynomial operator+(IntPolynomial a, const IntPolynomial& b) { return a += b; }
    friend IntPolynomial operator-(IntPolynomial a, const IntPolynomial& b) { return a -= b; }
    friend IntPolynomial operator*(IntPolynomial a, const IntPolynomial& b) { return a *= b; }
    friend IntPolynomial operator*(IntPolynomial a, const BigInt& s) { return a *= s; }
    friend IntPolynomial operator*(const BigInt& s, IntPolynomial a) { return a *= s; }
    friend IntPolynomial operator-(IntPolynomial a);
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_pow(const IntPolynomial& p, unsigned exponent);

struct Reversal {
    IntPolynomial poly;
    /// deg p - deg reversed, i.e. the multiplicity of 0 as a root of p.
    int degree_drop = 0;
};

/// t^deg(p) * p(1/t). Throws Precondition on the zero polynomial.
Reversal reverse_with_drop(const IntPolynomial& p);
IntPolynomial poly_reverse(const IntPolynomial& p);

/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b);

/// Quotient and remainder by a divisor whose leading coefficient is +-1.
std::pair<IntPolynomial, IntPolynomial> divide_by_unit_leading(const IntPolynomial& a, const IntPolynomial& b);

/// True when b divides a over the integers; the quotient is stored if requested.
bool divides_exactly(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial* quotient = nullptr);

/// Primitive gcd over Q with positive leading coefficient. gcd(0, 0) throws.
IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q);

/// Res(p, q) by the subresultant PRS. Zero if either argument is zero.
BigInt resultant(const IntPolynomial& p, const IntPolynomial& q);

/// (t^exponent) mod modulus for monic modulus, by binary exponentiation.
IntPolynomial power_of_t_mod(unsigned long exponent, const IntPolynomial& modulus);

/// Res(p, 1 - t^n) for monic p, reducing t^n modulo p first.
BigInt resultant_with_one_minus_power(const IntPolynomial& monic_p, unsigned long n);

/// k-th cyclotomic polynomial for 1 <= k <= 12. Throws OutOfRange otherwise.
IntPolynomial cyclotomic(int k);

/// Yun decomposition of a primitive polynomial: pairs (A_k, k) with
/// p = c * prod A_k^k, every A_k square-free, pairwise coprime, non-constant.
std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p);
IntPolynomial square_free_part(const IntPolynomial& p);

/// Comma-separated ascending coefficients, e.g. "1,-1,1" for t^2 - t + 1.
IntPolynomial parse_polynomial(std::string_view text);
std::string serialize(const IntPolynomial& p);
/// Human-readable descending form, e.g. "t^2 - t + 1".
std::string pretty(const IntPolynomial& p, char var = 't');


/// The unique polynomial of degree < xs.size() through (xs[i], values[i]).
/// Throws NonIntegral when its coefficients are not all integers.
IntPolynomial interpolate_integer_polynomial(const std::vector<BigInt>& xs, const std::vector<BigRational>& values);

/// Res_x(p(x), x^n p(y/x)) as a polynomial in y, for monic p of degree n.
/// Its roots are all products of two roots of p, so it carries |mu|^2 for
/// every root mu of p among its real roots.
IntPolynomial composed_product(const IntPolynomial& monic_p);

}  // namespace torfix::arith
