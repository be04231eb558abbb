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
#include <optional>
#include <string>
#include <variant>

#include "torfix/arith/numbers.hpp"
#include "torfix/arith/polynomial.hpp"
#include "torfix/arith/quadratic.hpp"

namespace torfix::algebra {

using arith::BigInt;
using arith::BigRational;
using arith::IntPolynomial;

enum class AlgebraKind { Z, RealQuad, Quaternion, CM };

/// e = [K:Q] for the centre K, d^2 = [D:K], and the exponent 4/(de) in
/// fix(f) = N(1 - f)^(4/(de)).
struct AlgebraDescriptor {
    AlgebraKind kind;
    int e;
    int d;
    int norm_exponent;
};

AlgebraDescriptor descriptor(AlgebraKind kind);
std::string_view kind_name(AlgebraKind kind);

/// a + b*omega in Z[omega], omega = sqrt(d) or (1 + sqrt(d))/2 for d = 1 mod 4.
struct RealQuadElement {
    long d = 2;
    BigInt a{0};
    BigInt b{0};

    /// Throws InvalidStructure unless d > 1 is square-free.
    void validate() const;
    friend bool operator==(const RealQuadElement&, const RealQuadElement&) = default;
};

/// A real quadratic number (u + v sqrt(radicand)).
struct RealQuadratic {
    BigRational u;
    BigRational v;
    long radicand;
};

/// The two real embeddings of x: (u + v sqrt d, u - v sqrt d).
std::pair<RealQuadratic, RealQuadratic> rm_eigenvalues(const RealQuadElement& x);

/// t^2 - tr(x) t + N(x).
IntPolynomial rm_min_poly(const RealQuadElement& x);

/// (alpha, beta) with i^2 = alpha, j^2 = beta, ij = -ji. Stored normalized to
/// alpha > 0, alpha >= beta; `swapped` records that the input labels were
/// exchanged.
class QuaternionAlgebraDesc {
public:
    /// Throws InvalidStructure on alpha or beta zero and on alpha, beta < 0
    /// (a definite algebra, which cannot be normalized to alpha > 0).
    QuaternionAlgebraDesc(BigRational alpha, BigRational beta);

    [[nodiscard]] const BigRational& alpha() const noexcept { return alpha_; }
    [[nodiscard]] const BigRational& beta() const noexcept { return beta_; }
    [[nodiscard]] bool swapped() const noexcept { return swapped_; }
    /// The (alpha, beta) pair as given.
    [[nodiscard]] std::pair<BigRational, BigRational> input_pair() const;

    friend bool operator==(const QuaternionAlgebraDesc&, const QuaternionAlgebraDesc&) = default;

private:
    BigRational alpha_;
    BigRational beta_;
    bool swapped_ = false;
};

/// a + b i + c j + d ij in the normalized basis.
class QuaternionElement {
public:
    /// Coordinates refer to the basis of the algebra as given; they are
    /// relabeled when the algebra was normalized by a swap.
    QuaternionElement(QuaternionAlgebraDesc algebra, const std::array<BigRational, 4>& input_coords);

    [[nodiscard]] const QuaternionAlgebraDesc& algebra() const noexcept { return algebra_; }
    /// (a, b, c, d) in the normalized basis.
    [[nodiscard]] const std::array<BigRational, 4>& coords() const noexcept { return coords_; }
    /// Coordinates in the basis as given.
    [[nodiscard]] std::array<BigRational, 4> input_coords() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_scalar() const;

    friend bool operator==(const QuaternionElement&, const QuaternionElement&) = default;

private:
    QuaternionAlgebraDesc algebra_;
    std::array<BigRational, 4> coords_;
};

/// a^2 - b^2 alpha - c^2 beta + d^2 alpha beta
BigRational quat_reduced_norm(const QuaternionElement& x);

/// t^2 - 2a t + N(x). Throws NonIntegral unless 2a and N(x) are integers.
IntPolynomial quat_reduced_charpoly(const QuaternionElement& x);

enum class RootPairKind { Rational, RealQuadratic, ComplexPair };

/// t_{1,2} = a +- sqrt(disc) with disc = b^2 alpha + c^2 beta - d^2 alpha beta.
struct QuatRootData {
    BigRational a;
    BigRational disc;
    RootPairKind kind;
    /// sqrt(disc) when disc is a rational square.
    std::optional<BigRational> sqrt_disc;

    [[nodiscard]] std::string describe() const;
};

QuatRootData quat_root_data(const QuaternionElement& x);

/// Monic irreducible totally imaginary quartic with a real quadratic subfield.
class CMFieldDesc {
public:
    /// Throws InvalidStructure when g is not such a quartic.
    explicit CMFieldDesc(IntPolynomial g, std::optional<long> d = std::nullopt, std::optional<long> e = std::nullopt);

    [[nodiscard]] const IntPolynomial& defining_poly() const noexcept { return g_; }
    [[nodiscard]] std::optional<long> real_subfield_radicand() const noexcept { return d_; }
    [[nodiscard]] std::optional<long> imaginary_radicand() const noexcept { return e_; }

    friend bool operator==(const CMFieldDesc&, const CMFieldDesc&) = default;

private:
    IntPolynomial g_;
    std::optional<long> d_;
    std::optional<long> e_;
};

/// True when the monic quartic g factors over Z (linear or quadratic factors).
bool quartic_is_reducible(const IntPolynomial& g);

/// c0 + c1 y + c2 y^2 + c3 y^3 where y is a root of the defining polynomial.
struct CMElement {
    CMFieldDesc field;
    std::array<BigRational, 4> coords;

    [[nodiscard]] bool is_zero() const;
    friend bool operator==(const CMElement&, const CMElement&) = default;
};

/// N_{K/Q}(t - x) = Res_y(g(y), t - x(y)). Throws NonIntegral when x is not
/// an algebraic integer.
IntPolynomial cm_char_poly(const CMElement& x);

using AlgebraElement = std::variant<RealQuadElement, QuaternionElement, CMElement>;

AlgebraKind kind_of(const AlgebraElement& x);

/// The quartic P^r of the endomorphism: rm_min_poly^2, chi^2 or the norm form.
IntPolynomial algebra_char_poly(const AlgebraElement& x);

}  // namespace torfix::algebra
