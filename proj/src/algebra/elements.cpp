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

#include "torfix/algebra/elements.hpp"

#include <algorithm>

#include "torfix/arith/real_roots.hpp"
#include "torfix/eig/modulus.hpp"
#include "torfix/errors.hpp"

namespace torfix::algebra {

namespace {

bool d_is_one_mod_four(long d) { return ((d % 4) + 4) % 4 == 1; }

std::array<BigRational, 4> swap_labels(const std::array<BigRational, 4>& c) { return {c[0], c[2], c[1], -c[3]}; }

BigInt denominator_lcm(const std::array<BigRational, 4>& c) {
    BigInt out = 1;
    for (const auto& x : c) out = arith::lcm(out, x.get_den());
    return out;
}

}  // namespace

AlgebraDescriptor descriptor(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::Z: return {kind, 1, 1, 4};
        case AlgebraKind::RealQuad: return {kind, 2, 1, 2};
        case AlgebraKind::Quaternion: return {kind, 1, 2, 2};
        case AlgebraKind::CM: return {kind, 4, 1, 1};
    }
    throw std::logic_error("unknown algebra kind");
}

std::string_view kind_name(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::Z: return "z";
        case AlgebraKind::RealQuad: return "real_quad";
        case AlgebraKind::Quaternion: return "quaternion";
        case AlgebraKind::CM: return "cm";
    }
    return "unknown";
}

void RealQuadElement::validate() const {
    if (d <= 1 || !arith::is_square_free(d)) {
        throw MathError(ErrorKind::InvalidStructure, "real quadratic radicand must be square-free and > 1, got " +
                                                         std::to_string(d));
    }
}

std::pair<RealQuadratic, RealQuadratic> rm_eigenvalues(const RealQuadElement& x) {
    x.validate();
    BigRational u(x.a);
    BigRational v(x.b);
    if (d_is_one_mod_four(x.d)) {
        u += BigRational(x.b, 2);
        v = BigRational(x.b, 2);
        u.canonicalize();
        v.canonicalize();
    }
    return {RealQuadratic{u, v, x.d}, RealQuadratic{u, -v, x.d}};
}

IntPolynomial rm_min_poly(const RealQuadElement& x) {
    auto [p, q] = rm_eigenvalues(x);
    BigRational trace = 2 * p.u;
    BigRational norm = p.u * p.u - p.v * p.v * x.d;
    if (!arith::is_integer(trace) || !arith::is_integer(norm)) throw std::logic_error("Z[omega] element with non-integral trace");
    return IntPolynomial(std::vector<BigInt>{norm.get_num(), -trace.get_num(), BigInt(1)});
}

QuaternionAlgebraDesc::QuaternionAlgebraDesc(BigRational alpha, BigRational beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_ == 0 || beta_ == 0) throw MathError(ErrorKind::InvalidStructure, "quaternion parameters must be non-zero");
    if (alpha_ < 0 && beta_ < 0) {
        throw MathError(ErrorKind::InvalidStructure, "definite quaternion algebra (" + arith::to_string(alpha_) + ", " +
                                                         arith::to_string(beta_) + ") cannot be normalized to alpha > 0");
    }
    if (alpha_ < beta_) {
        std::swap(alpha_, beta_);
        swapped_ = true;
    }
}

std::pair<BigRational, BigRational> QuaternionAlgebraDesc::input_pair() const {
    return swapped_ ? std::pair{beta_, alpha_} : std::pair{alpha_, beta_};
}

QuaternionElement::QuaternionElement(QuaternionAlgebraDesc algebra, const std::array<BigRational, 4>& input_coords)
    : algebra_(std::move(algebra)), coords_(algebra_.swapped() ? swap_labels(input_coords) : input_coords) {}

std::array<BigRational, 4> QuaternionElement::input_coords() const {
    return algebra_.swapped() ? swap_labels(coords_) : coords_;
}

bool QuaternionElement::is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](const BigRational& c) { return c == 0; });
}

bool QuaternionElement::is_scalar() const { return coords_[1] == 0 && coords_[2] == 0 && coords_[3] == 0; }

BigRational quat_reduced_norm(const QuaternionElement& x) {
    const auto& [a, b, c, d] = x.coords();
    const BigRational& al = x.algebra().alpha();
    const BigRational& be = x.algebra().beta();
    return a * a - b * b * al - c * c * be + d * d * al * be;
}

IntPolynomial quat_reduced_charpoly(const QuaternionElement& x) {
    BigRational trace = 2 * x.coords()[0];
    BigRational norm = quat_reduced_norm(x);
    if (!arith::is_integer(trace) || !arith::is_integer(norm)) {
        throw MathError(ErrorKind::NonIntegral, "reduced characteristic polynomial t^2 - (" + arith::to_string(trace) +
                                                    ") t + (" + arith::to_string(norm) + ") is not integral");
    }
    return IntPolynomial(std::vector<BigInt>{norm.get_num(), -trace.get_num(), BigInt(1)});
}

QuatRootData quat_root_data(const QuaternionElement& x) {
    const auto& [a, b, c, d] = x.coords();
    const BigRational& al = x.algebra().alpha();
    const BigRational& be = x.algebra().beta();
    QuatRootData out{a, b * b * al + c * c * be - d * d * al * be, RootPairKind::Rational, std::nullopt};
    if (out.disc < 0) {
        out.kind = RootPairKind::ComplexPair;
    } else if (auto s = arith::is_square_rational(out.disc)) {
        out.sqrt_disc = *s;
    } else {
        out.kind = RootPairKind::RealQuadratic;
    }
    return out;
}

std::string QuatRootData::describe() const {
    const std::string base = arith::to_string(a);
    switch (kind) {
        case RootPairKind::Rational:
            return "t1 = " + arith::to_string(a + *sqrt_disc) + ", t2 = " + arith::to_string(a - *sqrt_disc);
        case RootPairKind::RealQuadratic:
            return "t1,t2 = " + base + " +- sqrt(" + arith::to_string(disc) + ")";
        case RootPairKind::ComplexPair:
            return "t1,t2 = " + base + " +- sqrt(-" + arith::to_string(BigRational(-disc)) + ")";
    }
    return {};
}

bool quartic_is_reducible(const IntPolynomial& g) {
    if (g.degree() != 4 || !g.is_monic()) throw MathError(ErrorKind::Precondition, "expected a monic quartic");
    if (!arith::integer_roots(g).empty()) return true;
    // (t^2 + p t + q)(t^2 + r t + s): q + s = y is an integer root of the
    // resolvent cubic, q s = g0, p + r = g3, p r = g2 - y, p s + q r = g1.
    const BigInt& g0 = g.coeff(0);
    const BigInt& g1 = g.coeff(1);
    const BigInt& g2 = g.coeff(2);
    const BigInt& g3 = g.coeff(3);
    for (const auto& y : arith::integer_roots(eig::resolvent_cubic(g))) {
        for (const auto& q : arith::integer_roots(IntPolynomial(std::vector<BigInt>{g0, -y, BigInt(1)}))) {
            const BigInt s = y - q;
            for (const auto& p : arith::integer_roots(IntPolynomial(std::vector<BigInt>{g2 - y, -g3, BigInt(1)}))) {
                const BigInt r = g3 - p;
                if (p * s + q * r == g1) return true;
            }
        }
    }
    return false;
}

CMFieldDesc::CMFieldDesc(IntPolynomial g, std::optional<long> d, std::optional<long> e)
    : g_(std::move(g)), d_(d), e_(e) {
    auto reject = [&](const std::string& why) {
        throw MathError(ErrorKind::InvalidStructure, "not a quartic CM field polynomial (" + why + "): " + arith::pretty(g_));
    };
    if (g_.degree() != 4 || !g_.is_monic()) reject("must be monic of degree 4");
    if (arith::count_distinct_real_roots(g_) != 0) reject("has real roots");
    if (quartic_is_reducible(g_)) reject("reducible");
    // The pairing {r, conj r}, {s, conj s} gives the strictly largest root
    // |r|^2 + |s|^2 of the resolvent cubic; it is rational exactly when the
    // pairing is Galois-stable, i.e. when a totally real quadratic subfield exists.
    IntPolynomial cubic = arith::square_free_part(eig::resolvent_cubic(g_));
    const auto top = arith::real_root_isolation(cubic, BigRational(1, 16)).back();
    const auto ints = arith::integer_roots(cubic);
    if (std::none_of(ints.begin(), ints.end(), [&](const BigInt& k) { return top.contains(BigRational(k)); })) {
        reject("no real quadratic subfield");
    }
    if (d_ && (*d_ <= 1 || !arith::is_square_free(*d_))) reject("subfield radicand must be square-free and > 1");
    if (e_ && (*e_ <= 0 || !arith::is_square_free(*e_))) reject("e must be square-free and positive");
}

bool CMElement::is_zero() const {
    return std::all_of(coords.begin(), coords.end(), [](const BigRational& c) { return c == 0; });
}

IntPolynomial cm_char_poly(const CMElement& x) {
    const IntPolynomial& g = x.field.defining_poly();
    const BigInt den = denominator_lcm(x.coords);
    std::vector<BigInt> scaled;
    for (const auto& c : x.coords) scaled.push_back(BigInt(c * den));
    const IntPolynomial numerator(scaled);
    BigInt den4 = den * den * den * den;

    // For monic g, Res(g, h) = prod h(root); evaluate at t = 0..4 and interpolate.
    std::vector<BigInt> xs;
    std::vector<BigRational> values;
    for (long k = 0; k <= 4; ++k) {
        IntPolynomial h = IntPolynomial::constant(den * k) - numerator;
        xs.emplace_back(k);
        values.push_back(arith::make_rational(arith::resultant(g, h), den4));
    }
    try {
        return arith::interpolate_integer_polynomial(xs, values);
    } catch (const MathError& e) {
        if (e.kind() != ErrorKind::NonIntegral) throw;
        throw MathError(ErrorKind::NonIntegral, "CM element is not an algebraic integer");
    }
}

AlgebraKind kind_of(const AlgebraElement& x) {
    switch (x.index()) {
        case 0: return std::get<RealQuadElement>(x).b == 0 ? AlgebraKind::Z : AlgebraKind::RealQuad;
        case 1: return AlgebraKind::Quaternion;
        default: return AlgebraKind::CM;
    }
}

IntPolynomial algebra_char_poly(const AlgebraElement& x) {
    if (const auto* rm = std::get_if<RealQuadElement>(&x)) return arith::poly_pow(rm_min_poly(*rm), 2);
    if (const auto* q = std::get_if<QuaternionElement>(&x)) return arith::poly_pow(quat_reduced_charpoly(*q), 2);
    return cm_char_poly(std::get<CMElement>(x));
}

}  // namespace torfix::algebra
