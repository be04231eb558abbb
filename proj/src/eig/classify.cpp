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

#include "torfix/eig/classify.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "torfix/errors.hpp"

namespace torfix::eig {

using arith::poly_gcd;
using arith::poly_reverse;
using arith::square_free_decomposition;

namespace {

std::pair<int, IntPolynomial> strip_zero_roots(const IntPolynomial& p) {
    int k = 0;
    while (static_cast<std::size_t>(k) < p.coeffs().size() && p.coeffs()[static_cast<std::size_t>(k)] == 0) ++k;
    std::vector<BigInt> rest(p.coeffs().begin() + k, p.coeffs().end());
    return {k, IntPolynomial(std::move(rest))};
}

IntPolynomial exact_quotient(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial q;
    if (!arith::divides_exactly(a, b, &q)) throw std::logic_error("expected exact polynomial division");
    return q;
}

int divide_out(IntPolynomial& p, const IntPolynomial& factor) {
    int count = 0;
    IntPolynomial q;
    while (p.degree() >= factor.degree() && arith::divides_exactly(p, factor, &q)) {
        p = q;
        ++count;
    }
    return count;
}

/// h with g(t) = t^m h(t + 1/t) for a palindromic g of degree 2m.
IntPolynomial to_trace_variable(const IntPolynomial& g) {
    const int m = g.degree() / 2;
    // D_0 = 2, D_1 = u, D_k = u D_{k-1} - D_{k-2}; t^k + t^-k = D_k(t + 1/t).
    const IntPolynomial u{0, 1};
    IntPolynomial d_prev{2};
    IntPolynomial d_cur = u;
    IntPolynomial h = IntPolynomial::constant(g.coeff(static_cast<std::size_t>(m)));
    for (int k = 1; k <= m; ++k) {
        h += d_cur * g.coeff(static_cast<std::size_t>(m + k));
        IntPolynomial next = u * d_cur - d_prev;
        d_prev = std::move(d_cur);
        d_cur = std::move(next);
    }
    return h;
}

/// t^deg(a) a(t + 1/t)
IntPolynomial from_trace_variable(const IntPolynomial& a) {
    const int n = a.degree();
    const IntPolynomial t_sq_plus_one{1, 0, 1};
    IntPolynomial out;
    IntPolynomial power{1};
    for (int j = 0; j <= n; ++j) {
        out += power * IntPolynomial::monomial(a.coeff(static_cast<std::size_t>(j)), static_cast<std::size_t>(n - j));
        power *= t_sq_plus_one;
    }
    return out;
}

int trace_roots_inside(const IntPolynomial& a) {
    // u = +-2 corresponds to t = +-1, which are split off before this point.
    return arith::sturm_count(a, RationalInterval(BigRational(-2), BigRational(2)));
}

int count_inside_fallback(const IntPolynomial& square_free_factor) {
    int inside = 0;
    for (const auto& m : modulus_squared_census(square_free_factor)) inside += m.compare(BigRational(1)) < 0 ? 1 : 0;
    return inside;
}

}  // namespace

CharPolyQuartic::CharPolyQuartic(IntPolynomial p) : poly_(std::move(p)) {
    if (poly_.degree() != 4 || !poly_.is_monic()) {
        throw MathError(ErrorKind::InvalidStructure, "characteristic polynomial must be monic of degree 4, got " +
                                                         arith::pretty(poly_));
    }
}

bool is_allowed_unity_order(int k) {
    return std::find(std::begin(kAllowedUnityOrders), std::end(kAllowedUnityOrders), k) != std::end(kAllowedUnityOrders);
}

bool validate_conjugate_pair_structure(const CharPolyQuartic& p) {
    for (const auto& [factor, mult] : square_free_decomposition(p.poly())) {
        if (mult % 2 == 1 && arith::count_distinct_real_roots(factor) > 0) return false;
    }
    return true;
}

IntPolynomial unit_circle_factor(const IntPolynomial& p) {
    if (p.is_zero() || !p.is_monic()) throw MathError(ErrorKind::Precondition, "unit_circle_factor expects a monic polynomial");
    IntPolynomial q = strip_zero_roots(p).second;
    if (q.degree() == 0) return IntPolynomial{1};

    IntPolynomial g = poly_gcd(q, poly_reverse(q));
    const int plus_one = divide_out(g, IntPolynomial{-1, 1});
    const int minus_one = divide_out(g, IntPolynomial{1, 1});
    if (poly_reverse(g) != g || g.degree() % 2 != 0) throw std::logic_error("self-inversive part is not palindromic");

    IntPolynomial circle = arith::poly_pow(IntPolynomial{-1, 1}, static_cast<unsigned>(plus_one)) *
                           arith::poly_pow(IntPolynomial{1, 1}, static_cast<unsigned>(minus_one));
    if (g.degree() == 0) return circle;

    for (const auto& [factor, mult] : square_free_decomposition(to_trace_variable(g))) {
        IntPolynomial keep{1};
        IntPolynomial rest = factor;
        int inside = trace_roots_inside(rest);
        if (inside != 0 && inside != rest.degree()) {
            // Rational trace values in (-2, 2) are -1, 0, 1; split those off.
            for (const auto& r : arith::integer_roots(rest)) {
                IntPolynomial lin = IntPolynomial::linear(r);
                rest = exact_quotient(rest, lin);
                if (r > -2 && r < 2) keep *= lin;
            }
            inside = rest.degree() > 0 ? trace_roots_inside(rest) : 0;
            if (inside != 0 && inside != rest.degree()) {
                throw MathError(ErrorKind::InvalidEndomorphism,
                                "irreducible factor with roots on and off the unit circle: " + arith::pretty(p));
            }
        }
        if (rest.degree() > 0 && inside == rest.degree()) keep *= rest;
        if (keep.degree() > 0) circle *= arith::poly_pow(from_trace_variable(keep), static_cast<unsigned>(mult));
    }
    return circle;
}

std::optional<std::vector<std::pair<int, int>>> cyclotomic_decomposition(const IntPolynomial& q) {
    if (q.is_zero() || !q.is_monic()) return std::nullopt;
    IntPolynomial rest = q;
    std::vector<std::pair<int, int>> out;
    for (int k : kAllowedUnityOrders) {
        if (rest.degree() == 0) break;
        int mult = divide_out(rest, arith::cyclotomic(k));
        if (mult > 0) out.emplace_back(k, mult);
    }
    if (rest != IntPolynomial{1}) return std::nullopt;
    return out;
}

std::optional<int> root_of_unity_order(const IntPolynomial& q) {
    if (q.degree() < 1) return std::nullopt;
    auto dec = cyclotomic_decomposition(q);
    if (!dec) return std::nullopt;
    int order = 1;
    for (const auto& [k, mult] : *dec) order = std::lcm(order, k);
    return order;
}

std::optional<int> schur_cohn_inside_count(const IntPolynomial& p) {
    if (p.is_zero() || p.constant_term() == 0) throw MathError(ErrorKind::Precondition, "Schur-Cohn needs p(0) != 0");
    const int n = p.degree();
    if (n == 0) return 0;
    const BigInt& a0 = p.constant_term();
    const BigInt& an = p.leading();
    const BigInt gamma = a0 * a0 - an * an;
    if (gamma == 0) return std::nullopt;
    // T p = a0 p - an p*, degree < n, T p(0) = gamma.
    IntPolynomial t = p * a0 - poly_reverse(p) * an;
    t = t.primitive_part();
    auto inner = schur_cohn_inside_count(t);
    if (!inner) return std::nullopt;
    return gamma > 0 ? *inner : n - *inner;
}

std::vector<ModulusSquared> off_circle_moduli(const CharPolyQuartic& p) {
    IntPolynomial q = strip_zero_roots(p.poly()).second;
    IntPolynomial r = exact_quotient(q, unit_circle_factor(q));
    return modulus_squared_census(r);
}

EigenvalueClassification count_roots_by_modulus(const CharPolyQuartic& p, const BigRational& outside_width) {
    if (!validate_conjugate_pair_structure(p)) {
        throw MathError(ErrorKind::InvalidStructure, "roots are not of the form {l1, l2, conj l1, conj l2}: " +
                                                         arith::pretty(p.poly()));
    }
    EigenvalueClassification out;
    auto [zeros, q] = strip_zero_roots(p.poly());
    out.n_zero = zeros;

    IntPolynomial circle = unit_circle_factor(q);
    auto dec = cyclotomic_decomposition(circle);
    if (!dec) {
        throw MathError(ErrorKind::InvalidEndomorphism,
                        "unit-circle root that is not a root of unity of order in {1..6,8,10,12}: " + arith::pretty(p.poly()));
    }
    out.n_on = circle.degree();
    for (const auto& [k, mult] : *dec) {
        out.unity_orders.insert(out.unity_orders.end(), static_cast<std::size_t>(arith::cyclotomic(k).degree() * mult), k);
    }
    std::sort(out.unity_orders.begin(), out.unity_orders.end());

    IntPolynomial rest = exact_quotient(q, circle);
    for (const auto& [factor, mult] : square_free_decomposition(rest)) {
        auto inside = schur_cohn_inside_count(factor);
        out.n_less += mult * (inside ? *inside : count_inside_fallback(factor));
    }
    out.n_more = rest.degree() - out.n_less;

    for (const auto& m : modulus_squared_census(rest)) {
        if (m.compare(BigRational(1)) > 0) out.outside_moduli.push_back(m.enclosure(outside_width));
    }
    if (static_cast<int>(out.outside_moduli.size()) != out.n_more) {
        throw std::logic_error("Schur-Cohn count disagrees with the modulus census");
    }
    std::sort(out.outside_moduli.begin(), out.outside_moduli.end(),
              [](const auto& a, const auto& b) { return a.lo() < b.lo(); });
    return out;
}

bool assert_self_reciprocal_minpoly(const IntPolynomial& h) {
    return !h.is_zero() && h.degree() % 2 == 0 && poly_reverse(h) == h;
}

}  // namespace torfix::eig
