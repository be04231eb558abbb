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

#include "torfix/behavior/behavior.hpp"

#include <numeric>

#include "torfix/errors.hpp"

namespace torfix::behavior {

std::string_view verdict_name(Verdict v) {
    switch (v) {
        case Verdict::B1: return "B1";
        case Verdict::B2: return "B2";
        case Verdict::B3: return "B3";
    }
    return "?";
}

BigRational default_growth_width() { return arith::dyadic(20); }

RationalInterval mahler_measure_interval(const eig::CharPolyQuartic& p, const BigRational& width) {
    if (width <= 0) throw MathError(ErrorKind::Precondition, "width must be positive");
    std::vector<eig::ModulusSquared> outside;
    for (auto& m : eig::off_circle_moduli(p)) {
        if (m.compare(BigRational(1)) > 0) outside.push_back(std::move(m));
    }
    if (outside.empty()) return RationalInterval(BigRational(1));
    for (unsigned bits = 24;; bits += 16) {
        RationalInterval product(BigRational(1));
        for (const auto& m : outside) product = product * m.enclosure(arith::dyadic(bits));
        RationalInterval root = arith::sqrt_enclosure(product, bits + 8);
        if (root.width() <= width) return root;
    }
}

BehaviorReport classify(const EndomorphismInput& e, const BigRational& growth_width) {
    const eig::CharPolyQuartic p = endo::char_poly_rational(e);
    if (p.poly() == arith::IntPolynomial::monomial(BigInt(1), 4)) {
        throw MathError(ErrorKind::ZeroEndomorphism, "all eigenvalues are zero");
    }
    BehaviorReport out;
    out.char_poly = p.poly();
    out.eigen = eig::count_roots_by_modulus(p, growth_width);
    const auto& c = out.eigen;

    if (p.poly().evaluate(BigInt(1)) == 0) {
        // Fixed locus of every iterate is infinite; fix is the zero function.
        out.verdict = Verdict::B2;
        out.has_eigenvalue_one = true;
        out.period = 1;
        out.cycle = {BigInt(0)};
        return out;
    }

    int order = 1;
    for (int k : c.unity_orders) order = std::lcm(order, k);

    if (c.n_on == 0) {
        if (c.n_more == 0) throw std::logic_error("no root outside the unit circle and none on it");
        out.verdict = Verdict::B1;
        out.growth_base = mahler_measure_interval(p, growth_width);
    } else if (c.n_less == 0 && c.n_more == 0) {
        out.verdict = Verdict::B2;
        const auto values = endo::fix_sequence(e, static_cast<unsigned long>(order));
        const auto n = static_cast<unsigned>(order);
        for (unsigned d = 1; d <= n; ++d) {
            if (n % d != 0) continue;
            bool periodic = true;
            for (unsigned i = 0; i < n && periodic; ++i) periodic = values[i] == values[(i + d) % n];
            if (periodic) {
                out.period = d;
                out.cycle.assign(values.begin(), values.begin() + d);
                break;
            }
        }
    } else if (c.n_more > 0) {
        if (c.unity_orders.front() != c.unity_orders.back()) {
            throw std::logic_error("mixed case with distinct root-of-unity orders");
        }
        out.verdict = Verdict::B3;
        out.r = order;
        out.growth_base = mahler_measure_interval(p, growth_width);
    } else {
        throw std::logic_error("roots inside the disk without roots outside");
    }
    return out;
}

bool verify_b3_pattern(const EndomorphismInput& e, const BehaviorReport& report, unsigned long n_max) {
    if (report.verdict != Verdict::B3 || !report.r) {
        throw MathError(ErrorKind::Precondition, "verify_b3_pattern needs a B3 report");
    }
    const auto r = static_cast<unsigned long>(*report.r);
    const auto values = endo::fix_sequence(e, n_max);
    for (unsigned long n = 1; n <= n_max; ++n) {
        if ((values[n - 1] == 0) != (n % r == 0)) return false;
    }
    return true;
}

}  // namespace torfix::behavior
