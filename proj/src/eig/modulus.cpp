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

#include "torfix/eig/modulus.hpp"

#include "torfix/arith/real_roots.hpp"
#include "torfix/errors.hpp"

namespace torfix::eig {

namespace {

RationalInterval halve(const RationalInterval& x) { return {x.lo() / 2, x.hi() / 2}; }

}  // namespace

RationalInterval IsolatedRoot::refined(const BigRational& width) const {
    return arith::refine_root(square_free, interval, width);
}

ModulusSquared ModulusSquared::exact(BigRational value) { return ModulusSquared(Form(std::move(value))); }

ModulusSquared ModulusSquared::square_of(IsolatedRoot root) {
    const IntPolynomial& a = root.square_free;
    if (a.degree() == 1) {
        BigRational r = arith::make_rational(-a.coeff(0), a.coeff(1));
        return exact(r * r);
    }
    if (a.degree() == 2 && a.coeff(1) == 0) return exact(arith::make_rational(-a.coeff(0), a.coeff(2)));
    for (const auto& k : arith::integer_roots(a)) {
        if (root.interval.contains(BigRational(k))) return exact(BigRational(k * k));
    }
    return ModulusSquared(SquareOf{std::move(root)});
}

ModulusSquared ModulusSquared::resolvent_branch(std::variant<BigRational, IsolatedRoot> sum, BigRational product,
                                                int sign) {
    if (const auto* y = std::get_if<BigRational>(&sum)) {
        BigRational disc = *y * *y - 4 * product;
        if (auto s = arith::is_square_rational(disc)) return exact((*y + sign * *s) / 2);
    }
    return ModulusSquared(ResolventBranch{std::move(sum), std::move(product), sign});
}

RationalInterval ModulusSquared::enclosure_at(unsigned bits) const {
    const BigRational grid = arith::dyadic(bits);
    return std::visit(
        [&](const auto& form) -> RationalInterval {
            using T = std::decay_t<decltype(form)>;
            if constexpr (std::is_same_v<T, BigRational>) {
                return RationalInterval(form);
            } else if constexpr (std::is_same_v<T, SquareOf>) {
                return arith::square(form.root.refined(grid));
            } else {
                RationalInterval y = std::holds_alternative<BigRational>(form.sum)
                                         ? RationalInterval(std::get<BigRational>(form.sum))
                                         : std::get<IsolatedRoot>(form.sum).refined(grid);
                RationalInterval disc = arith::square(y) - RationalInterval(4 * form.product);
                // The true discriminant is a square of a real difference, hence >= 0.
                if (disc.lo() < 0) disc = RationalInterval(BigRational(0), std::max(disc.hi(), BigRational(0)));
                RationalInterval root = arith::sqrt_enclosure(disc, bits);
                return halve(form.sign > 0 ? y + root : y - root);
            }
        },
        form_);
}

RationalInterval ModulusSquared::enclosure(const BigRational& width) const {
    unsigned bits = 16;
    for (;;) {
        RationalInterval iv = enclosure_at(bits);
        if (iv.width() <= width) return iv;
        bits += 16;
    }
}

int ModulusSquared::compare(const BigRational& q) const {
    if (is_exact()) return sgn(exact_value() - q);
    // Irrational by construction, so some enclosure excludes q.
    for (unsigned bits = 16;; bits += 16) {
        RationalInterval iv = enclosure_at(bits);
        if (q < iv.lo()) return 1;
        if (q > iv.hi()) return -1;
    }
}

IntPolynomial resolvent_cubic(const IntPolynomial& monic_quartic) {
    if (monic_quartic.degree() != 4 || !monic_quartic.is_monic()) {
        throw MathError(ErrorKind::Precondition, "resolvent cubic needs a monic quartic");
    }
    const BigInt a = monic_quartic.coeff(3);
    const BigInt b = monic_quartic.coeff(2);
    const BigInt c = monic_quartic.coeff(1);
    const BigInt d = monic_quartic.coeff(0);
    return IntPolynomial(std::vector<BigInt>{-(a * a * d - 4 * b * d + c * c), a * c - 4 * d, -b, BigInt(1)});
}

std::vector<ModulusSquared> modulus_squared_census(const IntPolynomial& r) {
    std::vector<ModulusSquared> out;
    if (r.degree() <= 0) return out;
    if (!r.is_monic() || r.constant_term() == 0) {
        throw MathError(ErrorKind::Precondition, "census expects a monic polynomial without the root 0");
    }
    if (r.degree() > 4) throw MathError(ErrorKind::InvalidStructure, "census supports degree <= 4");

    for (const auto& [factor, mult] : arith::square_free_decomposition(r)) {
        std::vector<ModulusSquared> local;
        switch (factor.degree()) {
            case 1:
                local.push_back(ModulusSquared::square_of({factor, RationalInterval(BigRational(-factor.coeff(0)))}));
                break;
            case 2: {
                const BigInt& b = factor.coeff(1);
                const BigInt& c = factor.coeff(0);
                if (b * b - 4 * c < 0) {
                    local.push_back(ModulusSquared::exact(BigRational(c)));
                    local.push_back(ModulusSquared::exact(BigRational(c)));
                } else {
                    for (const auto& iv : arith::real_root_isolation(factor, BigRational(1, 16))) {
                        local.push_back(ModulusSquared::square_of({factor, iv}));
                    }
                }
                break;
            }
            case 4: {
                if (arith::count_distinct_real_roots(factor) != 0) {
                    throw MathError(ErrorKind::InvalidStructure, "square-free quartic factor with real roots");
                }
                IntPolynomial cubic = resolvent_cubic(factor);
                IntPolynomial cubic_sf = arith::square_free_part(cubic);
                auto roots = arith::real_root_isolation(cubic_sf, BigRational(1, 16));
                const RationalInterval& top = roots.back();
                std::variant<BigRational, IsolatedRoot> sum = IsolatedRoot{cubic_sf, top};
                for (const auto& k : arith::integer_roots(cubic_sf)) {
                    if (top.contains(BigRational(k))) sum = BigRational(k);
                }
                BigRational product(factor.coeff(0));
                for (int sign : {1, -1}) {
                    ModulusSquared m = ModulusSquared::resolvent_branch(sum, product, sign);
                    local.push_back(m);
                    local.push_back(m);
                }
                break;
            }
            default:
                throw MathError(ErrorKind::InvalidStructure, "unsupported factor degree in modulus census");
        }
        for (int k = 0; k < mult; ++k) out.insert(out.end(), local.begin(), local.end());
    }
    return out;
}

}  // namespace torfix::eig
