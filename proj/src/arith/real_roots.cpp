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

#include "torfix/arith/real_roots.hpp"

#include <algorithm>

#include "torfix/errors.hpp"

namespace torfix::arith {

namespace {

BigInt ceil_div(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Picks a split point of (lo, hi) that is not a root of p.
BigRational non_root_split(const IntPolynomial& p, const BigRational& lo, const BigRational& hi) {
    BigRational m = (lo + hi) / 2;
    while (p.sign_at(m) == 0) m = (lo + m) / 2;
    return m;
}

}  // namespace

BigRational default_isolation_width() { return dyadic(32); }

BigInt cauchy_bound(const IntPolynomial& p) {
    if (p.degree() <= 0) return 1;
    BigInt lead = abs(p.leading());
    BigInt max_coeff = 0;
    for (int i = 0; i < p.degree(); ++i) max_coeff = std::max(max_coeff, BigInt(abs(p.coeffs()[static_cast<std::size_t>(i)])));
    return 1 + ceil_div(max_coeff, lead);
}

SturmSequence::SturmSequence(const IntPolynomial& square_free) {
    if (square_free.is_zero()) throw MathError(ErrorKind::Precondition, "Sturm sequence of the zero polynomial");
    chain_.push_back(square_free);
    if (square_free.degree() == 0) return;
    chain_.push_back(square_free.derivative());
    while (chain_.back().degree() > 0) {
        const IntPolynomial& a = chain_[chain_.size() - 2];
        const IntPolynomial& b = chain_.back();
        IntPolynomial r = pseudo_remainder(a, b);
        if (r.is_zero()) break;
        // prem = lc(b)^(da-db+1) * rem; flip so the stored term is a positive multiple of -rem.
        const int e = a.degree() - b.degree() + 1;
        const bool multiplier_negative = b.leading() < 0 && (e % 2 == 1);
        if (!multiplier_negative) r = -r;
        BigInt c = r.content();
        std::vector<BigInt> scaled = r.coeffs();
        for (auto& x : scaled) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        chain_.emplace_back(std::move(scaled));
    }
}

int SturmSequence::sign_variations(const BigRational& x) const {
    int variations = 0;
    int last = 0;
    for (const auto& p : chain_) {
        int s = p.sign_at(x);
        if (s == 0) continue;
        if (last != 0 && s != last) ++variations;
        last = s;
    }
    return variations;
}

int SturmSequence::count(const BigRational& lo, const BigRational& hi) const {
    if (chain_.front().sign_at(lo) == 0 || chain_.front().sign_at(hi) == 0) {
        throw MathError(ErrorKind::EndpointRoot, "interval endpoint is a root");
    }
    if (hi < lo) return 0;
    return sign_variations(lo) - sign_variations(hi);
}

int sturm_count(const IntPolynomial& p, const RationalInterval& interval) {
    return SturmSequence(p).count(interval.lo(), interval.hi());
}

int count_distinct_real_roots(const IntPolynomial& p) {
    if (p.is_zero()) throw MathError(ErrorKind::Precondition, "real roots of the zero polynomial");
    IntPolynomial sf = square_free_part(p);
    if (sf.degree() <= 0) return 0;
    BigRational b(cauchy_bound(sf));
    return SturmSequence(sf).count(-b, b);
}

RationalInterval refine_root(const IntPolynomial& square_free, RationalInterval interval, const BigRational& max_width) {
    if (interval.is_point()) return interval;
    const int s_hi = square_free.sign_at(interval.hi());
    if (s_hi == 0) {
        // Root sits on the closed end; shrink toward it.
        BigRational lo = interval.lo();
        while (interval.hi() - lo > max_width) lo = (lo + interval.hi()) / 2;
        return {lo, interval.hi()};
    }
    BigRational lo = interval.lo();
    BigRational hi = interval.hi();
    int s_lo = square_free.sign_at(lo);
    if (s_lo == 0) {
        // (lo, hi] excludes lo; the isolated root is strictly inside, so nudge lo.
        SturmSequence seq(square_free);
        BigRational step = (hi - lo) / 2;
        BigRational cand = lo + step;
        while (square_free.sign_at(cand) == 0 || seq.count(cand, hi) == 0) {
            step /= 2;
            cand = lo + step;
        }
        lo = cand;
        s_lo = square_free.sign_at(lo);
    }
    // Simple root of a square-free polynomial: p changes sign across it.
    while (hi - lo > max_width) {
        BigRational mid = (lo + hi) / 2;
        int s = square_free.sign_at(mid);
        if (s == 0) return RationalInterval(mid);
        if (s == s_lo) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return {lo, hi};
}

std::vector<RationalInterval> real_root_isolation(const IntPolynomial& p, const BigRational& max_width) {
    if (p.is_zero()) throw MathError(ErrorKind::Precondition, "real roots of the zero polynomial");
    std::vector<RationalInterval> out;
    IntPolynomial sf = square_free_part(p);
    if (sf.degree() <= 0) return out;
    SturmSequence seq(sf);
    BigRational bound(cauchy_bound(sf));

    struct Pending {
        BigRational lo, hi;
        int roots;
    };
    std::vector<Pending> stack{{-bound, bound, seq.count(-bound, bound)}};
    while (!stack.empty()) {
        Pending cur = stack.back();
        stack.pop_back();
        if (cur.roots == 0) continue;
        if (cur.roots == 1) {
            out.push_back(refine_root(sf, RationalInterval(cur.lo, cur.hi), max_width));
            continue;
        }
        BigRational mid = non_root_split(sf, cur.lo, cur.hi);
        int left = seq.count(cur.lo, mid);
        stack.push_back({mid, cur.hi, cur.roots - left});
        stack.push_back({cur.lo, mid, left});
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.lo() < b.lo(); });
    return out;
}

std::vector<BigInt> integer_roots(const IntPolynomial& p) {
    std::vector<BigInt> out;
    if (p.is_zero()) throw MathError(ErrorKind::Precondition, "integer roots of the zero polynomial");
    for (const auto& iv : real_root_isolation(p, BigRational(1, 4))) {
        BigInt lo_c;
        BigInt hi_f;
        mpz_cdiv_q(lo_c.get_mpz_t(), iv.lo().get_num_mpz_t(), iv.lo().get_den_mpz_t());
        mpz_fdiv_q(hi_f.get_mpz_t(), iv.hi().get_num_mpz_t(), iv.hi().get_den_mpz_t());
        for (BigInt k = lo_c; k <= hi_f; ++k) {
            if (p.evaluate(k) == 0) out.push_back(k);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace torfix::arith
