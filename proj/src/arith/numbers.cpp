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

#include "torfix/arith/numbers.hpp"

#include <algorithm>
#include <cctype>

#include "torfix/errors.hpp"

namespace torfix::arith {

namespace {

bool valid_integer_text(std::string_view text) {
    if (text.empty()) return false;
    std::size_t i = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (i == text.size()) return false;
    return std::all_of(text.begin() + static_cast<std::ptrdiff_t>(i), text.end(),
                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; });
}

std::string_view trim(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    return text;
}

BigInt floor_sqrt(const BigInt& n) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

BigInt ceil_sqrt(const BigInt& n) {
    BigInt r = floor_sqrt(n);
    if (r * r < n) ++r;
    return r;
}

BigInt floor_of(const BigRational& q) {
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigInt ceil_of(const BigRational& q) {
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

}  // namespace

BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw ParseError("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigInt parse_integer(std::string_view text) {
    text = trim(text);
    if (!valid_integer_text(text)) throw ParseError("not an integer: '" + std::string(text) + "'");
    if (text[0] == '+') text.remove_prefix(1);
    return BigInt(std::string(text));
}

BigRational parse_rational(std::string_view text) {
    text = trim(text);
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return BigRational(parse_integer(text));
    BigInt num = parse_integer(text.substr(0, slash));
    BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return make_rational(num, den);
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::string to_string(const BigRational& value) {
    if (value.get_den() == 1) return value.get_num().get_str();
    return value.get_num().get_str() + "/" + value.get_den().get_str();
}

bool is_integer(const BigRational& value) { return value.get_den() == 1; }

std::optional<BigRational> is_square_rational(const BigRational& q) {
    if (q < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    return make_rational(floor_sqrt(q.get_num()), floor_sqrt(q.get_den()));
}

BigInt lcm(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

BigRational dyadic(unsigned k) {
    BigInt den = 1;
    den <<= k;
    return make_rational(1, den);
}

RationalInterval::RationalInterval(BigRational lo, BigRational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (hi_ < lo_) throw MathError(ErrorKind::Precondition, "interval with lo > hi");
}

RationalInterval operator+(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo_ + b.lo_, a.hi_ + b.hi_};
}

RationalInterval operator-(const RationalInterval& a, const RationalInterval& b) {
    return {a.lo_ - b.hi_, a.hi_ - b.lo_};
}

RationalInterval operator*(const RationalInterval& a, const RationalInterval& b) {
    BigRational p[4] = {a.lo_ * b.lo_, a.lo_ * b.hi_, a.hi_ * b.lo_, a.hi_ * b.hi_};
    return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

RationalInterval square(const RationalInterval& x) {
    BigRational a = x.lo() * x.lo();
    BigRational b = x.hi() * x.hi();
    if (x.lo() <= 0 && x.hi() >= 0) return {BigRational(0), std::max(a, b)};
    return {std::min(a, b), std::max(a, b)};
}

RationalInterval sqrt_enclosure(const RationalInterval& x, unsigned bits) {
    if (x.lo() < 0) throw MathError(ErrorKind::Precondition, "sqrt of a negative interval");
    auto exact_lo = is_square_rational(x.lo());
    auto exact_hi = is_square_rational(x.hi());
    BigInt scale = 1;
    scale <<= bits;
    BigRational scale_q(scale);
    BigRational scale_sq(scale * scale);

    BigRational lo = exact_lo ? *exact_lo : make_rational(floor_sqrt(floor_of(x.lo() * scale_sq)), scale);
    BigRational hi = exact_hi ? *exact_hi : make_rational(ceil_sqrt(ceil_of(x.hi() * scale_sq)), scale);
    return {lo, hi};
}

std::string to_string(const RationalInterval& interval) {
    return "[" + to_string(interval.lo()) + ", " + to_string(interval.hi()) + "]";
}

}  // namespace torfix::arith
