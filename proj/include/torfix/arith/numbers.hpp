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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace torfix::arith {

using BigInt = mpz_class;
/// Always canonical (lowest terms, positive denominator); every constructor
/// path in this library goes through make_rational or GMP arithmetic.
using BigRational = mpq_class;

BigRational make_rational(const BigInt& num, const BigInt& den);

/// Parses "p", "-p" or "p/q". Throws ParseError on anything else or q = 0.
BigRational parse_rational(std::string_view text);
BigInt parse_integer(std::string_view text);

std::string to_string(const BigInt& value);
/// "p" for integers, otherwise "p/q".
std::string to_string(const BigRational& value);

bool is_integer(const BigRational& value);

/// Exact non-negative square root of q when q is the square of a rational.
std::optional<BigRational> is_square_rational(const BigRational& q);

BigInt lcm(const BigInt& a, const BigInt& b);

/// Closed enclosure [lo, hi] with lo <= hi.
class RationalInterval {
public:
    RationalInterval() = default;
    explicit RationalInterval(const BigRational& point) : lo_(point), hi_(point) {}
    RationalInterval(BigRational lo, BigRational hi);

    [[nodiscard]] const BigRational& lo() const noexcept { return lo_; }
    [[nodiscard]] const BigRational& hi() const noexcept { return hi_; }
    [[nodiscard]] BigRational width() const { return hi_ - lo_; }
    [[nodiscard]] BigRational midpoint() const { return (lo_ + hi_) / 2; }
    [[nodiscard]] bool is_point() const { return lo_ == hi_; }
    [[nodiscard]] bool contains(const BigRational& x) const { return lo_ <= x && x <= hi_; }
    [[nodiscard]] bool contains(const RationalInterval& other) const {
        return lo_ <= other.lo_ && other.hi_ <= hi_;
    }

    friend RationalInterval operator+(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator-(const RationalInterval& a, const RationalInterval& b);
    friend RationalInterval operator*(const RationalInterval& a, const RationalInterval& b);
    friend bool operator==(const RationalInterval& a, const RationalInterval& b) {
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }

private:
    BigRational lo_{0};
    BigRational hi_{0};
};

/// Interval of x*x over all x in the input (tight, handles straddling zero).
RationalInterval square(const RationalInterval& x);

/// Outward-rounded enclosure of sqrt over [lo, hi] (lo must be >= 0) with
/// endpoints on the dyadic grid 2^-bits. Exact when the endpoints are squares.
RationalInterval sqrt_enclosure(const RationalInterval& x, unsigned bits);

/// "[lo, hi]" with exact rational endpoints.
std::string to_string(const RationalInterval& interval);

/// 2^-k as a rational.
BigRational dyadic(unsigned k);

}  // namespace torfix::arith
