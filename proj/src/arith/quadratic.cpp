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

#include "torfix/arith/quadratic.hpp"

#include <cstdlib>

#include "torfix/errors.hpp"

namespace torfix::arith {

bool is_square_free(long m) {
    if (m == 0) return false;
    unsigned long n = static_cast<unsigned long>(std::labs(m));
    for (unsigned long p = 2; p * p <= n; ++p) {
        if (n % (p * p) == 0) return false;
    }
    return true;
}

QuadField::QuadField(long m) : m_(m) {
    if (!is_square_free(m)) {
        throw MathError(ErrorKind::InvalidStructure, "field parameter must be square-free, got " + std::to_string(m));
    }
}

QuadNumber QuadField::make(BigRational u, BigRational v) const {
    if (m_ == 1) return {u + v, BigRational(0)};
    return {std::move(u), std::move(v)};
}

QuadNumber QuadField::add(const QuadNumber& a, const QuadNumber& b) const { return {a.u + b.u, a.v + b.v}; }

QuadNumber QuadField::sub(const QuadNumber& a, const QuadNumber& b) const { return {a.u - b.u, a.v - b.v}; }

QuadNumber QuadField::mul(const QuadNumber& a, const QuadNumber& b) const {
    return make(a.u * b.u + a.v * b.v * m_, a.u * b.v + a.v * b.u);
}

BigRational QuadField::norm(const QuadNumber& a) const { return a.u * a.u - a.v * a.v * m_; }

}  // namespace torfix::arith
