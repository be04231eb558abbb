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

#include "torfix/arith/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "torfix/errors.hpp"

namespace torfix::arith {

namespace {

BigInt ipow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
    BigInt r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

IntPolynomial divide_scalar_exact(const IntPolynomial& p, const BigInt& s) {
    std::vector<BigInt> c = p.coeffs();
    for (auto& x : c) x = exact_div(x, s);
    return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial::IntPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    trim();
}

IntPolynomial::IntPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::constant(const BigInt& c) { return IntPolynomial(std::vector<BigInt>{c}); }

IntPolynomial IntPolynomial::monomial(const BigInt& c, std::size_t degree) {
    std::vector<BigInt> v(degree + 1, BigInt(0));
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::linear(const BigInt& root) { return IntPolynomial(std::vector<BigInt>{-root, BigInt(1)}); }

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPolynomial::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& IntPolynomial::leading() const {
    if (is_zero()) throw MathError(ErrorKind::Precondition, "leading coefficient of the zero polynomial");
    return coeffs_.back();
}

const BigInt& IntPolynomial::constant_term() const {
    static const BigInt zero(0);
    return is_zero() ? zero : coeffs_.front();
}

BigInt IntPolynomial::evaluate(const BigInt& x) const {
    BigInt acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

BigRational IntPolynomial::evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + BigRational(*it);
    return acc;
}

int IntPolynomial::sign_at(const BigRational& x) const {
    // q^n p(p/q) = sum c_i p^i q^(n-i), same sign as p(x) because q > 0.
    const BigInt& num = x.get_num();
    const BigInt& den = x.get_den();
    BigInt acc = 0;
    BigInt den_pow = 1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * num + *it * den_pow;
        den_pow *= den;
    }
    return sgn(acc);
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<BigInt> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

BigInt IntPolynomial::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return {};
    BigInt c = content();
    if (leading() < 0) c = -c;
    return divide_scalar_exact(*this, c);
}

IntPolynomial IntPolynomial::negate_variable() const {
    std::vector<BigInt> c = coeffs_;
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(const BigInt& shift) const {
    // Horner in polynomial form: p(t + s).
    IntPolynomial acc;
    const IntPolynomial step(std::vector<BigInt>{shift, BigInt(1)});
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= step;
        acc += IntPolynomial::constant(*it);
    }
    return acc;
}

IntPolynomial& IntPolynomial::operator+=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator-=(const IntPolynomial& other) {
    if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size(), BigInt(0));
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const IntPolynomial& other) {
    if (is_zero() || other.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    coeffs_ = std::move(out);
    trim();
    return *this;
}

IntPolynomial& IntPolynomial::operator*=(const BigInt& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    trim();
    return *this;
}

IntPolynomial operator-(IntPolynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
}

IntPolynomial poly_mul(const IntPolynomial& p, const IntPolynomial& q) { return p * q; }

IntPolynomial poly_pow(const IntPolynomial& p, unsigned exponent) {
    IntPolynomial result{1};
    IntPolynomial base = p;
    while (exponent > 0) {
        if (exponent & 1U) result *= base;
        exponent >>= 1U;
        if (exponent > 0) base *= base;
    }
    return result;
}

Reversal reverse_with_drop(const IntPolynomial& p) {
    if (p.is_zero()) throw MathError(ErrorKind::Precondition, "reverse of the zero polynomial");
    std::vector<BigInt> c(p.coeffs().rbegin(), p.coeffs().rend());
    IntPolynomial r(std::move(c));
    return {r, p.degree() - r.degree()};
}

IntPolynomial poly_reverse(const IntPolynomial& p) { return reverse_with_drop(p).poly; }

IntPolynomial pseudo_remainder(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw MathError(ErrorKind::Precondition, "pseudo-remainder by zero");
    if (a.degree() < b.degree()) return a;
    const int db = b.degree();
    const BigInt& lb = b.leading();
    std::vector<BigInt> r = a.coeffs();
    int e = a.degree() - db + 1;
    for (int k = a.degree(); k >= db; --k) {
        BigInt lead = r[static_cast<std::size_t>(k)];
        for (auto& c : r) c *= lb;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= lead * b.coeffs()[static_cast<std::size_t>(j)];
        --e;
    }
    // Remaining factor so that the multiplier is exactly lb^(deg a - deg b + 1).
    BigInt fix = ipow(lb, static_cast<unsigned long>(e));
    for (auto& c : r) c *= fix;
    return IntPolynomial(std::move(r));
}

std::pair<IntPolynomial, IntPolynomial> divide_by_unit_leading(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero() || (b.leading() != 1 && b.leading() != -1)) {
        throw MathError(ErrorKind::Precondition, "divisor must have leading coefficient +-1");
    }
    if (a.degree() < b.degree()) return {IntPolynomial{}, a};
    const int db = b.degree();
    std::vector<BigInt> r = a.coeffs();
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1), BigInt(0));
    for (int k = a.degree(); k >= db; --k) {
        BigInt factor = r[static_cast<std::size_t>(k)] * b.leading();  // lc(b)^-1 == lc(b)
        q[static_cast<std::size_t>(k - db)] = factor;
        if (factor == 0) continue;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
    }
    return {IntPolynomial(std::move(q)), IntPolynomial(std::move(r))};
}

bool divides_exactly(const IntPolynomial& a, const IntPolynomial& b, IntPolynomial* quotient) {
    if (b.is_zero()) throw MathError(ErrorKind::Precondition, "division by the zero polynomial");
    if (a.is_zero()) {
        if (quotient) *quotient = IntPolynomial{};
        return true;
    }
    if (a.degree() < b.degree()) return false;
    const int db = b.degree();
    const BigInt& lb = b.leading();
    std::vector<BigInt> r = a.coeffs();
    std::vector<BigInt> q(static_cast<std::size_t>(a.degree() - db + 1), BigInt(0));
    for (int k = a.degree(); k >= db; --k) {
        const BigInt& top = r[static_cast<std::size_t>(k)];
        if (top == 0) continue;
        if (mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()) == 0) return false;
        BigInt factor = exact_div(top, lb);
        q[static_cast<std::size_t>(k - db)] = factor;
        for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= factor * b.coeffs()[static_cast<std::size_t>(j)];
    }
    for (const auto& c : r) {
        if (c != 0) return false;
    }
    if (quotient) *quotient = IntPolynomial(std::move(q));
    return true;
}

IntPolynomial poly_gcd(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() && q.is_zero()) throw MathError(ErrorKind::Precondition, "gcd(0, 0)");
    IntPolynomial a = p.primitive_part();
    IntPolynomial b = q.primitive_part();
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        IntPolynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        b = r.primitive_part();
    }
    return a.primitive_part();
}

BigInt resultant(const IntPolynomial& p, const IntPolynomial& q) {
    if (p.is_zero() || q.is_zero()) return 0;
    if (p.degree() == 0) return ipow(p.leading(), static_cast<unsigned long>(q.degree()));
    if (q.degree() == 0) return ipow(q.leading(), static_cast<unsigned long>(p.degree()));

    // Subresultant PRS (Collins / Brown), tracking the sign of swaps.
    BigInt ca = p.content();
    BigInt cb = q.content();
    IntPolynomial a = divide_scalar_exact(p, ca);
    IntPolynomial b = divide_scalar_exact(q, cb);
    BigInt g = 1;
    BigInt h = 1;
    int s = 1;
    BigInt scale = ipow(ca, static_cast<unsigned long>(q.degree())) * ipow(cb, static_cast<unsigned long>(p.degree()));
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -1;
    }
    for (;;) {
        const int delta = a.degree() - b.degree();
        if (a.degree() % 2 == 1 && b.degree() % 2 == 1) s = -s;
        IntPolynomial r = pseudo_remainder(a, b);
        a = std::move(b);
        if (r.is_zero()) return 0;
        b = divide_scalar_exact(r, g * ipow(h, static_cast<unsigned long>(delta)));
        g = a.leading();
        if (delta == 0) {
            // h unchanged
        } else {
            h = exact_div(ipow(g, static_cast<unsigned long>(delta)), ipow(h, static_cast<unsigned long>(delta - 1)));
        }
        if (b.degree() == 0) {
            const auto da = static_cast<unsigned long>(a.degree());
            BigInt last = exact_div(ipow(b.leading(), da), ipow(h, da - 1));
            return s * scale * last;
        }
    }
}

IntPolynomial power_of_t_mod(unsigned long exponent, const IntPolynomial& modulus) {
    if (!modulus.is_monic()) throw MathError(ErrorKind::Precondition, "modulus must be monic");
    if (modulus.degree() == 0) return {};
    auto reduce = [&](const IntPolynomial& x) { return divide_by_unit_leading(x, modulus).second; };
    IntPolynomial result = reduce(IntPolynomial{1});
    IntPolynomial base = reduce(IntPolynomial{0, 1});
    while (exponent > 0) {
        if (exponent & 1UL) result = reduce(result * base);
        exponent >>= 1UL;
        if (exponent > 0) base = reduce(base * base);
    }
    return result;
}

BigInt resultant_with_one_minus_power(const IntPolynomial& monic_p, unsigned long n) {
    if (!monic_p.is_monic()) throw MathError(ErrorKind::Precondition, "expected a monic polynomial");
    if (monic_p.degree() == 0) return 1;
    // Res(p, q) = prod q(root) only depends on q mod p when p is monic.
    IntPolynomial r = IntPolynomial{1} - power_of_t_mod(n, monic_p);
    return resultant(monic_p, r);
}

IntPolynomial cyclotomic(int k) {
    if (k < 1 || k > 12) throw MathError(ErrorKind::OutOfRange, "cyclotomic index must lie in 1..12");
    IntPolynomial num = IntPolynomial::monomial(1, static_cast<std::size_t>(k)) - IntPolynomial{1};
    for (int d = 1; d < k; ++d) {
        if (k % d != 0) continue;
        IntPolynomial q;
        divides_exactly(num, cyclotomic(d), &q);
        num = q;
    }
    return num;
}

std::vector<std::pair<IntPolynomial, int>> square_free_decomposition(const IntPolynomial& p) {
    std::vector<std::pair<IntPolynomial, int>> out;
    if (p.degree() <= 0) return out;
    IntPolynomial f = p.primitive_part();
    IntPolynomial df = f.derivative();
    IntPolynomial a0 = poly_gcd(f, df);
    IntPolynomial b, c;
    divides_exactly(f, a0, &b);
    divides_exactly(df, a0, &c);
    IntPolynomial d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        IntPolynomial a = d.is_zero() ? b.primitive_part() : poly_gcd(b, d);
        IntPolynomial nb, nc;
        divides_exactly(b, a, &nb);
        if (!d.is_zero()) divides_exactly(d, a, &nc);
        if (a.degree() > 0) out.emplace_back(a.primitive_part(), i);
        b = nb;
        c = nc;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

IntPolynomial square_free_part(const IntPolynomial& p) {
    if (p.is_zero()) return {};
    IntPolynomial f = p.primitive_part();
    if (f.degree() <= 0) return f;
    IntPolynomial g = poly_gcd(f, f.derivative());
    IntPolynomial q;
    divides_exactly(f, g, &q);
    return q.primitive_part();
}

IntPolynomial parse_polynomial(std::string_view text) {
    std::vector<BigInt> coeffs;
    std::size_t start = 0;
    if (text.find_first_not_of(" \t\n") == std::string_view::npos) throw ParseError("empty polynomial");
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        coeffs.push_back(parse_integer(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return IntPolynomial(std::move(coeffs));
}

std::string serialize(const IntPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
        if (i) out += ',';
        out += p.coeffs()[i].get_str();
    }
    return out;
}

std::string pretty(const IntPolynomial& p, char var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = p.degree(); k >= 0; --k) {
        const BigInt& c = p.coeffs()[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (mag != 1 || k == 0) os << mag.get_str();
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}


IntPolynomial interpolate_integer_polynomial(const std::vector<BigInt>& xs, const std::vector<BigRational>& values) {
    const std::size_t n = xs.size();
    if (values.size() != n || n == 0) throw MathError(ErrorKind::Precondition, "interpolation needs matching nodes and values");
    // Newton divided differences, then expand the Newton form.
    std::vector<BigRational> dd(values);
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            dd[i] = (dd[i] - dd[i - 1]) / BigRational(xs[i] - xs[i - level]);
            if (i == level) break;
        }
    }
    std::vector<BigRational> coeffs(n, BigRational(0));
    for (std::size_t k = n; k-- > 0;) {
        // coeffs := coeffs * (t - xs[k]) + dd[k]
        std::vector<BigRational> next(n, BigRational(0));
        for (std::size_t i = 0; i + 1 < n; ++i) {
            next[i + 1] += coeffs[i];
            next[i] -= coeffs[i] * BigRational(xs[k]);
        }
        next[0] += dd[k];
        coeffs = std::move(next);
    }
    std::vector<BigInt> out;
    out.reserve(n);
    for (const auto& c : coeffs) {
        if (!is_integer(c)) throw MathError(ErrorKind::NonIntegral, "interpolated polynomial has non-integer coefficients");
        out.push_back(c.get_num());
    }
    return IntPolynomial(std::move(out));
}

IntPolynomial composed_product(const IntPolynomial& monic_p) {
    if (!monic_p.is_monic()) throw MathError(ErrorKind::Precondition, "composed product expects a monic polynomial");
    const int n = monic_p.degree();
    const int points = n * n + 1;
    std::vector<BigInt> xs;
    std::vector<BigRational> values;
    for (int k = 0; k < points; ++k) {
        BigInt y = k;
        // x^n p(y/x) = sum_i p_i y^i x^(n-i)
        std::vector<BigInt> c(static_cast<std::size_t>(n) + 1, BigInt(0));
        BigInt ypow = 1;
        for (int i = 0; i <= n; ++i) {
            c[static_cast<std::size_t>(n - i)] = monic_p.coeff(static_cast<std::size_t>(i)) * ypow;
            ypow *= y;
        }
        IntPolynomial q(std::move(c));
        xs.push_back(y);
        // Monic p: Res(p, q) = prod q(root) whatever the degree of q.
        values.emplace_back(resultant(monic_p, q));
    }
    return interpolate_integer_polynomial(xs, values);
}

}  // namespace torfix::arith
