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

#include "doctest.h"

#include <cmath>
#include <complex>
#include <functional>

#include "generators.hpp"
#include "oracles.hpp"
#include "reference_values.hpp"
#include "torfix/algebra/classify.hpp"
#include "torfix/errors.hpp"
#include "torfix/families.hpp"

using namespace torfix::arith;
using namespace torfix::algebra;
using torfix::ErrorKind;
using torfix::MathError;
using torfix::behavior::Verdict;

namespace {

BigRational r(long p, long q = 1) { return make_rational(BigInt(p), BigInt(q)); }

QuaternionElement quat(long alpha, long beta, std::array<BigRational, 4> c) {
    return QuaternionElement(QuaternionAlgebraDesc(BigRational(alpha), BigRational(beta)), c);
}

const QuaternionElement kF1 = quat(3, 2, {r(0), r(1), r(1), r(1)});
const QuaternionElement kF2 = quat(-3, 2, {r(1, 2), r(1, 2), r(0), r(0)});
const QuaternionElement kF3 = quat(-3, 2, {r(-1, 2), r(1, 2), r(0), r(0)});

const CMFieldDesc kPhi5Field(IntPolynomial{1, 1, 1, 1, 1});

CMElement cm(std::array<long, 4> c) { return CMElement{kPhi5Field, {r(c[0]), r(c[1]), r(c[2]), r(c[3])}}; }

ErrorKind error_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const MathError& e) {
        return e.kind();
    }
    return ErrorKind::Precondition;
}

std::vector<long> to_longs(const std::vector<BigInt>& v) {
    std::vector<long> out;
    for (const auto& x : v) out.push_back(x.get_si());
    return out;
}

/// Characteristic polynomial of multiplication by x on Z[y]/g, evaluated at k
/// by a determinant (integer coordinates only).
BigInt cm_oracle_at(const CMElement& x, long k) {
    const IntPolynomial& g = x.field.defining_poly();
    oracle::Matrix companion(4, std::vector<BigInt>(4, BigInt(0)));
    for (std::size_t i = 1; i < 4; ++i) companion[i][i - 1] = 1;
    for (std::size_t i = 0; i < 4; ++i) companion[i][3] = -g.coeff(i);
    oracle::Matrix power = oracle::identity(4);
    oracle::Matrix mult(4, std::vector<BigInt>(4, BigInt(0)));
    for (std::size_t e = 0; e < 4; ++e) {
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) mult[i][j] += x.coords[e].get_num() * power[i][j];
        power = oracle::multiply(power, companion);
    }
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) mult[i][j] = (i == j ? BigInt(k) : BigInt(0)) - mult[i][j];
    return oracle::bareiss_determinant(mult);
}

}  // namespace

TEST_CASE("descriptor exponents") {
    CHECK(descriptor(AlgebraKind::Z).norm_exponent == 4);
    CHECK(descriptor(AlgebraKind::RealQuad).norm_exponent == 2);
    CHECK(descriptor(AlgebraKind::Quaternion).norm_exponent == 2);
    CHECK(descriptor(AlgebraKind::CM).norm_exponent == 1);
    for (auto k : {AlgebraKind::Z, AlgebraKind::RealQuad, AlgebraKind::Quaternion, AlgebraKind::CM}) {
        auto d = descriptor(k);
        CHECK(d.norm_exponent * d.d * d.e == 4);
    }
}

TEST_CASE("rm_eigenvalues") {
    auto [p, q] = rm_eigenvalues(RealQuadElement{2, BigInt(-1), BigInt(1)});
    CHECK(p.u == -1);
    CHECK(p.v == 1);
    CHECK(q.v == -1);
    auto [g1, g2] = rm_eigenvalues(RealQuadElement{5, BigInt(0), BigInt(1)});
    CHECK(g1.u == r(1, 2));
    CHECK(g1.v == r(1, 2));
    CHECK(g2.v == r(-1, 2));
    auto [s1, s2] = rm_eigenvalues(RealQuadElement{3, BigInt(3), BigInt(0)});
    CHECK(s1.u == 3);
    CHECK(s1.v == 0);
    CHECK(s2.u == 3);
    CHECK(error_of([] { (void)rm_eigenvalues(RealQuadElement{4, BigInt(1), BigInt(1)}); }) == ErrorKind::InvalidStructure);
    CHECK(rm_min_poly(RealQuadElement{2, BigInt(-1), BigInt(1)}) == IntPolynomial{-1, 2, 1});
    CHECK(rm_min_poly(RealQuadElement{5, BigInt(0), BigInt(1)}) == IntPolynomial{-1, -1, 1});
}

TEST_CASE("rm_classify") {
    auto one = rm_classify(RealQuadElement{2, BigInt(1), BigInt(0)});
    CHECK(one.verdict == Verdict::B2);
    CHECK(one.period == 1u);
    CHECK(to_longs(one.cycle) == std::vector<long>{0});

    CHECK(rm_classify(RealQuadElement{2, BigInt(-1), BigInt(1)}).verdict == Verdict::B1);

    auto three = rm_classify(RealQuadElement{2, BigInt(3), BigInt(0)});
    CHECK(three.verdict == Verdict::B1);
    REQUIRE(three.growth_base);
    CHECK(three.growth_base->contains(BigRational(81)));

    auto minus_one = rm_classify(RealQuadElement{3, BigInt(-1), BigInt(0)});
    CHECK(minus_one.verdict == Verdict::B2);
    CHECK(minus_one.period == 2u);

    CHECK(error_of([] { (void)rm_classify(RealQuadElement{2, BigInt(0), BigInt(0)}); }) == ErrorKind::ZeroEndomorphism);
}

TEST_CASE("quaternion normalization") {
    QuaternionAlgebraDesc a(BigRational(-3), BigRational(2));
    CHECK(a.alpha() == 2);
    CHECK(a.beta() == -3);
    CHECK(a.swapped());
    CHECK(a.input_pair() == std::pair{BigRational(-3), BigRational(2)});

    QuaternionAlgebraDesc b(BigRational(2), BigRational(3));
    CHECK(b.alpha() == 3);
    CHECK(b.swapped());
    CHECK_FALSE(QuaternionAlgebraDesc(BigRational(3), BigRational(-5)).swapped());

    CHECK(error_of([] { QuaternionAlgebraDesc(BigRational(-1), BigRational(-1)); }) == ErrorKind::InvalidStructure);
    CHECK(error_of([] { QuaternionAlgebraDesc(BigRational(0), BigRational(1)); }) == ErrorKind::InvalidStructure);

    CHECK(kF2.coords() == std::array{r(1, 2), r(0), r(1, 2), r(0)});
    CHECK(kF2.input_coords() == std::array{r(1, 2), r(1, 2), r(0), r(0)});
    // ij in the input basis is -i'j' after the swap.
    auto ij = quat(2, 3, {r(0), r(0), r(0), r(1)});
    CHECK(ij.coords()[3] == -1);
    CHECK(quat_reduced_norm(ij) == quat_reduced_norm(quat(3, 2, {r(0), r(0), r(0), r(1)})));
}

TEST_CASE("quat_reduced_norm") {
    CHECK(quat_reduced_norm(kF1) == 1);
    CHECK(quat_reduced_norm(quat(3, 2, {r(1), r(0), r(0), r(0)})) == 1);
    CHECK(quat_reduced_norm(kF2) == 1);
}

TEST_CASE("quat_reduced_charpoly") {
    CHECK(quat_reduced_charpoly(kF1) == IntPolynomial{1, 0, 1});
    CHECK(quat_reduced_charpoly(kF2) == IntPolynomial{1, -1, 1});
    CHECK(quat_reduced_charpoly(kF3) == IntPolynomial{1, 1, 1});
    CHECK(error_of([] { (void)quat_reduced_charpoly(quat(3, 2, {r(1, 2), r(0), r(0), r(0)})); }) == ErrorKind::NonIntegral);
}

TEST_CASE("quat_root_data") {
    auto f1 = quat_root_data(kF1);
    CHECK(f1.disc == -1);
    CHECK(f1.kind == RootPairKind::ComplexPair);
    auto x = quat_root_data(quat(3, 2, {r(1), r(1), r(0), r(0)}));
    CHECK(x.disc == 3);
    CHECK(x.kind == RootPairKind::RealQuadratic);
    auto five = quat_root_data(quat(3, 2, {r(5), r(0), r(0), r(0)}));
    CHECK(five.disc == 0);
    CHECK(five.kind == RootPairKind::Rational);
    CHECK(five.sqrt_disc == 0);
    CHECK(five.describe() == "t1 = 5, t2 = 5");
}

TEST_CASE("quat_fix") {
    CHECK(quat_fix(kF1, 1) == 4);
    CHECK(quat_fix(kF1, 4) == 0);
    CHECK(quat_fix(kF2, 3) == 16);
}

TEST_CASE("quat_classify") {
    auto f1 = quat_classify(kF1);
    CHECK(f1.verdict == Verdict::B2);
    CHECK(f1.period == 4u);
    CHECK(to_longs(f1.cycle) == std::vector<long>{4, 16, 4, 0});

    CHECK(quat_classify(quat(3, 2, {r(1), r(1), r(0), r(0)})).verdict == Verdict::B1);

    auto minus = quat_classify(quat(3, 2, {r(-1), r(0), r(0), r(0)}));
    CHECK(minus.verdict == Verdict::B2);
    CHECK(minus.period == 2u);
    CHECK(to_longs(minus.cycle) == std::vector<long>{16, 0});

    CHECK(quat_classify(kF2).period == 6u);
    CHECK(quat_classify(kF3).period == 3u);

    // (1, 1) is split: 1 + i has norm 0; i + 2 has eigenvalues 1 and 3.
    CHECK(error_of([] { (void)quat_classify(quat(1, 1, {r(1), r(1), r(0), r(0)})); }) == ErrorKind::ZeroNorm);
    CHECK(error_of([] { (void)quat_classify(quat(1, 1, {r(2), r(1), r(0), r(0)})); }) ==
          ErrorKind::NotDivisionAlgebra);
    // Nilpotent part: i + ij in (1, 1) has disc 1 + 0 - 1 = 0.
    CHECK(error_of([] { (void)quat_classify(quat(1, 1, {r(3), r(1), r(0), r(1)})); }) == ErrorKind::NotDivisionAlgebra);
    CHECK(error_of([] { (void)quat_classify(quat(3, 2, {r(0), r(0), r(0), r(0)})); }) == ErrorKind::ZeroEndomorphism);
}

TEST_CASE("quat one-root criterion") {
    CHECK(quat_one_root_criterion(kF1));
    CHECK(quat_one_root_criterion(kF2));
    CHECK(quat_one_root_criterion(quat(3, 2, {r(1), r(0), r(0), r(0)})));
    CHECK_FALSE(quat_one_root_criterion(quat(3, 2, {r(1), r(1), r(0), r(0)})));
    CHECK_FALSE(quat_one_root_criterion(quat(3, 2, {r(2), r(0), r(0), r(0)})));
}

TEST_CASE("CM field validation") {
    CHECK_NOTHROW(CMFieldDesc(IntPolynomial{1, 0, 0, 0, 1}));
    CHECK_NOTHROW(CMFieldDesc(IntPolynomial{5, 0, 5, 0, 1}, 5, std::nullopt));
    CHECK(error_of([] { CMFieldDesc(IntPolynomial{1, -1, -1, -1, 1}); }) == ErrorKind::InvalidStructure);  // real roots
    CHECK(error_of([] { CMFieldDesc(IntPolynomial{2, 0, 3, 0, 1}); }) == ErrorKind::InvalidStructure);     // reducible
    CHECK(error_of([] { CMFieldDesc(IntPolynomial{2, 0, 0, 0, 1}); }) == ErrorKind::InvalidStructure);     // no real subfield
    CHECK(error_of([] { CMFieldDesc(IntPolynomial{13, 0, 7, 0, 1}); }) == ErrorKind::InvalidStructure);   // subfield Q(sqrt -3)
    CHECK(error_of([] { CMFieldDesc(IntPolynomial{1, 1, 1}); }) == ErrorKind::InvalidStructure);
    CHECK(error_of([] { CMFieldDesc(IntPolynomial{1, 0, 0, 0, 1}, 4, std::nullopt); }) == ErrorKind::InvalidStructure);
    for (const auto& f : gen::cm_fields()) CHECK(f.defining_poly().degree() == 4);
}

TEST_CASE("quartic_is_reducible") {
    CHECK(quartic_is_reducible(IntPolynomial{2, 0, 3, 0, 1}));
    CHECK(quartic_is_reducible(IntPolynomial{1, -2, 3, -2, 1}));
    CHECK(quartic_is_reducible(IntPolynomial{-1, 1} * IntPolynomial{1, 1, 1, 1}));
    CHECK(quartic_is_reducible(IntPolynomial{1, -1, 1} * IntPolynomial{5, 3, 1}));
    CHECK_FALSE(quartic_is_reducible(IntPolynomial{1, 1, 1, 1, 1}));
    CHECK_FALSE(quartic_is_reducible(IntPolynomial{1, 1, 0, 0, 1}));
    CHECK_FALSE(quartic_is_reducible(IntPolynomial{2, 0, 0, 0, 1}));
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        IntPolynomial a = oracle::random_polynomial(rng, 2, 6);
        IntPolynomial b = oracle::random_polynomial(rng, 2, 6);
        a = IntPolynomial(std::vector<BigInt>{a.coeff(0), a.coeff(1), BigInt(1)});
        b = IntPolynomial(std::vector<BigInt>{b.coeff(0), b.coeff(1), BigInt(1)});
        CHECK(quartic_is_reducible(a * b));
    }
}

TEST_CASE("cm_char_poly") {
    CHECK(cm_char_poly(cm({0, 1, 0, 0})) == IntPolynomial{1, 1, 1, 1, 1});
    CHECK(cm_char_poly(CMElement{kPhi5Field, {r(3), r(0), r(0), r(0)}}) == poly_pow(IntPolynomial{-3, 1}, 4));
    CHECK(cm_char_poly(cm({1, 1, 0, 0})) == IntPolynomial{1, -2, 4, -3, 1});
    CHECK(cm_char_poly(cm({1, 1, 0, 0})).constant_term() == IntPolynomial{1, 1, 1, 1, 1}.evaluate(BigInt(-1)));
    CHECK(error_of([] { (void)cm_char_poly(CMElement{kPhi5Field, {r(1, 2), r(0), r(0), r(0)}}); }) ==
          ErrorKind::NonIntegral);
    CHECK(error_of([] { (void)cm_char_poly(CMElement{kPhi5Field, {r(0), r(1, 2), r(0), r(0)}}); }) ==
          ErrorKind::NonIntegral);
    // (1 + sqrt5)/2 = -zeta^2 - zeta^3 in Q(zeta_5) is integral despite looking fractional in Q(sqrt5).
    CHECK(cm_char_poly(cm({0, 0, -1, -1})) == poly_pow(IntPolynomial{-1, -1, 1}, 2));
}

TEST_CASE("cm_char_poly matches the multiplication-matrix determinant") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 300; ++i) {
        CMElement x = gen::random_cm(rng, 3);
        IntPolynomial p = cm_char_poly(x);
        REQUIRE(p.degree() == 4);
        CHECK(p.is_monic());
        for (long k = -3; k <= 3; ++k) CHECK(p.evaluate(BigInt(k)) == cm_oracle_at(x, k));
    }
}

TEST_CASE("cm_fix and cm_classify") {
    CHECK(cm_fix(cm({0, 1, 0, 0}), 1) == 5);
    CHECK(cm_fix(cm({0, 1, 0, 0}), 5) == 0);
    CHECK(cm_fix(cm({-1, 0, 0, 0}), 1) == 16);

    auto zeta = cm_classify(cm({0, 1, 0, 0}));
    CHECK(zeta.verdict == Verdict::B2);
    CHECK(zeta.period == 5u);
    REQUIRE(zeta.cycle.size() == 5);
    CHECK(zeta.cycle[4] == 0);
    for (unsigned n = 1; n <= 5; ++n) CHECK(zeta.cycle[n - 1] == cm_fix(cm({0, 1, 0, 0}), n));

    CHECK(cm_classify(cm({1, 1, 0, 0})).verdict == Verdict::B1);
    auto minus = cm_classify(cm({-1, 0, 0, 0}));
    CHECK(minus.verdict == Verdict::B2);
    CHECK(minus.period == 2u);
}

TEST_CASE("periodic_eigenvalue_table") {
    auto quat_table = periodic_eigenvalue_table(AlgebraKind::Quaternion);
    auto cm_table = periodic_eigenvalue_table(AlgebraKind::CM);
    CHECK(quat_table.size() == 5);
    CHECK(cm_table.size() == 9);
    std::vector<int> quat_orders, cm_orders;
    for (const auto& e : quat_table) quat_orders.push_back(e.order);
    for (const auto& e : cm_table) cm_orders.push_back(e.order);
    CHECK(quat_orders == std::vector<int>{1, 2, 3, 4, 6});
    CHECK(cm_orders == std::vector<int>{1, 2, 3, 4, 6, 5, 8, 10, 12});
    for (std::size_t i = 0; i < quat_table.size(); ++i) CHECK(quat_table[i].min_poly == cm_table[i].min_poly);

    auto contains = [&](const IntPolynomial& p) {
        return std::any_of(quat_table.begin(), quat_table.end(), [&](const TableEntry& e) { return e.min_poly == p; });
    };
    for (const auto* f : {&kF1, &kF2, &kF3}) CHECK(contains(quat_reduced_charpoly(*f)));
    CHECK(contains(IntPolynomial{1, 0, 1}));

    for (const auto& e : cm_table) {
        CHECK(torfix::eig::root_of_unity_order(e.min_poly) == e.order);
    }
    CHECK_THROWS_AS(periodic_eigenvalue_table(AlgebraKind::RealQuad), MathError);
}

TEST_CASE("periodic table against the radical expressions") {
    const auto table = periodic_eigenvalue_table(AlgebraKind::CM);
    const auto radicals = reference::radical_roots_of_unity();
    auto eval = [](const IntPolynomial& p, std::complex<double> z) {
        std::complex<double> acc = 0;
        for (int i = p.degree(); i >= 0; --i) acc = acc * z + p.coeff(static_cast<std::size_t>(i)).get_d();
        return acc;
    };
    for (const auto& z : radicals) {
        int hits = 0;
        for (const auto& e : table) hits += std::abs(eval(e.min_poly, z)) < 1e-9 ? 1 : 0;
        CHECK(hits == 1);
    }
    for (const auto& e : table) {
        int roots = 0;
        for (const auto& z : radicals) roots += std::abs(eval(e.min_poly, z)) < 1e-9 ? 1 : 0;
        CHECK(roots == e.min_poly.degree());
    }
}

TEST_CASE("chi^2 equals P^r for random quaternions") {
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 300; ++i) {
        QuaternionElement x = gen::random_quaternion(rng);
        IntPolynomial chi = quat_reduced_charpoly(x);
        IntPolynomial quartic = torfix::endo::char_poly_rational(AlgebraElement{x}).poly();
        for (long m = -3; m <= 3; ++m) {
            // N(m - x) = chi(m)
            auto shifted = x.coords();
            for (auto& c : shifted) c = -c;
            shifted[0] += m;
            QuaternionElement y(QuaternionAlgebraDesc(x.algebra().alpha(), x.algebra().beta()), shifted);
            CHECK(quat_reduced_norm(y) == BigRational(chi.evaluate(BigInt(m))));
            const BigInt v = chi.evaluate(BigInt(m));
            CHECK(v * v == quartic.evaluate(BigInt(m)));
        }
    }
}

TEST_CASE("simple abelian surfaces: no B3 and B2 eigenvalues lie in the tables") {
    std::mt19937_64 rng(1618);
    const auto quat_table = periodic_eigenvalue_table(AlgebraKind::Quaternion);
    const auto cm_table = periodic_eigenvalue_table(AlgebraKind::CM);
    auto in_table = [](const std::vector<TableEntry>& table, const IntPolynomial& quartic) {
        for (const auto& [factor, mult] : square_free_decomposition(quartic)) {
            auto dec = torfix::eig::cyclotomic_decomposition(factor);
            if (!dec) return false;
            for (const auto& [k, m] : *dec) {
                if (std::none_of(table.begin(), table.end(), [&](const TableEntry& e) { return e.order == k; })) return false;
            }
        }
        return true;
    };

    int rm_b2 = 0, quat_b2 = 0, quat_rejected = 0, cm_b2 = 0;
    for (int i = 0; i < 1000; ++i) {
        auto x = gen::random_rm(rng);
        auto rep = rm_classify(x);
        CHECK(rep.verdict != Verdict::B3);
        if (rep.verdict == Verdict::B2) {
            ++rm_b2;
            CHECK(x.b == 0);
        }
    }
    for (int i = 0; i < 1000; ++i) {
        auto x = gen::random_quaternion(rng);
        try {
            auto rep = quat_classify(x);
            CHECK(rep.verdict != Verdict::B3);
            if (rep.verdict == Verdict::B2) {
                ++quat_b2;
                CHECK(in_table(quat_table, quat_reduced_charpoly(x)));
            }
        } catch (const MathError& e) {
            CHECK((e.kind() == ErrorKind::ZeroNorm || e.kind() == ErrorKind::NotDivisionAlgebra));
            ++quat_rejected;
        }
    }
    for (int i = 0; i < 1000; ++i) {
        auto x = gen::random_cm(rng);
        auto rep = cm_classify(x);
        CHECK(rep.verdict != Verdict::B3);
        if (rep.verdict == Verdict::B2) {
            ++cm_b2;
            CHECK(in_table(cm_table, cm_char_poly(x)));
        }
    }
    CHECK(rm_b2 > 0);
    CHECK(quat_b2 > 10);
    CHECK(quat_rejected < 900);
    CHECK(cm_b2 > 10);
}

TEST_CASE("fixed-point formula coherence") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        auto q = gen::random_quaternion(rng);
        auto c = gen::random_cm(rng);
        for (unsigned long n = 1; n <= 10; ++n) {
            CHECK(quat_fix(q, n) == torfix::endo::fix_count(AlgebraElement{q}, n));
            CHECK(cm_fix(c, n) == torfix::endo::fix_count(AlgebraElement{c}, n));
            CHECK(cm_fix(c, n) == torfix::endo::fix_count(torfix::eig::CharPolyQuartic(cm_char_poly(c)), n));
        }
        // fix(f) = N(1 - f)^(4/de)
        CHECK(quat_fix(q, 1) == [&] {
            BigInt n1 = quat_reduced_charpoly(q).evaluate(BigInt(1));
            return BigInt(n1 * n1);
        }());
    }
}

TEST_CASE("families") {
    using torfix::eig::CharPolyQuartic;
    CHECK(std::get<CharPolyQuartic>(torfix::mcmullen_family(0)).poly() == IntPolynomial{1, 1, 0, 0, 1});
    CHECK(std::get<CharPolyQuartic>(torfix::mcmullen_family(1)).poly() == IntPolynomial{1, 1, 1, 0, 1});
    CHECK(torfix::behavior::classify(torfix::mcmullen_family(0)).verdict == Verdict::B1);

    CHECK(torfix::find_small_eigenvalue_parameter(BigRational(1)) == 0);
    CHECK(error_of([] { (void)torfix::find_small_eigenvalue_parameter(BigRational(0)); }) == ErrorKind::Precondition);
    CHECK(error_of([] { (void)torfix::find_small_eigenvalue_parameter(BigRational(2)); }) == ErrorKind::Precondition);

    unsigned long previous = 0;
    for (long k = 9; k >= 3; --k) {
        unsigned long a = torfix::find_small_eigenvalue_parameter(BigRational(k, 10));
        CHECK(a >= previous);
        previous = a;
    }

    const unsigned long a = torfix::find_small_eigenvalue_parameter(BigRational(3, 10));
    auto min_modulus = [](unsigned long param) {
        double best = 10;
        for (auto z : oracle::numeric_roots(IntPolynomial(std::vector<BigInt>{BigInt(1), BigInt(1), BigInt(param), BigInt(0), BigInt(1)})))
            best = std::min(best, std::abs(z));
        return best;
    };
    REQUIRE(a >= 1);
    CHECK(min_modulus(a) < 0.3 - 1e-6);
    CHECK(min_modulus(a - 1) > 0.3 + 1e-6);
    CHECK(a == 12);
}

TEST_CASE("builtin examples") {
    const auto examples = torfix::builtin_examples();
    CHECK(examples.size() == 6);
    using torfix::endo::char_poly_rational;
    using torfix::endo::fix_sequence;
    CHECK(to_longs(fix_sequence(*torfix::builtin_example("rotation_e_times_e"), 6)) ==
          std::vector<long>{1, 9, 16, 9, 1, 0});
    CHECK(char_poly_rational(*torfix::builtin_example("rm_sqrt2")).poly() == poly_pow(IntPolynomial{-1, 2, 1}, 2));
    CHECK(char_poly_rational(*torfix::builtin_example("gaussian_i_2i")).poly() == IntPolynomial{4, 0, 5, 0, 1});
    CHECK_FALSE(torfix::builtin_example("nope").has_value());
}
