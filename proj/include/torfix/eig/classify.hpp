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

#include <optional>
#include <utility>
#include <vector>

#include "torfix/arith/numbers.hpp"
#include "torfix/arith/polynomial.hpp"
#include "torfix/arith/real_roots.hpp"
#include "torfix/eig/modulus.hpp"

namespace torfix::eig {

/// Monic integer quartic: the characteristic polynomial of a rational
/// representation on a rank-4 lattice.
class CharPolyQuartic {
public:
    /// Throws InvalidStructure unless p is monic of degree exactly 4.
    explicit CharPolyQuartic(IntPolynomial p);

    [[nodiscard]] const IntPolynomial& poly() const noexcept { return poly_; }
    friend bool operator==(const CharPolyQuartic& a, const CharPolyQuartic& b) { return a.poly_ == b.poly_; }

private:
    IntPolynomial poly_;
};

/// Root-of-unity orders that can occur in degree <= 4.
inline constexpr int kAllowedUnityOrders[] = {1, 2, 3, 4, 5, 6, 8, 10, 12};

bool is_allowed_unity_order(int k);

/// Exact modulus census of the four roots of a quartic, with multiplicity.
struct EigenvalueClassification {
    int n_zero = 0;
    int n_less = 0;
    int n_on = 0;
    int n_more = 0;
    /// One entry per unit-circle root (Phi_6^2 contributes four 6s), ascending.
    std::vector<int> unity_orders;
    /// Enclosures of |mu|^2 for each root with |mu| > 1, ascending by lower end.
    std::vector<RationalInterval> outside_moduli;

    friend bool operator==(const EigenvalueClassification&, const EigenvalueClassification&) = default;
};

/// True iff the roots can be written {l1, l2, conj l1, conj l2}, i.e. every
/// real root has even multiplicity.
bool validate_conjugate_pair_structure(const CharPolyQuartic& p);

/// Monic factor of p whose roots are exactly its unit-circle roots, with
/// multiplicity. Throws InvalidEndomorphism when an irreducible factor has
/// roots both on and off the circle (its circle roots are then not roots of
/// unity, e.g. a Salem quartic).
IntPolynomial unit_circle_factor(const IntPolynomial& p);
inline IntPolynomial unit_circle_factor(const CharPolyQuartic& p) { return unit_circle_factor(p.poly()); }

/// Multiplicities of Phi_k (k allowed) in q when q is a product of such
/// cyclotomic polynomials; std::nullopt otherwise.
std::optional<std::vector<std::pair<int, int>>> cyclotomic_decomposition(const IntPolynomial& q);

/// lcm of the orders when q is a product of Phi_k with k in the allowed set.
std::optional<int> root_of_unity_order(const IntPolynomial& q);

/// Roots of p strictly inside the unit disk (with multiplicity) by the
/// Schur-Cohn-Lehmer recursion; std::nullopt when the recursion meets a step
/// with |p(0)| = |lc(p)|. Requires p(0) != 0 and no roots on the circle.
std::optional<int> schur_cohn_inside_count(const IntPolynomial& p);

/// Requires validate_conjugate_pair_structure(p). outside_width bounds the
/// width of each outside_moduli enclosure.
EigenvalueClassification count_roots_by_modulus(const CharPolyQuartic& p,
                                                const BigRational& outside_width = arith::default_isolation_width());

/// |mu|^2 for every root of p that is neither 0 nor on the unit circle.
std::vector<ModulusSquared> off_circle_moduli(const CharPolyQuartic& p);

/// deg h even and h palindromic. Caller guarantees h irreducible with a
/// non-real unit-modulus root.
bool assert_self_reciprocal_minpoly(const IntPolynomial& h);

}  // namespace torfix::eig
