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
#include <string_view>
#include <vector>

#include "torfix/endo/endomorphism.hpp"

namespace torfix::behavior {

using arith::BigInt;
using arith::BigRational;
using arith::RationalInterval;
using endo::EndomorphismInput;

enum class Verdict { B1, B2, B3 };

std::string_view verdict_name(Verdict v);

/// Default width of growth_base enclosures, 2^-20.
BigRational default_growth_width();

/// Behaviour of n -> fix(f^n).
///   B1: exponential growth with base growth_base (the Mahler measure).
///   B2: periodic with minimal period `period` and values `cycle`.
///   B3: zero exactly on n = 0 mod r, exponential growth elsewhere.
struct BehaviorReport {
    Verdict verdict = Verdict::B1;
    arith::IntPolynomial char_poly;
    std::optional<RationalInterval> growth_base;
    std::optional<unsigned> period;
    std::vector<BigInt> cycle;
    std::optional<int> r;
    eig::EigenvalueClassification eigen;
    /// Set when an eigenvalue equals 1: fix is identically 0.
    bool has_eigenvalue_one = false;
};

/// Enclosure of prod max(1, |mu|) over the roots of p, of width <= width.
RationalInterval mahler_measure_interval(const eig::CharPolyQuartic& p, const BigRational& width = default_growth_width());

/// Throws ZeroEndomorphism when every root is 0; InvalidStructure /
/// InvalidEndomorphism as raised while deriving and classifying P^r.
BehaviorReport classify(const EndomorphismInput& e, const BigRational& growth_width = default_growth_width());

/// fix(f^n) = 0 iff r | n for 1 <= n <= n_max. Throws Precondition unless
/// report is B3.
bool verify_b3_pattern(const EndomorphismInput& e, const BehaviorReport& report, unsigned long n_max);

}  // namespace torfix::behavior
