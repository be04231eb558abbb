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
#include <string>
#include <utility>
#include <vector>

#include "torfix/endo/endomorphism.hpp"

namespace torfix {

/// t^4 + a t^2 + t + 1.
endo::EndomorphismInput mcmullen_family(unsigned long a);

/// Least a >= 0 such that t^4 + a t^2 + t + 1 has a root of modulus < eps.
/// eps = 1 is read as 1^-. Throws Precondition unless 0 < eps <= 1.
unsigned long find_small_eigenvalue_parameter(const arith::BigRational& eps);

/// Analytic representation [[a, b], [c, d]] over Q on E x E. Throws
/// InvalidStructure unless ad - bc = 1.
endo::EndomorphismInput sl2_family(long a, long b, long c, long d);

/// rotation_e_times_e, gaussian_i_2i, rm_sqrt2, mcmullen_0, neg_identity, mult_2.
std::vector<std::pair<std::string, endo::EndomorphismInput>> builtin_examples();
std::optional<endo::EndomorphismInput> builtin_example(const std::string& name);

}  // namespace torfix
