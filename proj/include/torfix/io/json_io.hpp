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

#include <json.hpp>

#include <string>
#include <string_view>

#include "torfix/algebra/classify.hpp"
#include "torfix/behavior/behavior.hpp"
#include "torfix/endo/endomorphism.hpp"

namespace torfix::io {

using json = nlohmann::json;

/// Integers that fit in 64 bits become JSON integers, larger ones decimal strings.
json big_int_json(const arith::BigInt& value);
json big_int_array(const std::vector<arith::BigInt>& values);

/// Accepts a JSON integer or a decimal string.
arith::BigInt json_big_int(const json& value);
/// Accepts a JSON integer or a "p" / "p/q" string.
arith::BigRational json_rational(const json& value);

/// Parses an input document. Kinds: rational_rep, analytic_rep, char_poly,
/// real_quad, quaternion, cm, and algebra (wrapping one of the last three in
/// "element"). Throws ParseError on schema violations; the derived P^r is
/// validated eagerly, so InvalidStructure / NonIntegral surface here.
endo::EndomorphismInput parse_input(std::string_view document);
endo::EndomorphismInput parse_input_json(const json& doc);

/// Parses the algebra kinds only.
algebra::AlgebraElement parse_algebra_element(const json& doc);

json serialize(const endo::EndomorphismInput& input);
json serialize(const algebra::AlgebraElement& element);

/// Row-major "u,v;u,v;u,v;u,v" meaning [[u+v sqrt m, ...], ...].
endo::AnalyticRep parse_analytic_inline(std::string_view text, long field);
/// Rows separated by ';', entries by ','.
endo::RationalRep parse_matrix_inline(std::string_view text);

json eigen_json(const eig::EigenvalueClassification& e);
json report_json(const behavior::BehaviorReport& report);

/// Multi-line human-readable report.
std::string report_text(const behavior::BehaviorReport& report);

}  // namespace torfix::io
