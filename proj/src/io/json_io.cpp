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

#include "torfix/io/json_io.hpp"

#include <cctype>
#include <iomanip>
#include <limits>
#include <set>
#include <sstream>

#include "torfix/errors.hpp"

namespace torfix::io {

using arith::BigInt;
using arith::BigRational;
using arith::IntPolynomial;

namespace {

void require_keys(const json& doc, std::initializer_list<const char*> required, std::initializer_list<const char*> optional = {}) {
    if (!doc.is_object()) throw ParseError("expected a JSON object");
    std::set<std::string> allowed{"kind"};
    for (const char* k : required) {
        if (!doc.contains(k)) throw ParseError(std::string("missing key \"") + k + "\"");
        allowed.insert(k);
    }
    for (const char* k : optional) allowed.insert(k);
    for (const auto& [key, value] : doc.items()) {
        if (!allowed.count(key)) throw ParseError("unknown key \"" + key + "\"");
    }
}

std::string kind_of_doc(const json& doc) {
    if (!doc.is_object() || !doc.contains("kind") || !doc["kind"].is_string()) {
        throw ParseError("input must be an object with a string \"kind\"");
    }
    return doc["kind"].get<std::string>();
}

long json_long(const json& value, const char* what) {
    BigInt v = json_big_int(value);
    if (!v.fits_slong_p()) throw ParseError(std::string(what) + " out of range");
    return v.get_si();
}

const json& sized_array(const json& value, std::size_t size, const char* what) {
    if (!value.is_array() || value.size() != size) {
        throw ParseError(std::string(what) + " must be an array of length " + std::to_string(size));
    }
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

json rational_json(const BigRational& q) { return arith::to_string(q); }

json quad_json(const arith::QuadNumber& q) { return json::array({rational_json(q.u), rational_json(q.v)}); }

arith::QuadNumber json_quad(const json& value) {
    if (value.is_array()) {
        sized_array(value, 2, "analytic entry");
        return {json_rational(value[0]), json_rational(value[1])};
    }
    return {json_rational(value), BigRational(0)};
}

}  // namespace

json big_int_json(const BigInt& value) {
    if (value.fits_slong_p()) return static_cast<std::int64_t>(value.get_si());
    return value.get_str();
}

json big_int_array(const std::vector<BigInt>& values) {
    json out = json::array();
    for (const auto& v : values) out.push_back(big_int_json(v));
    return out;
}

BigInt json_big_int(const json& value) {
    if (value.is_number_integer()) {
        if (value.is_number_unsigned()) return BigInt(std::to_string(value.get<std::uint64_t>()));
        return BigInt(std::to_string(value.get<std::int64_t>()));
    }
    if (value.is_string()) return arith::parse_integer(value.get<std::string>());
    throw ParseError("expected an integer or an integer string, got " + value.dump());
}

BigRational json_rational(const json& value) {
    if (value.is_number_integer()) return BigRational(json_big_int(value));
    if (value.is_string()) return arith::parse_rational(value.get<std::string>());
    throw ParseError("expected a rational string \"p/q\" or an integer, got " + value.dump());
}

algebra::AlgebraElement parse_algebra_element(const json& doc) {
    const std::string kind = kind_of_doc(doc);
    if (kind == "real_quad") {
        require_keys(doc, {"d", "a", "b"});
        algebra::RealQuadElement x{json_long(doc["d"], "d"), json_big_int(doc["a"]), json_big_int(doc["b"])};
        x.validate();
        return x;
    }
    if (kind == "quaternion") {
        require_keys(doc, {"alpha", "beta", "coeffs"});
        const json& c = sized_array(doc["coeffs"], 4, "coeffs");
        algebra::QuaternionAlgebraDesc a(json_rational(doc["alpha"]), json_rational(doc["beta"]));
        return algebra::QuaternionElement(a, {json_rational(c[0]), json_rational(c[1]), json_rational(c[2]), json_rational(c[3])});
    }
    if (kind == "cm") {
        require_keys(doc, {"g", "coords"}, {"d", "e"});
        if (!doc["g"].is_string()) throw ParseError("\"g\" must be a polynomial string");
        std::optional<long> d, e;
        if (doc.contains("d")) d = json_long(doc["d"], "d");
        if (doc.contains("e")) e = json_long(doc["e"], "e");
        algebra::CMFieldDesc field(arith::parse_polynomial(doc["g"].get<std::string>()), d, e);
        const json& c = sized_array(doc["coords"], 4, "coords");
        return algebra::CMElement{field, {json_rational(c[0]), json_rational(c[1]), json_rational(c[2]), json_rational(c[3])}};
    }
    throw ParseError("unknown algebra kind \"" + kind + "\"");
}

endo::EndomorphismInput parse_input_json(const json& doc) {
    const std::string kind = kind_of_doc(doc);
    endo::EndomorphismInput out = [&]() -> endo::EndomorphismInput {
        if (kind == "rational_rep") {
            require_keys(doc, {"matrix"});
            endo::RationalRep rep{};
            const json& rows = sized_array(doc["matrix"], 4, "matrix");
            for (std::size_t i = 0; i < 4; ++i) {
                const json& row = sized_array(rows[i], 4, "matrix row");
                for (std::size_t j = 0; j < 4; ++j) rep.matrix[i][j] = json_big_int(row[j]);
            }
            return rep;
        }
        if (kind == "analytic_rep") {
            require_keys(doc, {"field", "matrix"});
            endo::AnalyticRep rep;
            rep.field = json_long(doc["field"], "field");
            const json& rows = sized_array(doc["matrix"], 2, "matrix");
            for (std::size_t i = 0; i < 2; ++i) {
                const json& row = sized_array(rows[i], 2, "matrix row");
                for (std::size_t j = 0; j < 2; ++j) rep.matrix[i][j] = json_quad(row[j]);
            }
            return rep;
        }
        if (kind == "char_poly") {
            require_keys(doc, {"poly"});
            if (!doc["poly"].is_string()) throw ParseError("\"poly\" must be a polynomial string");
            return eig::CharPolyQuartic(arith::parse_polynomial(doc["poly"].get<std::string>()));
        }
        if (kind == "algebra") {
            require_keys(doc, {"element"});
            return parse_algebra_element(doc["element"]);
        }
        return parse_algebra_element(doc);
    }();
    (void)endo::char_poly_rational(out);
    return out;
}

endo::EndomorphismInput parse_input(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    try {
        return parse_input_json(doc);
    } catch (const json::exception& e) {
        throw ParseError(std::string("schema violation: ") + e.what());
    }
}

json serialize(const algebra::AlgebraElement& element) {
    if (const auto* rm = std::get_if<algebra::RealQuadElement>(&element)) {
        return {{"kind", "real_quad"}, {"d", rm->d}, {"a", big_int_json(rm->a)}, {"b", big_int_json(rm->b)}};
    }
    if (const auto* q = std::get_if<algebra::QuaternionElement>(&element)) {
        const auto [alpha, beta] = q->algebra().input_pair();
        json coeffs = json::array();
        for (const auto& c : q->input_coords()) coeffs.push_back(rational_json(c));
        return {{"kind", "quaternion"}, {"alpha", rational_json(alpha)}, {"beta", rational_json(beta)}, {"coeffs", coeffs}};
    }
    const auto& x = std::get<algebra::CMElement>(element);
    json coords = json::array();
    for (const auto& c : x.coords) coords.push_back(rational_json(c));
    json out = {{"kind", "cm"}, {"g", arith::serialize(x.field.defining_poly())}, {"coords", coords}};
    if (auto d = x.field.real_subfield_radicand()) out["d"] = *d;
    if (auto e = x.field.imaginary_radicand()) out["e"] = *e;
    return out;
}

json serialize(const endo::EndomorphismInput& input) {
    return std::visit(
        [](const auto& x) -> json {
            using T = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<T, endo::RationalRep>) {
                json rows = json::array();
                for (const auto& row : x.matrix) {
                    json r = json::array();
                    for (const auto& v : row) r.push_back(big_int_json(v));
                    rows.push_back(r);
                }
                return {{"kind", "rational_rep"}, {"matrix", rows}};
            } else if constexpr (std::is_same_v<T, endo::AnalyticRep>) {
                json rows = json::array();
                for (const auto& row : x.matrix) rows.push_back(json::array({quad_json(row[0]), quad_json(row[1])}));
                return {{"kind", "analytic_rep"}, {"field", x.field}, {"matrix", rows}};
            } else if constexpr (std::is_same_v<T, eig::CharPolyQuartic>) {
                return {{"kind", "char_poly"}, {"poly", arith::serialize(x.poly())}};
            } else {
                return serialize(x);
            }
        },
        input);
}

endo::AnalyticRep parse_analytic_inline(std::string_view text, long field) {
    const auto entries = split(text, ';');
    if (entries.size() != 4) throw ParseError("analytic matrix needs 4 entries \"u,v\" separated by ';'");
    endo::AnalyticRep rep;
    rep.field = field;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto parts = split(entries[k], ',');
        if (parts.size() != 2) throw ParseError("analytic entry must be \"u,v\", got \"" + std::string(entries[k]) + "\"");
        rep.matrix[k / 2][k % 2] = {arith::parse_rational(trim(parts[0])), arith::parse_rational(trim(parts[1]))};
    }
    return rep;
}

endo::RationalRep parse_matrix_inline(std::string_view text) {
    const auto rows = split(text, ';');
    if (rows.size() != 4) throw ParseError("integer matrix needs 4 rows separated by ';'");
    endo::RationalRep rep{};
    for (std::size_t i = 0; i < 4; ++i) {
        const auto cells = split(rows[i], ',');
        if (cells.size() != 4) throw ParseError("matrix row " + std::to_string(i + 1) + " needs 4 entries");
        for (std::size_t j = 0; j < 4; ++j) rep.matrix[i][j] = arith::parse_integer(trim(cells[j]));
    }
    return rep;
}

json eigen_json(const eig::EigenvalueClassification& e) {
    json moduli = json::array();
    for (const auto& iv : e.outside_moduli) moduli.push_back(arith::to_string(iv));
    return {{"n_zero", e.n_zero}, {"n_less", e.n_less},           {"n_on", e.n_on},
            {"n_more", e.n_more}, {"unity_orders", e.unity_orders}, {"outside_moduli_squared", moduli}};
}

json report_json(const behavior::BehaviorReport& report) {
    json out = {{"verdict", behavior::verdict_name(report.verdict)},
                {"char_poly", arith::serialize(report.char_poly)},
                {"eigen", eigen_json(report.eigen)}};
    if (report.growth_base) out["growth_base"] = arith::to_string(*report.growth_base);
    if (report.period) {
        out["period"] = *report.period;
        out["cycle"] = big_int_array(report.cycle);
        out["eigenvalue_one"] = report.has_eigenvalue_one;
    }
    if (report.r) out["r"] = *report.r;
    return out;
}

std::string report_text(const behavior::BehaviorReport& report) {
    std::ostringstream os;
    const auto& e = report.eigen;
    os << "verdict: " << behavior::verdict_name(report.verdict) << "\n";
    os << "char poly: " << arith::pretty(report.char_poly) << "\n";
    os << "roots: " << e.n_zero << " zero, " << e.n_less << " inside, " << e.n_on << " on, " << e.n_more
       << " outside the unit circle\n";
    if (!e.unity_orders.empty()) {
        os << "unity orders:";
        for (int k : e.unity_orders) os << ' ' << k;
        os << "\n";
    }
    if (report.growth_base) {
        const double mid = BigRational((report.growth_base->lo() + report.growth_base->hi()) / 2).get_d();
        os << "growth base: " << arith::to_string(*report.growth_base) << " (~ " << std::setprecision(10) << mid << ")\n";
    }
    if (report.period) {
        os << "period: " << *report.period << "\n";
        os << "cycle:";
        for (const auto& v : report.cycle) os << ' ' << v.get_str();
        os << "\n";
        if (report.has_eigenvalue_one) os << "eigenvalue 1 present: fixed locus infinite, fix = 0\n";
    }
    if (report.r) os << "r: " << *report.r << " (fix(f^n) = 0 exactly when " << *report.r << " divides n)\n";
    return os.str();
}

}  // namespace torfix::io
