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

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "torfix/algebra/classify.hpp"
#include "torfix/errors.hpp"
#include "torfix/families.hpp"
#include "torfix/io/json_io.hpp"

namespace {

using namespace torfix;
using io::json;

constexpr unsigned long kMaxSequenceLength = 1000000;

struct InputFlags {
    std::string charpoly;
    std::string matrix;
    std::string analytic;
    long field = 1;
    std::string doc;
    std::string input;
    std::string example;

    void attach(CLI::App* cmd) {
        auto* g = cmd->add_option_group("input", "exactly one endomorphism description");
        g->add_option("--charpoly", charpoly, "P^r as ascending coefficients, e.g. \"4,0,5,0,1\"");
        g->add_option("--matrix", matrix, "4x4 integer rational representation, rows separated by ';'");
        g->add_option("--analytic", analytic, "2x2 analytic representation, entries \"u,v\" = u+v*sqrt(field) separated by ';'");
        g->add_option("--doc", doc, "JSON input document");
        g->add_option("--input", input, "file with a JSON input document ('-' for stdin)");
        g->add_option("--example", example, "name of a built-in example");
        g->require_option(1);
        cmd->add_option("--field", field, "square-free radicand m of the field for --analytic")->default_val(1);
    }

    [[nodiscard]] endo::EndomorphismInput resolve() const {
        if (!charpoly.empty()) return eig::CharPolyQuartic(arith::parse_polynomial(charpoly));
        if (!matrix.empty()) return checked(io::parse_matrix_inline(matrix));
        if (!analytic.empty()) return checked(io::parse_analytic_inline(analytic, field));
        if (!example.empty()) {
            auto e = builtin_example(example);
            if (!e) throw ParseError("unknown example \"" + example + "\"");
            return *e;
        }
        return io::parse_input(read_document(doc, input));
    }

    static std::string read_document(const std::string& doc, const std::string& input) {
        if (!doc.empty()) return doc;
        if (input == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
        std::ifstream in(input);
        if (!in) throw ParseError("cannot read " + input);
        return {std::istreambuf_iterator<char>(in), {}};
    }

    static endo::EndomorphismInput checked(endo::EndomorphismInput e) {
        (void)endo::char_poly_rational(e);
        return e;
    }
};

std::string join(const std::vector<arith::BigInt>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) out += (i ? ", " : "") + values[i].get_str();
    return out + "]";
}

void print_report(const behavior::BehaviorReport& report, bool as_json) {
    if (as_json) {
        std::cout << io::report_json(report).dump() << "\n";
    } else {
        std::cout << io::report_text(report);
    }
}

void print_sequence(const std::vector<arith::BigInt>& values, bool as_json) {
    if (as_json) {
        std::cout << json{{"n_max", values.size()}, {"fix", io::big_int_array(values)}}.dump() << "\n";
    } else {
        std::cout << join(values) << "\n";
    }
}

void check_length(unsigned long n_max, bool force) {
    if (n_max < 1) throw ParseError("n_max must be at least 1");
    if (n_max > kMaxSequenceLength && !force) {
        throw ParseError("n_max above 1000000 needs --force");
    }
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
    return out;
}

std::array<arith::BigRational, 4> four_rationals(const std::string& text, const char* what) {
    const auto items = split_list(text);
    if (items.size() != 4) throw ParseError(std::string(what) + " needs 4 comma-separated rationals");
    std::array<arith::BigRational, 4> out;
    for (std::size_t i = 0; i < 4; ++i) out[i] = arith::parse_rational(items[i]);
    return out;
}

struct AlgebraFlags {
    std::string type;
    std::string action;
    long d = 0;
    std::string a, b;
    std::string alpha, beta, coeffs;
    std::string g, coords;
    long e = 0;
    std::string doc, input;
    unsigned long n_max = 10;

    void attach(CLI::App* cmd) {
        cmd->add_option("type", type, "rm, quat or cm")->required()->check(CLI::IsMember({"rm", "quat", "cm"}));
        cmd->add_option("action", action, "classify or fix")->required()->check(CLI::IsMember({"classify", "fix"}));
        cmd->add_option("--d", d, "rm: square-free d > 1; cm: radicand of the real quadratic subfield");
        cmd->add_option("--a", a, "rm: integer coordinate a");
        cmd->add_option("--b", b, "rm: integer coordinate b");
        cmd->add_option("--alpha", alpha, "quat: alpha");
        cmd->add_option("--beta", beta, "quat: beta");
        cmd->add_option("--coeffs", coeffs, "quat: coordinates on 1,i,j,ij, comma-separated");
        cmd->add_option("--g", g, "cm: defining quartic, ascending coefficients");
        cmd->add_option("--coords", coords, "cm: coordinates on 1,y,y^2,y^3, comma-separated");
        cmd->add_option("--e", e, "cm: optional imaginary radicand");
        cmd->add_option("--doc", doc, "JSON element document");
        cmd->add_option("--input", input, "file with a JSON element document ('-' for stdin)");
        cmd->add_option("-n,--n-max", n_max, "fix: number of iterates")->default_val(10);
    }

    [[nodiscard]] algebra::AlgebraElement resolve() const {
        if (!doc.empty() || !input.empty()) {
            json parsed;
            try {
                parsed = json::parse(InputFlags::read_document(doc, input));
            } catch (const json::exception& ex) {
                throw ParseError(std::string("malformed JSON: ") + ex.what());
            }
            if (parsed.is_object() && parsed.value("kind", "") == "algebra" && parsed.contains("element")) {
                parsed = parsed["element"];
            }
            auto x = io::parse_algebra_element(parsed);
            const bool matches = (type == "rm" && std::holds_alternative<algebra::RealQuadElement>(x)) ||
                                 (type == "quat" && std::holds_alternative<algebra::QuaternionElement>(x)) ||
                                 (type == "cm" && std::holds_alternative<algebra::CMElement>(x));
            if (!matches) throw ParseError("document kind does not match \"" + type + "\"");
            return x;
        }
        if (type == "rm") {
            if (d == 0 || a.empty() || b.empty()) throw ParseError("rm needs --d, --a and --b");
            algebra::RealQuadElement x{d, arith::parse_integer(a), arith::parse_integer(b)};
            x.validate();
            return x;
        }
        if (type == "quat") {
            if (alpha.empty() || beta.empty() || coeffs.empty()) throw ParseError("quat needs --alpha, --beta and --coeffs");
            algebra::QuaternionAlgebraDesc algebra_desc(arith::parse_rational(alpha), arith::parse_rational(beta));
            return algebra::QuaternionElement(algebra_desc, four_rationals(coeffs, "--coeffs"));
        }
        if (g.empty() || coords.empty()) throw ParseError("cm needs --g and --coords");
        std::optional<long> real_d, imag_e;
        if (d != 0) real_d = d;
        if (e != 0) imag_e = e;
        algebra::CMFieldDesc field(arith::parse_polynomial(g), real_d, imag_e);
        return algebra::CMElement{field, four_rationals(coords, "--coords")};
    }

    void run(bool as_json, bool force) const {
        const auto x = resolve();
        if (action == "classify") {
            const auto report = std::visit(
                [](const auto& el) -> behavior::BehaviorReport {
                    using T = std::decay_t<decltype(el)>;
                    if constexpr (std::is_same_v<T, algebra::RealQuadElement>) return algebra::rm_classify(el);
                    else if constexpr (std::is_same_v<T, algebra::QuaternionElement>) return algebra::quat_classify(el);
                    else return algebra::cm_classify(el);
                },
                x);
            print_report(report, as_json);
            return;
        }
        check_length(n_max, force);
        std::vector<arith::BigInt> values;
        values.reserve(n_max);
        for (unsigned long n = 1; n <= n_max; ++n) {
            if (const auto* q = std::get_if<algebra::QuaternionElement>(&x)) values.push_back(algebra::quat_fix(*q, n));
            else if (const auto* c = std::get_if<algebra::CMElement>(&x)) values.push_back(algebra::cm_fix(*c, n));
            else values.push_back(endo::fix_count(x, n));
        }
        print_sequence(values, as_json);
    }
};

int run(int argc, char** argv) {
    CLI::App app{"Fixed-point counts of iterated endomorphisms of complex 2-tori"};
    app.require_subcommand(1);
    bool as_json = false;
    bool force = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    InputFlags classify_in;
    auto* classify_cmd = app.add_subcommand("classify", "B1/B2/B3 verdict for an endomorphism");
    classify_in.attach(classify_cmd);
    classify_cmd->add_flag("--json", as_json, "machine-readable JSON output");

    InputFlags sequence_in;
    unsigned long n_max = 10;
    auto* sequence_cmd = app.add_subcommand("sequence", "fix(f^n) for n = 1..n_max");
    sequence_in.attach(sequence_cmd);
    sequence_cmd->add_option("-n,--n-max", n_max, "number of iterates")->default_val(10);
    sequence_cmd->add_flag("--force", force, "allow n_max above 1000000");
    sequence_cmd->add_flag("--json", as_json, "machine-readable JSON output");

    AlgebraFlags algebra_in;
    auto* algebra_cmd = app.add_subcommand("algebra", "classify or count for a simple abelian surface element");
    algebra_in.attach(algebra_cmd);
    algebra_cmd->add_flag("--force", force, "allow n_max above 1000000");
    algebra_cmd->add_flag("--json", as_json, "machine-readable JSON output");

    std::string example_name;
    auto* examples_cmd = app.add_subcommand("examples", "list built-in examples, or classify one");
    examples_cmd->add_option("name", example_name, "example name");
    examples_cmd->add_flag("--json", as_json, "machine-readable JSON output");

    std::string table_kind;
    auto* table_cmd = app.add_subcommand("table", "minimal polynomials of periodic eigenvalues");
    table_cmd->add_option("--kind", table_kind, "quaternion or cm")->required()->check(CLI::IsMember({"quaternion", "cm"}));
    table_cmd->add_flag("--json", as_json, "machine-readable JSON output");

    std::string eps_text;
    auto* search_cmd = app.add_subcommand("search-small", "least a with an eigenvalue of t^4 + a t^2 + t + 1 below eps");
    search_cmd->add_option("--eps", eps_text, "threshold p/q in (0, 1]")->required();
    search_cmd->add_flag("--json", as_json, "machine-readable JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*classify_cmd) {
            print_report(behavior::classify(classify_in.resolve()), as_json);
        } else if (*sequence_cmd) {
            check_length(n_max, force);
            print_sequence(endo::fix_sequence(sequence_in.resolve(), n_max), as_json);
        } else if (*algebra_cmd) {
            algebra_in.run(as_json, force);
        } else if (*examples_cmd) {
            if (example_name.empty()) {
                json list = json::array();
                for (const auto& [name, e] : builtin_examples()) {
                    if (as_json) {
                        list.push_back({{"name", name}, {"input", io::serialize(e)}});
                    } else {
                        std::cout << name << "  " << io::serialize(e).dump() << "\n";
                    }
                }
                if (as_json) std::cout << list.dump() << "\n";
            } else {
                auto e = builtin_example(example_name);
                if (!e) throw ParseError("unknown example \"" + example_name + "\"");
                if (!as_json) std::cout << "input: " << io::serialize(*e).dump() << "\n";
                print_report(behavior::classify(*e), as_json);
            }
        } else if (*table_cmd) {
            const auto kind = table_kind == "cm" ? algebra::AlgebraKind::CM : algebra::AlgebraKind::Quaternion;
            json rows = json::array();
            for (const auto& entry : algebra::periodic_eigenvalue_table(kind)) {
                if (as_json) {
                    rows.push_back({{"order", entry.order},
                                    {"degree", entry.min_poly.degree()},
                                    {"min_poly", arith::serialize(entry.min_poly)}});
                } else {
                    std::cout << "order " << entry.order << "\t" << arith::pretty(entry.min_poly) << "\n";
                }
            }
            if (as_json) std::cout << rows.dump() << "\n";
        } else if (*search_cmd) {
            const auto eps = arith::parse_rational(eps_text);
            const unsigned long a = find_small_eigenvalue_parameter(eps);
            if (as_json) {
                std::cout << json{{"eps", arith::to_string(eps)}, {"a", a}}.dump() << "\n";
            } else {
                std::cout << "a = " << a << "\n";
            }
        }
    } catch (const MathError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const ParseError& e) {
        std::cerr << "ParseError: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
