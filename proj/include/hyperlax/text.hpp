#pragma once

// Human-readable text for rationals and polynomials, e.g.
//   parse_polynomial("x^2 - y^2 - z^2", {"x", "y", "z"})
//   parse_polynomial("3/2*w1*w2^3 + 1", 2)

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyperlax/error.hpp"
#include "hyperlax/polynomial.hpp"
#include "hyperlax/unipoly.hpp"

namespace hyperlax {

/// Accepts "a/b" and "a" with optional sign; the denominator must be nonzero.
inline Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    if (!detail::is_integer_literal(num)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    if (slash == std::string_view::npos) return Rational(detail::parse_integer(num));
    const std::string_view den = text.substr(slash + 1);
    if (!detail::is_integer_literal(den)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    const Integer d = detail::parse_integer(den);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    return Rational(detail::parse_integer(num), d);
}

/// x, y, z for up to three variables; w1..wn otherwise.
inline std::vector<std::string> default_variable_names(std::size_t n) {
    if (n <= 3) {
        static const char* xyz[] = {"x", "y", "z"};
        return {xyz, xyz + n};
    }
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= n; ++i) names.push_back("w" + std::to_string(i));
    return names;
}

inline std::string format_polynomial(const Polynomial& p, const std::vector<std::string>& names) {
    if (names.size() != p.nvars()) throw DimensionMismatch("wrong number of variable names");
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        const Rational mag = abs(c);
        if (first) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += names[i];
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (mono.empty()) {
            out += mag.str();
        } else if (mag == 1) {
            out += mono;
        } else {
            out += mag.str() + "*" + mono;
        }
    }
    return out;
}

inline std::string format_polynomial(const Polynomial& p) {
    return format_polynomial(p, default_variable_names(p.nvars()));
}

inline std::string format_unipoly(const UniPoly& u, const std::string& var = "t") {
    if (u.is_zero()) return "0";
    std::string out;
    for (std::size_t k = u.coeffs().size(); k-- > 0;) {
        const Rational& c = u.coeffs()[k];
        if (c == 0) continue;
        if (!out.empty()) out += c < 0 ? " - " : " + ";
        else if (c < 0) out += "-";
        const Rational mag = abs(c);
        std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (mono.empty()) out += mag.str();
        else if (mag == 1) out += mono;
        else out += mag.str() + "*" + mono;
    }
    return out;
}

/// Sums of products of rational constants and powers of named variables.
/// No parentheses; juxtaposition is not multiplication.
inline Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
    const std::size_t n = names.size();
    Polynomial p(n);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& why) -> ParseError {
        return ParseError("polynomial '" + std::string(text) + "': " + why + " at offset " + std::to_string(pos));
    };
    auto read_uint = [&]() -> std::string {
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        return std::string(text.substr(start, pos - start));
    };

    skip_ws();
    if (pos == text.size()) throw fail("empty input");
    bool first_term = true;
    while (true) {
        skip_ws();
        Rational coef = 1;
        if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') coef = -1;
            ++pos;
        } else if (!first_term) {
            throw fail("expected '+' or '-'");
        }
        first_term = false;

        Exponents e(n, 0);
        bool have_factor = false;
        while (true) {
            skip_ws();
            if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                std::string num = read_uint();
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    const std::string den = read_uint();
                    if (den.empty()) throw fail("missing denominator");
                    num += "/" + den;
                }
                coef *= parse_rational(num);
            } else if (pos < text.size() && (std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                const std::size_t start = pos;
                while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
                const std::string_view name = text.substr(start, pos - start);
                std::size_t idx = 0;
                while (idx < n && names[idx] != name) ++idx;
                if (idx == n) throw fail("unknown variable '" + std::string(name) + "'");
                unsigned power = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    skip_ws();
                    const std::string digits = read_uint();
                    if (digits.empty()) throw fail("missing exponent");
                    power = static_cast<unsigned>(std::stoul(digits));
                }
                e[idx] += power;
            } else {
                throw fail("expected a number or a variable");
            }
            have_factor = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        if (!have_factor) throw fail("empty term");
        p.add_term(std::move(e), coef);
        skip_ws();
        if (pos == text.size()) break;
    }
    return p;
}

inline Polynomial parse_polynomial(std::string_view text, std::size_t nvars) {
    return parse_polynomial(text, default_variable_names(nvars));
}

}  // namespace hyperlax
