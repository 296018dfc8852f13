#pragma once

#include <cctype>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hyperlax {

using Integer = boost::multiprecision::cpp_int;

/// Exact rational; always stored in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline int sign(const Rational& r) { return r.sign(); }

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Smallest integer >= r.
inline Integer ceil(const Rational& r) {
    Integer num = boost::multiprecision::numerator(r);
    Integer den = boost::multiprecision::denominator(r);
    Integer q = num / den;  // truncates toward zero
    if (q * den != num && num > 0) ++q;
    return q;
}

/// Canonical "num/den" text, e.g. "-3/2", "4/1".
inline std::string format_rational(const Rational& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

namespace detail {

inline bool is_integer_literal(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

inline Integer parse_integer(std::string_view s) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    return Integer(std::string(s));
}

}  // namespace detail

}  // namespace hyperlax
