#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <string_view>

#include "insalg/errors.hpp"

namespace insalg {

using Integer  = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;  // kept in lowest terms

// Renders "p/q" with "/q" omitted for integers: 3/2 -> "3/2", -2 -> "-2".
inline std::string format_rational(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1)
        out += "/" + denominator(r).str();
    return out;
}

// Inverse of format_rational.  Accepts an optional leading sign and an
// optional "/denominator" part; anything else is a parse_error.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&] { throw parse_error("invalid rational '" + std::string(text) + "'"); };
    std::string_view rest = text;
    bool negative = false;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) {
        negative = rest.front() == '-';
        rest.remove_prefix(1);
    }
    auto digits = [&](std::string_view s) {
        if (s.empty()) bad();
        for (char c : s)
            if (c < '0' || c > '9') bad();
        return Integer(std::string(s));
    };
    Integer num, den = 1;
    if (auto slash = rest.find('/'); slash != std::string_view::npos) {
        num = digits(rest.substr(0, slash));
        den = digits(rest.substr(slash + 1));
        if (den == 0) bad();
    } else {
        num = digits(rest);
    }
    if (negative) num = -num;
    return Rational(num, den);
}

} // namespace insalg
