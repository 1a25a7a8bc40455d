#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "insalg/errors.hpp"
#include "insalg/rational.hpp"

namespace insalg {

// An exact element of Q[t, t^-1]: a finite sum of r * t^e with rational r and
// integer e.  Only nonzero terms are stored, so the representation is
// canonical and equality is structural.  The zero element is the empty sum.
//
// The indeterminate t is kept formal; specializing t (e.g. to a number) is a
// ring homomorphism, which evaluate() implements.
class Coefficient {
    std::map<std::int64_t, Rational> terms_;  // exponent -> nonzero rational

    void accumulate(std::int64_t e, const Rational& r) {
        if (r == 0)
            return;
        auto [it, inserted] = terms_.emplace(e, r);
        if (!inserted) {
            it->second += r;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

public:
    Coefficient() = default;
    Coefficient(int n) : Coefficient(Rational(n)) {}                // NOLINT(google-explicit-constructor)
    Coefficient(std::int64_t n) : Coefficient(Rational(n)) {}       // NOLINT(google-explicit-constructor)
    Coefficient(const Rational& r) {                                // NOLINT(google-explicit-constructor)
        accumulate(0, r);
    }

    static Coefficient t_power(std::int64_t e) { return term(Rational(1), e); }

    static Coefficient term(const Rational& r, std::int64_t e) {
        Coefficient c;
        c.accumulate(e, r);
        return c;
    }

    const std::map<std::int64_t, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second == 1;
    }

    Coefficient& operator+=(const Coefficient& o) {
        for (const auto& [e, r] : o.terms_)
            accumulate(e, r);
        return *this;
    }
    Coefficient& operator-=(const Coefficient& o) {
        for (const auto& [e, r] : o.terms_)
            accumulate(e, -r);
        return *this;
    }
    Coefficient& operator*=(const Coefficient& o) {
        Coefficient prod;
        for (const auto& [e1, r1] : terms_)
            for (const auto& [e2, r2] : o.terms_)
                prod.accumulate(e1 + e2, r1 * r2);
        terms_ = std::move(prod.terms_);
        return *this;
    }

    friend Coefficient operator+(Coefficient a, const Coefficient& b) { return a += b; }
    friend Coefficient operator-(Coefficient a, const Coefficient& b) { return a -= b; }
    friend Coefficient operator*(Coefficient a, const Coefficient& b) { return a *= b; }
    friend Coefficient operator-(const Coefficient& a) {
        Coefficient out;
        for (const auto& [e, r] : a.terms_)
            out.terms_.emplace(e, -r);
        return out;
    }

    friend bool operator==(const Coefficient& a, const Coefficient& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Coefficient& a, const Coefficient& b) { return !(a == b); }

    // Substitutes a concrete rational for t.  Negative exponents require a
    // nonzero value.
    Rational evaluate(const Rational& value) const {
        auto power = [&](std::int64_t e) {
            if (e < 0 && value == 0)
                throw out_of_domain("cannot evaluate t^" + std::to_string(e) + " at t = 0");
            Rational base = e < 0 ? Rational(denominator(value), numerator(value)) : value;
            std::uint64_t k = e < 0 ? static_cast<std::uint64_t>(-(e + 1)) + 1
                                    : static_cast<std::uint64_t>(e);
            Rational acc = 1;
            while (k) {
                if (k & 1)
                    acc *= base;
                base *= base;
                k >>= 1;
            }
            return acc;
        };
        Rational sum = 0;
        for (const auto& [e, r] : terms_)
            sum += r * power(e);
        return sum;
    }

    // Renders terms in descending powers of t: "3/2*t^6 - 2", "t", "-t^-1",
    // "0".  Unit rationals drop the "1*"; exponent 0 drops the "t^0"; exponent
    // 1 drops the "^1".
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, r] = *it;
            bool negative = r < 0;
            Rational mag = negative ? Rational(-r) : r;
            std::string piece;
            if (e == 0) {
                piece = format_rational(mag);
            } else {
                if (mag != 1)
                    piece = format_rational(mag) + "*";
                piece += e == 1 ? "t" : "t^" + std::to_string(e);
            }
            if (out.empty())
                out = negative ? "-" + piece : piece;
            else
                out += (negative ? " - " : " + ") + piece;
        }
        return out;
    }

    // Inverse of str().  Also accepts non-canonical input such as repeated
    // exponents ("t + t"), which accumulate.
    static Coefficient parse(std::string_view text);
};

namespace detail {

// One signed summand of a coefficient: [rational] [* t[^exp]] in any of the
// shapes str() emits.
inline void parse_coefficient_term(std::string_view term, bool negative, Coefficient& into) {
    auto bad = [&] { throw parse_error("invalid coefficient term '" + std::string(term) + "'"); };
    if (term.empty())
        bad();

    std::string_view rat_part, t_part;
    if (auto star = term.rfind('*'); star != std::string_view::npos) {
        rat_part = term.substr(0, star);
        t_part = term.substr(star + 1);
        if (t_part.empty() || t_part.front() != 't')
            bad();
    } else if (term.front() == 't') {
        t_part = term;
    } else {
        rat_part = term;
    }

    Rational r = rat_part.empty() ? Rational(1) : parse_rational(rat_part);
    std::int64_t e = 0;
    if (!t_part.empty()) {
        if (t_part == "t") {
            e = 1;
        } else if (t_part.size() > 2 && t_part[0] == 't' && t_part[1] == '^') {
            std::string_view exp = t_part.substr(2);
            bool neg_e = exp.front() == '-';
            if (neg_e)
                exp.remove_prefix(1);
            if (exp.empty())
                bad();
            for (char c : exp)
                if (c < '0' || c > '9')
                    bad();
            e = std::stoll(std::string(exp));
            if (neg_e)
                e = -e;
        } else {
            bad();
        }
    }
    if (negative)
        r = -r;
    into += Coefficient::term(r, e);
}

} // namespace detail

inline Coefficient Coefficient::parse(std::string_view text) {
    // Split on top-level " + " / " - " (and a bare leading '-').
    Coefficient out;
    std::string compact;
    for (char c : text)
        if (c != ' ')
            compact.push_back(c);
    if (compact.empty())
        throw parse_error("empty coefficient");
    if (compact == "0")
        return out;

    std::size_t pos = 0;
    bool negative = false;
    if (compact[0] == '-') {
        negative = true;
        pos = 1;
    } else if (compact[0] == '+') {
        pos = 1;
    }
    std::size_t start = pos;
    for (; pos <= compact.size(); ++pos) {
        bool at_end = pos == compact.size();
        // A sign splits terms unless it follows '^' (a negative exponent).
        bool splits = !at_end && (compact[pos] == '+' || compact[pos] == '-') &&
                      pos > start && compact[pos - 1] != '^';
        if (at_end || splits) {
            detail::parse_coefficient_term(
                std::string_view(compact).substr(start, pos - start), negative, out);
            if (at_end)
                break;
            negative = compact[pos] == '-';
            start = pos + 1;
        }
    }
    return out;
}

} // namespace insalg
