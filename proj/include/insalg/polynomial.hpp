#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>

#include "insalg/coefficient.hpp"
#include "insalg/errors.hpp"
#include "insalg/words.hpp"

namespace insalg {

// A finite formal linear combination of words over one alphabet, with
// Coefficient (Q[t,t^-1]) scalars.  Terms are kept in the canonical word
// order (length-then-lex) and zero coefficients are never stored, so equal
// polynomials compare equal structurally and print identically.
class Polynomial {
    Alphabet alphabet_;
    std::map<Word, Coefficient> terms_;

public:
    explicit Polynomial(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    Polynomial(const Word& w) : Polynomial(w, Coefficient(1)) {}  // NOLINT(google-explicit-constructor)

    Polynomial(const Word& w, Coefficient c) : alphabet_(w.alphabet()) {
        add_term(w, std::move(c));
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::map<Word, Coefficient>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    // Coefficient of w, zero when absent.
    Coefficient coefficient(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Coefficient() : it->second;
    }

    void add_term(const Word& w, const Coefficient& c) {
        if (w.alphabet() != alphabet_)
            throw alphabet_mismatch("term word uses a different alphabet");
        if (c.is_zero())
            return;
        auto [it, inserted] = terms_.emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero())
                terms_.erase(it);
        }
    }

    // *this += c * p, in one pass.
    void add_scaled(const Coefficient& c, const Polynomial& p) {
        if (p.alphabet_ != alphabet_)
            throw alphabet_mismatch("cannot add polynomials over different alphabets");
        if (c.is_zero())
            return;
        for (const auto& [w, pc] : p.terms_)
            add_term(w, c * pc);
    }

    Polynomial& operator+=(const Polynomial& o) {
        add_scaled(Coefficient(1), o);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        add_scaled(Coefficient(-1), o);
        return *this;
    }
    Polynomial& operator*=(const Coefficient& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [w, pc] : terms_)
            pc *= c;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a) {
        Polynomial out(a.alphabet_);
        for (const auto& [w, c] : a.terms_)
            out.terms_.emplace(w, -c);
        return out;
    }
    friend Polynomial operator*(const Coefficient& c, Polynomial p) { return p *= c; }
    friend Polynomial operator*(Polynomial p, const Coefficient& c) { return p *= c; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.alphabet_ == b.alphabet_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    // Sum of all coefficients.  Useful as an invariant: word-to-word
    // operations that produce k terms per insertion have predictable mass.
    Coefficient mass() const {
        Coefficient sum;
        for (const auto& [w, c] : terms_)
            sum += c;
        return sum;
    }

    // Canonical text: terms in word order, " + "/" - " separators, unit
    // coefficients dropped, multi-term coefficients parenthesized, the empty
    // word rendered as "1".  The zero polynomial is "0".
    //   abcde + dabce + deabc
    //   3/2*t^6*ab - cd
    //   (t + 1)*ab
    std::string str() const {
        if (terms_.empty())
            return "0";
        std::string out;
        for (const auto& [w, c] : terms_) {
            std::string piece;
            bool negative = false;
            if (c.terms().size() > 1) {
                piece = "(" + c.str() + ")*" + w.str();
            } else {
                const auto& [e, r] = *c.terms().begin();
                negative = r < 0;
                Coefficient mag = Coefficient::term(negative ? Rational(-r) : r, e);
                piece = mag.is_one() ? w.str() : mag.str() + "*" + w.str();
            }
            if (out.empty())
                out = negative ? "-" + piece : piece;
            else
                out += (negative ? " - " : " + ") + piece;
        }
        return out;
    }

    // Inverse of str().  Non-canonical input (repeated words, zero terms,
    // arbitrary term order) is accepted and normalizes on the way in.
    static Polynomial parse(std::string_view text, const Alphabet& alphabet);
};

// Extends a word-to-word operation to polynomials by bilinearity:
// op(sum a_u u, sum b_v v) = sum a_u b_v op(u, v).
template <class WordOp>
Polynomial bilinear_extend(WordOp&& op, const Polynomial& p, const Polynomial& q) {
    if (p.alphabet() != q.alphabet())
        throw alphabet_mismatch("cannot combine polynomials over different alphabets");
    Polynomial out(p.alphabet());
    for (const auto& [u, cu] : p.terms())
        for (const auto& [v, cv] : q.terms())
            out.add_scaled(cu * cv, op(u, v));
    return out;
}

namespace detail {

// One signed summand of a polynomial: "(coeff)*word", "coeff*word" (the last
// '*' separates coefficient from word) or a bare word.
inline void parse_polynomial_term(std::string_view term, bool negative,
                                  const Alphabet& alphabet, Polynomial& into) {
    auto bad = [&] { throw parse_error("invalid polynomial term '" + std::string(term) + "'"); };
    if (term.empty())
        bad();
    Coefficient c(1);
    std::string_view word_text = term;
    if (term.front() == '(') {
        auto close = term.find(')');
        if (close == std::string_view::npos || close + 1 >= term.size() || term[close + 1] != '*')
            bad();
        c = Coefficient::parse(term.substr(1, close - 1));
        word_text = term.substr(close + 2);
    } else if (auto star = term.rfind('*'); star != std::string_view::npos) {
        c = Coefficient::parse(term.substr(0, star));
        word_text = term.substr(star + 1);
    }
    if (word_text.empty())
        bad();
    if (negative)
        c = Coefficient(-1) * c;
    into.add_term(parse_word(word_text, alphabet), c);
}

} // namespace detail

inline Polynomial Polynomial::parse(std::string_view text, const Alphabet& alphabet) {
    Polynomial out(alphabet);
    std::string compact;
    for (char c : text)
        if (c != ' ')
            compact.push_back(c);
    if (compact.empty())
        throw parse_error("empty polynomial");
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
    int depth = 0;
    for (; pos <= compact.size(); ++pos) {
        bool at_end = pos == compact.size();
        if (!at_end) {
            if (compact[pos] == '(') ++depth;
            if (compact[pos] == ')') --depth;
        }
        // Signs split terms only at parenthesis depth 0 and outside any
        // exponent ("t^-3" keeps its sign).
        bool splits = !at_end && depth == 0 && (compact[pos] == '+' || compact[pos] == '-') &&
                      pos > start && compact[pos - 1] != '^';
        if (at_end || splits) {
            detail::parse_polynomial_term(
                std::string_view(compact).substr(start, pos - start), negative, alphabet, out);
            if (at_end)
                break;
            negative = compact[pos] == '-';
            start = pos + 1;
        }
    }
    return out;
}

} // namespace insalg
