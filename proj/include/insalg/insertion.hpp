#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "insalg/errors.hpp"
#include "insalg/polynomial.hpp"
#include "insalg/rational.hpp"
#include "insalg/weights.hpp"
#include "insalg/words.hpp"

namespace insalg {

// x o y = sum of x inserted at every gap of y (|y|+1 summands, kept with
// multiplicity: inserting aa into aa hits aaaa three times and the
// coefficient records that).
inline Polynomial simple_insertion(const Word& x, const Word& y) {
    if (x.alphabet() != y.alphabet())
        throw alphabet_mismatch("insertion operands use different alphabets");
    Polynomial out(x.alphabet());
    for (std::size_t i = 0; i <= y.length(); ++i)
        out.add_term(insert_at(x, y, i), Coefficient(1));
    return out;
}

// Simple insertion scaled by f(|x|, |y|).
inline Polynomial weighted_insertion(const WeightFunction& f, const Word& x, const Word& y) {
    Coefficient weight = f.eval(static_cast<long>(x.length()), static_cast<long>(y.length()));
    if (weight.is_zero())
        return Polynomial(x.alphabet());
    return weight * simple_insertion(x, y);
}

// Keeps only the insertions directly in front of a letter of y equal to the
// first letter of x; there is no slot after the last letter.  Empty x has no
// first letter and empty y has no positions, so either gives zero.
inline Polynomial delta_restricted_insertion(const Word& x, const Word& y) {
    if (x.alphabet() != y.alphabet())
        throw alphabet_mismatch("insertion operands use different alphabets");
    Polynomial out(x.alphabet());
    if (x.empty() || y.empty())
        return out;
    for (std::size_t j = 0; j < y.length(); ++j)
        if (y[j] == x[0])
            out.add_term(insert_at(x, y, j), Coefficient(1));
    return out;
}

// Insertion of x in front of position j of y, weighted by how far x agrees
// with the suffix of y starting there: the score is the length of the
// longest common prefix of x and y[j..], capped by both lengths.  Positions
// that disagree immediately score zero and drop out; there is no slot after
// the last letter.  Empty operands give zero.
inline Polynomial synchronized_insertion(const Word& x, const Word& y) {
    if (x.alphabet() != y.alphabet())
        throw alphabet_mismatch("insertion operands use different alphabets");
    Polynomial out(x.alphabet());
    for (std::size_t j = 0; j < y.length(); ++j) {
        std::size_t score = 0;
        while (score < x.length() && j + score < y.length() && x[score] == y[j + score])
            ++score;
        if (score > 0)
            out.add_term(insert_at(x, y, j), Coefficient(static_cast<std::int64_t>(score)));
    }
    return out;
}

// Total synchronized mass of a^p o a^q over a one-letter alphabet:
//   sum_{t=1}^{q} min(p, t)  =  p(2q - p + 1)/2  if p < q,  else  q(q+1)/2.
inline Rational c_closed_form(long p, long q) {
    if (p < 1 || q < 1)
        throw out_of_domain("c(p,q) requires p, q >= 1");
    if (p < q)
        return Rational(Integer(p) * (2 * Integer(q) - p + 1), 2);
    return Rational(Integer(q) * (Integer(q) + 1), 2);
}

// A symmetric compatibility relation on letters.  A word is admissible when
// every adjacent pair of its letters is allowed; single letters and the
// empty word are always admissible (the diagonal is genuinely allowed, not
// assumed).
class AdjacencyRelation {
    Alphabet alphabet_;
    std::vector<char> allowed_;  // size() x size(), symmetric
    std::string description_;

    void forbid(int i, int j) {
        allowed_[static_cast<std::size_t>(i) * alphabet_.size() + j] = 0;
    }

public:
    // All pairs allowed.
    static AdjacencyRelation full(const Alphabet& alphabet) {
        return AdjacencyRelation(alphabet, {});
    }

    AdjacencyRelation(Alphabet alphabet, const std::vector<std::pair<char, char>>& forbidden)
        : alphabet_(std::move(alphabet)),
          allowed_(alphabet_.size() * alphabet_.size(), 1) {
        std::string pairs;
        for (auto [a, b] : forbidden) {
            if (!alphabet_.contains(a))
                throw unknown_letter(a);
            if (!alphabet_.contains(b))
                throw unknown_letter(b);
            if (a == b)
                throw config_error(std::string("cannot forbid the pair ('") + a + "','" + a +
                                   "'): identical letters are always compatible");
            forbid(alphabet_.rank(a), alphabet_.rank(b));
            forbid(alphabet_.rank(b), alphabet_.rank(a));
            if (!pairs.empty())
                pairs += ",";
            pairs += std::string() + a + b;
        }
        description_ = pairs.empty() ? "full" : "forbidden={" + pairs + "}";
    }

    const Alphabet& alphabet() const { return alphabet_; }

    bool allowed(char a, char b) const {
        int i = alphabet_.rank(a);
        int j = alphabet_.rank(b);
        if (i < 0)
            throw unknown_letter(a);
        if (j < 0)
            throw unknown_letter(b);
        return allowed_[static_cast<std::size_t>(i) * alphabet_.size() + j] != 0;
    }

    bool admissible(const Word& w) const {
        for (std::size_t i = 0; i + 1 < w.length(); ++i)
            if (!allowed(w[i], w[i + 1]))
                return false;
        return true;
    }

    const std::string& description() const { return description_; }
};

// Simple insertion with every inadmissible result dropped.  Both operands
// must themselves be admissible.
inline Polynomial adjacency_restricted_insertion(const AdjacencyRelation& rel,
                                                 const Word& x, const Word& y) {
    if (x.alphabet() != rel.alphabet() || y.alphabet() != rel.alphabet())
        throw alphabet_mismatch("operands use a different alphabet than the relation");
    if (!rel.admissible(x))
        throw inadmissible_input("left operand '" + x.str() + "' is not admissible");
    if (!rel.admissible(y))
        throw inadmissible_input("right operand '" + y.str() + "' is not admissible");
    Polynomial out(x.alphabet());
    for (std::size_t i = 0; i <= y.length(); ++i) {
        Word w = insert_at(x, y, i);
        if (rel.admissible(w))
            out.add_term(w, Coefficient(1));
    }
    return out;
}

// A closed choice of product on words, bundling whatever parameters the
// family needs.  word_product(x, y) is the single dispatch point the rest of
// the library builds on.
class InsertionOperator {
public:
    enum class Kind { Simple, Weighted, DeltaRestricted, Synchronized, AdjacencyRestricted };

private:
    Kind kind_;
    std::optional<WeightFunction> weight_;
    std::optional<AdjacencyRelation> relation_;

    explicit InsertionOperator(Kind k) : kind_(k) {}

public:
    static InsertionOperator simple() { return InsertionOperator(Kind::Simple); }

    static InsertionOperator weighted(WeightFunction f) {
        InsertionOperator op(Kind::Weighted);
        op.weight_ = std::move(f);
        return op;
    }

    static InsertionOperator delta_restricted() {
        return InsertionOperator(Kind::DeltaRestricted);
    }

    static InsertionOperator synchronized() { return InsertionOperator(Kind::Synchronized); }

    static InsertionOperator adjacency_restricted(AdjacencyRelation rel) {
        InsertionOperator op(Kind::AdjacencyRestricted);
        op.relation_ = std::move(rel);
        return op;
    }

    Kind kind() const { return kind_; }
    const WeightFunction& weight() const { return *weight_; }
    const AdjacencyRelation& relation() const { return *relation_; }

    Polynomial word_product(const Word& x, const Word& y) const {
        switch (kind_) {
        case Kind::Simple:
            return simple_insertion(x, y);
        case Kind::Weighted:
            return weighted_insertion(*weight_, x, y);
        case Kind::DeltaRestricted:
            return delta_restricted_insertion(x, y);
        case Kind::Synchronized:
            return synchronized_insertion(x, y);
        case Kind::AdjacencyRestricted:
            return adjacency_restricted_insertion(*relation_, x, y);
        }
        throw error("unreachable operator kind");
    }

    // Stable label used in reports: "simple", "weighted[exp]", "delta",
    // "sync", "adjacency[forbidden={ac}]", ...
    std::string description() const {
        switch (kind_) {
        case Kind::Simple:
            return "simple";
        case Kind::Weighted:
            return "weighted[" + weight_->description() + "]";
        case Kind::DeltaRestricted:
            return "delta";
        case Kind::Synchronized:
            return "sync";
        case Kind::AdjacencyRestricted:
            return "adjacency[" + relation_->description() + "]";
        }
        return "?";
    }
};

// The bilinear extension of word_product to polynomials.
inline Polynomial apply(const InsertionOperator& op, const Polynomial& x, const Polynomial& y) {
    return bilinear_extend([&](const Word& u, const Word& v) { return op.word_product(u, v); },
                           x, y);
}

// Right insertion of the single generator a into X, i.e. apply(op, a, X):
// the derivation-style action "insert a everywhere in X".
inline Polynomial right_insertion(const InsertionOperator& op, const Polynomial& X,
                                  const Polynomial& a) {
    return apply(op, a, X);
}

} // namespace insalg
