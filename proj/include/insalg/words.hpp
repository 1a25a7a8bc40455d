#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <utility>

#include "insalg/errors.hpp"

namespace insalg {

// An ordered set of distinct single-character letters.  Declaration order is
// significant: it defines the letter ranks used by the canonical word order.
// Copies share state, so alphabets are cheap to pass around by value.
class Alphabet {
    struct Data {
        std::string letters;
        std::array<int, 256> rank;
    };
    std::shared_ptr<const Data> data_;

public:
    explicit Alphabet(std::string_view letters) {
        if (letters.empty())
            throw config_error("alphabet must declare at least one letter");
        auto d = std::make_shared<Data>();
        d->rank.fill(-1);
        for (char c : letters) {
            auto u = static_cast<unsigned char>(c);
            if (d->rank[u] >= 0)
                throw config_error(std::string("duplicate letter '") + c + "' in alphabet");
            d->rank[u] = static_cast<int>(d->letters.size());
            d->letters.push_back(c);
        }
        data_ = std::move(d);
    }

    std::size_t size() const { return data_->letters.size(); }
    char letter(std::size_t i) const { return data_->letters[i]; }
    const std::string& letters() const { return data_->letters; }

    // Rank of a letter in declaration order, or -1 if the letter is unknown.
    int rank(char c) const { return data_->rank[static_cast<unsigned char>(c)]; }
    bool contains(char c) const { return rank(c) >= 0; }

    friend bool operator==(const Alphabet& a, const Alphabet& b) {
        return a.data_ == b.data_ || a.data_->letters == b.data_->letters;
    }
    friend bool operator!=(const Alphabet& a, const Alphabet& b) { return !(a == b); }
};

// An immutable finite sequence of alphabet letters.  The empty word is the
// unit of concatenation and prints as "1".  Words over the same alphabet are
// totally ordered by length first, then lexicographically by letter rank;
// this order is what makes polynomial output canonical.
class Word {
    Alphabet alphabet_;
    std::string symbols_;

public:
    explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

    Word(Alphabet alphabet, std::string symbols)
        : alphabet_(std::move(alphabet)), symbols_(std::move(symbols)) {
        for (char c : symbols_)
            if (!alphabet_.contains(c))
                throw unknown_letter(c);
    }

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& symbols() const { return symbols_; }
    std::size_t length() const { return symbols_.size(); }
    bool empty() const { return symbols_.empty(); }
    char operator[](std::size_t i) const { return symbols_[i]; }

    std::string str() const { return symbols_.empty() ? "1" : symbols_; }

    friend bool operator==(const Word& u, const Word& v) {
        return u.alphabet_ == v.alphabet_ && u.symbols_ == v.symbols_;
    }
    friend bool operator!=(const Word& u, const Word& v) { return !(u == v); }

    // Length-then-lex by letter rank.  Both operands must share an alphabet;
    // containers of words enforce that before ever comparing.
    friend std::strong_ordering operator<=>(const Word& u, const Word& v) {
        if (u.symbols_.size() != v.symbols_.size())
            return u.symbols_.size() <=> v.symbols_.size();
        for (std::size_t i = 0; i < u.symbols_.size(); ++i) {
            int ru = u.alphabet_.rank(u.symbols_[i]);
            int rv = v.alphabet_.rank(v.symbols_[i]);
            if (ru != rv)
                return ru <=> rv;
        }
        return std::strong_ordering::equal;
    }
};

// Reads a word from text.  "1" (and the empty string) denote the empty word,
// unless '1' happens to be a declared letter, in which case it reads as that
// letter.
inline Word parse_word(std::string_view text, const Alphabet& alphabet) {
    if (text.empty() || (text == "1" && !alphabet.contains('1')))
        return Word(alphabet);
    return Word(alphabet, std::string(text));
}

inline Word concat(const Word& u, const Word& v) {
    if (u.alphabet() != v.alphabet())
        throw alphabet_mismatch("cannot concatenate words over different alphabets");
    return Word(u.alphabet(), u.symbols() + v.symbols());
}

// Places x between positions i and i+1 of y (i = 0 prepends, i = |y| appends).
inline Word insert_at(const Word& x, const Word& y, std::size_t i) {
    if (x.alphabet() != y.alphabet())
        throw alphabet_mismatch("cannot insert across different alphabets");
    if (i > y.length())
        throw position_out_of_range("insertion position " + std::to_string(i) +
                                    " exceeds target length " + std::to_string(y.length()));
    std::string s = y.symbols();
    s.insert(i, x.symbols());
    return Word(y.alphabet(), std::move(s));
}

} // namespace insalg
