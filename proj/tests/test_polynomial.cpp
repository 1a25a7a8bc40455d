#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <insalg/polynomial.hpp>

using namespace insalg;

namespace {

Word random_word(std::mt19937& rng, const Alphabet& a, int max_len) {
    std::uniform_int_distribution<int> len(0, max_len);
    std::string s;
    int n = len(rng);
    std::uniform_int_distribution<std::size_t> pick(0, a.size() - 1);
    for (int i = 0; i < n; ++i)
        s.push_back(a.letter(pick(rng)));
    return Word(a, std::move(s));
}

Polynomial random_polynomial(std::mt19937& rng, const Alphabet& a) {
    std::uniform_int_distribution<int> term_count(0, 4);
    std::uniform_int_distribution<int> numer(-5, 5);
    std::uniform_int_distribution<int> expo(-2, 4);
    Polynomial p(a);
    int k = term_count(rng);
    for (int i = 0; i < k; ++i)
        p.add_term(random_word(rng, a, 4),
                   Coefficient::term(Rational(numer(rng)), expo(rng)));
    return p;
}

} // namespace

TEST_CASE("terms accumulate and cancel") {
    Alphabet a("ab");
    Polynomial p(a);
    CHECK(p.is_zero());

    Word aa(a, "aa");
    p.add_term(aa, Coefficient(2));
    p.add_term(aa, Coefficient(3));
    CHECK(p.term_count() == 1);
    CHECK(p.coefficient(aa) == Coefficient(5));
    CHECK(p.str() == "5*aa");

    p.add_term(aa, Coefficient(-5));
    CHECK(p.is_zero());
    CHECK(p.str() == "0");
}

TEST_CASE("terms print in canonical word order") {
    Alphabet a("abc");
    Polynomial p(a);
    p.add_term(Word(a, "cba"), Coefficient(1));
    p.add_term(Word(a, "ab"), Coefficient(1));
    p.add_term(Word(a, "abc"), Coefficient(1));
    CHECK(p.str() == "ab + abc + cba");
}

TEST_CASE("coefficient rendering inside polynomials") {
    Alphabet a("ab");
    Word ab(a, "ab");
    CHECK(Polynomial(ab).str() == "ab");
    CHECK(Polynomial(ab, Coefficient(-1)).str() == "-ab");
    CHECK(Polynomial(ab, Coefficient::t_power(6)).str() == "t^6*ab");
    CHECK(Polynomial(ab, Coefficient::term(Rational(3, 2), 6)).str() == "3/2*t^6*ab");
    CHECK(Polynomial(ab, Coefficient::term(Rational(-1), 6)).str() == "-t^6*ab");

    // "b" is shorter than "ab", so it leads; a negative leading term starts with '-'
    Polynomial mixed = Polynomial(ab, Coefficient::term(Rational(3, 2), 6)) -
                       Polynomial(Word(a, "b"), Coefficient(2));
    CHECK(mixed.str() == "-2*b + 3/2*t^6*ab");
}

TEST_CASE("multi-term coefficients are parenthesized") {
    Alphabet a("ab");
    Word ab(a, "ab");
    Coefficient c = Coefficient::t_power(1) + Coefficient(1);
    CHECK(Polynomial(ab, c).str() == "(t + 1)*ab");
    Coefficient d = Coefficient(-1) * c;
    CHECK(Polynomial(ab, d).str() == "(-t - 1)*ab");
}

TEST_CASE("the empty word renders as 1 in terms") {
    Alphabet a("ab");
    Word e(a);
    CHECK(Polynomial(e).str() == "1");
    CHECK(Polynomial(e, Coefficient(-1)).str() == "-1");
    CHECK(Polynomial(e, Coefficient(3)).str() == "3*1");
    Polynomial p = Polynomial(e, Coefficient(2)) + Polynomial(Word(a, "a"));
    CHECK(p.str() == "2*1 + a");
}

TEST_CASE("arithmetic matches term-by-term expectations") {
    Alphabet a("abc");
    Polynomial p = Polynomial::parse("abcabac", a);
    Polynomial q = Polynomial::parse("ababcac + abcabac", a);
    CHECK((p - q).str() == "-ababcac");
    CHECK((q - p).str() == "ababcac");
    CHECK((p - p).is_zero());

    Polynomial two_aa = Polynomial::parse("2*aa", a);
    Polynomial three_aa = Polynomial::parse("3*aa", a);
    CHECK((two_aa + three_aa).str() == "5*aa");

    CHECK((Coefficient(5) * Polynomial::parse("aaaaa", a)).str() == "5*aaaaa");
    CHECK((Polynomial::parse("aaaaa", a) * Coefficient(0)).is_zero());
}

TEST_CASE("alphabet mismatch is rejected") {
    Alphabet a("ab"), b("xy");
    Polynomial p(a), q(b);
    CHECK_THROWS_AS(p + q, alphabet_mismatch);
    CHECK_THROWS_AS(p.add_term(Word(b, "x"), Coefficient(1)), alphabet_mismatch);
}

TEST_CASE("mass sums all coefficients") {
    Alphabet a("ab");
    Polynomial p = Polynomial::parse("2*aa + 3*ab - b", a);
    CHECK(p.mass() == Coefficient(4));
    CHECK(Polynomial(a).mass().is_zero());
}

TEST_CASE("parse handles canonical and messy input alike") {
    Alphabet a("abc");
    CHECK(Polynomial::parse("0", a).is_zero());
    CHECK(Polynomial::parse("abc", a).str() == "abc");
    CHECK(Polynomial::parse("-abc", a).str() == "-abc");
    // parse accepts any term order; printing normalizes to word order (c < ab)
    CHECK(Polynomial::parse("3/2*t^6*ab - 2*c", a).str() == "-2*c + 3/2*t^6*ab");
    CHECK(Polynomial::parse("(t + 1)*ab", a).str() == "(t + 1)*ab");
    CHECK(Polynomial::parse("t^-2*ab", a).str() == "t^-2*ab");
    CHECK(Polynomial::parse("2*1 + a", a).str() == "2*1 + a");

    // same word twice accumulates; zero terms vanish
    CHECK(Polynomial::parse("ab + ab", a).str() == "2*ab");
    CHECK(Polynomial::parse("ab - ab", a).str() == "0");
    CHECK(Polynomial::parse("cba + ab + abc", a).str() == "ab + abc + cba");

    CHECK_THROWS_AS(Polynomial::parse("", a), parse_error);
    CHECK_THROWS_AS(Polynomial::parse("ab + xz", a), unknown_letter);
    CHECK_THROWS_AS(Polynomial::parse("(t + 1", a), parse_error);
}

TEST_CASE("round trip str -> parse on random polynomials") {
    Alphabet a("abc");
    std::mt19937 rng(4242);
    for (int i = 0; i < 300; ++i) {
        Polynomial p = random_polynomial(rng, a);
        CHECK(Polynomial::parse(p.str(), a) == p);
    }
}

TEST_CASE("bilinear_extend is bilinear") {
    Alphabet a("ab");
    auto cat = [](const Word& u, const Word& v) { return Polynomial(concat(u, v)); };

    Polynomial two_aa = Polynomial::parse("2*aa", a);
    Polynomial one_a = Polynomial::parse("a", a);
    CHECK(bilinear_extend(cat, two_aa, one_a).str() == "2*aaa");

    std::mt19937 rng(11);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_polynomial(rng, a);
        Polynomial q = random_polynomial(rng, a);
        Polynomial r = random_polynomial(rng, a);
        Coefficient c = Coefficient::term(Rational(3, 2), 1);
        CHECK(bilinear_extend(cat, p + q, r) ==
              bilinear_extend(cat, p, r) + bilinear_extend(cat, q, r));
        CHECK(bilinear_extend(cat, p, q + r) ==
              bilinear_extend(cat, p, q) + bilinear_extend(cat, p, r));
        CHECK(bilinear_extend(cat, c * p, q) == c * bilinear_extend(cat, p, q));
        CHECK(bilinear_extend(cat, p, c * q) == c * bilinear_extend(cat, p, q));
    }
}
