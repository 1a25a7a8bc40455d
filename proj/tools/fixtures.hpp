#pragma once

// The repro fixture store: small named computations with frozen expected
// outputs.  `insalg repro` replays them and diffs against the store, so a
// regression in any core module shows up as a named mismatch.

#include <functional>
#include <string>
#include <vector>

#include <insalg/insalg.hpp>

namespace insalg::tools {

struct Fixture {
    std::string id;
    std::string description;
    std::string expected;
    std::function<std::string()> run;
};

inline std::vector<Fixture> fixture_store() {
    using namespace insalg;
    std::vector<Fixture> fixtures;
    auto add = [&](std::string id, std::string description, std::string expected,
                   std::function<std::string()> run) {
        fixtures.push_back({std::move(id), std::move(description), std::move(expected),
                            std::move(run)});
    };

    add("word-empty-prints-as-one", "the empty word round-trips through \"1\"", "1", [] {
        return parse_word("1", Alphabet("ab")).str();
    });

    add("insert-into-middle-slot", "insert_at places x between letters of y", "dabce", [] {
        Alphabet a("abcde");
        return insert_at(Word(a, "abc"), Word(a, "de"), 1).str();
    });

    add("simple-abc-into-de", "simple insertion fills every slot once",
        "abcde + dabce + deabc", [] {
            Alphabet a("abcde");
            return simple_insertion(Word(a, "abc"), Word(a, "de")).str();
        });

    add("weighted-const-one-equals-simple", "constant weight 1 reproduces simple insertion",
        "abcde + dabce + deabc", [] {
            Alphabet a("abcde");
            return weighted_insertion(WeightFunction::constant(Coefficient(1)),
                                      Word(a, "abc"), Word(a, "de"))
                .str();
        });

    add("weighted-exp-abc-into-de", "exp weight multiplies by t^(|x||y|)",
        "t^6*abcde + t^6*dabce + t^6*deabc", [] {
            Alphabet a("abcde");
            return weighted_insertion(WeightFunction::exp_bilinear(), Word(a, "abc"),
                                      Word(a, "de"))
                .str();
        });

    add("weighted-parity-even-length-kills", "parity weight vanishes unless both lengths are odd",
        "0", [] {
            Alphabet a("abc");
            return weighted_insertion(WeightFunction::parity(), Word(a, "ab"), Word(a, "c"))
                .str();
        });

    add("delta-ab-into-abc", "delta insertion lands only in front of matching letters",
        "ababc", [] {
            Alphabet a("abc");
            return delta_restricted_insertion(Word(a, "ab"), Word(a, "abc")).str();
        });

    add("delta-ab-into-abcac", "two matching letters give two summands",
        "ababcac + abcabac", [] {
            Alphabet a("abc");
            return delta_restricted_insertion(Word(a, "ab"), Word(a, "abcac")).str();
        });

    add("delta-no-matching-letter", "no matching letter means the zero polynomial", "0", [] {
        Alphabet a("abc");
        return delta_restricted_insertion(Word(a, "ab"), Word(a, "c")).str();
    });

    add("delta-left-associator", "delta associator of (ab, abc, ac)", "-abcabac", [] {
        Alphabet a("abc");
        auto op = InsertionOperator::delta_restricted();
        return associator(op, Word(a, "ab"), Word(a, "abc"), Word(a, "ac")).str();
    });

    add("delta-swapped-associator", "delta associator of (abc, ab, ac)", "-ababcac", [] {
        Alphabet a("abc");
        auto op = InsertionOperator::delta_restricted();
        return associator(op, Word(a, "abc"), Word(a, "ab"), Word(a, "ac")).str();
    });

    add("free-poly-subtraction", "term arithmetic cancels exactly", "-ababcac", [] {
        Alphabet a("abc");
        return (Polynomial::parse("abcabac", a) - Polynomial::parse("ababcac + abcabac", a))
            .str();
    });

    add("sync-repeated-letter-mass", "synchronized insertion accumulates prefix scores",
        "5*aaaaa", [] {
            Alphabet a("a");
            return synchronized_insertion(Word(a, "aa"), Word(a, "aaa")).str();
        });

    add("sync-distinct-letters", "only the agreeing position survives", "abac", [] {
        Alphabet a("abc");
        return synchronized_insertion(Word(a, "ab"), Word(a, "ac")).str();
    });

    add("sync-defect-two-three-six", "left-symmetry defect of sync at lengths (2,3,6)",
        "16*aaaaaaaaaaa", [] {
            Alphabet a("a");
            auto op = InsertionOperator::synchronized();
            return identity_defect(op, IdentityKind::LeftSymmetric, Word(a, "aa"),
                                   Word(a, "aaa"), Word(a, "aaaaaa"))
                .str();
        });

    add("sync-mass-closed-form-2-3", "closed form for the total synchronized mass, p < q",
        "5", [] { return format_rational(c_closed_form(2, 3)); });

    add("sync-mass-closed-form-3-2", "closed form for the total synchronized mass, p >= q",
        "3", [] { return format_rational(c_closed_form(3, 2)); });

    add("adjacency-path-abc-into-bc", "forbidden pair ac filters one slot",
        "abcbc + babcc", [] {
            Alphabet a("abc");
            AdjacencyRelation rel(a, {{'a', 'c'}});
            return adjacency_restricted_insertion(rel, Word(a, "abc"), Word(a, "bc")).str();
        });

    add("adjacency-full-abc-into-bc", "the full relation keeps all slots",
        "abcbc + babcc + bcabc", [] {
            Alphabet a("abc");
            return adjacency_restricted_insertion(AdjacencyRelation::full(a), Word(a, "abc"),
                                                  Word(a, "bc"))
                .str();
        });

    add("adjacency-forbidden-slot-blocks", "a into c is blocked on both sides", "0", [] {
        Alphabet a("abc");
        AdjacencyRelation rel(a, {{'a', 'c'}});
        return adjacency_restricted_insertion(rel, Word(a, "a"), Word(a, "c")).str();
    });

    add("adjacency-assoc-straight", "associator (a,b,c) vanishes under the path relation",
        "0", [] {
            Alphabet a("abc");
            auto op = InsertionOperator::adjacency_restricted(
                AdjacencyRelation(a, {{'a', 'c'}}));
            return associator(op, Word(a, "a"), Word(a, "b"), Word(a, "c")).str();
        });

    add("adjacency-assoc-swapped", "associator (b,a,c) does not vanish",
        "abc + cba", [] {
            Alphabet a("abc");
            auto op = InsertionOperator::adjacency_restricted(
                AdjacencyRelation(a, {{'a', 'c'}}));
            return associator(op, Word(a, "b"), Word(a, "a"), Word(a, "c")).str();
        });

    add("exp-compatibility-bound-ten", "exp weight satisfies the compatibility equations",
        "passed", [] {
            return check_f_equations(WeightFunction::exp_bilinear(), 10).passed ? "passed"
                                                                                : "failed";
        });

    add("parity-compatibility-bound-ten", "parity weight satisfies the compatibility equations",
        "passed", [] {
            return check_f_equations(WeightFunction::parity(), 10).passed ? "passed" : "failed";
        });

    add("parity-odd-odd", "parity weight is 1 on odd pairs", "1", [] {
        return WeightFunction::parity().eval(1, 3).str();
    });

    add("parity-even-odd", "parity weight is 0 when either length is even", "0", [] {
        return WeightFunction::parity().eval(2, 1).str();
    });

    add("exp-three-two", "exp weight at (3,2)", "t^6", [] {
        return WeightFunction::exp_bilinear().eval(3, 2).str();
    });

    add("right-insertion-exp-prefactor", "right insertion under exp carries one prefactor",
        "t^6*abcde + t^6*acdeb + t^6*cdeab", [] {
            Alphabet a("abcde");
            auto op = InsertionOperator::weighted(WeightFunction::exp_bilinear());
            return right_insertion(op, Polynomial(Word(a, "ab")), Polynomial(Word(a, "cde")))
                .str();
        });

    return fixtures;
}

} // namespace insalg::tools
