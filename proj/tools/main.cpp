// Command-line front end for the insertion-product calculator.
//
// Subcommands: insert, associator, check-identity, check-f, audit, repro.
// Exit codes: 0 success / identity holds, 1 a violation or witness was
// found, 2 usage or configuration error, 3 domain error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <insalg/insalg.hpp>

#include "fixtures.hpp"

using json = nlohmann::ordered_json;

namespace {

struct GlobalOpts {
    std::string alphabet;
    bool json_out = false;
    std::uint64_t seed = 12345;
};

insalg::Alphabet require_alphabet(const GlobalOpts& g) {
    if (g.alphabet.empty())
        throw insalg::config_error("--alphabet is required for this command");
    return insalg::Alphabet(g.alphabet);
}

insalg::WeightFunction parse_weight_spec(const std::string& spec) {
    using insalg::WeightFunction;
    if (spec == "exp")
        return WeightFunction::exp_bilinear();
    if (spec == "parity")
        return WeightFunction::parity();
    if (spec.rfind("const:", 0) == 0) {
        try {
            return WeightFunction::constant(insalg::Coefficient::parse(spec.substr(6)));
        } catch (const insalg::parse_error& e) {
            throw insalg::config_error(std::string("bad constant weight: ") + e.what());
        }
    }
    if (spec.rfind("table:", 0) == 0)
        return insalg::load_weight_table(spec.substr(6));
    throw insalg::config_error("unknown weight '" + spec +
                               "' (use exp, parity, const:<coeff>, table:<file>)");
}

struct OperatorOpts {
    std::string op = "simple";
    std::string weight_spec;
    std::string relation_path;
};

insalg::InsertionOperator make_operator(const OperatorOpts& o, const insalg::Alphabet& alphabet) {
    using insalg::InsertionOperator;
    if (o.op == "simple")
        return InsertionOperator::simple();
    if (o.op == "weighted") {
        if (o.weight_spec.empty())
            throw insalg::config_error("--op weighted requires --f");
        return InsertionOperator::weighted(parse_weight_spec(o.weight_spec));
    }
    if (o.op == "delta")
        return InsertionOperator::delta_restricted();
    if (o.op == "sync")
        return InsertionOperator::synchronized();
    if (o.op == "adjacency") {
        insalg::AdjacencyRelation rel = o.relation_path.empty()
                                            ? insalg::AdjacencyRelation::full(alphabet)
                                            : insalg::load_adjacency(o.relation_path);
        if (rel.alphabet() != alphabet)
            throw insalg::config_error("relation alphabet '" + rel.alphabet().letters() +
                                       "' does not match --alphabet '" + alphabet.letters() +
                                       "'");
        return InsertionOperator::adjacency_restricted(std::move(rel));
    }
    throw insalg::config_error("unknown op '" + o.op +
                               "' (use simple, weighted, delta, sync, adjacency)");
}

insalg::IdentityKind parse_identity(const std::string& name) {
    using insalg::IdentityKind;
    if (name == "left-sym")
        return IdentityKind::LeftSymmetric;
    if (name == "right-sym")
        return IdentityKind::RightSymmetric;
    if (name == "assoc")
        return IdentityKind::Associative;
    if (name == "comm")
        return IdentityKind::Commutative;
    throw insalg::config_error("unknown identity '" + name +
                               "' (use left-sym, right-sym, assoc, comm)");
}

json witness_json(const std::optional<insalg::IdentityWitness>& w) {
    if (!w)
        return nullptr;
    return json{{"x", w->x.str()},
                {"y", w->y.str()},
                {"z", w->z.str()},
                {"defect", w->defect.str()}};
}

int run_insert(const GlobalOpts& g, const OperatorOpts& oo, const std::string& x_text,
               const std::string& y_text) {
    insalg::Alphabet alphabet = require_alphabet(g);
    insalg::InsertionOperator op = make_operator(oo, alphabet);
    insalg::Word x = insalg::parse_word(x_text, alphabet);
    insalg::Word y = insalg::parse_word(y_text, alphabet);
    insalg::Polynomial result = op.word_product(x, y);
    if (g.json_out) {
        json out{{"op", op.description()},
                 {"x", x.str()},
                 {"y", y.str()},
                 {"result", result.str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << result.str() << "\n";
    }
    return 0;
}

int run_associator(const GlobalOpts& g, const OperatorOpts& oo, const std::string& x_text,
                   const std::string& y_text, const std::string& z_text, bool defect_mode) {
    insalg::Alphabet alphabet = require_alphabet(g);
    insalg::InsertionOperator op = make_operator(oo, alphabet);
    insalg::Word x = insalg::parse_word(x_text, alphabet);
    insalg::Word y = insalg::parse_word(y_text, alphabet);
    insalg::Word z = insalg::parse_word(z_text, alphabet);
    insalg::Polynomial result =
        defect_mode
            ? insalg::identity_defect(op, insalg::IdentityKind::LeftSymmetric, x, y, z)
            : insalg::associator(op, insalg::Polynomial(x), insalg::Polynomial(y),
                                 insalg::Polynomial(z));
    if (g.json_out) {
        json out{{"op", op.description()},
                 {"kind", defect_mode ? "left-sym-defect" : "associator"},
                 {"x", x.str()},
                 {"y", y.str()},
                 {"z", z.str()},
                 {"result", result.str()}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << result.str() << "\n";
    }
    return 0;
}

int run_check_identity(const GlobalOpts& g, const OperatorOpts& oo,
                       const std::string& identity_name, int max_len, const std::string& mode,
                       std::uint64_t trials, std::optional<bool> include_empty,
                       std::uint64_t max_tuples) {
    insalg::Alphabet alphabet = require_alphabet(g);
    insalg::InsertionOperator op = make_operator(oo, alphabet);
    insalg::IdentityKind kind = parse_identity(identity_name);

    insalg::SearchOptions options;
    options.max_total_length = max_len;
    if (mode == "exhaustive")
        options.mode = insalg::SearchOptions::Mode::Exhaustive;
    else if (mode == "random")
        options.mode = insalg::SearchOptions::Mode::Random;
    else
        throw insalg::config_error("unknown mode '" + mode + "' (use exhaustive, random)");
    options.seed = g.seed;
    options.trials = trials;
    options.include_empty = include_empty;
    options.max_tuples = max_tuples;

    insalg::IdentityReport report = insalg::check_identity(op, kind, alphabet, options);
    if (g.json_out) {
        json out{{"op", report.op},
                 {"identity", report.identity},
                 {"passed", report.passed},
                 {"tuples_checked", report.tuples_checked},
                 {"witness", witness_json(report.witness)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "op=" << report.op << " identity=" << report.identity
                  << " alphabet=" << report.alphabet << " max-len=" << report.max_total_length
                  << " mode=" << report.mode << "\n";
        if (report.passed) {
            std::cout << "PASSED (" << report.tuples_checked << " tuples)\n";
        } else {
            std::cout << "FAILED after " << report.tuples_checked << " tuples\n"
                      << "witness: x=" << report.witness->x.str()
                      << " y=" << report.witness->y.str()
                      << " z=" << report.witness->z.str() << "\n"
                      << "defect: " << report.witness->defect.str() << "\n";
        }
    }
    return report.passed ? 0 : 1;
}

int run_check_f(const std::string& f_spec, long bound, bool symmetry) {
    insalg::WeightFunction f = parse_weight_spec(f_spec);
    if (symmetry) {
        insalg::SymmetryReport report = insalg::check_f_symmetry(f, bound);
        json witnesses = json::array();
        for (const auto& w : report.witnesses)
            witnesses.push_back(json{{"m", w.m},
                                     {"n", w.n},
                                     {"f_mn", w.f_mn.str()},
                                     {"f_nm", w.f_nm.str()}});
        json out{{"f", f.description()},
                 {"bound", report.bound},
                 {"symmetric", report.symmetric},
                 {"witnesses", witnesses}};
        std::cout << out.dump(2) << "\n";
        return report.symmetric ? 0 : 1;
    }
    insalg::FGridReport report = insalg::check_f_equations(f, bound);
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back(json{{"m", v.m},
                                  {"n", v.n},
                                  {"p", v.p},
                                  {"lhs", v.lhs.str()},
                                  {"mid", v.mid.str()},
                                  {"rhs", v.rhs.str()},
                                  {"eq1_holds", v.eq1_holds},
                                  {"eq2_holds", v.eq2_holds}});
    json out{{"f", f.description()},
             {"bound", report.bound},
             {"passed", report.passed},
             {"checked", report.checked},
             {"skipped", report.skipped},
             {"violations", violations}};
    std::cout << out.dump(2) << "\n";
    return report.passed ? 0 : 1;
}

int run_audit(const GlobalOpts& g, const std::string& target, int max_len) {
    if (target != "3.1")
        throw insalg::config_error("unknown audit target '" + target + "' (available: 3.1)");
    insalg::AuditReport audit = insalg::audit_adjacency_claims(max_len);
    if (g.json_out) {
        json cases = json::array();
        for (const auto& c : audit.cases)
            cases.push_back(json{{"label", c.label},
                                 {"setup", c.setup},
                                 {"claim", c.claim},
                                 {"claimed_holds", c.claimed_holds},
                                 {"computed_holds", c.report.passed},
                                 {"matches_claim", c.matches_claim},
                                 {"as_expected", c.as_expected},
                                 {"tuples_checked", c.report.tuples_checked},
                                 {"witness", witness_json(c.report.witness)},
                                 {"note", c.note}});
        json out{{"audit", "adjacency-insertion-claims"},
                 {"max_total_length", audit.max_total_length},
                 {"all_as_expected", audit.all_as_expected},
                 {"cases", cases}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "adjacency-insertion claims, nonempty words, |x|+|y|+|z| <= "
                  << audit.max_total_length << "\n";
        for (const auto& c : audit.cases) {
            std::cout << c.label << ": " << c.setup << "\n"
                      << "  claim '" << c.claim << "' -> computation says the identity "
                      << (c.report.passed ? "holds" : "fails") << " ("
                      << c.report.tuples_checked << " tuples); "
                      << (c.matches_claim ? "matches the claim" : "DIVERGES from the claim")
                      << "\n";
            if (c.report.witness)
                std::cout << "  witness: x=" << c.report.witness->x.str()
                          << " y=" << c.report.witness->y.str()
                          << " z=" << c.report.witness->z.str()
                          << " defect=" << c.report.witness->defect.str() << "\n";
            if (!c.note.empty())
                std::cout << "  note: " << c.note << "\n";
        }
        std::cout << (audit.all_as_expected ? "AUDIT OK" : "AUDIT UNEXPECTED") << "\n";
    }
    return audit.all_as_expected ? 0 : 1;
}

int run_repro(const GlobalOpts& g, bool list, bool dump, const std::string& fixtures_path) {
    std::vector<insalg::tools::Fixture> fixtures = insalg::tools::fixture_store();

    if (!fixtures_path.empty()) {
        json j = insalg::detail::parse_json(insalg::detail::read_file(fixtures_path),
                                            "fixture store");
        if (!j.is_object() || !j.contains("fixtures") || !j["fixtures"].is_array())
            throw insalg::config_error("fixture store needs an array field 'fixtures'");
        for (const auto& entry : j["fixtures"]) {
            if (!entry.is_object() || !entry.contains("id") || !entry["id"].is_string() ||
                !entry.contains("expected") || !entry["expected"].is_string())
                throw insalg::config_error(
                    "each fixture override needs string fields 'id' and 'expected'");
            std::string id = entry["id"].get<std::string>();
            auto it = std::find_if(fixtures.begin(), fixtures.end(),
                                   [&](const auto& f) { return f.id == id; });
            if (it == fixtures.end())
                throw insalg::config_error("unknown fixture id '" + id + "'");
            it->expected = entry["expected"].get<std::string>();
        }
    }

    if (list) {
        for (const auto& f : fixtures)
            std::cout << f.id << "  " << f.description << "\n";
        return 0;
    }
    if (dump) {
        json out = json::object();
        out["fixtures"] = json::array();
        for (const auto& f : fixtures)
            out["fixtures"].push_back(json{{"id", f.id},
                                           {"description", f.description},
                                           {"expected", f.expected}});
        std::cout << out.dump(2) << "\n";
        return 0;
    }

    std::string first_mismatch;
    std::size_t failed = 0;
    json results = json::array();
    for (const auto& f : fixtures) {
        std::string got;
        try {
            got = f.run();
        } catch (const std::exception& e) {
            got = std::string("error: ") + e.what();
        }
        bool ok = got == f.expected;
        if (!ok) {
            ++failed;
            if (first_mismatch.empty())
                first_mismatch = f.id;
        }
        if (g.json_out)
            results.push_back(
                json{{"id", f.id}, {"ok", ok}, {"expected", f.expected}, {"got", got}});
        else if (ok)
            std::cout << "ok   " << f.id << "\n";
        else
            std::cout << "FAIL " << f.id << ": expected '" << f.expected << "', got '" << got
                      << "'\n";
    }
    if (g.json_out) {
        json out{{"total", fixtures.size()},
                 {"failed", failed},
                 {"first_mismatch", first_mismatch.empty() ? json(nullptr) : json(first_mismatch)},
                 {"results", results}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (fixtures.size() - failed) << "/" << fixtures.size() << " fixtures match\n";
        if (!first_mismatch.empty())
            std::cout << "first mismatch: " << first_mismatch << "\n";
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    CLI::App app{"exact insertion products on formal sums of words"};
    app.name("insalg");
    app.require_subcommand(1);
    app.add_option("--alphabet", g.alphabet, "alphabet letters, in declaration order");
    app.add_flag("--json", g.json_out, "emit JSON instead of text");
    app.add_option("--seed", g.seed, "seed for random search mode")->capture_default_str();

    int exit_code = 0;

    OperatorOpts ins_op;
    std::string ins_x, ins_y;
    auto* ins = app.add_subcommand("insert", "compute the product x o y");
    ins->fallthrough();
    ins->add_option("--op", ins_op.op, "simple, weighted, delta, sync, adjacency")
        ->capture_default_str();
    ins->add_option("--f", ins_op.weight_spec, "weight: exp, parity, const:<coeff>, table:<file>");
    ins->add_option("--rel", ins_op.relation_path, "adjacency relation JSON file");
    ins->add_option("x", ins_x, "word inserted")->required();
    ins->add_option("y", ins_y, "word inserted into")->required();
    ins->callback([&] { exit_code = run_insert(g, ins_op, ins_x, ins_y); });

    OperatorOpts asc_op;
    std::string asc_x, asc_y, asc_z;
    bool asc_defect = false;
    auto* asc = app.add_subcommand("associator",
                                   "compute the associator (x,y,z), or the left-symmetry "
                                   "defect with --defect");
    asc->fallthrough();
    asc->add_option("--op", asc_op.op, "simple, weighted, delta, sync, adjacency")
        ->capture_default_str();
    asc->add_option("--f", asc_op.weight_spec, "weight: exp, parity, const:<coeff>, table:<file>");
    asc->add_option("--rel", asc_op.relation_path, "adjacency relation JSON file");
    asc->add_flag("--defect", asc_defect, "compute (x,y,z) - (y,x,z) instead");
    asc->add_option("x", asc_x, "first word")->required();
    asc->add_option("y", asc_y, "second word")->required();
    asc->add_option("z", asc_z, "third word")->required();
    asc->callback([&] { exit_code = run_associator(g, asc_op, asc_x, asc_y, asc_z, asc_defect); });

    OperatorOpts ci_op;
    std::string ci_identity = "left-sym";
    std::string ci_mode = "exhaustive";
    int ci_max_len = 6;
    std::uint64_t ci_trials = 10000;
    std::uint64_t ci_max_tuples = 10'000'000;
    bool ci_include_empty = false, ci_exclude_empty = false;
    auto* ci = app.add_subcommand("check-identity",
                                  "search word triples for a counterexample to an identity");
    ci->fallthrough();
    ci->add_option("--op", ci_op.op, "simple, weighted, delta, sync, adjacency")
        ->capture_default_str();
    ci->add_option("--f", ci_op.weight_spec, "weight: exp, parity, const:<coeff>, table:<file>");
    ci->add_option("--rel", ci_op.relation_path, "adjacency relation JSON file");
    ci->add_option("--identity", ci_identity, "left-sym, right-sym, assoc, comm")
        ->capture_default_str();
    ci->add_option("--max-len", ci_max_len, "bound on |x|+|y|+|z|")->capture_default_str();
    ci->add_option("--mode", ci_mode, "exhaustive or random")->capture_default_str();
    ci->add_option("--trials", ci_trials, "samples in random mode")->capture_default_str();
    ci->add_option("--max-tuples", ci_max_tuples, "exhaustive search ceiling")
        ->capture_default_str();
    ci->add_flag("--include-empty", ci_include_empty,
                 "force the empty word into the search space");
    ci->add_flag("--exclude-empty", ci_exclude_empty,
                 "force the empty word out of the search space");
    ci->callback([&] {
        if (ci_include_empty && ci_exclude_empty)
            throw insalg::config_error("--include-empty and --exclude-empty conflict");
        std::optional<bool> include_empty;
        if (ci_include_empty)
            include_empty = true;
        else if (ci_exclude_empty)
            include_empty = false;
        exit_code = run_check_identity(g, ci_op, ci_identity, ci_max_len, ci_mode, ci_trials,
                                       include_empty, ci_max_tuples);
    });

    std::string cf_spec;
    long cf_bound = 10;
    bool cf_symmetry = false;
    auto* cf = app.add_subcommand("check-f",
                                  "check the weight compatibility equations on a grid");
    cf->fallthrough();
    cf->add_option("--f", cf_spec, "weight: exp, parity, const:<coeff>, table:<file>")
        ->required();
    cf->add_option("--bound", cf_bound, "grid bound N (triples range over [0,N]^3)")
        ->capture_default_str();
    cf->add_flag("--symmetry", cf_symmetry, "check f(m,n) = f(n,m) on [1,N]^2 instead");
    cf->callback([&] { exit_code = run_check_f(cf_spec, cf_bound, cf_symmetry); });

    std::string au_target = "3.1";
    int au_max_len = 6;
    auto* au = app.add_subcommand("audit",
                                  "re-check the recorded adjacency-insertion claims");
    au->fallthrough();
    au->add_option("--theorem", au_target, "claim group to audit")->capture_default_str();
    au->add_option("--max-len", au_max_len, "bound on |x|+|y|+|z|")->capture_default_str();
    au->callback([&] { exit_code = run_audit(g, au_target, au_max_len); });

    bool rp_list = false, rp_dump = false;
    std::string rp_fixtures;
    auto* rp = app.add_subcommand("repro", "replay the frozen fixture computations");
    rp->fallthrough();
    rp->add_flag("--list", rp_list, "list fixture ids and descriptions");
    rp->add_flag("--dump", rp_dump, "print the fixture store as JSON");
    rp->add_option("--fixtures", rp_fixtures, "JSON file overriding expected values");
    rp->callback([&] { exit_code = run_repro(g, rp_list, rp_dump, rp_fixtures); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);  // --help and friends
        app.exit(e);
        return 2;
    } catch (const insalg::config_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const insalg::error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
