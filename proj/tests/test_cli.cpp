#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "run_cli.hpp"

namespace {

using nlohmann::json;

std::filesystem::path scratch_dir() {
    auto dir = std::filesystem::temp_directory_path() / "insalg_cli_test";
    std::filesystem::create_directories(dir);
    return dir;
}

std::string write_scratch(const std::string& name, const std::string& content) {
    auto path = scratch_dir() / name;
    std::ofstream out(path);
    out << content;
    out.close();
    return path.string();
}

std::string sum_table_json(long N) {
    json entries = json::array();
    for (long m = 0; m <= N; ++m)
        for (long n = 0; n <= N; ++n)
            entries.push_back(json::array({m, n, std::to_string(m + n)}));
    return json{{"N", N}, {"entries", entries}}.dump();
}

std::string m_plus_2n_table_json(long N) {
    json entries = json::array();
    for (long m = 0; m <= N; ++m)
        for (long n = 0; n <= N; ++n)
            entries.push_back(json::array({m, n, std::to_string(m + 2 * n)}));
    return json{{"N", N}, {"entries", entries}}.dump();
}

} // namespace

TEST_CASE("insert prints the canonical polynomial") {
    CliResult r = run_cli("insert --op simple --alphabet abcde abc de");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "abcde + dabce + deabc\n");
}

TEST_CASE("insert supports JSON output") {
    CliResult r = run_cli("--json insert --op delta --alphabet abc ab abcac");
    CHECK(r.exit_code == 0);
    json out = json::parse(r.output);
    CHECK(out["op"] == "delta");
    CHECK(out["x"] == "ab");
    CHECK(out["y"] == "abcac");
    CHECK(out["result"] == "ababcac + abcabac");
}

TEST_CASE("global flags work before or after the subcommand") {
    CliResult before = run_cli("--alphabet abc insert --op sync ab ac");
    CliResult after = run_cli("insert --op sync --alphabet abc ab ac");
    CHECK(before.exit_code == 0);
    CHECK(after.exit_code == 0);
    CHECK(before.output == after.output);
    CHECK(after.output == "abac\n");
}

TEST_CASE("identical invocations produce byte-identical output") {
    const std::string cmd =
        "--json check-identity --op delta --identity left-sym --alphabet abc --max-len 6";
    CliResult first = run_cli(cmd);
    CliResult second = run_cli(cmd);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
}

TEST_CASE("associator subcommand computes associators and defects") {
    CliResult assoc = run_cli("associator --op delta --alphabet abc ab abc ac");
    CHECK(assoc.exit_code == 0);
    CHECK(assoc.output == "-abcabac\n");

    CliResult swapped = run_cli("associator --op delta --alphabet abc abc ab ac");
    CHECK(swapped.output == "-ababcac\n");

    CliResult defect = run_cli("associator --op sync --alphabet a --defect aa aaa aaaaaa");
    CHECK(defect.exit_code == 0);
    CHECK(defect.output == "16*aaaaaaaaaaa\n");
}

TEST_CASE("check-identity reports the delta witness and exits 1") {
    CliResult r = run_cli("check-identity --op delta --identity left-sym --alphabet abc "
                          "--max-len 7");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAILED") != std::string::npos);
    CHECK(r.output.find("x=a y=ab z=a") != std::string::npos);
    CHECK(r.output.find("defect: aaba - abaa") != std::string::npos);
}

TEST_CASE("check-identity JSON follows the report schema exactly") {
    CliResult fail = run_cli("--json check-identity --op delta --identity left-sym "
                             "--alphabet abc --max-len 7");
    CHECK(fail.exit_code == 1);
    json out = json::parse(fail.output);
    REQUIRE(out.size() == 5);
    CHECK(out["op"] == "delta");
    CHECK(out["identity"] == "left-sym");
    CHECK(out["passed"] == false);
    CHECK(out["tuples_checked"].is_number_integer());
    REQUIRE(out["witness"].is_object());
    CHECK(out["witness"]["x"] == "a");
    CHECK(out["witness"]["y"] == "ab");
    CHECK(out["witness"]["z"] == "a");
    CHECK(out["witness"]["defect"] == "aaba - abaa");

    CliResult pass = run_cli("--json check-identity --op simple --identity left-sym "
                             "--alphabet ab --max-len 5");
    CHECK(pass.exit_code == 0);
    json pout = json::parse(pass.output);
    REQUIRE(pout.size() == 5);
    CHECK(pout["passed"] == true);
    CHECK(pout["witness"].is_null());
}

TEST_CASE("check-identity honors the empty-word flags") {
    // over {a} with --max-len 3, the full space has 20 tuples, the nonempty
    // space exactly 1
    CliResult full = run_cli("--json check-identity --op simple --alphabet a --max-len 3");
    CliResult nonempty = run_cli("--json check-identity --op simple --alphabet a "
                                 "--max-len 3 --exclude-empty");
    CHECK(json::parse(full.output)["tuples_checked"] == 20);
    CHECK(json::parse(nonempty.output)["tuples_checked"] == 1);

    CliResult conflict = run_cli("check-identity --op simple --alphabet a --max-len 3 "
                                 "--include-empty --exclude-empty");
    CHECK(conflict.exit_code == 2);
}

TEST_CASE("random mode is reproducible via --seed") {
    const std::string cmd = "--json --seed 42 check-identity --op delta --identity left-sym "
                            "--alphabet ab --max-len 6 --mode random --trials 200";
    CliResult first = run_cli(cmd);
    CliResult second = run_cli(cmd);
    CHECK(first.exit_code == second.exit_code);
    CHECK(first.output == second.output);
}

TEST_CASE("usage problems exit 2") {
    CHECK(run_cli("").exit_code == 2);                       // no subcommand
    CHECK(run_cli("frobnicate").exit_code == 2);             // unknown subcommand
    CHECK(run_cli("insert --op simple ab").exit_code == 2);  // missing positional
    CHECK(run_cli("insert --bogus x y").exit_code == 2);     // unknown flag
    CHECK(run_cli("insert --op simple ab ba").exit_code == 2);  // missing --alphabet
    CHECK(run_cli("insert --op weighted --alphabet ab a b").exit_code == 2);  // missing --f
    CHECK(run_cli("insert --op weighted --f nope --alphabet ab a b").exit_code == 2);
    CHECK(run_cli("check-identity --op simple --identity bogus --alphabet ab --max-len 3")
              .exit_code == 2);
    CHECK(run_cli("check-f --bound 3").exit_code == 2);  // --f required
    CHECK(run_cli("audit --theorem 9.9").exit_code == 2);
    CHECK(run_cli("insert --op adjacency --rel /nonexistent.json --alphabet ab a b")
              .exit_code == 2);
}

TEST_CASE("domain problems exit 3") {
    CHECK(run_cli("insert --op simple --alphabet abc ab abd").exit_code == 3);  // unknown letter
    CHECK(run_cli("check-identity --op simple --alphabet abc --max-len 30").exit_code == 3);

    std::string rel = write_scratch("path.json", R"({"alphabet":"abc","forbidden":[["a","c"]]})");
    CHECK(run_cli("insert --op adjacency --rel " + rel + " --alphabet abc ac b").exit_code ==
          3);  // inadmissible operand
}

TEST_CASE("adjacency relations come from --rel files") {
    std::string rel = write_scratch("path.json", R"({"alphabet":"abc","forbidden":[["a","c"]]})");
    CliResult r = run_cli("insert --op adjacency --rel " + rel + " --alphabet abc abc bc");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "abcbc + babcc\n");

    // omitted --rel means the full relation
    CliResult full = run_cli("insert --op adjacency --alphabet abc abc bc");
    CHECK(full.output == "abcbc + babcc + bcabc\n");

    // the relation alphabet must match --alphabet
    CHECK(run_cli("insert --op adjacency --rel " + rel + " --alphabet ab a b").exit_code == 2);
}

TEST_CASE("check-f prints a grid report as JSON") {
    CliResult exp = run_cli("check-f --f exp --bound 10");
    CHECK(exp.exit_code == 0);
    json out = json::parse(exp.output);
    CHECK(out["f"] == "exp");
    CHECK(out["bound"] == 10);
    CHECK(out["passed"] == true);
    CHECK(out["checked"] == 1331);
    CHECK(out["skipped"] == 0);
    CHECK(out["violations"].empty());

    std::string table = write_scratch("sum.json", sum_table_json(4));
    CliResult bad = run_cli("check-f --f table:" + table + " --bound 4");
    CHECK(bad.exit_code == 1);
    json bout = json::parse(bad.output);
    CHECK(bout["passed"] == false);
    bool found = false;
    for (const auto& v : bout["violations"])
        if (v["m"] == 1 && v["n"] == 1 && v["p"] == 2) {
            found = true;
            CHECK(v["lhs"] == "8");
            CHECK(v["mid"] == "12");
            CHECK(v["eq1_holds"] == false);
            CHECK(v["eq2_holds"] == true);
        }
    CHECK(found);
    CHECK(bout["skipped"].get<long>() > 0);
}

TEST_CASE("check-f --symmetry flags asymmetric tables") {
    std::string table = write_scratch("m2n.json", m_plus_2n_table_json(4));
    CliResult r = run_cli("check-f --f table:" + table + " --bound 4 --symmetry");
    CHECK(r.exit_code == 1);
    json out = json::parse(r.output);
    CHECK(out["symmetric"] == false);
    REQUIRE(!out["witnesses"].empty());
    CHECK(out["witnesses"][0]["m"] == 1);
    CHECK(out["witnesses"][0]["n"] == 2);
    CHECK(out["witnesses"][0]["f_mn"] == "5");
    CHECK(out["witnesses"][0]["f_nm"] == "4");

    CliResult sym = run_cli("check-f --f parity --bound 10 --symmetry");
    CHECK(sym.exit_code == 0);
    CHECK(json::parse(sym.output)["symmetric"] == true);
}

TEST_CASE("audit checks the recorded claims and labels the divergence") {
    CliResult r = run_cli("--json audit --theorem 3.1 --max-len 6");
    CHECK(r.exit_code == 0);
    json out = json::parse(r.output);
    CHECK(out["all_as_expected"] == true);
    REQUIRE(out["cases"].size() == 6);

    bool saw_divergence = false;
    for (const auto& c : out["cases"]) {
        if (c["label"] == "two-letter-forbidden-assoc") {
            saw_divergence = true;
            CHECK(c["claimed_holds"] == true);
            CHECK(c["computed_holds"] == false);
            CHECK(c["matches_claim"] == false);
            CHECK(c["as_expected"] == true);
            CHECK(c["witness"]["x"] == "a");
            CHECK(c["witness"]["defect"] == "-2*aaa");
        } else {
            CHECK(c["matches_claim"] == true);
        }
    }
    CHECK(saw_divergence);

    CliResult text = run_cli("audit --theorem 3.1 --max-len 6");
    CHECK(text.exit_code == 0);
    CHECK(text.output.find("DIVERGES from the claim") != std::string::npos);
    CHECK(text.output.find("AUDIT OK") != std::string::npos);
}

TEST_CASE("repro replays the fixture store") {
    CliResult r = run_cli("repro");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("fixtures match") != std::string::npos);
    CHECK(r.output.find("FAIL") == std::string::npos);

    CliResult list = run_cli("repro --list");
    CHECK(list.exit_code == 0);
    CHECK(list.output.find("simple-abc-into-de") != std::string::npos);
    CHECK(list.output.find("sync-defect-two-three-six") != std::string::npos);

    CliResult dump = run_cli("repro --dump");
    CHECK(dump.exit_code == 0);
    json store = json::parse(dump.output);
    CHECK(store["fixtures"].size() >= 20);
}

TEST_CASE("a tampered fixture store is reported by name") {
    std::string tampered = write_scratch(
        "tampered.json",
        R"({"fixtures":[{"id":"delta-ab-into-abc","expected":"wrong-value"}]})");
    CliResult r = run_cli("repro --fixtures " + tampered);
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("FAIL delta-ab-into-abc") != std::string::npos);
    CHECK(r.output.find("first mismatch: delta-ab-into-abc") != std::string::npos);

    std::string unknown = write_scratch(
        "unknown.json", R"({"fixtures":[{"id":"no-such-fixture","expected":"x"}]})");
    CHECK(run_cli("repro --fixtures " + unknown).exit_code == 2);
}

TEST_CASE("weighted operators accept table files end to end") {
    std::string table = write_scratch("sum4.json", sum_table_json(4));
    CliResult r = run_cli("--json check-identity --op weighted --f table:" + table +
                          " --identity left-sym --alphabet ab --max-len 4");
    CHECK(r.exit_code == 1);
    json out = json::parse(r.output);
    CHECK(out["witness"]["x"] == "1");
    CHECK(out["witness"]["y"] == "a");
    CHECK(out["witness"]["z"] == "1");
    CHECK(out["witness"]["defect"] == "-a");
    CHECK(out["tuples_checked"] == 32);
}
