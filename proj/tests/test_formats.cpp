#include <catch2/catch_amalgamated.hpp>

#include <insalg/io.hpp>

using namespace insalg;

TEST_CASE("adjacency relations load from JSON") {
    AdjacencyRelation rel = parse_adjacency(R"({"alphabet":"abc","forbidden":[["a","c"]]})");
    CHECK(rel.alphabet().letters() == "abc");
    CHECK_FALSE(rel.allowed('a', 'c'));
    CHECK_FALSE(rel.allowed('c', 'a'));
    CHECK(rel.allowed('b', 'c'));
    CHECK(rel.description() == "forbidden={ac}");

    AdjacencyRelation full = parse_adjacency(R"({"alphabet":"ab"})");
    CHECK(full.allowed('a', 'b'));
    CHECK(full.description() == "full");
}

TEST_CASE("bad adjacency JSON is a configuration error") {
    CHECK_THROWS_AS(parse_adjacency("not json"), config_error);
    CHECK_THROWS_AS(parse_adjacency(R"({"forbidden":[]})"), config_error);
    CHECK_THROWS_AS(parse_adjacency(R"({"alphabet":"abc","forbidden":[["ab","c"]]})"),
                    config_error);
    CHECK_THROWS_AS(parse_adjacency(R"({"alphabet":"abc","forbidden":["ac"]})"), config_error);
    CHECK_THROWS_AS(parse_adjacency(R"({"alphabet":"abc","forbidden":[["a","z"]]})"),
                    config_error);
    CHECK_THROWS_AS(parse_adjacency(R"({"alphabet":"abc","forbidden":[["a","a"]]})"),
                    config_error);
    CHECK_THROWS_AS(parse_adjacency(R"({"alphabet":""})"), config_error);
    CHECK_THROWS_AS(load_adjacency("/nonexistent/rel.json"), config_error);
}

TEST_CASE("weight tables load from JSON and stay total on [0,N]^2") {
    WeightFunction f = parse_weight_table(R"({"N":1,"entries":[
        [0,0,"0"],[0,1,"1"],[1,0,"1"],[1,1,"2"]]})");
    CHECK(f.bound() == 1);
    CHECK(f.eval(1, 1) == Coefficient(2));
    CHECK(f.eval(0, 0).is_zero());
    CHECK_FALSE(f.defined_at(2, 0));
    CHECK_THROWS_AS(f.eval(2, 0), out_of_domain);

    // Laurent-valued entries are fine
    WeightFunction g = parse_weight_table(R"({"N":0,"entries":[[0,0,"3/2*t^2 - 1"]]})");
    CHECK(g.eval(0, 0).str() == "3/2*t^2 - 1");
}

TEST_CASE("bad weight tables are configuration errors") {
    CHECK_THROWS_AS(parse_weight_table("[]"), config_error);
    CHECK_THROWS_AS(parse_weight_table(R"({"entries":[]})"), config_error);
    CHECK_THROWS_AS(parse_weight_table(R"({"N":-1,"entries":[]})"), config_error);
    // missing (1,1): not total
    CHECK_THROWS_AS(parse_weight_table(R"({"N":1,"entries":[[0,0,"0"],[0,1,"1"],[1,0,"1"]]})"),
                    config_error);
    // out of declared bounds
    CHECK_THROWS_AS(parse_weight_table(R"({"N":0,"entries":[[0,0,"0"],[0,1,"1"]]})"),
                    config_error);
    // duplicate entry
    CHECK_THROWS_AS(
        parse_weight_table(R"({"N":0,"entries":[[0,0,"0"],[0,0,"1"]]})"), config_error);
    // malformed coefficient text
    CHECK_THROWS_AS(parse_weight_table(R"({"N":0,"entries":[[0,0,"q"]]})"), config_error);
    // malformed entry shape
    CHECK_THROWS_AS(parse_weight_table(R"({"N":0,"entries":[[0,"0","0"]]})"), config_error);
    CHECK_THROWS_AS(load_weight_table("/nonexistent/table.json"), config_error);
}
