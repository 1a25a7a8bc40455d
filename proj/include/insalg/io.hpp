#pragma once

// JSON data-file formats.  Kept separate from the core headers so the
// algebra itself has no third-party includes.

#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "insalg/errors.hpp"
#include "insalg/insertion.hpp"
#include "insalg/weights.hpp"
#include "insalg/words.hpp"

namespace insalg {

namespace detail {

inline nlohmann::json parse_json(const std::string& text, const std::string& what) {
    nlohmann::json j = nlohmann::json::parse(text, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded())
        throw config_error("invalid JSON in " + what);
    return j;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw config_error("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace detail

// { "alphabet": "abc", "forbidden": [["a","c"], ...] }
// Pairs are unordered; listing [a,c] also forbids [c,a].
inline AdjacencyRelation parse_adjacency(const std::string& text) {
    nlohmann::json j = detail::parse_json(text, "adjacency relation");
    if (!j.is_object() || !j.contains("alphabet") || !j["alphabet"].is_string())
        throw config_error("adjacency relation needs a string field 'alphabet'");
    Alphabet alphabet(j["alphabet"].get<std::string>());
    std::vector<std::pair<char, char>> forbidden;
    if (j.contains("forbidden")) {
        if (!j["forbidden"].is_array())
            throw config_error("'forbidden' must be an array of letter pairs");
        for (const auto& entry : j["forbidden"]) {
            if (!entry.is_array() || entry.size() != 2 || !entry[0].is_string() ||
                !entry[1].is_string() || entry[0].get<std::string>().size() != 1 ||
                entry[1].get<std::string>().size() != 1)
                throw config_error("each forbidden pair must be two single-letter strings");
            forbidden.emplace_back(entry[0].get<std::string>()[0],
                                   entry[1].get<std::string>()[0]);
        }
    }
    try {
        return AdjacencyRelation(std::move(alphabet), forbidden);
    } catch (const unknown_letter& e) {
        throw config_error(std::string("forbidden pair uses ") + e.what());
    }
}

inline AdjacencyRelation load_adjacency(const std::string& path) {
    return parse_adjacency(detail::read_file(path));
}

// { "N": 4, "entries": [[m, n, "coefficient-text"], ...] }
// The table must cover all of [0,N]^2; lookups outside the entries are
// domain errors rather than extrapolations, so totality is checked up front.
inline WeightFunction parse_weight_table(const std::string& text) {
    nlohmann::json j = detail::parse_json(text, "weight table");
    if (!j.is_object() || !j.contains("N") || !j["N"].is_number_integer())
        throw config_error("weight table needs an integer field 'N'");
    long bound = j["N"].get<long>();
    if (bound < 0)
        throw config_error("weight table bound must be nonnegative");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw config_error("weight table needs an array field 'entries'");

    std::map<std::pair<long, long>, Coefficient> entries;
    for (const auto& entry : j["entries"]) {
        if (!entry.is_array() || entry.size() != 3 || !entry[0].is_number_integer() ||
            !entry[1].is_number_integer() || !entry[2].is_string())
            throw config_error("each table entry must be [m, n, \"coefficient\"]");
        long m = entry[0].get<long>();
        long n = entry[1].get<long>();
        if (m < 0 || m > bound || n < 0 || n > bound)
            throw config_error("table entry (" + std::to_string(m) + "," + std::to_string(n) +
                               ") lies outside [0," + std::to_string(bound) + "]^2");
        Coefficient value;
        try {
            value = Coefficient::parse(entry[2].get<std::string>());
        } catch (const parse_error& e) {
            throw config_error(std::string("bad table coefficient: ") + e.what());
        }
        if (!entries.emplace(std::make_pair(m, n), std::move(value)).second)
            throw config_error("duplicate table entry (" + std::to_string(m) + "," +
                               std::to_string(n) + ")");
    }
    for (long m = 0; m <= bound; ++m)
        for (long n = 0; n <= bound; ++n)
            if (!entries.count({m, n}))
                throw config_error("weight table is missing entry (" + std::to_string(m) + "," +
                                   std::to_string(n) + "); it must cover [0,N]^2");
    return WeightFunction::table(std::move(entries), bound);
}

inline WeightFunction load_weight_table(const std::string& path) {
    return parse_weight_table(detail::read_file(path));
}

} // namespace insalg
