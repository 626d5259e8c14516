#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "relnum/convergence.hpp"
#include "relnum/farey.hpp"
#include "relnum/orbit.hpp"
#include "relnum/poly.hpp"
#include "relnum/sturm.hpp"

// Exact values serialize as strings; anything approximate is marked "approx".
namespace relnum {

using nlohmann::json;

inline void to_json(json& j, const IsolatingInterval& iv) {
    j = json{{"lo", to_string(iv.lo)},
             {"hi", to_string(iv.hi)},
             {"approx", decimal_string(iv.midpoint())}};
}

inline void from_json(const json& j, IsolatingInterval& iv) {
    iv.lo = parse_scalar(j.at("lo").get<std::string>()).rat();
    iv.hi = parse_scalar(j.at("hi").get<std::string>()).rat();
}

inline void to_json(json& j, const AlphaEntry& e) {
    j = json{{"n", e.n}, {"interval", e.interval}, {"approx", e.approx}};
}

inline void to_json(json& j, const IntPoly& p) {
    std::vector<std::string> coeffs;
    for (const auto& c : p.c) coeffs.push_back(c.str());
    j = json{{"coefficients", coeffs}, {"text", to_string(p)}};
}

inline void to_json(json& j, const Witness& w) {
    j = json{{"alpha", to_string(w.alpha)},
             {"basepoint", to_string(w.basepoint)},
             {"word", to_string(w.word)},
             {"value", to_string(w.value)},
             {"half_index", w.half_index.str()},
             {"depth", w.depth}};
}

inline void from_json(const json& j, Witness& w) {
    w.alpha = parse_scalar(j.at("alpha").get<std::string>());
    w.basepoint = parse_proj_point(j.at("basepoint").get<std::string>());
    w.word = parse_word(j.at("word").get<std::string>());
    w.value = parse_scalar(j.at("value").get<std::string>());
    w.half_index = Int(j.at("half_index").get<std::string>());
    w.depth = j.value("depth", 0LL);
}

inline void to_json(json& j, const Edge& e) {
    j = json::array({to_string(e.a), to_string(e.b)});
}

inline void to_json(json& j, const CycleCertificate& cert) {
    std::vector<std::string> words;
    for (const auto& w : cert.edge_words) words.push_back(to_string(w));
    json edges = json::array();
    for (const auto& w : cert.edge_words)
        edges.push_back(edge_of(evaluate_word(w, cert.alpha)));
    j = json{{"alpha", to_string(cert.alpha)}, {"edge_words", words}, {"edges", edges}};
}

inline void from_json(const json& j, CycleCertificate& cert) {
    cert.alpha = parse_scalar(j.at("alpha").get<std::string>());
    cert.edge_words.clear();
    for (const auto& w : j.at("edge_words"))
        cert.edge_words.push_back(parse_word(w.get<std::string>()));
}

inline void to_json(json& j, const BallExploration& ball) {
    std::vector<std::string> vertices;
    for (const auto& v : ball.vertices) vertices.push_back(to_string(v));
    json edges = json::array();
    for (size_t i = 0; i < ball.edges.size(); ++i) {
        edges.push_back(json{{"endpoints", ball.edges[i]},
                             {"word", to_string(ball.witness_words[i])}});
    }
    j = json{{"alpha", to_string(ball.alpha)},
             {"syllable_bound", ball.syllable_bound},
             {"exponent_bound", ball.exponent_bound},
             {"vertices", vertices},
             {"edges", edges},
             {"words_generated", ball.words_generated}};
}

inline void to_json(json& j, const TableCheck& c) {
    j = json{{"alpha", c.row.alpha},
             {"word", c.row.word},
             {"basepoint", c.row.basepoint},
             {"expected", c.row.value},
             {"computed", c.computed},
             {"pass", c.pass}};
}

inline void to_json(json& j, const TableReport& r) {
    j = json{{"rows", r.checks}, {"all_pass", r.all_pass}};
}

inline void to_json(json& j, const RotationSample& s) {
    j = json{{"alpha", to_string(s.alpha)},
             {"approx_rot", s.rot},
             {"looks_rational", s.looks_rational},
             {"cf_depth", s.cf_depth}};
    if (s.looks_rational)
        j["nearest_fraction"] = std::to_string(s.num) + "/" + std::to_string(s.den);
}

inline std::vector<TableRow> load_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw MissingData("cannot open table file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw MissingData("cannot parse table file '" + path + "': " + e.what());
    }
    std::vector<TableRow> rows;
    for (const auto& row : j) {
        rows.push_back(TableRow{row.at("alpha").get<std::string>(),
                                row.at("word").get<std::string>(),
                                row.at("basepoint").get<std::string>(),
                                row.at("value").get<std::string>()});
    }
    return rows;
}

}  // namespace relnum
