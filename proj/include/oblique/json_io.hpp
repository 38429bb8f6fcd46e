#pragma once

// JSON wire formats.  Partitions are arrays of descending positive
// integers; sequences pair a word with its partition list; tilings are
// domino lists with window bounds; matchings are edge lists in doubled
// coordinates.

#include "extended.hpp"
#include "series.hpp"
#include "steep.hpp"

#include <json.hpp>

#include <limits>

namespace oblique {

using Json = nlohmann::json;

inline Json to_json(const Partition& p) {
    Json a = Json::array();
    for (int v : p.parts) a.push_back(v);
    return a;
}

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition JSON must be an array");
    std::vector<int> parts;
    for (const auto& v : j) parts.push_back(v.get<int>());
    Partition p(std::move(parts));
    if (!p.valid()) throw std::invalid_argument("partition JSON must be weakly decreasing and positive");
    return p;
}

inline Json to_json(const InterlacedSeq& s) {
    Json j;
    j["word"] = s.word.to_string();
    Json arr = Json::array();
    for (const auto& l : s.lambdas) arr.push_back(to_json(l));
    j["partitions"] = arr;
    return j;
}

inline InterlacedSeq interlaced_seq_from_json(const Json& j) {
    SignWord w = SignWord::parse(j.at("word").get<std::string>());
    std::vector<Partition> ls;
    for (const auto& pj : j.at("partitions")) ls.push_back(partition_from_json(pj));
    InterlacedSeq s(std::move(w), std::move(ls));
    s.validate();
    return s;
}

inline Json to_json(const TilingWindow& t) {
    Json j;
    j["word"] = t.word.to_string();
    j["half_width"] = t.half_width;
    Json ds = Json::array();
    for (const auto& d : t.dominos) {
        Json dj;
        dj["x"] = d.x;
        dj["y"] = d.y;
        dj["orient"] = d.horizontal ? "h" : "v";
        dj["going"] = std::string(1, static_cast<char>(d.going));
        ds.push_back(dj);
    }
    j["dominos"] = ds;
    return j;
}

inline TilingWindow tiling_from_json(const Json& j) {
    TilingWindow t;
    t.word = SignWord::parse(j.at("word").get<std::string>());
    t.half_width = j.at("half_width").get<int>();
    for (const auto& dj : j.at("dominos")) {
        Domino d;
        d.x = dj.at("x").get<int>();
        d.y = dj.at("y").get<int>();
        std::string orient = dj.at("orient").get<std::string>();
        if (orient != "h" && orient != "v")
            throw std::invalid_argument("domino orient must be 'h' or 'v'");
        d.horizontal = orient == "h";
        std::string going = dj.at("going").get<std::string>();
        if (going.size() != 1 || std::string("NESW").find(going) == std::string::npos)
            throw std::invalid_argument("domino going must be one of N, E, S, W");
        d.going = static_cast<Going>(going[0]);
        if (d.going != going_of(d.horizontal, d.x, d.y))
            throw std::invalid_argument("domino going flag disagrees with its corner parity");
        t.dominos.push_back(d);
    }
    std::sort(t.dominos.begin(), t.dominos.end());
    return t;
}

inline long long coeff_to_int64(const Int& c) {
    static const Int lo(std::to_string(std::numeric_limits<long long>::min()));
    static const Int hi(std::to_string(std::numeric_limits<long long>::max()));
    if (c < lo || c > hi)
        throw std::overflow_error("series coefficient exceeds the JSON integer range");
    return std::stoll(c.get_str());
}

inline Json to_json(const UniSeries& s) {
    Json j;
    j["trunc"] = s.trunc();
    Json cs = Json::array();
    for (const auto& c : s.coeffs()) cs.push_back(coeff_to_int64(c));
    j["coeffs"] = cs;
    return j;
}

inline Json to_json(const MultiSeries& s) {
    Json j;
    j["trunc"] = s.trunc();
    j["vars"] = s.vars();
    Json ts = Json::array();
    for (const auto& [e, c] : s.terms()) {
        Json tj;
        tj["exp"] = e;
        tj["coeff"] = coeff_to_int64(c);
        ts.push_back(tj);
    }
    j["terms"] = ts;
    return j;
}

inline Json to_json(const ExtendedSeq& s) {
    Json j;
    j["diamond"] = diamond_to_string(s.diamond);
    Json arr = Json::array();
    for (const auto& l : s.lambdas) arr.push_back(to_json(l));
    j["partitions"] = arr;
    return j;
}

inline ExtendedSeq extended_seq_from_json(const Json& j) {
    DiamondWord d = parse_diamond(j.at("diamond").get<std::string>());
    std::vector<Partition> ls;
    for (const auto& pj : j.at("partitions")) ls.push_back(partition_from_json(pj));
    ExtendedSeq s(std::move(d), std::move(ls));
    s.validate();
    return s;
}

/// Matching windows carry doubled coordinates: an edge endpoint is
/// [column index, doubled ordinate].
inline Json to_json(const MatchingWindow& m) {
    Json j;
    j["diamond"] = diamond_to_string(m.geo.diamond);
    j["lo2"] = m.lo2;
    j["hi2"] = m.hi2;
    Json es = Json::array();
    for (const auto& [a, b] : m.edges) {
        Json ej;
        ej["a"] = {a.first, a.second};
        ej["b"] = {b.first, b.second};
        es.push_back(ej);
    }
    j["edges"] = es;
    return j;
}

inline MatchingWindow matching_from_json(const Json& j) {
    MatchingWindow m;
    m.geo = build_geometry(parse_diamond(j.at("diamond").get<std::string>()));
    m.lo2 = j.at("lo2").get<int>();
    m.hi2 = j.at("hi2").get<int>();
    for (const auto& ej : j.at("edges")) {
        VertexKey a{ej.at("a").at(0).get<int>(), ej.at("a").at(1).get<int>()};
        VertexKey b{ej.at("b").at(0).get<int>(), ej.at("b").at(1).get<int>()};
        m.edges.insert(make_edge(a, b));
    }
    return m;
}

}  // namespace oblique
