#pragma once

#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coha/coha.hpp"
#include "coha/qalg.hpp"
#include "coha/strata.hpp"

namespace coha {

using nlohmann::json;

/// Contents of a quiver file: {"vertices": n, "arrows": [[tail, head], ...],
/// "blocks": [[v, ...], ...]} with "blocks" optional.
struct QuiverFile {
    Quiver quiver;
    std::optional<std::vector<std::vector<int>>> blocks;
};

inline std::vector<std::vector<int>> blocks_from_json(const json& j) {
    if (!j.is_array()) fail(Err::ParseError, "blocks must be an array of vertex arrays");
    std::vector<std::vector<int>> blocks;
    for (const auto& b : j) {
        if (!b.is_array()) fail(Err::ParseError, "each block must be an array of vertices");
        blocks.push_back(b.get<std::vector<int>>());
    }
    return blocks;
}

inline QuiverFile quiver_from_json(const json& j) {
    if (!j.contains("vertices") || !j.contains("arrows"))
        fail(Err::ParseError, "quiver file needs \"vertices\" and \"arrows\"");
    int n = j.at("vertices").get<int>();
    std::vector<Arrow> arrows;
    for (const auto& a : j.at("arrows")) {
        if (!a.is_array() || a.size() != 2) fail(Err::ParseError, "arrows must be [tail, head] pairs");
        arrows.push_back({a[0].get<int>(), a[1].get<int>()});
    }
    QuiverFile f{Quiver(n, std::move(arrows)), std::nullopt};
    if (j.contains("blocks")) f.blocks = blocks_from_json(j.at("blocks"));
    return f;
}

inline QuiverFile load_quiver_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::ParseError, "cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        fail(Err::ParseError, std::string("bad JSON in quiver file: ") + e.what());
    }
    return quiver_from_json(j);
}

inline json quiver_to_json(const Quiver& q, const std::optional<std::vector<std::vector<int>>>& blocks = {}) {
    json arrows = json::array();
    for (const Arrow& a : q.arrows()) arrows.push_back({a.tail, a.head});
    json j{{"vertices", q.vertex_count()}, {"arrows", arrows}};
    if (blocks) j["blocks"] = *blocks;
    return j;
}

inline DimVector dimvec_from_json(const json& j, int n) {
    if (!j.is_array() || static_cast<int>(j.size()) != n)
        fail(Err::LengthMismatch, "expected an array of " + std::to_string(n) + " integers");
    return j.get<DimVector>();
}

inline json element_to_json(const CohaElement& e) {
    return json{{"gamma", e.grade}, {"poly", e.poly.str()}};
}

inline CohaElement element_from_json(const Quiver& q, const json& j) {
    if (!j.contains("gamma") || !j.contains("poly"))
        fail(Err::ParseError, "element needs \"gamma\" and \"poly\"");
    DimVector gamma = dimvec_from_json(j.at("gamma"), q.vertex_count());
    return element(q, gamma, MPoly::parse(j.at("poly").get<std::string>()));
}

inline json qelement_to_json(const QElement& e) {
    json terms = json::array();
    for (const auto& [g, c] : e.support) terms.push_back(json{{"gamma", g}, {"scalar", c.str()}});
    return terms;
}

inline QElement qelement_from_json(const DimVector& box, const json& j) {
    QElement e{box, {}};
    for (const auto& t : j)
        e.add(t.at("gamma").get<DimVector>(), QScalar::parse(t.at("scalar").get<std::string>()));
    return e;
}

inline json reports_to_json(const std::vector<DegreeReport>& reports) {
    json out = json::array();
    for (const DegreeReport& r : reports)
        out.push_back(json{{"k", r.k},
                           {"products", r.products},
                           {"rank", r.rank},
                           {"graded_dim", r.dim},
                           {"verified", r.verified}});
    return out;
}

inline json roots_to_json(const RootList& rl) {
    json out = json::array();
    for (const DimVector& beta : rl.roots) out.push_back(beta);
    return out;
}

} // namespace coha
