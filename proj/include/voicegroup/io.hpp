#pragma once

/**
 * @file io.hpp
 * @brief JSON reading and writing of progressions, elements and reports.
 *
 * Progression files look like
 *
 *     {"modulus": 12, "cyclic": true, "tuples": [[3,7,10],[2,6,11], ...]}
 *
 * "cyclic" is optional and defaults to false.
 */

#include <fstream>
#include <sstream>
#include <string>

#include "analysis.hpp"
#include "json.hpp"
#include "text.hpp"

namespace vg {

using nlohmann::json;

inline json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

inline json to_json(const Mat3& a) {
    json rows = json::array();
    for (int i = 0; i < 3; ++i) rows.push_back(json::array({a(i, 0), a(i, 1), a(i, 2)}));
    return rows;
}

inline json to_json(const JElement& e) {
    return {{"text", e.to_string()}, {"k", e.k()}, {"m", e.m()}, {"n", e.n()}, {"matrix", to_json(normal_form_matrix(e))}};
}

inline json to_json(const ExtElement& e) {
    return {{"text", e.to_string()},
            {"sigma", e.sigma().to_string()},
            {"k", e.j().k()},
            {"m", e.j().m()},
            {"n", e.j().n()},
            {"matrix", to_json(e.matrix())}};
}

inline json to_json(const AffineMap& f) { return {{"linear", to_json(f.linear())}, {"translation", to_json(f.translation())}}; }

inline json to_json(const CentralizerReport& rep) {
    json j{{"ambient", ambient_name(rep.ambient)}, {"modulus", rep.modulus.value()}, {"size", rep.size()}};
    if (rep.ambient == Ambient::M3 || rep.ambient == Ambient::GL3) {
        j["matrices"] = json::array();
        for (const Mat3& a : rep.matrices) j["matrices"].push_back(to_json(a));
    } else {
        j["maps"] = json::array();
        for (const AffineMap& f : rep.maps) j["maps"].push_back(to_json(f));
    }
    return j;
}

inline json to_json(const UniformSolution& s) { return to_json(s.element()); }

inline json to_json(const Progression& p) {
    json tuples = json::array();
    for (const Vec3& v : p.tuples) tuples.push_back(to_json(v));
    return {{"modulus", p.modulus.value()}, {"cyclic", p.cyclic}, {"tuples", tuples}};
}

inline json to_json(const Network& net) {
    json nodes = json::array(), edges = json::array();
    for (std::size_t i = 0; i < net.nodes.size(); ++i)
        nodes.push_back({{"id", i}, {"label", vec_label(net.nodes[i])}, {"tuple", to_json(net.nodes[i])}});
    for (const auto& e : net.edges) edges.push_back({{"from", e.from}, {"to", e.to}, {"label", e.label}});
    return {{"nodes", nodes}, {"edges", edges}};
}

inline Progression progression_from_json(const json& j) {
    if (!j.is_object()) throw ParseError("progression must be a JSON object");
    if (!j.contains("modulus") || !j.contains("tuples")) throw ParseError("progression needs \"modulus\" and \"tuples\"");
    const std::int64_t n = detail::json_integer(j["modulus"], "modulus");
    if (n < 2) throw ParseError("modulus must be at least 2");
    const Modulus mod(n);
    bool cyclic = false;
    if (j.contains("cyclic")) {
        if (!j["cyclic"].is_boolean()) throw ParseError("\"cyclic\" must be a boolean");
        cyclic = j["cyclic"].get<bool>();
    }
    if (!j["tuples"].is_array() || j["tuples"].empty()) throw ParseError("\"tuples\" must be a nonempty array");
    std::vector<Vec3> tuples;
    for (const json& t : j["tuples"]) {
        if (!t.is_array() || t.size() != 3) throw ParseError("each tuple needs three entries");
        tuples.emplace_back(detail::json_integer(t[0], "tuple"), detail::json_integer(t[1], "tuple"),
                            detail::json_integer(t[2], "tuple"), mod);
    }
    return Progression(mod, std::move(tuples), cyclic);
}

inline Progression parse_progression(const std::string& text) {
    try {
        return progression_from_json(json::parse(text));
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed progression JSON: ") + e.what());
    }
}

inline Progression load_progression(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_progression(buf.str());
}

}  // namespace vg
