/**
 * @file json_io.hpp
 * @brief File formats and report serialization.
 *
 * Complex file:    {"vertices": [int...], "facets": [[int...]...]}
 * Hypergraph file: {"n": int, "edges": [[int...]...]}  (vertices 1-based)
 */
#pragma once

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "sc/collapse.hpp"
#include "sc/decomposability.hpp"
#include "sc/generators.hpp"
#include "sc/hypergraph.hpp"

namespace sc {

using json = nlohmann::json;

inline json to_json(Face f) { return json(f.vertices()); }

inline json to_json(const SimplicialComplex& x)
{
    json fs = json::array();
    for (Face f : x.facets())
        fs.push_back(to_json(f));
    return json{{"vertices", x.vertex_set().vertices()}, {"facets", fs}};
}

inline json to_json(const Hypergraph& h)
{
    json es = json::array();
    for (Face e : h.edges())
        es.push_back(to_json(e));
    return json{{"n", h.n()}, {"edges", es}};
}

inline json to_json(const Instance& inst)
{
    return std::visit([](const auto& v) { return to_json(v); }, inst);
}

inline json to_json(const FreePair& p) { return json{{"free_face", to_json(p.free_face)}, {"facet", to_json(p.maximal_face)}}; }

inline json to_json(const CollapseCertificate& c)
{
    json steps = json::array();
    for (const auto& p : c.steps)
        steps.push_back(to_json(p));
    return json{{"d", c.claimed_d}, {"steps", steps}};
}

inline json to_json(const std::vector<SheddingWitness>& ws)
{
    json out = json::array();
    for (const auto& w : ws)
        out.push_back(json{{"face", to_json(w.face)}, {"k", w.dim_bound}});
    return out;
}

inline Face face_from_json(const json& j)
{
    if (!j.is_array())
        throw Error("expected an array of vertex labels");
    Face f;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw Error("vertex labels must be integers");
        const long long x = v.get<long long>();
        if (!Face::valid_label(x))
            throw Error("vertex label " + std::to_string(x) + " outside [0, 63]");
        f.insert(static_cast<Vertex>(x));
    }
    return f;
}

inline CollapseCertificate certificate_from_json(const json& j)
{
    CollapseCertificate c;
    c.claimed_d = j.at("d").get<int>();
    for (const auto& s : j.at("steps"))
        c.steps.push_back({face_from_json(s.at("free_face")), face_from_json(s.at("facet"))});
    return c;
}

inline std::vector<SheddingWitness> shedding_from_json(const json& j)
{
    std::vector<SheddingWitness> out;
    for (const auto& w : j)
        out.push_back({face_from_json(w.at("face")), w.at("k").get<int>()});
    return out;
}

/// What canonicalization changed while loading a complex file.
struct ComplexLoadReport {
    std::vector<Face> removed;            ///< duplicate or non-maximal input facets
    std::vector<Vertex> isolated_added;   ///< listed vertices lying in no facet, added as singletons
};

inline SimplicialComplex complex_from_json(const json& j, ComplexLoadReport* report = nullptr)
{
    if (!j.is_object() || !j.contains("facets"))
        throw Error("complex file: expected an object with \"facets\"");
    Face declared;
    bool has_vertices = j.contains("vertices");
    if (has_vertices)
        declared = face_from_json(j.at("vertices"));
    std::vector<Face> raw;
    for (const auto& f : j.at("facets")) {
        Face face = face_from_json(f);
        if (has_vertices && !face.is_subset_of(declared))
            throw Error("complex file: facet " + to_string(face) + " uses an undeclared vertex");
        raw.push_back(face);
    }
    Face used;
    for (Face f : raw)
        used = used | f;
    std::vector<Vertex> isolated;
    (declared - used).for_each_vertex([&](Vertex v) {
        isolated.push_back(v);
        raw.push_back(Face{v});
    });
    auto x = SimplicialComplex::from_facets(raw);
    if (report) {
        report->isolated_added = isolated;
        std::vector<Face> kept = x.facets();
        for (Face f : raw) {
            auto it = std::find(kept.begin(), kept.end(), f);
            if (it == kept.end())
                report->removed.push_back(f);
            else
                kept.erase(it);
        }
    }
    return x;
}

inline Hypergraph hypergraph_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw Error("hypergraph file: expected an object with \"n\" and \"edges\"");
    const long long n = j.at("n").get<long long>();
    if (n < 0 || n > kMaxVertex)
        throw Error("hypergraph file: n outside [0, 63]");
    std::vector<Face> es;
    for (const auto& e : j.at("edges")) {
        Face f = face_from_json(e);
        if (f.empty())
            throw Error("hypergraph file: empty edge");
        if (f.contains(0) || f.max_vertex() > n)
            throw Error("hypergraph file: edge " + to_string(f) + " has a label outside [1, " + std::to_string(n) + "]");
        es.push_back(f);
    }
    return Hypergraph(static_cast<int>(n), std::move(es));
}

/// Detects the format by its keys.
inline Instance instance_from_json(const json& j)
{
    if (j.is_object() && j.contains("edges"))
        return hypergraph_from_json(j);
    return complex_from_json(j);
}

inline json read_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
}

inline void write_json_file(const std::string& path, const json& j)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << j.dump(2) << '\n';
}

/// FNV-1a 64 of the canonical compact dump, as 16 hex digits.
inline std::string content_hash(const json& j)
{
    const std::string s = j.dump();
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

inline json to_json(const GeneratorSpec& g)
{
    json j{{"kind", g.kind}, {"n", g.n}, {"m", g.m}, {"max_size", g.max_size}, {"k", g.k}, {"seed", g.seed}};
    if (!g.leaves.empty())
        j["leaves"] = g.leaves;
    if (!g.name.empty())
        j["name"] = g.name;
    return j;
}

} // namespace sc
