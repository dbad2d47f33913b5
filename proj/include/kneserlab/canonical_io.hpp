#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "kneserlab/graph.hpp"

namespace kneserlab {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json label_to_json(const VertexLabel& l) {
    switch (l.kind()) {
    case VertexLabel::Kind::index:
        return l.values()[0];
    case VertexLabel::Kind::pair:
        return ordered_json::array({label_to_json(l.left()), label_to_json(l.right())});
    case VertexLabel::Kind::function_table: {
        ordered_json j;
        j["f"] = l.values();
        return j;
    }
    case VertexLabel::Kind::subset: {
        ordered_json j;
        j["s"] = l.values();
        return j;
    }
    }
    throw ValidationError("label_to_json: unknown label kind");
}

inline VertexLabel label_from_json(const ordered_json& j) {
    if (j.is_number_integer()) return VertexLabel::index(j.get<int>());
    if (j.is_array()) {
        if (j.size() != 2) throw ValidationError("graph json: pair label needs two entries");
        return VertexLabel::pair(label_from_json(j[0]), label_from_json(j[1]));
    }
    if (j.is_object()) {
        if (j.contains("f")) return VertexLabel::function_table(j["f"].get<std::vector<int>>());
        if (j.contains("s")) return VertexLabel::subset(j["s"].get<std::vector<int>>());
    }
    throw ValidationError("graph json: unrecognized label encoding");
}

} // namespace detail

/// Canonical structured-text form: a single JSON line with keys in the
/// order n, edges, loops, labels (labels omitted when absent); edges
/// with u < v sorted lexicographically; terminated by one newline.
/// Byte-for-byte stable, used for caching and golden tests.
inline std::string to_canonical_json(const Graph& g) {
    ordered_json j;
    j["n"] = g.vertex_count();
    auto edges = g.edges();
    ordered_json je = ordered_json::array();
    for (auto [u, v] : edges) je.push_back(ordered_json::array({u, v}));
    j["edges"] = std::move(je);
    j["loops"] = g.loops();
    if (g.has_labels()) {
        ordered_json jl = ordered_json::array();
        for (int v = 0; v < g.vertex_count(); ++v) jl.push_back(detail::label_to_json(g.label(v)));
        j["labels"] = std::move(jl);
    }
    return j.dump() + "\n";
}

inline Graph graph_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw ValidationError("graph json: object with n and edges required");
    int n = j["n"].get<int>();
    std::vector<std::pair<int, int>> edges;
    for (auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2)
            throw ValidationError("graph json: edge must be a pair");
        edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    std::vector<int> loops;
    if (j.contains("loops")) loops = j["loops"].get<std::vector<int>>();
    std::optional<std::vector<VertexLabel>> labels;
    if (j.contains("labels")) {
        labels.emplace();
        for (auto& l : j["labels"]) labels->push_back(detail::label_from_json(l));
    }
    return Graph(n, std::move(edges), std::move(loops), std::move(labels));
}

inline Graph parse_canonical_json(const std::string& text) {
    return graph_from_json(ordered_json::parse(text));
}

inline Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open graph file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_canonical_json(ss.str());
}

/// DOT export; labels rendered as strings, loops as self-edges.
inline std::string to_dot(const Graph& g, const std::string& name = "G") {
    std::ostringstream out;
    out << "graph " << name << " {\n";
    for (int v = 0; v < g.vertex_count(); ++v) {
        out << "  " << v;
        if (g.has_labels()) out << " [label=\"" << g.label(v).to_string() << "\"]";
        out << ";\n";
    }
    for (auto [u, v] : g.edges()) out << "  " << u << " -- " << v << ";\n";
    for (int v : g.loops()) out << "  " << v << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

} // namespace kneserlab
