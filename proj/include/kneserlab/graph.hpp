#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "kneserlab/config.hpp"
#include "kneserlab/errors.hpp"
#include "kneserlab/vertex_label.hpp"

namespace kneserlab {

/// Immutable simple graph on vertices 0..n-1. The adjacency relation is
/// symmetric and irreflexive; self-incidence lives only in the loop set.
/// Labels, when present, carry the semantic identity of each vertex.
///
/// Immutability makes graphs safely shareable across concurrent readers.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> loops = {},
          std::optional<std::vector<VertexLabel>> labels = std::nullopt) {
        if (n < 0) throw ValidationError("Graph: negative vertex count");
        if (static_cast<std::uint64_t>(n) > VertexGuard::limit())
            throw SizeError("Graph: vertex count exceeds KNESERLAB_MAX_VERTICES",
                            static_cast<std::uint64_t>(n), VertexGuard::limit());
        n_ = n;
        for (auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw ValidationError("Graph: edge endpoint out of range");
            if (u == v)
                throw ValidationError("Graph: self-edge in edge list; loops are separate");
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edge_count_ = edges.size();

        std::vector<int> deg(n, 0);
        for (auto [u, v] : edges) {
            ++deg[u];
            ++deg[v];
        }
        offsets_.assign(n + 1, 0);
        for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
        flat_.resize(offsets_[n]);
        std::vector<int> fill(offsets_.begin(), offsets_.end() - 1);
        for (auto [u, v] : edges) {
            flat_[fill[u]++] = v;
            flat_[fill[v]++] = u;
        }
        for (int v = 0; v < n; ++v)
            std::sort(flat_.begin() + offsets_[v], flat_.begin() + offsets_[v + 1]);

        for (int v : loops)
            if (v < 0 || v >= n) throw ValidationError("Graph: loop vertex out of range");
        std::sort(loops.begin(), loops.end());
        loops.erase(std::unique(loops.begin(), loops.end()), loops.end());
        loops_ = std::move(loops);

        if (labels) {
            if (static_cast<int>(labels->size()) != n)
                throw ValidationError("Graph: label list length mismatch");
            labels_ = std::move(labels);
        }
    }

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw ValidationError("Graph::adjacent: vertex out of range");
        auto nb = neighbors(u);
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    std::span<const int> neighbors(int v) const {
        return {flat_.data() + offsets_[v], flat_.data() + offsets_[v + 1]};
    }

    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

    const std::vector<int>& loops() const { return loops_; }
    bool has_loop(int v) const {
        return std::binary_search(loops_.begin(), loops_.end(), v);
    }
    bool loop_free() const { return loops_.empty(); }

    bool has_labels() const { return labels_.has_value(); }
    const VertexLabel& label(int v) const {
        if (!labels_) throw ValidationError("Graph::label: graph carries no labels");
        return (*labels_)[v];
    }
    const std::optional<std::vector<VertexLabel>>& labels() const { return labels_; }

    /// Edge list with u < v, sorted lexicographically (the canonical order).
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(edge_count_);
        for (int u = 0; u < n_; ++u)
            for (int v : neighbors(u))
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    /// Throws LoopError unless the graph is loop-free. Used by solvers
    /// whose invariants are undefined on looped graphs.
    void require_loop_free(const char* who) const {
        if (!loops_.empty())
            throw LoopError(std::string(who) + ": graph has a loop (chromatic invariants undefined)",
                            loops_.front());
    }

private:
    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<int> offsets_{0};
    std::vector<int> flat_;
    std::vector<int> loops_;
    std::optional<std::vector<VertexLabel>> labels_;
};

/// Vertex coloring with palette {1..palette_size}.
struct Coloring {
    std::vector<int> colors;
    int palette_size = 0;
};

/// Vertex map from a source graph into a target graph.
struct Homomorphism {
    std::vector<int> map;
};

/// Assignment of a k-subset of {1..palette_size} to every vertex; valid
/// when adjacent vertices receive disjoint subsets (equivalently, a
/// homomorphism into the Kneser graph K(palette_size, subset_size)).
struct SetColoring {
    std::vector<std::vector<int>> sets;
    int palette_size = 0;
    int subset_size = 0;
};

/// True iff the endpoints of every edge get distinct colors and no
/// colored vertex carries a loop.
inline bool is_proper_coloring(const Graph& g, const Coloring& col) {
    if (static_cast<int>(col.colors.size()) != g.vertex_count())
        throw ValidationError("is_proper_coloring: coloring length mismatch");
    for (int c : col.colors)
        if (c < 1 || c > col.palette_size)
            throw ValidationError("is_proper_coloring: color outside palette");
    if (!g.loop_free()) return false;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u))
            if (u < v && col.colors[u] == col.colors[v]) return false;
    return true;
}

/// True iff every edge of g maps to an edge of h. A looped target vertex
/// absorbs edges whose endpoints both map onto it.
inline bool is_homomorphism(const Graph& g, const Graph& h, const Homomorphism& hom) {
    if (static_cast<int>(hom.map.size()) != g.vertex_count())
        throw ValidationError("is_homomorphism: map length mismatch");
    for (int w : hom.map)
        if (w < 0 || w >= h.vertex_count())
            throw ValidationError("is_homomorphism: image vertex out of range");
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v : g.neighbors(u)) {
            if (u > v) continue;
            int a = hom.map[u], b = hom.map[v];
            if (a == b) {
                if (!h.has_loop(a)) return false;
            } else if (!h.adjacent(a, b)) {
                return false;
            }
        }
    return true;
}

} // namespace kneserlab
