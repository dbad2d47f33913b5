#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "kneserlab/detail/combinatorics.hpp"
#include "kneserlab/graph.hpp"

namespace kneserlab {

namespace detail {

inline void check_product_guard(const Graph& g, const Graph& h, const char* who) {
    std::uint64_t n = std::uint64_t(g.vertex_count()) * std::uint64_t(h.vertex_count());
    if (g.vertex_count() != 0 && n / g.vertex_count() != std::uint64_t(h.vertex_count()))
        throw SizeError(std::string(who) + ": product size overflows", UINT64_MAX, VertexGuard::limit());
    if (n > VertexGuard::limit())
        throw SizeError(std::string(who) + ": product exceeds vertex guard", n, VertexGuard::limit());
}

inline std::vector<VertexLabel> pair_labels(const Graph& g, const Graph& h) {
    std::vector<VertexLabel> ls;
    ls.reserve(std::size_t(g.vertex_count()) * h.vertex_count());
    for (int x = 0; x < g.vertex_count(); ++x)
        for (int y = 0; y < h.vertex_count(); ++y) {
            VertexLabel lx = g.has_labels() ? g.label(x) : VertexLabel::index(x);
            VertexLabel ly = h.has_labels() ? h.label(y) : VertexLabel::index(y);
            ls.push_back(VertexLabel::pair(std::move(lx), std::move(ly)));
        }
    return ls;
}

} // namespace detail

/// Categorical product G x H: (x,y) ~ (x',y') iff xx' in E(G) and
/// yy' in E(H). Vertex (x,y) gets index x*|V(H)| + y.
inline Graph categorical_product(const Graph& g, const Graph& h) {
    g.require_loop_free("categorical_product");
    h.require_loop_free("categorical_product");
    detail::check_product_guard(g, h, "categorical_product");
    int nh = h.vertex_count();
    std::vector<std::pair<int, int>> e;
    e.reserve(2 * g.edge_count() * h.edge_count());
    for (auto [x, xp] : g.edges())
        for (auto [y, yp] : h.edges()) {
            e.emplace_back(x * nh + y, xp * nh + yp);
            e.emplace_back(x * nh + yp, xp * nh + y);
        }
    return Graph(g.vertex_count() * nh, std::move(e), {}, detail::pair_labels(g, h));
}

/// Lexicographic product G[H]: (x,y) ~ (x',y') iff xx' in E(G), or
/// x = x' and yy' in E(H).
inline Graph lexicographic_product(const Graph& g, const Graph& h) {
    g.require_loop_free("lexicographic_product");
    h.require_loop_free("lexicographic_product");
    detail::check_product_guard(g, h, "lexicographic_product");
    int nh = h.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (auto [x, xp] : g.edges())
        for (int y = 0; y < nh; ++y)
            for (int yp = 0; yp < nh; ++yp) e.emplace_back(x * nh + y, xp * nh + yp);
    for (int x = 0; x < g.vertex_count(); ++x)
        for (auto [y, yp] : h.edges()) e.emplace_back(x * nh + y, x * nh + yp);
    return Graph(g.vertex_count() * nh, std::move(e), {}, detail::pair_labels(g, h));
}

/// Categorical product where loops of the second factor count as
/// self-adjacency: (x,y) ~ (x',y) for xx' in E(G) when y is looped.
/// The first factor must be loop-free, so the result is loop-free.
/// This is how H x K_c^H is assembled when K_c^H carries loops.
inline Graph categorical_product_loop_aware(const Graph& g, const Graph& h) {
    g.require_loop_free("categorical_product_loop_aware");
    detail::check_product_guard(g, h, "categorical_product_loop_aware");
    int nh = h.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (auto [x, xp] : g.edges()) {
        for (auto [y, yp] : h.edges()) {
            e.emplace_back(x * nh + y, xp * nh + yp);
            e.emplace_back(x * nh + yp, xp * nh + y);
        }
        for (int y : h.loops()) e.emplace_back(x * nh + y, xp * nh + y);
    }
    return Graph(g.vertex_count() * nh, std::move(e), {}, detail::pair_labels(g, h));
}

/// Exponential graph K_c^H: vertices are all maps f: V(H) -> {1..c},
/// ordered as base-c numerals with f(0) most significant; f ~ g iff
/// f(u) != g(v) for every edge uv of H (both orientations). A vertex
/// carries a loop iff its map is a proper c-coloring of H; loops are
/// recorded in the loop set, never in the adjacency relation.
inline Graph exponential_graph(int c, const Graph& h) {
    if (c < 1) throw ValidationError("exponential_graph: c must be positive");
    int hn = h.vertex_count();
    std::uint64_t n = detail::pow_capped(std::uint64_t(c), hn, VertexGuard::limit());
    if (n > VertexGuard::limit())
        throw SizeError("exponential_graph: c^|V(H)| exceeds vertex guard", n, VertexGuard::limit());
    int nv = static_cast<int>(n);

    std::vector<std::vector<int>> f(nv, std::vector<int>(hn));
    for (int i = 0; i < nv; ++i) {
        int x = i;
        for (int v = hn - 1; v >= 0; --v) {
            f[i][v] = x % c + 1;
            x /= c;
        }
    }
    auto hedges = h.edges();

    std::vector<int> loops;
    for (int i = 0; i < nv; ++i) {
        bool proper = true;
        for (auto [u, v] : hedges)
            if (f[i][u] == f[i][v]) {
                proper = false;
                break;
            }
        if (proper) loops.push_back(i);
    }

    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j) {
            bool adj = true;
            for (auto [u, v] : hedges)
                if (f[i][u] == f[j][v] || f[i][v] == f[j][u]) {
                    adj = false;
                    break;
                }
            if (adj) e.emplace_back(i, j);
        }

    std::vector<VertexLabel> labels;
    labels.reserve(nv);
    for (auto& fi : f) labels.push_back(VertexLabel::function_table(fi));
    return Graph(nv, std::move(e), std::move(loops), std::move(labels));
}

/// Subgraph induced by a vertex set; labels and loop flags inherited.
/// Vertices keep their relative order.
inline Graph induced_subgraph(const Graph& g, std::vector<int> s) {
    for (int v : s)
        if (v < 0 || v >= g.vertex_count())
            throw ValidationError("induced_subgraph: vertex out of range");
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    std::vector<int> pos(g.vertex_count(), -1);
    for (std::size_t i = 0; i < s.size(); ++i) pos[s[i]] = static_cast<int>(i);

    std::vector<std::pair<int, int>> e;
    for (int u : s)
        for (int v : g.neighbors(u))
            if (u < v && pos[v] >= 0) e.emplace_back(pos[u], pos[v]);
    std::vector<int> loops;
    for (int v : g.loops())
        if (pos[v] >= 0) loops.push_back(pos[v]);
    std::optional<std::vector<VertexLabel>> labels;
    if (g.has_labels()) {
        labels.emplace();
        labels->reserve(s.size());
        for (int v : s) labels->push_back(g.label(v));
    }
    return Graph(static_cast<int>(s.size()), std::move(e), std::move(loops), std::move(labels));
}

} // namespace kneserlab
