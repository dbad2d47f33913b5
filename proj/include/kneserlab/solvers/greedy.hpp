#pragma once

#include <vector>

#include "kneserlab/graph.hpp"

namespace kneserlab {

/// Colors used by the greedy coloring along the given vertex order;
/// always an upper bound on the chromatic number.
inline int greedy_upper_bound(const Graph& g, const std::vector<int>& order) {
    g.require_loop_free("greedy_upper_bound");
    int n = g.vertex_count();
    if (static_cast<int>(order.size()) != n)
        throw ValidationError("greedy_upper_bound: order must be a permutation of V");
    std::vector<char> seen(n, 0);
    for (int v : order) {
        if (v < 0 || v >= n || seen[v])
            throw ValidationError("greedy_upper_bound: order must be a permutation of V");
        seen[v] = 1;
    }
    if (n == 0) return 0;
    std::vector<int> color(n, 0);
    int used = 0;
    std::vector<char> taken(n + 2, 0);
    for (int v : order) {
        for (int u : g.neighbors(v))
            if (color[u]) taken[color[u]] = 1;
        int c = 1;
        while (taken[c]) ++c;
        color[v] = c;
        if (c > used) used = c;
        for (int u : g.neighbors(v))
            if (color[u]) taken[color[u]] = 0;
    }
    return used;
}

inline std::vector<int> natural_order(const Graph& g) {
    std::vector<int> order(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) order[i] = i;
    return order;
}

namespace detail {

/// Greedy DSATUR coloring (no search): max saturation, lowest index,
/// smallest feasible color. Returns a proper coloring.
inline Coloring dsatur_greedy(const Graph& g) {
    int n = g.vertex_count();
    Coloring col;
    col.colors.assign(n, 0);
    col.palette_size = 0;
    if (n == 0) return col;
    std::vector<std::vector<char>> neighbor_colors(n, std::vector<char>(n + 2, 0));
    std::vector<int> sat(n, 0);
    for (int step = 0; step < n; ++step) {
        int best = -1, best_sat = -1;
        for (int v = 0; v < n; ++v) {
            if (col.colors[v]) continue;
            if (sat[v] > best_sat) {
                best_sat = sat[v];
                best = v;
            }
        }
        int c = 1;
        while (neighbor_colors[best][c]) ++c;
        col.colors[best] = c;
        if (c > col.palette_size) col.palette_size = c;
        for (int u : g.neighbors(best)) {
            if (!neighbor_colors[u][c]) {
                neighbor_colors[u][c] = 1;
                ++sat[u];
            }
        }
    }
    return col;
}

} // namespace detail

} // namespace kneserlab
