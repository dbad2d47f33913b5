#pragma once

#include <limits>
#include <optional>
#include <queue>
#include <vector>

#include "kneserlab/graph.hpp"

namespace kneserlab {

/// Length of a shortest cycle; nullopt for forests. One BFS per root:
/// the first non-tree edge seen at the smallest depth closes a shortest
/// cycle through that root.
inline std::optional<int> girth(const Graph& g) {
    g.require_loop_free("girth");
    int n = g.vertex_count();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    for (int root = 0; root < n; ++root) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] >= best) break; // any further detection has length >= 2*dist[u]
            for (int v : g.neighbors(u)) {
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    q.push(v);
                } else if (v != parent[u]) {
                    int len = dist[u] + dist[v] + 1;
                    if (len < best) best = len;
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

} // namespace kneserlab
