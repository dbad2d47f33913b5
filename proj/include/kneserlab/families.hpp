#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "kneserlab/detail/combinatorics.hpp"
#include "kneserlab/graph.hpp"

namespace kneserlab {

inline std::vector<VertexLabel> index_labels(int n) {
    std::vector<VertexLabel> ls;
    ls.reserve(n);
    for (int i = 0; i < n; ++i) ls.push_back(VertexLabel::index(i));
    return ls;
}

/// K_n: all pairs adjacent.
inline Graph complete(int n) {
    if (n < 1) throw ValidationError("complete: n must be positive");
    std::vector<std::pair<int, int>> e;
    e.reserve(std::size_t(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e), {}, index_labels(n));
}

/// n-cycle, n >= 3.
inline Graph cycle(int n) {
    if (n < 3) throw ValidationError("cycle: n must be at least 3");
    std::vector<std::pair<int, int>> e;
    e.reserve(n);
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph(n, std::move(e), {}, index_labels(n));
}

/// n isolated vertices.
inline Graph edgeless(int n) {
    if (n < 0) throw ValidationError("edgeless: n must be nonnegative");
    return Graph(n, {}, {}, index_labels(n));
}

/// Kneser graph K(m,n): vertices are the n-subsets of {1..m} in
/// lexicographic order, adjacent iff disjoint. For m < 2n the graph has
/// no edges; loops never arise (a nonempty set meets itself).
inline Graph kneser(int m, int n) {
    if (n < 1) throw ValidationError("kneser: n must be positive");
    if (n > m) throw ValidationError("kneser: n must not exceed m");
    std::uint64_t count = detail::binomial_capped(m, n, VertexGuard::limit());
    if (count > VertexGuard::limit())
        throw SizeError("kneser: binomial(m,n) exceeds vertex guard", count, VertexGuard::limit());
    auto subsets = detail::subsets_lex(m, n);
    int nv = static_cast<int>(subsets.size());

    std::vector<std::uint64_t> mask(nv, 0);
    for (int i = 0; i < nv; ++i) {
        std::uint64_t bm = 0;
        for (int a : subsets[i])
            if (a < 64) bm |= std::uint64_t(1) << a;
        mask[i] = bm;
    }
    auto disjoint = [&](int i, int j) {
        if (m < 64) return (mask[i] & mask[j]) == 0;
        for (int a : subsets[i])
            for (int b : subsets[j])
                if (a == b) return false;
        return true;
    };

    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < nv; ++i)
        for (int j = i + 1; j < nv; ++j)
            if (disjoint(i, j)) e.emplace_back(i, j);

    std::vector<VertexLabel> labels;
    labels.reserve(nv);
    for (auto& s : subsets) labels.push_back(VertexLabel::subset(s));
    return Graph(nv, std::move(e), {}, std::move(labels));
}

/// Mycielskian of a loop-free graph: preserves triangle-freeness and
/// raises the chromatic number by one. Mycielskian of C_5 is the
/// Grötzsch graph.
inline Graph mycielskian(const Graph& g) {
    g.require_loop_free("mycielskian");
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges()) {
        e.emplace_back(u, v);
        e.emplace_back(u, n + v);
        e.emplace_back(v, n + u);
    }
    for (int i = 0; i < n; ++i) e.emplace_back(n + i, 2 * n);
    return Graph(2 * n + 1, std::move(e), {}, index_labels(2 * n + 1));
}

} // namespace kneserlab
