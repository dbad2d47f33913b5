#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "kneserlab/budget.hpp"
#include "kneserlab/detail/bitrows.hpp"
#include "kneserlab/graph.hpp"

namespace kneserlab {

/// All maximal independent sets, each exactly once, sorted
/// lexicographically. Bron-Kerbosch with pivoting on the complement
/// (maximal independent sets of g = maximal cliques of its complement).
inline std::vector<std::vector<int>> enumerate_maximal_independent_sets(
    const Graph& g, const SolverBudget& budget = SolverBudget::from_env()) {
    g.require_loop_free("enumerate_maximal_independent_sets");
    int n = g.vertex_count();
    std::vector<std::vector<int>> out;
    if (n == 0) return out;

    auto compat = detail::BitMatrix::complement(g);
    int words = compat.words();
    BudgetMeter meter(budget);

    std::vector<int> r;

    // P and X as bitsets; recursion
    auto bk = [&](auto&& self, std::vector<std::uint64_t> p, std::vector<std::uint64_t> x) -> void {
        meter.tick();
        bool p_empty = true, x_empty = true;
        for (auto w : p) p_empty &= w == 0;
        for (auto w : x) x_empty &= w == 0;
        if (p_empty && x_empty) {
            out.push_back(r);
            return;
        }
        if (p_empty) return;
        // pivot: vertex of P|X maximizing |P & compat(u)|, lowest index on ties
        int pivot = -1, best = -1;
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = p[w] | x[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                int u = w * 64 + b;
                const std::uint64_t* row = compat.row(u);
                int cnt = 0;
                for (int ww = 0; ww < words; ++ww) cnt += __builtin_popcountll(p[ww] & row[ww]);
                if (cnt > best) {
                    best = cnt;
                    pivot = u;
                }
            }
        }
        // candidates: P minus compat(pivot), ascending
        const std::uint64_t* prow = compat.row(pivot);
        for (int w = 0; w < words; ++w) {
            std::uint64_t bits = p[w] & ~prow[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                int v = w * 64 + b;
                const std::uint64_t* vrow = compat.row(v);
                std::vector<std::uint64_t> p2(words), x2(words);
                for (int ww = 0; ww < words; ++ww) {
                    p2[ww] = p[ww] & vrow[ww];
                    x2[ww] = x[ww] & vrow[ww];
                }
                r.push_back(v);
                self(self, std::move(p2), std::move(x2));
                r.pop_back();
                p[w] &= ~(std::uint64_t(1) << b);
                x[w] |= std::uint64_t(1) << b;
            }
        }
    };

    std::vector<std::uint64_t> p(words, 0), x(words, 0);
    for (int v = 0; v < n; ++v) p[v / 64] |= std::uint64_t(1) << (v % 64);
    try {
        bk(bk, std::move(p), std::move(x));
    } catch (const BudgetExhausted& e) {
        throw BudgetError("enumerate_maximal_independent_sets: budget exceeded", e.nodes);
    }

    for (auto& s : out) std::sort(s.begin(), s.end());
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace kneserlab
