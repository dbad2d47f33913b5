#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kneserlab/budget.hpp"
#include "kneserlab/detail/bitrows.hpp"
#include "kneserlab/graph.hpp"
#include "kneserlab/solvers/clique.hpp"
#include "kneserlab/solvers/greedy.hpp"

namespace kneserlab {

/// Exact chromatic number with a witness coloring and the reason the
/// matching lower bound holds: either a clique of size chi, or an
/// exhausted search proving no (chi-1)-coloring exists.
struct ChromaticCertificate {
    int value = 0;
    Coloring witness;
    enum class LowerBound { clique, exhausted_search };
    LowerBound reason = LowerBound::clique;
    std::vector<int> clique; // seed clique (equals value when reason == clique)
    std::uint64_t nodes = 0;
};

namespace detail {

/// Exhaustive DSATUR search for a k-coloring with a clique pre-colored
/// 1..|Q|. Selection: maximal saturation, lowest index; colors tried in
/// ascending order, at most one fresh color per vertex.
class DsaturSearch {
public:
    DsaturSearch(const Graph& g, const BitMatrix& adj, int k, BudgetMeter& meter)
        : g_(g), adj_(adj), n_(g.vertex_count()), k_(k), words_((k + 63) / 64), meter_(meter),
          color_(n_, 0), forbid_(std::size_t(n_) * words_, 0) {}

    std::optional<Coloring> run(const std::vector<int>& seed_clique) {
        int maxused = 0;
        int colored = 0;
        for (int i = 0; i < static_cast<int>(seed_clique.size()); ++i) {
            int v = seed_clique[i];
            assign(v, i + 1);
            ++colored;
            maxused = i + 1;
        }
        if (!recurse(colored, maxused)) return std::nullopt;
        Coloring col;
        col.colors = color_;
        col.palette_size = k_;
        return col;
    }

private:
    const Graph& g_;
    const BitMatrix& adj_;
    int n_, k_, words_;
    BudgetMeter& meter_;
    std::vector<int> color_;
    std::vector<std::uint64_t> forbid_;

    bool forbidden(int v, int c) const {
        return forbid_[std::size_t(v) * words_ + (c - 1) / 64] >> ((c - 1) % 64) & 1;
    }
    int saturation(int v) const {
        int s = 0;
        for (int w = 0; w < words_; ++w)
            s += __builtin_popcountll(forbid_[std::size_t(v) * words_ + w]);
        return s;
    }
    void assign(int v, int c) {
        color_[v] = c;
        for (int u : g_.neighbors(v))
            forbid_[std::size_t(u) * words_ + (c - 1) / 64] |= std::uint64_t(1) << ((c - 1) % 64);
    }

    bool recurse(int colored, int maxused) {
        meter_.tick();
        if (colored == n_) return true;
        int pick = -1, pick_sat = -1;
        for (int v = 0; v < n_; ++v) {
            if (color_[v]) continue;
            int s = saturation(v);
            if (s >= k_) return false; // saturated vertex: dead branch
            if (s > pick_sat) {
                pick_sat = s;
                pick = v;
            }
        }
        int v = pick;
        int limit = std::min(k_, maxused + 1);
        for (int c = 1; c <= limit; ++c) {
            if (forbidden(v, c)) continue;
            color_[v] = c;
            std::vector<std::pair<int, std::uint64_t>> undo;
            int word = (c - 1) / 64;
            std::uint64_t bit = std::uint64_t(1) << ((c - 1) % 64);
            for (int u : g_.neighbors(v)) {
                if (color_[u]) continue;
                std::uint64_t& f = forbid_[std::size_t(u) * words_ + word];
                if (!(f & bit)) {
                    undo.emplace_back(u, f);
                    f |= bit;
                }
            }
            if (recurse(colored + 1, std::max(maxused, c))) return true;
            for (auto it = undo.rbegin(); it != undo.rend(); ++it)
                forbid_[std::size_t(it->first) * words_ + word] = it->second;
            color_[v] = 0;
        }
        return false;
    }
};

} // namespace detail

/// Exact chromatic number: DSATUR branch-and-bound seeded with a maximum
/// clique, iterating k upward from the clique size until a k-coloring
/// exists. Every failed k is an exhausted search. Deterministic.
inline ChromaticCertificate chromatic_number(const Graph& g,
                                             const SolverBudget& budget = SolverBudget::from_env()) {
    g.require_loop_free("chromatic_number");
    int n = g.vertex_count();
    if (n == 0) {
        ChromaticCertificate cert;
        cert.value = 0;
        cert.witness.palette_size = 0;
        cert.reason = ChromaticCertificate::LowerBound::clique;
        return cert;
    }

    BudgetMeter meter(budget);
    int lb = 0, ub = 0;
    Coloring best;
    try {
        auto adj = detail::BitMatrix::adjacency(g);
        detail::WeightedCliqueSearch<long long> cs(adj, std::vector<long long>(n, 1), meter);
        cs.run(0);
        std::vector<int> clique = cs.best_set();
        std::sort(clique.begin(), clique.end());
        lb = static_cast<int>(clique.size());

        best = detail::dsatur_greedy(g);
        ub = best.palette_size;

        ChromaticCertificate cert;
        cert.clique = clique;
        if (ub == lb) {
            cert.value = ub;
            cert.witness = best;
            cert.reason = ChromaticCertificate::LowerBound::clique;
            cert.nodes = meter.nodes();
            return cert;
        }
        for (int k = lb; k < ub; ++k) {
            detail::DsaturSearch search(g, adj, k, meter);
            auto col = search.run(clique);
            if (col) {
                cert.value = k;
                cert.witness = *col;
                cert.reason = k == lb ? ChromaticCertificate::LowerBound::clique
                                      : ChromaticCertificate::LowerBound::exhausted_search;
                cert.nodes = meter.nodes();
                return cert;
            }
            lb = k + 1; // exhausted: no k-coloring exists
        }
        cert.value = ub;
        cert.witness = best;
        cert.reason = ub == static_cast<int>(cert.clique.size())
                          ? ChromaticCertificate::LowerBound::clique
                          : ChromaticCertificate::LowerBound::exhausted_search;
        cert.nodes = meter.nodes();
        return cert;
    } catch (const BudgetExhausted& e) {
        throw BudgetError("chromatic_number: budget exceeded", e.nodes,
                          lb > 0 ? std::optional<long>(lb) : std::nullopt,
                          ub > 0 ? std::optional<long>(ub) : std::nullopt);
    }
}

} // namespace kneserlab
