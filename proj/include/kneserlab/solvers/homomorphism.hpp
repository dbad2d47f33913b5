#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "kneserlab/budget.hpp"
#include "kneserlab/detail/bitrows.hpp"
#include "kneserlab/graph.hpp"

namespace kneserlab {

struct HomOptions {
    /// Pre-assign source vertex 0 to this target vertex. Sound only when
    /// the target is vertex-transitive (any witness can be moved by an
    /// automorphism); multichromatic search uses it for Kneser targets.
    int fix_first_image = -1;
};

struct HomResult {
    std::optional<Homomorphism> hom; // nullopt = no homomorphism (exhausted search)
    std::uint64_t nodes = 0;
};

namespace detail {

/// Backtracking with full arc consistency (AC-3) after every assignment.
/// Variable order: minimum remaining values, lowest index on ties;
/// values tried in ascending target order. Loops in the target act as
/// self-support: a looped vertex is a valid common image of an edge.
class HomSearch {
public:
    HomSearch(const Graph& g, const Graph& h, BudgetMeter& meter)
        : g_(g), ns_(g.vertex_count()), nt_(h.vertex_count()), wt_((nt_ + 63) / 64),
          meter_(meter) {
        // target adjacency rows; a loop puts t in its own row
        trows_.assign(std::size_t(nt_) * wt_, 0);
        for (int t = 0; t < nt_; ++t) {
            for (int u : h.neighbors(t)) set_bit(&trows_[std::size_t(t) * wt_], u);
            if (h.has_loop(t)) set_bit(&trows_[std::size_t(t) * wt_], t);
        }
        assign_.assign(ns_, -1);
    }

    std::optional<Homomorphism> run(int fix_first_image) {
        if (ns_ == 0) return Homomorphism{{}};
        if (nt_ == 0) return std::nullopt;
        std::vector<std::uint64_t> dom(std::size_t(ns_) * wt_, 0);
        for (int v = 0; v < ns_; ++v)
            for (int t = 0; t < nt_; ++t) set_bit(&dom[std::size_t(v) * wt_], t);
        if (fix_first_image >= 0) {
            for (int w = 0; w < wt_; ++w) dom[w] = 0;
            set_bit(&dom[0], fix_first_image);
        }
        if (!ac3(dom)) return std::nullopt;
        if (search(dom, 0)) {
            Homomorphism hom;
            hom.map = assign_;
            return hom;
        }
        return std::nullopt;
    }

private:
    const Graph& g_;
    int ns_, nt_, wt_;
    BudgetMeter& meter_;
    std::vector<std::uint64_t> trows_;
    std::vector<int> assign_;

    static void set_bit(std::uint64_t* words, int i) {
        words[i / 64] |= std::uint64_t(1) << (i % 64);
    }

    // prune dom(u) to values with support in dom(v); true if changed
    bool revise(std::vector<std::uint64_t>& dom, int u, int v) {
        std::uint64_t* du = &dom[std::size_t(u) * wt_];
        const std::uint64_t* dv = &dom[std::size_t(v) * wt_];
        bool changed = false;
        for (int w = 0; w < wt_; ++w) {
            std::uint64_t bits = du[w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                const std::uint64_t* row = &trows_[std::size_t(w * 64 + b) * wt_];
                bool supported = false;
                for (int x = 0; x < wt_; ++x)
                    if (dv[x] & row[x]) {
                        supported = true;
                        break;
                    }
                if (!supported) {
                    du[w] &= ~(std::uint64_t(1) << b);
                    changed = true;
                }
            }
        }
        return changed;
    }

    bool ac3(std::vector<std::uint64_t>& dom) {
        std::vector<std::pair<int, int>> queue;
        std::vector<char> queued(std::size_t(ns_) * ns_, 0);
        auto push = [&](int u, int v) {
            if (!queued[std::size_t(u) * ns_ + v]) {
                queued[std::size_t(u) * ns_ + v] = 1;
                queue.emplace_back(u, v);
            }
        };
        for (int u = 0; u < ns_; ++u)
            for (int v : g_.neighbors(u)) push(u, v);
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            auto [u, v] = queue[qi];
            queued[std::size_t(u) * ns_ + v] = 0;
            if (revise(dom, u, v)) {
                bool empty = true;
                for (int x = 0; x < wt_; ++x)
                    if (dom[std::size_t(u) * wt_ + x]) {
                        empty = false;
                        break;
                    }
                if (empty) return false;
                for (int w : g_.neighbors(u))
                    if (w != v) push(w, u);
            }
        }
        return true;
    }

    bool search(const std::vector<std::uint64_t>& dom, int depth) {
        meter_.tick();
        if (depth == ns_) return true;
        int pick = -1;
        long best = LONG_MAX;
        for (int v = 0; v < ns_; ++v) {
            if (assign_[v] >= 0) continue;
            long c = 0;
            for (int w = 0; w < wt_; ++w)
                c += __builtin_popcountll(dom[std::size_t(v) * wt_ + w]);
            if (c < best) {
                best = c;
                pick = v;
            }
        }
        int v = pick;
        for (int w = 0; w < wt_; ++w) {
            std::uint64_t bits = dom[std::size_t(v) * wt_ + w];
            while (bits) {
                int b = __builtin_ctzll(bits);
                bits &= bits - 1;
                int t = w * 64 + b;
                std::vector<std::uint64_t> next(dom);
                for (int x = 0; x < wt_; ++x) next[std::size_t(v) * wt_ + x] = 0;
                next[std::size_t(v) * wt_ + w] = std::uint64_t(1) << b;
                assign_[v] = t;
                if (ac3(next) && search(next, depth + 1)) return true;
                assign_[v] = -1;
            }
        }
        return false;
    }
};

} // namespace detail

/// Search for a homomorphism g -> h. The source must be loop-free; the
/// target may carry loops (a looped vertex absorbs edges). Returns a
/// witness or, after exhausting the search, none.
inline HomResult homomorphism_exists(const Graph& g, const Graph& h,
                                     const SolverBudget& budget = SolverBudget::from_env(),
                                     const HomOptions& opts = {}) {
    g.require_loop_free("homomorphism_exists");
    if (opts.fix_first_image >= 0 &&
        (g.vertex_count() == 0 || opts.fix_first_image >= h.vertex_count()))
        throw ValidationError("homomorphism_exists: fix_first_image out of range");
    BudgetMeter meter(budget);
    try {
        detail::HomSearch search(g, h, meter);
        HomResult r;
        r.hom = search.run(opts.fix_first_image);
        r.nodes = meter.nodes();
        return r;
    } catch (const BudgetExhausted& e) {
        throw BudgetError("homomorphism_exists: budget exceeded", e.nodes);
    }
}

} // namespace kneserlab
