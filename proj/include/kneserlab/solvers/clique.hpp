#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "kneserlab/budget.hpp"
#include "kneserlab/detail/bitrows.hpp"
#include "kneserlab/graph.hpp"
#include "kneserlab/rational.hpp"

namespace kneserlab {

namespace detail {

/// Exact max-weight clique over an arbitrary compatibility matrix.
/// Branch and bound with a greedy weighted-coloring bound plus prefix
/// weights; all tie-breaking is by vertex index, so results are
/// deterministic. With `compat` = complement adjacency this searches
/// max-weight independent sets (the chi_f pricing problem).
template <typename W>
class WeightedCliqueSearch {
public:
    WeightedCliqueSearch(const BitMatrix& compat, std::vector<W> weights, BudgetMeter& meter)
        : compat_(compat), w_(std::move(weights)), meter_(meter) {}

    /// Find the best clique with weight strictly above `threshold`.
    /// Returns true if something above the threshold exists; the best
    /// clique found is in best_set(). With first_improvement the search
    /// stops at the first clique above the threshold. Every intermediate
    /// improvement is harvested into improvements() (column generation
    /// adds them all).
    bool run(W threshold, bool first_improvement = false) {
        reset(threshold);
        first_improvement_ = first_improvement;
        std::vector<int> p(compat_.size());
        std::iota(p.begin(), p.end(), 0);
        expand(p, W(0));
        return improved_;
    }

    /// Collect up to `cap` distinct cliques with weight strictly above
    /// `threshold` (not only successive improvements): while below the
    /// cap the search prunes against the threshold alone, so ties on a
    /// weight plateau are all harvested.
    bool run_collect(W threshold, std::size_t cap) {
        reset(threshold);
        collect_cap_ = cap;
        std::vector<int> p(compat_.size());
        std::iota(p.begin(), p.end(), 0);
        expand(p, W(0));
        return improved_;
    }

    const std::vector<int>& best_set() const { return best_set_; }
    W best_weight() const { return best_; }
    const std::vector<std::vector<int>>& improvements() const { return improvements_; }

private:
    const BitMatrix& compat_;
    std::vector<W> w_;
    BudgetMeter& meter_;
    W best_{};
    W threshold_{};
    bool improved_ = false, stop_ = false, first_improvement_ = false;
    std::size_t collect_cap_ = 0;
    std::vector<int> best_set_, cur_;
    std::vector<std::vector<int>> improvements_;

    void reset(W threshold) {
        best_ = threshold;
        threshold_ = threshold;
        improved_ = false;
        stop_ = false;
        first_improvement_ = false;
        collect_cap_ = 0;
        best_set_.clear();
        cur_.clear();
        improvements_.clear();
    }

    // while collecting below the cap, prune only against the threshold
    W prune_level() const {
        if (collect_cap_ != 0 && improvements_.size() < collect_cap_) return threshold_;
        return best_;
    }

    W color_bound(const std::vector<int>& p) {
        // greedy classes of pairwise-incompatible vertices; each class
        // contributes at most its heaviest member
        std::vector<std::vector<std::uint64_t>> class_mask;
        std::vector<W> class_max;
        int words = compat_.words();
        for (int v : p) {
            bool placed = false;
            for (std::size_t c = 0; c < class_mask.size(); ++c) {
                if (!(class_mask[c][v / 64] >> (v % 64) & 1)) {
                    const std::uint64_t* row = compat_.row(v);
                    for (int x = 0; x < words; ++x) class_mask[c][x] |= row[x];
                    if (w_[v] > class_max[c]) class_max[c] = w_[v];
                    placed = true;
                    break;
                }
            }
            if (!placed) {
                const std::uint64_t* row = compat_.row(v);
                class_mask.emplace_back(row, row + words);
                class_max.push_back(w_[v]);
            }
        }
        W total(0);
        for (const W& m : class_max) total += m;
        return total;
    }

    void expand(const std::vector<int>& p, W cur_weight) {
        meter_.tick();
        if (p.empty()) {
            if (cur_weight > threshold_ &&
                (cur_weight > best_ || (collect_cap_ != 0 && improvements_.size() < collect_cap_))) {
                if (cur_weight > best_) {
                    best_ = cur_weight;
                    best_set_ = cur_;
                }
                improvements_.push_back(cur_);
                improved_ = true;
                if (first_improvement_) stop_ = true;
                if (collect_cap_ != 0 && improvements_.size() >= collect_cap_) stop_ = true;
            }
            return;
        }
        if (cur_weight + color_bound(p) <= prune_level()) return;

        std::vector<W> prefix(p.size() + 1, W(0));
        for (std::size_t i = 0; i < p.size(); ++i) prefix[i + 1] = prefix[i] + w_[p[i]];

        for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
            if (stop_) return;
            if (cur_weight + prefix[i + 1] <= prune_level()) return;
            int v = p[i];
            std::vector<int> p2;
            p2.reserve(i);
            const std::uint64_t* row = compat_.row(v);
            for (int j = 0; j < i; ++j) {
                int u = p[j];
                if (row[u / 64] >> (u % 64) & 1) p2.push_back(u);
            }
            cur_.push_back(v);
            expand(p2, cur_weight + w_[v]);
            cur_.pop_back();
        }
    }
};

} // namespace detail

struct MaxCliqueResult {
    int size = 0;
    std::vector<int> vertices;
    std::uint64_t nodes = 0;
};

/// Exact maximum clique; a lower bound on the chromatic number.
inline MaxCliqueResult max_clique(const Graph& g,
                                  const SolverBudget& budget = SolverBudget::from_env()) {
    g.require_loop_free("max_clique");
    BudgetMeter meter(budget);
    try {
        auto adj = detail::BitMatrix::adjacency(g);
        detail::WeightedCliqueSearch<long long> search(
            adj, std::vector<long long>(g.vertex_count(), 1), meter);
        search.run(0);
        MaxCliqueResult r;
        r.vertices = search.best_set();
        std::sort(r.vertices.begin(), r.vertices.end());
        r.size = static_cast<int>(r.vertices.size());
        r.nodes = meter.nodes();
        return r;
    } catch (const BudgetExhausted& e) {
        throw BudgetError("max_clique: budget exceeded", e.nodes);
    }
}

inline int max_clique_lower_bound(const Graph& g,
                                  const SolverBudget& budget = SolverBudget::from_env()) {
    return max_clique(g, budget).size;
}

/// Exact independence number via max clique on the complement.
inline int independence_number(const Graph& g,
                               const SolverBudget& budget = SolverBudget::from_env()) {
    g.require_loop_free("independence_number");
    BudgetMeter meter(budget);
    try {
        auto compat = detail::BitMatrix::complement(g);
        detail::WeightedCliqueSearch<long long> search(
            compat, std::vector<long long>(g.vertex_count(), 1), meter);
        search.run(0);
        return static_cast<int>(search.best_set().size());
    } catch (const BudgetExhausted& e) {
        throw BudgetError("independence_number: budget exceeded", e.nodes);
    }
}

} // namespace kneserlab
