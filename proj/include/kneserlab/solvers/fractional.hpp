#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "kneserlab/budget.hpp"
#include "kneserlab/detail/bitrows.hpp"
#include "kneserlab/graph.hpp"
#include "kneserlab/rational.hpp"
#include "kneserlab/solvers/clique.hpp"
#include "kneserlab/solvers/coverlp.hpp"
#include "kneserlab/solvers/mis_enum.hpp"

namespace kneserlab {

/// Exact fractional chromatic number with both sides of LP duality as
/// certificates: an optimal fractional cover by maximal independent
/// sets, and per-vertex dual weights of the same total forming the
/// optimality proof (no independent set carries dual weight above 1,
/// established by exhausted pricing search).
struct FractionalCertificate {
    Rational value;
    std::vector<std::pair<std::vector<int>, Rational>> cover;
    std::vector<Rational> dual_weights;
    std::uint64_t pricing_nodes = 0;
    int columns_generated = 0;
};

namespace detail {

inline std::vector<int> maximalize_independent(const BitMatrix& compat, std::vector<int> s) {
    // extend by ascending index; compat is complement adjacency
    int n = compat.size();
    std::vector<char> in(n, 0);
    for (int v : s) in[v] = 1;
    for (int v = 0; v < n; ++v) {
        if (in[v]) continue;
        bool ok = true;
        for (int u : s)
            if (!compat.test(u, v)) {
                ok = false;
                break;
            }
        if (ok) {
            s.push_back(v);
            in[v] = 1;
        }
    }
    std::sort(s.begin(), s.end());
    return s;
}

/// Greedy max-weight independent sets grown from every start vertex:
/// cheap pricing that finds most violated columns long before an exact
/// search is needed. Returns distinct sets above the threshold,
/// heaviest first.
template <typename W>
std::vector<std::vector<int>> price_greedy(const BitMatrix& compat, const std::vector<W>& w,
                                           const W& threshold) {
    int n = compat.size();
    std::vector<std::pair<W, std::vector<int>>> found;
    std::set<std::vector<int>> seen;
    for (int start = 0; start < n; ++start) {
        std::vector<int> s{start};
        W total = w[start];
        std::vector<char> compatible(n, 0);
        for (int v = 0; v < n; ++v) compatible[v] = compat.test(start, v);
        while (true) {
            int pick = -1;
            for (int v = 0; v < n; ++v) {
                if (!compatible[v]) continue;
                if (pick < 0 || w[v] > w[pick]) pick = v;
            }
            if (pick < 0) break;
            s.push_back(pick);
            total += w[pick];
            for (int v = 0; v < n; ++v)
                if (compatible[v] && !compat.test(pick, v)) compatible[v] = 0;
            compatible[pick] = 0;
        }
        if (total > threshold) {
            std::sort(s.begin(), s.end());
            if (seen.insert(s).second) found.emplace_back(total, std::move(s));
        }
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return b.first < a.first;
        return a.second < b.second;
    });
    std::vector<std::vector<int>> out;
    out.reserve(found.size());
    for (auto& [total, s] : found) out.push_back(std::move(s));
    return out;
}

/// Exact pricing: every improving independent set discovered on the way
/// to the maximum. Empty result means no set exceeds the threshold --
/// the search exhausted, which is the dual-feasibility proof.
template <typename W>
std::vector<std::vector<int>> price_exact(const BitMatrix& compat, const std::vector<W>& w,
                                          const W& threshold, BudgetMeter& meter) {
    WeightedCliqueSearch<W> search(compat, w, meter);
    // stopping at the first improvement keeps rounds cheap; an empty
    // result still means the search exhausted, which is the proof
    search.run(threshold, /*first_improvement=*/true);
    return search.improvements();
}

template <typename W>
std::vector<std::vector<int>> price_exact_collect(const BitMatrix& compat, const std::vector<W>& w,
                                                  const W& threshold, std::size_t cap,
                                                  BudgetMeter& meter) {
    WeightedCliqueSearch<W> search(compat, w, meter);
    search.run_collect(threshold, cap);
    return search.improvements();
}

/// Exact pricing of rational weights, scaled to a common denominator
/// (64-bit fast path when it fits). collect_cap > 1 harvests a batch of
/// violated sets; collect_cap == 1 stops at the first.
inline std::vector<std::vector<int>> price_rational(const BitMatrix& compat,
                                                    const std::vector<Rational>& y,
                                                    BudgetMeter& meter, std::size_t collect_cap) {
    int n = compat.size();
    BigInt lcd(1);
    for (const Rational& r : y) {
        BigInt d = r.den();
        lcd = lcd / boost::multiprecision::gcd(lcd, d) * d;
    }
    std::vector<BigInt> scaled(n);
    BigInt total(0);
    for (int v = 0; v < n; ++v) {
        scaled[v] = y[v].num() * (lcd / y[v].den());
        total += scaled[v];
    }
    if (total < BigInt(1) << 62 && lcd < BigInt(1) << 62) {
        std::vector<long long> w(n);
        for (int v = 0; v < n; ++v) w[v] = static_cast<long long>(scaled[v]);
        long long t = static_cast<long long>(lcd);
        auto found = price_greedy<long long>(compat, w, t);
        if (!found.empty()) return found;
        if (collect_cap > 1) return price_exact_collect<long long>(compat, w, t, collect_cap, meter);
        return price_exact<long long>(compat, w, t, meter);
    }
    auto found = price_greedy<BigInt>(compat, scaled, lcd);
    if (!found.empty()) return found;
    if (collect_cap > 1) return price_exact_collect<BigInt>(compat, scaled, lcd, collect_cap, meter);
    return price_exact<BigInt>(compat, scaled, lcd, meter);
}

} // namespace detail

/// Column generation over maximal independent sets with in-out dual
/// stabilization. A float master proposes columns cheaply; the exact
/// master then prices candidate proof points
///     y(lambda) = lambda * uniform + (1 - lambda) * simplex dual
/// for lambda in {1, 1/2, 0} (all have total = objective, so whichever
/// is globally feasible proves optimality; the uniform point settles
/// vertex-transitive instances immediately, and lambda = 0 is plain
/// column generation, so termination is guaranteed).
inline FractionalCertificate fractional_chromatic(const Graph& g,
                                                  const SolverBudget& budget = SolverBudget::from_env()) {
    g.require_loop_free("fractional_chromatic");
    int n = g.vertex_count();
    if (n == 0) throw ValidationError("fractional_chromatic: graph must be nonempty");

    auto compat = detail::BitMatrix::complement(g);
    BudgetMeter meter(budget);

    std::vector<std::vector<int>> pool;
    std::set<std::vector<int>> known;
    auto pool_add = [&](std::vector<int> s) -> bool {
        if (!known.insert(s).second) return false;
        pool.push_back(std::move(s));
        return true;
    };

    std::vector<std::vector<int>> cover_sets;
    {
        std::vector<char> covered(n, 0);
        for (int v = 0; v < n; ++v) {
            if (covered[v]) continue;
            auto s = detail::maximalize_independent(compat, {v});
            for (int u : s) covered[u] = 1;
            cover_sets.push_back(s);
            pool_add(std::move(s));
        }
    }

    try {
        // Phase 1: float master + greedy pricing collects columns. This
        // is a warm start only; it stops on stalls and column caps.
        std::vector<std::vector<int>> float_basis;
        {
            CoverLpT<double> flp(n, 100L * (n + 1));
            for (const auto& s : pool) flp.add_column(s);
            double last_obj = 1e300;
            int stalled = 0;
            for (int round = 0; round < 200 && flp.columns() < 1500; ++round) {
                if (!flp.solve()) break;
                double obj = flp.objective();
                if (obj > last_obj - 1e-9) {
                    if (++stalled >= 5) break;
                } else {
                    stalled = 0;
                }
                last_obj = obj;
                std::vector<double> y = flp.duals();
                for (double& x : y)
                    if (x < 0) x = 0;
                auto violated = detail::price_greedy<double>(compat, y, 1.0 + 1e-7);
                if (violated.empty()) break;
                if (violated.size() > 32) violated.resize(32);
                std::size_t before = pool.size();
                for (auto& s : violated) pool_add(std::move(s));
                if (pool.size() == before) break;
                for (std::size_t i = before; i < pool.size(); ++i) flp.add_column(pool[i]);
            }
            for (auto& [id, w] : flp.primal_support()) float_basis.push_back(flp.column(id));
        }

        // Phase 2: exact master over the float basis plus the cover,
        // then stabilized exact pricing rounds.
        CoveringLp lp(n);
        std::set<std::vector<int>> in_lp;
        auto lp_add = [&](const std::vector<int>& s) -> bool {
            if (!in_lp.insert(s).second) return false;
            lp.add_column(s);
            return true;
        };
        for (const auto& s : cover_sets) lp_add(s);
        for (const auto& s : float_basis) lp_add(s);

        std::vector<Rational> proof_dual;
        int uniform_failures = 0, half_failures = 0;
        Rational last_value(-1);
        lp.solve();
        while (true) {
            Rational v = lp.objective();
            if (v != last_value) {
                // value moved: stabilized proof points get fresh attempts
                uniform_failures = 0;
                half_failures = 0;
                last_value = v;
            }
            std::vector<Rational> y0 = lp.duals();
            Rational u = v / Rational(n);

            struct Candidate {
                int lambda_kind; // 0 = uniform, 1 = half mix, 2 = simplex dual
                bool enabled;
            };
            Candidate cands[3] = {{0, uniform_failures < 2}, {1, half_failures < 4}, {2, true}};

            bool proven = false;
            std::vector<std::vector<int>> to_add;
            for (auto& cand : cands) {
                if (!cand.enabled) continue;
                std::vector<Rational> y(n);
                for (int i = 0; i < n; ++i) {
                    switch (cand.lambda_kind) {
                    case 0: y[i] = u; break;
                    case 1: y[i] = (u + y0[i]) / Rational(2); break;
                    default: y[i] = y0[i]; break;
                    }
                }
                auto violated = detail::price_rational(compat, y, meter, true);
                if (violated.empty()) {
                    proof_dual = std::move(y);
                    proven = true;
                    break;
                }
                // stabilized points get a bounded number of attempts
                if (cand.lambda_kind == 0) ++uniform_failures;
                if (cand.lambda_kind == 1) ++half_failures;
                if (violated.size() > 64) violated.resize(64);
                bool progress = false;
                for (auto& s : violated) {
                    auto ms = detail::maximalize_independent(compat, std::move(s));
                    pool_add(ms);
                    if (lp_add(ms)) progress = true;
                }
                if (progress) break; // re-solve with the new columns
                if (cand.lambda_kind == 2)
                    throw Error("fractional_chromatic: internal error, simplex dual repriced known column");
            }
            if (proven) break;
            lp.solve();
        }

        FractionalCertificate cert;
        cert.value = lp.objective();
        cert.dual_weights = std::move(proof_dual);
        cert.pricing_nodes = meter.nodes();
        cert.columns_generated = lp.columns();
        for (auto& [id, weight] : lp.primal_support())
            cert.cover.emplace_back(lp.column(id), weight);

        // self-check: cover feasible, primal and dual totals equal
        std::vector<Rational> got(n, Rational(0));
        Rational total(0), dual_total(0);
        for (auto& [s, w] : cert.cover) {
            total += w;
            for (int v : s) got[v] += w;
        }
        for (int v = 0; v < n; ++v) {
            if (got[v] < Rational(1))
                throw Error("fractional_chromatic: internal error, cover infeasible");
            dual_total += cert.dual_weights[v];
        }
        if (total != cert.value || dual_total != cert.value)
            throw Error("fractional_chromatic: internal error, duality gap");
        return cert;
    } catch (const BudgetExhausted& e) {
        throw BudgetError("fractional_chromatic: budget exceeded during independent-set pricing",
                          e.nodes);
    }
}

/// Same LP over the fully enumerated maximal-independent-set column
/// pool; an independent route used to cross-check the column-generation
/// path on small graphs.
inline Rational fractional_chromatic_by_enumeration(
    const Graph& g, const SolverBudget& budget = SolverBudget::from_env()) {
    g.require_loop_free("fractional_chromatic_by_enumeration");
    int n = g.vertex_count();
    if (n == 0) throw ValidationError("fractional_chromatic_by_enumeration: graph must be nonempty");
    auto sets = enumerate_maximal_independent_sets(g, budget);
    CoveringLp lp(n);
    for (auto& s : sets) lp.add_column(s);
    lp.solve();
    return lp.objective();
}

} // namespace kneserlab
