#pragma once

#include <cstdint>
#include <vector>

#include "kneserlab/budget.hpp"
#include "kneserlab/families.hpp"
#include "kneserlab/graph.hpp"
#include "kneserlab/solvers/clique.hpp"
#include "kneserlab/solvers/fractional.hpp"
#include "kneserlab/solvers/homomorphism.hpp"

namespace kneserlab {

struct MultichromaticResult {
    int value = 0;        // chi_k: least m with a homomorphism into K(m,k)
    SetColoring witness;  // k-subsets of {1..value} per vertex
    int clique_lower = 0; // k * omega(G)
    Rational fractional_lower; // k * chi_f(G)
    std::uint64_t nodes = 0;
};

/// k-th multichromatic number: ascending scan for the least m >= k with
/// a homomorphism G -> K(m,k), starting from max(k*omega, ceil(k*chi_f)).
/// Every failed m is an exhausted search, so the returned value is the
/// exact threshold. Kneser targets are vertex-transitive, so the image
/// of vertex 0 is pinned to target 0.
inline MultichromaticResult multichromatic_number(const Graph& g, int k,
                                                  const SolverBudget& budget = SolverBudget::from_env()) {
    if (k < 1) throw ValidationError("multichromatic_number: k must be positive");
    g.require_loop_free("multichromatic_number");
    if (g.vertex_count() == 0)
        throw ValidationError("multichromatic_number: graph must be nonempty");

    MultichromaticResult result;
    int omega = max_clique_lower_bound(g, budget);
    auto chi_f = fractional_chromatic(g, budget);
    result.clique_lower = k * omega;
    result.fractional_lower = Rational(k) * chi_f.value;

    BigInt frac_ceil = result.fractional_lower.ceil();
    int start = result.clique_lower;
    if (frac_ceil > start) start = static_cast<int>(frac_ceil.convert_to<long long>());
    if (start < k) start = k;

    std::uint64_t nodes = 0;
    for (int m = start;; ++m) {
        Graph target = kneser(m, k);
        HomOptions opts;
        opts.fix_first_image = 0;
        HomResult hr = homomorphism_exists(g, target, budget, opts);
        nodes += hr.nodes;
        if (hr.hom) {
            result.value = m;
            result.nodes = nodes;
            result.witness.palette_size = m;
            result.witness.subset_size = k;
            result.witness.sets.reserve(g.vertex_count());
            for (int v : hr.hom->map) result.witness.sets.push_back(target.label(v).values());
            return result;
        }
    }
}

} // namespace kneserlab
