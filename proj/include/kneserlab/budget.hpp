#pragma once

#include <chrono>
#include <cstdint>

#include "kneserlab/config.hpp"
#include "kneserlab/errors.hpp"

namespace kneserlab {

/// Node/time budget for exact searches. max_millis == 0 means no time
/// limit; the default keeps solvers deterministic (node budgets are
/// deterministic, wall-clock budgets are not).
struct SolverBudget {
    std::uint64_t max_nodes = 2'000'000'000;
    std::uint64_t max_millis = 0;

    static SolverBudget from_env() {
        SolverBudget b;
        b.max_nodes = env_u64("KNESERLAB_NODE_BUDGET", b.max_nodes);
        b.max_millis = env_u64("KNESERLAB_TIME_BUDGET_MS", b.max_millis);
        return b;
    }
};

/// Internal signal thrown when a meter trips; solvers catch it at their
/// top level and rethrow a BudgetError enriched with best-known bounds.
struct BudgetExhausted {
    std::uint64_t nodes;
};

class BudgetMeter {
public:
    explicit BudgetMeter(const SolverBudget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    /// Count one search node; throws BudgetExhausted when the budget is
    /// spent. The clock is polled every 4096 nodes to keep ticks cheap.
    void tick() {
        if (++nodes_ > budget_.max_nodes) throw BudgetExhausted{nodes_};
        if (budget_.max_millis != 0 && (nodes_ & 0xfff) == 0) {
            auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
            if (static_cast<std::uint64_t>(ms) > budget_.max_millis)
                throw BudgetExhausted{nodes_};
        }
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    SolverBudget budget_;
    std::uint64_t nodes_ = 0;
    std::chrono::steady_clock::time_point start_;
};

} // namespace kneserlab
