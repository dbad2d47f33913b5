#pragma once

#include <vector>

#include "kneserlab/errors.hpp"
#include "kneserlab/rational.hpp"

namespace kneserlab {

namespace detail {

template <typename F>
struct LpScalar;

template <>
struct LpScalar<Rational> {
    static Rational zero() { return Rational(0); }
    static Rational one() { return Rational(1); }
    static bool neg(const Rational& x) { return x < Rational(0); }
    static bool pos(const Rational& x) { return x > Rational(0); }
    static bool is_zero(const Rational& x) { return x == Rational(0); }
};

template <>
struct LpScalar<double> {
    static constexpr double eps = 1e-9;
    static double zero() { return 0.0; }
    static double one() { return 1.0; }
    static bool neg(double x) { return x < -eps; }
    static bool pos(double x) { return x > eps; }
    static bool is_zero(double x) { return x >= -eps && x <= eps; }
};

} // namespace detail

/// Revised simplex specialized to the fractional-cover LP:
///   min sum w_S   s.t.   sum_{S ni v} w_S >= 1 for every vertex v, w >= 0
/// in standard form A w - s = 1.
///
/// Column ids: set columns are 0,1,2,... in insertion order; the slack of
/// row r is -(r+1). The all-slack start is dual feasible, so the first
/// solve runs the dual simplex; columns added later (column generation)
/// keep primal feasibility and enter through primal pivots. Bland-style
/// index rules keep every pivot deterministic and, over exact scalars,
/// cycle-free. The double instantiation is used only to propose columns;
/// every reported value comes from the exact instantiation.
template <typename F>
class CoverLpT {
    using S = detail::LpScalar<F>;

public:
    explicit CoverLpT(int rows, long max_pivots = -1) : m_(rows), max_pivots_(max_pivots) {
        basis_.resize(m_);
        binv_.assign(std::size_t(m_) * m_, S::zero());
        xb_.assign(m_, -S::one());
        for (int r = 0; r < m_; ++r) {
            basis_[r] = -(r + 1);
            binv(r, r) = -S::one();
        }
        slack_row_.assign(m_, -1);
        for (int r = 0; r < m_; ++r) slack_row_[r] = r;
    }

    int add_column(std::vector<int> support) {
        cols_.push_back(std::move(support));
        set_row_.push_back(-1);
        return static_cast<int>(cols_.size()) - 1;
    }
    int columns() const { return static_cast<int>(cols_.size()); }
    const std::vector<int>& column(int id) const { return cols_[id]; }

    /// Optimize over the current columns. Returns false when the pivot
    /// cap was hit first (only possible when a cap is configured).
    bool solve() {
        long pivots = 0;
        long dual_pivots = 0;
        while (dual_step(dual_pivots > 50L * (m_ + 1))) {
            ++dual_pivots;
            if (max_pivots_ >= 0 && ++pivots > max_pivots_) return false;
        }
        long degenerate = 0;
        bool bland = false;
        while (primal_step(bland)) {
            if (max_pivots_ >= 0 && ++pivots > max_pivots_) return false;
            if (last_pivot_degenerate_) {
                if (++degenerate > 16L * (m_ + 1)) bland = true;
            } else {
                degenerate = 0;
            }
        }
        return true;
    }

    F objective() const {
        F obj = S::zero();
        for (int r = 0; r < m_; ++r)
            if (basis_[r] >= 0) obj += xb_[r];
        return obj;
    }

    /// Dual values y per row; at optimality y >= 0 and y A <= 1.
    std::vector<F> duals() const {
        std::vector<F> y(m_, S::zero());
        for (int r = 0; r < m_; ++r) {
            if (basis_[r] < 0) continue;
            for (int c = 0; c < m_; ++c) y[c] += binv(r, c);
        }
        return y;
    }

    /// Basic set-columns with positive weight, by ascending column id.
    std::vector<std::pair<int, F>> primal_support() const {
        std::vector<std::pair<int, F>> out;
        for (int r = 0; r < m_; ++r)
            if (basis_[r] >= 0 && S::pos(xb_[r])) out.emplace_back(basis_[r], xb_[r]);
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }

private:
    int m_;
    long max_pivots_;
    std::vector<std::vector<int>> cols_;
    std::vector<int> basis_;     // row -> column id
    std::vector<int> set_row_;   // set column id -> basis row or -1
    std::vector<int> slack_row_; // slack index -> basis row or -1
    std::vector<F> binv_;        // m x m, row-major
    std::vector<F> xb_;
    bool last_pivot_degenerate_ = false;

    F& binv(int r, int c) { return binv_[std::size_t(r) * m_ + c]; }
    const F& binv(int r, int c) const { return binv_[std::size_t(r) * m_ + c]; }

    int basic_row(int id) const { return id >= 0 ? set_row_[id] : slack_row_[-id - 1]; }
    void set_basic_row(int id, int row) {
        if (id >= 0)
            set_row_[id] = row;
        else
            slack_row_[-id - 1] = row;
    }

    F dot_col(const std::vector<F>& rowvec, int id) const {
        if (id >= 0) {
            F s = S::zero();
            for (int v : cols_[id]) s += rowvec[v];
            return s;
        }
        return -rowvec[-id - 1];
    }
    F cost(int id) const { return id >= 0 ? S::one() : S::zero(); }

    // B^{-1} * a_id
    std::vector<F> ftran(int id) const {
        std::vector<F> out(m_, S::zero());
        if (id >= 0) {
            for (int v : cols_[id])
                for (int r = 0; r < m_; ++r) out[r] += binv(r, v);
        } else {
            int s = -id - 1;
            for (int r = 0; r < m_; ++r) out[r] = -binv(r, s);
        }
        return out;
    }

    void pivot(int row, int enter_id, const std::vector<F>& alpha) {
        int leave_id = basis_[row];
        F piv = alpha[row];
        for (int c = 0; c < m_; ++c) binv(row, c) /= piv;
        xb_[row] /= piv;
        for (int r = 0; r < m_; ++r) {
            if (r == row || S::is_zero(alpha[r])) continue;
            const F& f = alpha[r];
            for (int c = 0; c < m_; ++c) binv(r, c) -= f * binv(row, c);
            xb_[r] -= f * xb_[row];
        }
        set_basic_row(leave_id, -1);
        basis_[row] = enter_id;
        set_basic_row(enter_id, row);
    }

    // One dual simplex step; false once primal feasible. Leaving row:
    // most negative basic value (smallest basis id in Bland mode, the
    // anti-cycling fallback).
    bool dual_step(bool bland) {
        int row = -1, row_id = 0;
        for (int r = 0; r < m_; ++r) {
            if (S::neg(xb_[r])) {
                bool better;
                if (bland) {
                    better = row < 0 || id_less(basis_[r], row_id);
                } else {
                    better = row < 0 || xb_[r] < xb_[row] ||
                             (xb_[r] == xb_[row] && id_less(basis_[r], row_id));
                }
                if (better) {
                    row = r;
                    row_id = basis_[r];
                }
            }
        }
        if (row < 0) return false;

        std::vector<F> rho(m_);
        for (int c = 0; c < m_; ++c) rho[c] = binv(row, c);
        std::vector<F> y = duals();

        int enter = 0;
        bool have = false;
        F best_ratio = S::zero();
        auto consider = [&](int id) {
            if (basic_row(id) >= 0) return;
            F a = dot_col(rho, id);
            if (!S::neg(a)) return;
            F rc = cost(id) - dot_col(y, id);
            F ratio = rc / -a;
            if (!have || ratio < best_ratio || (ratio == best_ratio && id_less(id, enter))) {
                have = true;
                best_ratio = ratio;
                enter = id;
            }
        };
        for (int r = 0; r < m_; ++r) consider(-(r + 1));
        for (int j = 0; j < columns(); ++j) consider(j);
        if (!have)
            throw Error("CoverLp: infeasible (initial columns must cover every row)");
        pivot(row, enter, ftran(enter));
        return true;
    }

    // One primal simplex step; false at optimality.
    bool primal_step(bool bland) {
        std::vector<F> y = duals();
        int enter = 0;
        bool have = false;
        F best_rc = S::zero();
        auto consider = [&](int id) {
            if (basic_row(id) >= 0) return;
            F rc = cost(id) - dot_col(y, id);
            if (!S::neg(rc)) return;
            if (bland) {
                if (!have || id_less(id, enter)) {
                    have = true;
                    enter = id;
                }
            } else if (!have || rc < best_rc || (rc == best_rc && id_less(id, enter))) {
                have = true;
                best_rc = rc;
                enter = id;
            }
        };
        for (int r = 0; r < m_; ++r) consider(-(r + 1));
        for (int j = 0; j < columns(); ++j) consider(j);
        if (!have) return false;

        std::vector<F> alpha = ftran(enter);
        int row = -1;
        F best_ratio = S::zero();
        for (int r = 0; r < m_; ++r) {
            if (S::pos(alpha[r])) {
                F ratio = xb_[r] / alpha[r];
                if (row < 0 || ratio < best_ratio ||
                    (ratio == best_ratio && id_less(basis_[r], basis_[row]))) {
                    row = r;
                    best_ratio = ratio;
                }
            }
        }
        if (row < 0) throw Error("CoverLp: unbounded (impossible for covering LP)");
        last_pivot_degenerate_ = S::is_zero(xb_[row]);
        pivot(row, enter, alpha);
        return true;
    }

    // set columns order before slacks; keeps Bland rules total
    static bool id_less(int a, int b) {
        bool sa = a < 0, sb = b < 0;
        if (sa != sb) return sb;
        return sa ? (-a - 1) < (-b - 1) : a < b;
    }
};

using CoveringLp = CoverLpT<Rational>;

} // namespace kneserlab
