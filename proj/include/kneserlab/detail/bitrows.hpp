#pragma once

#include <cstdint>
#include <vector>

#include "kneserlab/graph.hpp"

namespace kneserlab::detail {

/// Packed adjacency rows for solver hot loops. Row i holds one bit per
/// vertex; loops are not represented.
class BitMatrix {
public:
    explicit BitMatrix(int n) : n_(n), words_((n + 63) / 64), bits_(std::size_t(n) * words_, 0) {}

    static BitMatrix adjacency(const Graph& g) {
        BitMatrix m(g.vertex_count());
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int v : g.neighbors(u)) m.set(u, v);
        return m;
    }

    /// Complement adjacency (off-diagonal), i.e. the non-edges of g.
    static BitMatrix complement(const Graph& g) {
        BitMatrix m(g.vertex_count());
        int n = g.vertex_count();
        for (int u = 0; u < n; ++u) {
            for (int w = 0; w < m.words_; ++w) m.row_mut(u)[w] = ~std::uint64_t(0);
            // clear tail bits beyond n
            int tail = n % 64;
            if (tail) m.row_mut(u)[m.words_ - 1] = (std::uint64_t(1) << tail) - 1;
            m.clear(u, u);
            for (int v : g.neighbors(u)) m.clear(u, v);
        }
        return m;
    }

    void set(int i, int j) { bits_[std::size_t(i) * words_ + j / 64] |= std::uint64_t(1) << (j % 64); }
    void clear(int i, int j) { bits_[std::size_t(i) * words_ + j / 64] &= ~(std::uint64_t(1) << (j % 64)); }
    bool test(int i, int j) const {
        return bits_[std::size_t(i) * words_ + j / 64] >> (j % 64) & 1;
    }
    const std::uint64_t* row(int i) const { return &bits_[std::size_t(i) * words_]; }
    std::uint64_t* row_mut(int i) { return &bits_[std::size_t(i) * words_]; }
    int size() const { return n_; }
    int words() const { return words_; }

private:
    int n_;
    int words_;
    std::vector<std::uint64_t> bits_;
};

} // namespace kneserlab::detail
