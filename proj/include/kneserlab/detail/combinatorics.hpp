#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "kneserlab/errors.hpp"

namespace kneserlab::detail {

/// binomial(m, k) with saturation at cap (so guard checks cannot overflow).
inline std::uint64_t binomial_capped(int m, int k, std::uint64_t cap) {
    if (k < 0 || k > m) return 0;
    if (k > m - k) k = m - k;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        // r * (m - k + i) / i is always integral at this point
        if (r > cap / (m - k + i) * i + i) return cap + 1;
        r = r * (m - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return r;
}

/// All k-subsets of {1..m} in lexicographic order.
inline std::vector<std::vector<int>> subsets_lex(int m, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > m) return out;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 1);
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == m - k + 1 + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

/// Lexicographic rank of a sorted k-subset of {1..m} (inverse of
/// subsets_lex ordering). Elements must be strictly increasing.
inline std::uint64_t subset_rank(const std::vector<int>& s, int m) {
    int k = static_cast<int>(s.size());
    std::uint64_t rank = 0;
    int prev = 0;
    for (int i = 0; i < k; ++i) {
        for (int x = prev + 1; x < s[i]; ++x)
            rank += binomial_capped(m - x, k - i - 1, UINT64_MAX - 1);
        prev = s[i];
    }
    return rank;
}

/// c^e with saturation at cap.
inline std::uint64_t pow_capped(std::uint64_t c, int e, std::uint64_t cap) {
    std::uint64_t r = 1;
    for (int i = 0; i < e; ++i) {
        if (c != 0 && r > cap / c) return cap + 1;
        r *= c;
        if (r > cap) return cap + 1;
    }
    return r;
}

} // namespace kneserlab::detail
