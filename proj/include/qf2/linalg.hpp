#pragma once

#include <optional>
#include <utility>
#include <vector>

namespace qf2 {

template <class S>
using DenseMat = std::vector<std::vector<S>>;

/// Solves A x = b exactly over a field. nullopt if inconsistent or not uniquely solvable.
template <class S>
std::optional<std::vector<S>> exact_solve(DenseMat<S> a, std::vector<S> b)
{
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t r = 0;
    std::vector<std::size_t> pivots;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        const S inv = S(1) / a[r][c];
        for (auto& x : a[r]) x *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            const S f = a[i][c];
            for (std::size_t j = 0; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivots.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) return std::nullopt;
    if (pivots.size() != cols) return std::nullopt;
    std::vector<S> x(cols, S(0));
    for (std::size_t i = 0; i < r; ++i) x[pivots[i]] = b[i];
    return x;
}

/// Inverse of a square matrix over a field; nullopt if singular.
template <class S>
std::optional<DenseMat<S>> exact_inverse(const DenseMat<S>& a)
{
    const std::size_t n = a.size();
    DenseMat<S> inv(n, std::vector<S>(n, S(0)));
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<S> e(n, S(0));
        e[k] = S(1);
        auto col = exact_solve(a, e);
        if (!col) return std::nullopt;
        for (std::size_t i = 0; i < n; ++i) inv[i][k] = (*col)[i];
    }
    return inv;
}

}  // namespace qf2
