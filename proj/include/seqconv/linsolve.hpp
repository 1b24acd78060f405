#ifndef SEQCONV_LINSOLVE_HPP
#define SEQCONV_LINSOLVE_HPP

#include <cstddef>
#include <optional>
#include <vector>

namespace seqconv {

// Dense exact linear algebra over any field type F (needs +, -, *, inverse(),
// is_zero(), default-constructs to zero).

template <typename F>
using Matrix = std::vector<std::vector<F>>;

// Solves A x = b; A is m x n (rows x cols). Returns one solution if the
// system is consistent, nullopt otherwise. Free variables are set to zero.
template <typename F>
std::optional<std::vector<F>> solve_linear(Matrix<F> a, std::vector<F> b) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && a[sel][col].is_zero()) ++sel;
        if (sel == m) continue;
        std::swap(a[sel], a[row]);
        std::swap(b[sel], b[row]);
        F inv = a[row][col].inverse();
        for (std::size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv;
        b[row] = b[row] * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            F f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[row][j];
            b[i] = b[i] - f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (std::size_t i = row; i < m; ++i)
        if (!b[i].is_zero()) return std::nullopt;
    std::vector<F> x(n, F());
    for (std::size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = b[i];
    return x;
}

// One nonzero kernel vector of A (m x n), or nullopt if the kernel is trivial.
template <typename F>
std::optional<std::vector<F>> kernel_vector(Matrix<F> a) {
    const std::size_t m = a.size();
    const std::size_t n = m == 0 ? 0 : a[0].size();
    if (n == 0) return std::nullopt;
    std::vector<long> pivot_of_col(n, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t sel = row;
        while (sel < m && a[sel][col].is_zero()) ++sel;
        if (sel == m) continue;
        std::swap(a[sel], a[row]);
        F inv = a[row][col].inverse();
        for (std::size_t j = col; j < n; ++j) a[row][j] = a[row][j] * inv;
        for (std::size_t i = 0; i < m; ++i) {
            if (i == row || a[i][col].is_zero()) continue;
            F f = a[i][col];
            for (std::size_t j = col; j < n; ++j) a[i][j] = a[i][j] - f * a[row][j];
        }
        pivot_of_col[col] = static_cast<long>(row);
        ++row;
    }
    // Find a free column; prefer the rightmost so high-order unknowns stay
    // nonzero when possible.
    long free_col = -1;
    for (long col = static_cast<long>(n) - 1; col >= 0; --col) {
        if (pivot_of_col[static_cast<std::size_t>(col)] < 0) { free_col = col; break; }
    }
    if (free_col < 0) return std::nullopt;
    std::vector<F> x(n, F());
    x[static_cast<std::size_t>(free_col)] = F(1);
    for (std::size_t col = 0; col < n; ++col) {
        long p = pivot_of_col[col];
        if (p >= 0)
            x[col] = F() - a[static_cast<std::size_t>(p)][static_cast<std::size_t>(free_col)];
    }
    return x;
}

} // namespace seqconv

#endif
