#pragma once

#include <sympleth/rational.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sympleth::detail {

using Matrix = std::vector<std::vector<Coefficient>>;

// Solves A x = b exactly by Gauss-Jordan elimination. A must be square and
// nonsingular.
inline std::vector<Coefficient> solve(Matrix a, std::vector<Coefficient> b)
{
    const std::size_t n = a.size();
    if (b.size() != n)
        throw std::invalid_argument("solve: dimension mismatch");
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0)
            ++pivot;
        if (pivot == n)
            throw std::domain_error("solve: singular matrix");
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        Coefficient inv = 1 / a[col][col];
        for (std::size_t j = col; j < n; ++j)
            a[col][j] *= inv;
        b[col] *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0)
                continue;
            Coefficient factor = a[r][col];
            for (std::size_t j = col; j < n; ++j)
                a[r][j] -= factor * a[col][j];
            b[r] -= factor * b[col];
        }
    }
    return b;
}

}  // namespace sympleth::detail
