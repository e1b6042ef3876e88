#pragma once

// Exhaustive enumeration: alternating permutations and standard Young
// tableaux of skew shape. These are the only source of Euler and tangent
// numbers in the library.

#include <sympleth/detail/memo.hpp>
#include <sympleth/partition.hpp>

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace sympleth::oracle {

namespace detail {

// Extends a down-up prefix one position at a time over the unused values.
inline std::int64_t count_alternating(std::vector<bool>& used, int n, int pos, int last)
{
    if (pos == n)
        return 1;
    std::int64_t total = 0;
    // positions are 0-based; sigma(1) > sigma(2) < sigma(3) > ...
    bool need_smaller = pos % 2 == 1;
    for (int v = 0; v < n; ++v) {
        if (used[static_cast<std::size_t>(v)])
            continue;
        if (pos > 0 && (need_smaller ? v > last : v < last))
            continue;
        used[static_cast<std::size_t>(v)] = true;
        total += count_alternating(used, n, pos + 1, v);
        used[static_cast<std::size_t>(v)] = false;
    }
    return total;
}

}  // namespace detail

/// Number of permutations sigma of {1..n} with sigma(1) > sigma(2) < sigma(3) > ...,
/// by backtracking over all such permutations.
inline std::int64_t alternating_count(int n)
{
    if (n < 0)
        throw std::invalid_argument("alternating_count: negative n");
    if (n > 13)
        throw std::invalid_argument("alternating_count: n > 13 is outside the enumeration range");
    static sympleth::detail::Memo<int, std::int64_t> memo;
    return memo.get(n, [n] {
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        return detail::count_alternating(used, n, 0, -1);
    });
}

/// Euler number E_n, as counted by alternating_count.
inline std::int64_t euler_number(int n) { return alternating_count(n); }

namespace detail {

// Places the labels 1, 2, ... one cell at a time; a cell of the skew shape
// may be filled once its left and upper neighbours inside the shape are.
inline std::int64_t count_syt(std::vector<int>& filled, const std::vector<int>& outer, int remaining)
{
    if (remaining == 0)
        return 1;
    std::int64_t total = 0;
    for (std::size_t r = 0; r < outer.size(); ++r) {
        int col = filled[r];
        if (col >= outer[r])
            continue;
        if (r > 0 && filled[r - 1] <= col)
            continue;
        ++filled[r];
        total += count_syt(filled, outer, remaining - 1);
        --filled[r];
    }
    return total;
}

}  // namespace detail

/// Standard Young tableaux of skew shape outer/inner, by backtracking.
inline std::int64_t syt_count(const Partition& outer, const Partition& inner)
{
    if (!contains(outer, inner))
        throw std::invalid_argument("syt_count: inner shape is not contained in outer shape");
    int cells = outer.size() - inner.size();
    if (cells > 13)
        throw std::invalid_argument("syt_count: more than 13 cells");
    std::vector<int> out(outer.begin(), outer.end());
    std::vector<int> filled(out.size(), 0);
    for (std::size_t i = 0; i < static_cast<std::size_t>(inner.length()); ++i)
        filled[i] = inner[i];
    return detail::count_syt(filled, out, cells);
}

}  // namespace sympleth::oracle
