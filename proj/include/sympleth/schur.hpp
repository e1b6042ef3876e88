#pragma once

// Schur functions and expansions of homogeneous symmetric functions in the
// Schur, complete homogeneous and elementary bases.

#include <sympleth/character_table.hpp>
#include <sympleth/detail/linear_solve.hpp>
#include <sympleth/symfunc.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <map>
#include <stdexcept>
#include <vector>

namespace sympleth {

using BasisExpansion = std::map<Partition, Coefficient>;

/// s_lambda = sum_{mu |- n} chi^lambda(mu) p_mu / z_mu.
inline SymFunc schur(const Partition& lambda)
{
    const auto& table = character_table(lambda.size());
    const std::size_t row = table.index(lambda);
    SymFunc out;
    for (std::size_t j = 0; j < table.partitions().size(); ++j) {
        std::int64_t chi = table(row, j);
        if (chi != 0) {
            const auto& mu = table.partitions()[j];
            out.add_term(mu, ratio(Integer(static_cast<long>(chi)), z_of(mu)));
        }
    }
    return out;
}

namespace detail {

inline int homogeneous_degree_or_throw(const SymFunc& f, const char* what)
{
    if (!f.is_homogeneous())
        throw std::invalid_argument(std::string(what) + ": input must be homogeneous");
    return f.is_zero() ? 0 : *f.min_degree();
}

}  // namespace detail

/// Coefficients c_l = <f, s_l> for homogeneous f; zero coefficients omitted.
inline BasisExpansion schur_expand(const SymFunc& f)
{
    int n = detail::homogeneous_degree_or_throw(f, "schur_expand");
    BasisExpansion out;
    if (f.is_zero())
        return out;
    const auto& table = character_table(n);
    // <p_mu, s_l> = chi^l(mu)
    std::vector<std::pair<std::size_t, const Coefficient*>> cols;
    for (const auto& [mu, c] : f.terms())
        cols.emplace_back(table.index(mu), &c);
    for (std::size_t i = 0; i < table.partitions().size(); ++i) {
        Coefficient acc = 0;
        for (const auto& [j, c] : cols) {
            std::int64_t chi = table(i, j);
            if (chi != 0)
                acc += *c * Coefficient(Integer(static_cast<long>(chi)));
        }
        if (acc != 0)
            out.emplace(table.partitions()[i], acc);
    }
    return out;
}

/// Coefficients in the h_lambda basis, by an exact linear solve.
inline BasisExpansion h_expand(const SymFunc& f)
{
    int n = detail::homogeneous_degree_or_throw(f, "h_expand");
    BasisExpansion out;
    if (f.is_zero())
        return out;
    auto parts = partitions_of(n);
    const std::size_t k = parts.size();
    // column j = h_{parts[j]} in p coordinates
    detail::Matrix a(k, std::vector<Coefficient>(k));
    for (std::size_t j = 0; j < k; ++j) {
        SymFunc hj = h(parts[j]);
        for (std::size_t i = 0; i < k; ++i)
            a[i][j] = hj.coefficient(parts[i]);
    }
    std::vector<Coefficient> b(k);
    for (std::size_t i = 0; i < k; ++i)
        b[i] = f.coefficient(parts[i]);
    auto x = detail::solve(std::move(a), std::move(b));
    for (std::size_t j = 0; j < k; ++j)
        if (x[j] != 0)
            out.emplace(parts[j], x[j]);
    return out;
}

/// Coefficients in the e_lambda basis (h-expansion of omega f).
inline BasisExpansion e_expand(const SymFunc& f) { return h_expand(omega(f)); }

/// Skew Schur function by the Jacobi-Trudi determinant det(h_{outer_i - inner_j - i + j}).
inline SymFunc skew_schur(const Partition& outer, const Partition& inner)
{
    if (!contains(outer, inner))
        throw std::invalid_argument("skew_schur: inner shape not contained in outer");
    const int rows = outer.length();
    if (rows == 0)
        return SymFunc::constant(1);
    if (rows > 16)
        throw std::invalid_argument("skew_schur: too many rows");
    auto part = [](const Partition& l, int i) { return i < l.length() ? l[static_cast<std::size_t>(i)] : 0; };
    std::map<int, SymFunc> h_cache;
    auto entry = [&](int i, int j) -> const SymFunc& {
        int d = part(outer, i) - part(inner, j) - i + j;
        auto it = h_cache.find(d);
        if (it == h_cache.end())
            it = h_cache.emplace(d, d < 0 ? SymFunc() : h(d)).first;
        return it->second;
    };
    // Laplace expansion along rows, memoised on the set of used columns.
    std::vector<std::optional<SymFunc>> minor(std::size_t(1) << rows);
    std::function<const SymFunc&(std::uint32_t)> det = [&](std::uint32_t used) -> const SymFunc& {
        auto& slot = minor[used];
        if (slot)
            return *slot;
        int row = std::popcount(used);
        if (row == rows) {
            slot = SymFunc::constant(1);
            return *slot;
        }
        SymFunc acc;
        int sign = 1;
        for (int j = 0; j < rows; ++j) {
            if (used & (1u << j))
                continue;
            // sign from the position of j among the remaining columns
            const SymFunc& a = entry(row, j);
            if (!a.is_zero()) {
                SymFunc term = a * det(used | (1u << j));
                if (sign > 0)
                    acc += term;
                else
                    acc -= term;
            }
            sign = -sign;
        }
        slot = std::move(acc);
        return *slot;
    };
    return det(0);
}

}  // namespace sympleth
