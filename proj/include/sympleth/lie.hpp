#pragma once

// Named symmetric functions and series: Lie characteristics, hook sums,
// staircase skew Schur functions and the Jordan characteristics.

#include <sympleth/detail/memo.hpp>
#include <sympleth/oracle/enumeration.hpp>
#include <sympleth/plethysm.hpp>
#include <sympleth/schur.hpp>
#include <sympleth/series.hpp>

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sympleth {

/// Lie_n = (1/n) sum_{d | n} mu(d) p_d^{n/d}.
inline const SymFunc& lie(int n)
{
    static detail::Memo<int, SymFunc> memo;
    if (n < 1)
        throw std::invalid_argument("lie: n must be at least 1");
    return memo.get(n, [n] {
        SymFunc out;
        for (int d = 1; d <= n; ++d) {
            if (n % d != 0)
                continue;
            int mu = mobius(d);
            if (mu != 0)
                out.add_term(Partition(std::vector<int>(static_cast<std::size_t>(n / d), d)), rational(mu, n));
        }
        return out;
    });
}

enum class LieVariant { all, odd, even, odd_alt };

/// all = sum_{n>=1} Lie_n, odd = sum Lie_{2k+1}, even = sum_{k>=1} Lie_{2k},
/// odd_alt = sum (-1)^k Lie_{2k+1}.
inline GradedSeries lie_series(LieVariant variant, int n)
{
    GradedSeries out(n);
    for (int d = 1; d <= n; ++d) {
        bool odd = d % 2 == 1;
        switch (variant) {
        case LieVariant::all:
            out.set(d, lie(d));
            break;
        case LieVariant::odd:
            if (odd)
                out.set(d, lie(d));
            break;
        case LieVariant::even:
            if (!odd)
                out.set(d, lie(d));
            break;
        case LieVariant::odd_alt:
            if (odd)
                out.set(d, ((d - 1) / 2) % 2 == 0 ? lie(d) : -lie(d));
            break;
        }
    }
    return out;
}

/// Hk_n: the sum of the n hook Schur functions s_{(n-k, 1^k)}.
inline const SymFunc& hk(int n)
{
    static detail::Memo<int, SymFunc> memo;
    if (n < 1)
        throw std::invalid_argument("hk: n must be at least 1");
    return memo.get(n, [n] {
        SymFunc out;
        for (int k = 0; k < n; ++k)
            out += schur(Partition::hook(n - k, k));
        return out;
    });
}

/// sum_{n>=1} Hk_n
inline GradedSeries hk_series(int n)
{
    return GradedSeries::generate(n, [](int d) { return d == 0 ? SymFunc() : hk(d); });
}

/// Even: sum_{n even} (-1)^{n/2} Hk_n with Hk_0 = 1.
/// Odd: sum_{n odd} (-1)^{(n-1)/2} Hk_n.
inline GradedSeries hk_alt_series(Parity parity, int n)
{
    GradedSeries out(n);
    const int r = parity == Parity::odd ? 1 : 0;
    for (int d = r; d <= n; d += 2) {
        SymFunc term = d == 0 ? SymFunc::constant(1) : hk(d);
        out.set(d, ((d - r) / 2) % 2 == 0 ? term : -term);
    }
    return out;
}

enum class StaircaseMethod { foulkes, jacobi_trudi };

/// s_{delta_n / delta_{n-2}}, homogeneous of degree 2n - 3.
///
/// foulkes: sum over l |- 2n-3 with odd parts of
/// (-1)^{(|l| - len(l))/2} E_{len(l)} p_l / z_l, with E_k the Euler numbers
/// from enumeration. jacobi_trudi: the skew determinant in h.
inline SymFunc staircase_skew(int n, StaircaseMethod method = StaircaseMethod::foulkes)
{
    if (n < 2)
        throw std::invalid_argument("staircase_skew: n must be at least 2");
    const Partition outer = staircase(n);
    const Partition inner = n >= 3 ? staircase(n - 2) : Partition();
    if (method == StaircaseMethod::jacobi_trudi)
        return skew_schur(outer, inner);
    const int size = 2 * n - 3;
    SymFunc out;
    for (const auto& lambda : partitions_of(size)) {
        if (!lambda.all_parts_odd())
            continue;
        int len = lambda.length();
        int sign = ((size - len) / 2) % 2 == 0 ? 1 : -1;
        Coefficient c = ratio(Integer(static_cast<long>(sign * oracle::euler_number(len))), z_of(lambda));
        out.add_term(lambda, c);
    }
    return out;
}

/// sum_n eta_n = H[Lie_odd]
inline GradedSeries jordan_series(int n) { return pleth(h_series(n), lie_series(LieVariant::odd, n)); }

/// Identifiers accepted by named_series, in registry order.
inline const std::vector<std::string>& named_series_names()
{
    static const std::vector<std::string> names{
        "H",     "E",      "HE",        "Lie",        "Lie_odd",    "Lie_even", "Lie_odd_alt",
        "Hk",    "E_odd",  "E_even",    "E_odd_alt",  "E_even_alt", "H_odd",    "H_even",
        "H_odd_alt", "H_even_alt", "Jordan"};
    return names;
}

/// Builds a named series at truncation degree n; nullopt for unknown names.
inline std::optional<GradedSeries> named_series(std::string_view name, int n)
{
    auto split = [n](bool use_h, Parity parity, bool alt) {
        return parity_split(use_h ? h_series(n) : e_series(n), parity, alt);
    };
    if (name == "H")
        return h_series(n);
    if (name == "E")
        return e_series(n);
    if (name == "HE")
        return h_series(n) * e_series(n);
    if (name == "Lie")
        return lie_series(LieVariant::all, n);
    if (name == "Lie_odd")
        return lie_series(LieVariant::odd, n);
    if (name == "Lie_even")
        return lie_series(LieVariant::even, n);
    if (name == "Lie_odd_alt")
        return lie_series(LieVariant::odd_alt, n);
    if (name == "Hk")
        return hk_series(n);
    if (name == "E_odd")
        return split(false, Parity::odd, false);
    if (name == "E_even")
        return split(false, Parity::even, false);
    if (name == "E_odd_alt")
        return split(false, Parity::odd, true);
    if (name == "E_even_alt")
        return split(false, Parity::even, true);
    if (name == "H_odd")
        return split(true, Parity::odd, false);
    if (name == "H_even")
        return split(true, Parity::even, false);
    if (name == "H_odd_alt")
        return split(true, Parity::odd, true);
    if (name == "H_even_alt")
        return split(true, Parity::even, true);
    if (name == "Jordan")
        return jordan_series(n);
    return std::nullopt;
}

}  // namespace sympleth
