#pragma once

// Seeded random inputs and small independent reference computations shared
// by the unit suites and the acceptance binary.

#include <sympleth/verify.hpp>

#include <algorithm>
#include <random>
#include <vector>

namespace testing_support {

using namespace sympleth;

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline Coefficient random_coefficient(std::mt19937_64& gen)
{
    std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
    return rational(num(gen), den(gen));
}

/// Homogeneous of degree d with a few random p-terms (may be zero for tiny d).
inline SymFunc random_homogeneous(int d, std::mt19937_64& gen, int terms = 3)
{
    auto parts = partitions_of(d);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    SymFunc out;
    for (int i = 0; i < terms; ++i)
        out.add_term(parts[pick(gen)], random_coefficient(gen));
    return out;
}

/// Random element with components in degrees lo..hi.
inline SymFunc random_symfunc(int lo, int hi, std::mt19937_64& gen, int terms = 2)
{
    SymFunc out;
    for (int d = lo; d <= hi; ++d)
        out += random_homogeneous(d, gen, terms);
    return out;
}

/// Random series through degree n with the given constant term.
inline GradedSeries random_series(int n, std::mt19937_64& gen, const Coefficient& constant = 0, int terms = 2)
{
    GradedSeries out(n);
    out.set(0, SymFunc::constant(constant));
    for (int d = 1; d <= n; ++d)
        out.set(d, random_homogeneous(d, gen, terms));
    return out;
}

/// Number of partitions of 0..n by Euler's pentagonal recurrence.
inline std::vector<long> partition_counts(int n)
{
    std::vector<long> c(static_cast<std::size_t>(n) + 1, 0);
    c[0] = 1;
    for (int m = 1; m <= n; ++m) {
        long total = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            long sign = k % 2 ? 1 : -1;
            total += sign * c[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                total += sign * c[static_cast<std::size_t>(m - g2)];
        }
        c[static_cast<std::size_t>(m)] = total;
    }
    return c;
}

/// Down-up permutations of size n by scanning all of S_n.
inline long brute_alternating(int n)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        perm[static_cast<std::size_t>(i)] = i;
    long count = 0;
    do {
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i)
            ok = (i % 2 == 0) ? perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(i + 1)]
                              : perm[static_cast<std::size_t>(i)] < perm[static_cast<std::size_t>(i + 1)];
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

/// Outcome of one injected fault.
struct FaultResult {
    std::string check;
    std::size_t comparison;
    verify::Side side;
    int degree;
    bool detected;
};

/// Perturbs one seeded coefficient on each side of each comparison of every
/// check, at degree n, and records whether the failure surfaced at exactly
/// the perturbed degree.
inline std::vector<FaultResult> inject_faults(int n, std::uint64_t seed)
{
    std::mt19937_64 gen(seed);
    std::vector<FaultResult> out;
    for (const auto& check : verify::registry()) {
        const int eff = verify::effective_degree(check, n);
        const auto built = verify::build(check, n);
        for (std::size_t i = 0; i < built.size(); ++i) {
            const auto& c = built[i];
            std::vector<verify::Side> sides{verify::Side::lhs};
            if (c.kind == verify::Comparison::Kind::equal)
                sides.push_back(verify::Side::rhs);
            for (auto side : sides) {
                const int top = std::min({eff, c.lhs.max_degree(), c.rhs.max_degree()});
                std::uniform_int_distribution<int> pick_degree(0, top);
                const int d = pick_degree(gen);
                auto parts = partitions_of(d);
                std::uniform_int_distribution<std::size_t> pick_part(0, parts.size() - 1);
                verify::Perturbation fault{i, side, d, parts[pick_part(gen)], 1};
                // positivity is broken by a large negative multiple of p_(d)
                if (c.kind == verify::Comparison::Kind::schur_positive) {
                    fault.partition = d == 0 ? Partition() : Partition::row(d);
                    fault.delta = -1000;
                }
                auto report = verify::compare(check, eff, built, fault);
                bool detected = !report.passed && report.first_failure_degree == d;
                out.push_back({check.name, i, side, d, detected});
            }
        }
    }
    return out;
}

}  // namespace testing_support
