#pragma once

// Registry of identity checks. Each check builds a list of graded
// comparisons at a truncation degree and reports the first degree at which
// any of them fails.

#include <sympleth/lie.hpp>
#include <sympleth/oracle/enumeration.hpp>
#include <sympleth/oracle/free_lie.hpp>
#include <sympleth/oracle/monomial.hpp>
#include <sympleth/plethysm.hpp>
#include <sympleth/schur.hpp>
#include <sympleth/series.hpp>

#include <algorithm>
#include <atomic>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

namespace sympleth::verify {

/// One side-by-side condition inside a check.
struct Comparison {
    enum class Kind {
        equal,           // lhs == rhs in every degree
        schur_positive,  // every component of lhs has nonnegative integer Schur coefficients
    };

    std::string label;
    Kind kind = Kind::equal;
    GradedSeries lhs;
    GradedSeries rhs;

    static Comparison equal(std::string label, GradedSeries lhs, GradedSeries rhs)
    {
        return {std::move(label), Kind::equal, std::move(lhs), std::move(rhs)};
    }
    static Comparison positive(std::string label, GradedSeries series)
    {
        GradedSeries empty(series.max_degree());
        return {std::move(label), Kind::schur_positive, std::move(series), std::move(empty)};
    }
};

struct CheckReport {
    std::string check_name;
    std::string anchor;
    int max_degree = 0;
    bool passed = true;
    std::optional<int> first_failure_degree;
    /// label of the first failing comparison at that degree
    std::string failed_comparison;
    /// rendered lhs and rhs components at the failing degree
    std::optional<std::pair<std::string, std::string>> mismatch;
};

struct Check {
    std::string name;
    /// The identity being checked, in plain notation.
    std::string anchor;
    /// Largest truncation degree the check runs at; requests above it are capped.
    int max_supported_degree;
    std::function<std::vector<Comparison>(int)> build;
};

enum class Side { lhs, rhs };

/// Adds delta to one coefficient before comparison; used for fault injection.
struct Perturbation {
    std::size_t comparison = 0;
    Side side = Side::lhs;
    int degree = 0;
    Partition partition;
    Coefficient delta = 1;
};

namespace detail {

inline bool schur_positive(const SymFunc& f)
{
    for (const auto& [lambda, c] : schur_expand(f))
        if (c < 0 || !is_integer(c))
            return false;
    return true;
}

inline GradedSeries series_of(const SymFunc& f, int n) { return GradedSeries::from(f, n); }

inline GradedSeries one(int n) { return GradedSeries::constant(1, n); }

// sum over k of coeff(k) * p_1^k
inline GradedSeries p1_series(int n, const std::function<Coefficient(int)>& coeff)
{
    return GradedSeries::generate(n, [&](int d) { return p(Partition::column(d)) * coeff(d); });
}

// sum_{k odd} sign(k) p_k / k
inline GradedSeries odd_power_sums(int n, bool alternating)
{
    return GradedSeries::generate(n, [&](int d) {
        if (d % 2 == 0)
            return SymFunc();
        int sign = alternating && ((d - 1) / 2) % 2 == 1 ? -1 : 1;
        return p(d) * rational(sign, d);
    });
}

inline GradedSeries named(std::string_view name, int n) { return *named_series(name, n); }

inline GradedSeries quotient(int n, bool alternating)
{
    return series_div(named(alternating ? "E_odd_alt" : "E_odd", n), named(alternating ? "E_even_alt" : "E_even", n));
}

// s_(1) + sum_{n>=3} sign(n) s_{delta_n / delta_{n-2}} through degree n
inline GradedSeries staircase_sum(int n, bool signed_terms)
{
    GradedSeries out(n);
    for (int k = 2; 2 * k - 3 <= n; ++k) {
        SymFunc term = staircase_skew(k, StaircaseMethod::jacobi_trudi);
        if (signed_terms && k % 2 == 1)
            term = -term;
        out.add(2 * k - 3, term);
    }
    return out;
}

// sum_{mu |- d} (-1)^{len-1} multinomial(len; m_1, m_2, ...) prod_i Hk_i^{m_i}
inline SymFunc hook_product_expansion(int d)
{
    SymFunc out;
    for (const auto& mu : partitions_of(d)) {
        Integer multinomial = factorial(mu.length());
        SymFunc prod = SymFunc::constant(1);
        for (int i = 1; i <= d; ++i) {
            int m = mu.multiplicity(i);
            multinomial /= factorial(m);
            for (int r = 0; r < m; ++r)
                prod = prod * hk(i);
        }
        Coefficient c(multinomial);
        if ((mu.length() - 1) % 2 == 1)
            c = -c;
        out += prod * c;
    }
    return out;
}

// sum_{k} sign_k T_{2k+1} X^{2k+1} / (2k+1)!, T from the enumeration oracle
inline GradedSeries tangent_number_series(const GradedSeries& x, bool alternating_signs)
{
    const int n = x.max_degree();
    std::vector<Coefficient> coeffs(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; k += 2) {
        Coefficient c = ratio(Integer(static_cast<long>(oracle::alternating_count(k))), factorial(k));
        if (alternating_signs && ((k - 1) / 2) % 2 == 1)
            c = -c;
        coeffs[static_cast<std::size_t>(k)] = c;
    }
    return compose_scalar(coeffs, x);
}

struct OraclePair {
    std::string label;
    SymFunc f;
    SymFunc g;
    int degree;
};

// f in {h_k, e_k, p_k, s_l : deg <= 4}, g in {h_k, e_k, s_l : deg <= 3}, duplicates removed
inline std::vector<OraclePair> pleth_oracle_pairs()
{
    std::vector<std::pair<std::string, SymFunc>> outer, inner;
    auto push_unique = [](auto& list, std::string label, SymFunc f) {
        for (const auto& [l, existing] : list)
            if (existing == f)
                return;
        list.emplace_back(std::move(label), std::move(f));
    };
    for (int k = 1; k <= 4; ++k) {
        push_unique(outer, "h" + std::to_string(k), h(k));
        push_unique(outer, "e" + std::to_string(k), e(k));
        push_unique(outer, "p" + std::to_string(k), p(k));
        for (const auto& lambda : partitions_of(k))
            push_unique(outer, "s" + lambda.to_string(), schur(lambda));
    }
    for (int k = 1; k <= 3; ++k) {
        push_unique(inner, "h" + std::to_string(k), h(k));
        push_unique(inner, "e" + std::to_string(k), e(k));
        for (const auto& lambda : partitions_of(k))
            push_unique(inner, "s" + lambda.to_string(), schur(lambda));
    }
    std::vector<OraclePair> out;
    for (const auto& [lf, f] : outer)
        for (const auto& [lg, g] : inner)
            out.push_back({lf + "[" + lg + "]", f, g, *f.max_degree() * *g.max_degree()});
    return out;
}

inline std::vector<Comparison> pleth_oracle_comparisons(int n)
{
    std::vector<Comparison> out;
    for (const auto& pair : pleth_oracle_pairs()) {
        if (pair.degree > n)
            continue;
        const int d = pair.degree;
        GradedSeries engine = pleth(pair.f, pair.g, n);
        auto poly = oracle::monomial_pleth(pair.f, pair.g, d, d);
        GradedSeries alphabet = series_of(oracle::symmetric_from_monomials(poly, d), n);
        out.push_back(Comparison::equal(pair.label, std::move(engine), std::move(alphabet)));
    }
    return out;
}

}  // namespace detail

/// All registered checks, in reporting order.
inline const std::vector<Check>& registry()
{
    using namespace detail;
    using C = Comparison;
    static const std::vector<Check> checks = {
        {"thrall_h", "H[Lie] = 1/(1 - p_1)", 16,
         [](int n) {
             return std::vector<C>{C::equal("H[Lie]", pleth(named("H", n), named("Lie", n)), geometric_p1(n))};
         }},
        {"thrall_e", "E[Lie] = (1 - p_2)/(1 - p_1)", 16,
         [](int n) {
             auto rhs = geometric_p1(n) * (SymFunc::constant(1) - p(2));
             return std::vector<C>{C::equal("E[Lie]", pleth(named("E", n), named("Lie", n)), rhs)};
         }},
        {"main_inverse", "(E_odd/E_even)[Lie_odd] = p_1 = Lie_odd[E_odd/E_even]", 16,
         [](int n) {
             auto q = quotient(n, false);
             auto lie_odd = named("Lie_odd", n);
             auto p1 = series_of(p(1), n);
             return std::vector<C>{C::equal("Q[Lie_odd]", pleth(q, lie_odd), p1),
                                   C::equal("Lie_odd[Q]", pleth(lie_odd, q), p1),
                                   C::equal("inverse(Q)", pleth_inverse(q), lie_odd)};
         }},
        {"main_inverse_alt", "(E_odd_alt/E_even_alt)[Lie_odd_alt] = p_1 = Lie_odd_alt[E_odd_alt/E_even_alt]", 16,
         [](int n) {
             auto q = quotient(n, true);
             auto lie_alt = named("Lie_odd_alt", n);
             auto p1 = series_of(p(1), n);
             return std::vector<C>{C::equal("Q_alt[Lie_odd_alt]", pleth(q, lie_alt), p1),
                                   C::equal("Lie_odd_alt[Q_alt]", pleth(lie_alt, q), p1),
                                   C::equal("inverse(Q_alt)", pleth_inverse(q), lie_alt)};
         }},
        {"arctanh_pleth", "(sum_{k odd} p_k/k)[Lie_odd] = sum_{m odd} p_1^m/m", 16,
         [](int n) {
             auto rhs = p1_series(n, [](int m) { return m % 2 ? rational(1, m) : Coefficient(0); });
             auto p1 = series_of(p(1), n);
             auto log_form = (log1p_series(p1) - log1p_series(-p1)) * rational(1, 2);
             return std::vector<C>{
                 C::equal("Z[Lie_odd]", pleth(odd_power_sums(n, false), named("Lie_odd", n)), rhs),
                 C::equal("sum p_1^m/m = log((1+p_1)/(1-p_1))/2", rhs, log_form)};
         }},
        {"arctan_pleth_alt", "(sum_{k odd} (-1)^((k-1)/2) p_k/k)[Lie_odd_alt] = sum_{m odd} (-1)^((m-1)/2) p_1^m/m", 16,
         [](int n) {
             auto rhs = p1_series(n, [](int m) { return m % 2 ? rational((m / 2) % 2 ? -1 : 1, m) : Coefficient(0); });
             return std::vector<C>{
                 C::equal("W[Lie_odd_alt]", pleth(odd_power_sums(n, true), named("Lie_odd_alt", n)), rhs)};
         }},
        {"he_restate", "(HE)[Lie_odd] = (1 + p_1)/(1 - p_1)", 16,
         [](int n) {
             auto rhs = series_div(one(n) + series_of(p(1), n), one(n) - series_of(p(1), n));
             return std::vector<C>{C::equal("(HE)[Lie_odd]", pleth(named("HE", n), named("Lie_odd", n)), rhs)};
         }},
        {"hook_regular", "Hk[Lie_odd] restricted to degree n = p_1^n", 16,
         [](int n) {
             auto rhs = p1_series(n, [](int d) { return Coefficient(d == 0 ? 0 : 1); });
             return std::vector<C>{C::equal("Hk[Lie_odd]", pleth(named("Hk", n), named("Lie_odd", n)), rhs)};
         }},
        {"he_lie_even", "(HE)[Lie_even] = (1 - p_2)/(1 - p_1^2); (HE)[Lie_odd] (HE)[Lie_even] = (1 - p_2)(1 - p_1)^-2 = (1 - p_1)^-1 E[Lie]", 16,
         [](int n) {
             auto he = named("HE", n);
             auto g = geometric_p1(n);
             auto even_side = pleth(he, named("Lie_even", n));
             auto odd_side = pleth(he, named("Lie_odd", n));
             auto target = g * g * (SymFunc::constant(1) - p(2));
             auto p1_squared = series_of(p(Partition({1, 1})), n);
             return std::vector<C>{
                 C::equal("(HE)[Lie_even] vs (1-p_2)/(1-p_1^2)", even_side,
                          series_div(one(n) - series_of(p(2), n), one(n) - p1_squared)),
                 C::equal("(HE)[Lie_odd] (HE)[Lie_even] vs (1-p_2)/(1-p_1)^2", odd_side * even_side, target),
                 C::equal("(1-p_2)/(1-p_1)^2 vs E[Lie]/(1-p_1)", target, g * pleth(named("E", n), named("Lie", n)))};
         }},
        {"hook_alt_even", "sum_{m even >= 2} (-1)^(m/2) Hk_m[Lie_odd_alt] restricted to degree 2n = (-1)^n p_1^(2n)", 16,
         [](int n) {
             auto hooks = hk_alt_series(Parity::even, n) - one(n);
             auto rhs = p1_series(n, [](int d) { return Coefficient(d == 0 || d % 2 ? 0 : ((d / 2) % 2 ? -1 : 1)); });
             return std::vector<C>{C::equal("even hooks[Lie_odd_alt]", pleth(hooks, named("Lie_odd_alt", n)), rhs)};
         }},
        {"hook_alt_odd", "sum_{m odd} (-1)^((m-1)/2) Hk_m[Lie_odd_alt] restricted to degree 2n+1 = (-1)^n p_1^(2n+1)", 16,
         [](int n) {
             auto hooks = hk_alt_series(Parity::odd, n);
             auto rhs = p1_series(n, [](int d) { return Coefficient(d % 2 == 0 ? 0 : ((d / 2) % 2 ? -1 : 1)); });
             return std::vector<C>{C::equal("odd hooks[Lie_odd_alt]", pleth(hooks, named("Lie_odd_alt", n)), rhs)};
         }},
        {"carlitz", "E_odd_alt/E_even_alt = s_(1) + sum_{n>=3} s_{delta_n/delta_(n-2)}", 13,
         [](int n) {
             return std::vector<C>{C::equal("Q_alt vs staircases", quotient(n, true), staircase_sum(n, false))};
         }},
        {"foulkes", "s_{delta_n/delta_(n-2)} = sum_{l odd parts} (-1)^((|l|-len(l))/2) E_len(l) p_l/z_l", 11,
         [](int n) {
             std::vector<C> out;
             for (int k = 2; 2 * k - 3 <= n; ++k)
                 out.push_back(C::equal("staircase " + std::to_string(k),
                                        series_of(staircase_skew(k, StaircaseMethod::foulkes), n),
                                        series_of(staircase_skew(k, StaircaseMethod::jacobi_trudi), n)));
             return out;
         }},
        {"alt_carlitz", "E_odd/E_even = s_(1) + sum_{n>=3} (-1)^n s_{delta_n/delta_(n-2)}, with the hook-product expansion", 13,
         [](int n) {
             std::vector<C> out{C::equal("Q vs signed staircases", quotient(n, false), staircase_sum(n, true))};
             GradedSeries hooks(n);
             for (int d = 1; d <= n; ++d)
                 hooks.set(d, hook_product_expansion(d));
             out.push_back(C::equal("Q vs hook products", quotient(n, false), hooks));
             return out;
         }},
        {"tanh_form", "E_odd/E_even = tanh(Z) = sum_n (-1)^n T_(2n+1) Z^(2n+1)/(2n+1)!", 13,
         [](int n) {
             auto z = odd_power_sums(n, false);
             auto q = quotient(n, false);
             return std::vector<C>{C::equal("Q vs tanh(Z)", q, tanh_series(z)),
                                   C::equal("Q vs tangent numbers", q, tangent_number_series(z, true))};
         }},
        {"tan_form", "E_odd_alt/E_even_alt = tan(W) = sum_n T_(2n+1) W^(2n+1)/(2n+1)!", 13,
         [](int n) {
             auto w = odd_power_sums(n, true);
             auto q = quotient(n, true);
             return std::vector<C>{C::equal("Q_alt vs tan(W)", q, tan_series(w)),
                                   C::equal("Q_alt vs tangent numbers", q, tangent_number_series(w, false))};
         }},
        {"arctanh_sum", "Z[Lie_odd] = arctanh(p_1), tanh(Z)[Lie_odd] = p_1", 16,
         [](int n) {
             auto z = odd_power_sums(n, false);
             auto lie_odd = named("Lie_odd", n);
             auto p1 = series_of(p(1), n);
             return std::vector<C>{C::equal("Z[Lie_odd]", pleth(z, lie_odd), arctanh_series(p1)),
                                   C::equal("tanh(Z)[Lie_odd]", pleth(tanh_series(z), lie_odd), p1)};
         }},
        {"arctan_sum", "W[Lie_odd_alt] = arctan(p_1), tan(W)[Lie_odd_alt] = p_1", 16,
         [](int n) {
             auto w = odd_power_sums(n, true);
             auto lie_alt = named("Lie_odd_alt", n);
             auto p1 = series_of(p(1), n);
             return std::vector<C>{C::equal("W[Lie_odd_alt]", pleth(w, lie_alt), arctan_series(p1)),
                                   C::equal("tan(W)[Lie_odd_alt]", pleth(tan_series(w), lie_alt), p1)};
         }},
        {"jordan", "sum_n eta_n = H[Lie_odd], each eta_n Schur-positive", 14,
         [](int n) {
             auto jordan = jordan_series(n);
             // H[F + G] = H[F] H[G] over the odd Lie components
             GradedSeries product = one(n);
             for (int k = 1; k <= n; k += 2)
                 product = product * pleth(named("H", n), series_of(lie(k), n));
             return std::vector<C>{C::equal("H[Lie_odd] vs prod_k H[Lie_k]", jordan, product),
                                   C::positive("eta_n Schur-positive", jordan)};
         }},
        {"schur_positivity", "Lie_n and eta_n have nonnegative integer Schur coefficients", 14,
         [](int n) {
             return std::vector<C>{C::positive("Lie_n", named("Lie", n)), C::positive("eta_n", jordan_series(n))};
         }},
        {"parity_props", "H/E parity identities and E_odd/E_even = (HE-1)/(HE+1) = Hk/(1+Hk) = tanh(Z), omega-invariant", 16,
         [](int n) {
             auto H = named("H", n), E = named("E", n), he = named("HE", n);
             auto h_odd = named("H_odd", n), h_even = named("H_even", n);
             auto e_odd = named("E_odd", n), e_even = named("E_even", n);
             auto hk_sum = named("Hk", n);
             auto q = quotient(n, false);
             auto zero = GradedSeries(n);
             auto e_neg = e_even - e_odd;  // E(-t) at t = 1
             auto theta = odd_power_sums(n, false);
             auto power_sums = GradedSeries::generate(n, [](int d) { return d ? p(d) * rational(1, d) : SymFunc(); });
             auto signed_power_sums = GradedSeries::generate(
                 n, [](int d) { return d ? p(d) * rational(d % 2 ? 1 : -1, d) : SymFunc(); });
             return std::vector<C>{
                 C::equal("H = exp(sum p_k/k)", H, exp_series(power_sums)),
                 C::equal("E = exp(sum (-1)^(k-1) p_k/k)", E, exp_series(signed_power_sums)),
                 C::equal("H(t)E(-t) = 1", H * e_neg, one(n)),
                 C::equal("HE = exp(2 sum_{k odd} p_k/k)", he, exp_series(theta * 2)),
                 C::equal("HE = 1 + 2 Hk", he, one(n) + hk_sum * 2),
                 C::equal("H_odd E_even - H_even E_odd = 0", h_odd * e_even - h_even * e_odd, zero),
                 C::equal("H_even E_even - H_odd E_odd = 1", h_even * e_even - h_odd * e_odd, one(n)),
                 C::equal("2 H_odd = H - 1/E", h_odd * 2, H - series_inverse(E)),
                 C::equal("H_odd = (HE - 1)/(2E)", h_odd, series_div(he - one(n), E * 2)),
                 C::equal("H_even = (HE + 1)/(2E)", h_even, series_div(he + one(n), E * 2)),
                 C::equal("H_odd/H_even = E_odd/E_even", series_div(h_odd, h_even), q),
                 C::equal("Q = (HE - 1)/(HE + 1)", q, series_div(he - one(n), he + one(n))),
                 C::equal("Q = Hk/(1 + Hk)", q, series_div(hk_sum, one(n) + hk_sum)),
                 C::equal("Q = tanh(Z)", q, tanh_series(theta)),
                 C::equal("omega(Q) = Q", omega(q), q)};
         }},
        {"alt_parity_props", "alternating parity identities, E_odd_alt/E_even_alt = Y/(X^2+Y^2) with Y^2 = X - X^2, omega-invariant", 16,
         [](int n) {
             auto h_odd = named("H_odd_alt", n), h_even = named("H_even_alt", n);
             auto e_odd = named("E_odd_alt", n), e_even = named("E_even_alt", n);
             auto x = hk_alt_series(Parity::even, n), y = hk_alt_series(Parity::odd, n);
             auto q = quotient(n, true);
             return std::vector<C>{
                 C::equal("H_even_alt E_odd_alt = H_odd_alt E_even_alt", h_even * e_odd, h_odd * e_even),
                 C::equal("H_even_alt E_even_alt + H_odd_alt E_odd_alt = 1", h_even * e_even + h_odd * e_odd, one(n)),
                 C::equal("H_odd_alt/H_even_alt = E_odd_alt/E_even_alt", series_div(h_odd, h_even), q),
                 C::equal("Q_alt = Y/(X^2 + Y^2)", q, series_div(y, x * x + y * y)),
                 C::equal("Y^2 = X - X^2", y * y, x - x * x),
                 C::equal("Q_alt = tan(W)", q, tan_series(odd_power_sums(n, true))),
                 C::equal("omega(Q_alt) = Q_alt", omega(q), q)};
         }},
        {"lie_oracle", "Lie_n = characteristic of the multilinear free Lie algebra (Lyndon basis)", 7,
         [](int n) {
             auto formula = GradedSeries::generate(n, [](int d) { return d ? lie(d) : SymFunc(); });
             auto brackets = GradedSeries::generate(n, [](int d) { return d ? oracle::lie_character(d) : SymFunc(); });
             return std::vector<C>{C::equal("Moebius formula vs Lyndon brackets", formula, brackets)};
         }},
        {"pleth_oracle", "f[g] = f evaluated on the monomials of g, for deg f <= 4, deg g <= 3", 12,
         [](int n) { return pleth_oracle_comparisons(n); }},
    };
    return checks;
}

inline std::vector<std::string> check_names()
{
    std::vector<std::string> out;
    for (const auto& c : registry())
        out.push_back(c.name);
    return out;
}

inline const Check& find_check(std::string_view name)
{
    for (const auto& c : registry())
        if (c.name == name)
            return c;
    throw std::invalid_argument("unknown check '" + std::string(name) + "'");
}

inline int effective_degree(const Check& check, int n) { return std::clamp(n, 0, check.max_supported_degree); }

/// Compares already-built sides, optionally after injecting one coefficient change.
inline CheckReport compare(const Check& check, int n, std::vector<Comparison> comparisons,
                           const std::optional<Perturbation>& fault = std::nullopt)
{
    if (fault) {
        if (fault->comparison >= comparisons.size())
            throw std::out_of_range("perturbation: comparison index out of range");
        auto& target = fault->side == Side::lhs ? comparisons[fault->comparison].lhs
                                                : comparisons[fault->comparison].rhs;
        if (fault->partition.size() != fault->degree)
            throw std::invalid_argument("perturbation: partition size must equal the degree");
        target.add(fault->degree, SymFunc::power_sum(fault->partition, fault->delta));
    }
    CheckReport report{check.name, check.anchor, n, true, std::nullopt, {}, std::nullopt};
    for (int d = 0; d <= n && report.passed; ++d) {
        for (const auto& c : comparisons) {
            if (d > c.lhs.max_degree())
                continue;
            bool ok = true;
            std::string rhs_text;
            if (c.kind == Comparison::Kind::equal) {
                ok = d > c.rhs.max_degree() || c.lhs[d] == c.rhs[d];
                rhs_text = d <= c.rhs.max_degree() ? render(c.rhs[d]) : "";
            } else {
                ok = detail::schur_positive(c.lhs[d]);
                rhs_text = "schur expansion " + render(schur_expand(c.lhs[d]), 's');
            }
            if (!ok) {
                report.passed = false;
                report.first_failure_degree = d;
                report.failed_comparison = c.label;
                report.mismatch = std::make_pair(render(c.lhs[d]), rhs_text);
                break;
            }
        }
    }
    return report;
}

/// Builds the comparisons of a check at its effective degree.
inline std::vector<Comparison> build(const Check& check, int n) { return check.build(effective_degree(check, n)); }

inline CheckReport run_check(std::string_view name, int n)
{
    if (n < 0)
        throw std::invalid_argument("run_check: negative truncation degree");
    const Check& check = find_check(name);
    int eff = effective_degree(check, n);
    return compare(check, eff, check.build(eff));
}

/// Runs every check; reports are in registry order regardless of thread count.
inline std::vector<CheckReport> run_all(int n, unsigned threads = 1)
{
    const auto& checks = registry();
    std::vector<CheckReport> reports(checks.size());
    std::vector<std::exception_ptr> errors(checks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < checks.size(); i = next++) {
            try {
                reports[i] = run_check(checks[i].name, n);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(checks.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t)
        pool.emplace_back(worker);
    worker();
    for (auto& t : pool)
        t.join();
    for (auto& err : errors)
        if (err)
            std::rethrow_exception(err);
    return reports;
}

}  // namespace sympleth::verify
