#pragma once

// Plethysm f[g] and degree-by-degree plethystic inversion.

#include <sympleth/series.hpp>
#include <sympleth/symfunc.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace sympleth {

/// g has a nonzero constant term, so f[g] would be an infinite sum.
class PlethysmError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// F has no plethystic inverse of the normalised form G_1 = p_1.
class InversionError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// g with every p_j replaced by p_{jk}: p_k[g].
inline SymFunc adams(const SymFunc& g, int k)
{
    SymFunc out;
    for (const auto& [lambda, c] : g.terms())
        out.add_term(scale(lambda, k), c);
    return out;
}

namespace detail {

// Evaluates sum_l c_l prod_i p_{l_i}[g] over the terms of f with |l| <= n.
// Powers p_k[g] have valuation >= k, so larger partitions cannot reach
// degree n.
class PlethysmEvaluator {
public:
    PlethysmEvaluator(const GradedSeries& g, int n) : n_(n)
    {
        if (!g[0].is_zero())
            throw PlethysmError("plethysm: inner series has a nonzero constant term");
        adams_.reserve(static_cast<std::size_t>(n) + 1);
        adams_.emplace_back(n);
        for (int k = 1; k <= n; ++k) {
            GradedSeries a(n);
            for (int d = 1; d * k <= n && d <= g.max_degree(); ++d)
                a.set(d * k, adams(g[d], k));
            adams_.push_back(std::move(a));
        }
    }

    // prod_i p_{l_i}[g], truncated at n
    const GradedSeries& product(const Partition& lambda)
    {
        auto it = products_.find(lambda);
        if (it != products_.end())
            return it->second;
        GradedSeries value(n_);
        if (lambda.empty()) {
            value = GradedSeries::constant(1, n_);
        } else {
            std::vector<int> rest(lambda.begin(), lambda.end() - 1);
            const GradedSeries& prefix = product(Partition(std::move(rest)));
            value = multiply_from(prefix, adams_[static_cast<std::size_t>(lambda[lambda.length() - 1])],
                                  lambda.size());
        }
        return products_.emplace(lambda, std::move(value)).first->second;
    }

    void accumulate(const SymFunc& f, GradedSeries& out)
    {
        for (const auto& [lambda, c] : f.terms()) {
            if (lambda.size() > n_)
                break;
            const GradedSeries& prod = product(lambda);
            for (int d = lambda.size(); d <= n_; ++d)
                if (!prod[d].is_zero())
                    out.add(d, prod[d] * c);
        }
    }

private:
    // a * b where the product is known to vanish below degree `valuation`
    GradedSeries multiply_from(const GradedSeries& a, const GradedSeries& b, int valuation) const
    {
        GradedSeries out(n_);
        for (int d = valuation; d <= n_; ++d) {
            SymFunc acc;
            for (int i = 0; i <= d; ++i)
                if (!a[i].is_zero() && !b[d - i].is_zero())
                    acc += a[i] * b[d - i];
            out.set(d, std::move(acc));
        }
        return out;
    }

    int n_;
    std::vector<GradedSeries> adams_;
    std::map<Partition, GradedSeries> products_;
};

}  // namespace detail

/// f[g] truncated at g's bound. Terms of f above that bound cannot contribute.
inline GradedSeries pleth(const SymFunc& f, const GradedSeries& g)
{
    const int n = g.max_degree();
    detail::PlethysmEvaluator eval(g, n);
    GradedSeries out(n);
    eval.accumulate(f, out);
    return out;
}

/// F[g] truncated at min of both bounds.
inline GradedSeries pleth(const GradedSeries& f, const GradedSeries& g)
{
    const int n = std::min(f.max_degree(), g.max_degree());
    detail::PlethysmEvaluator eval(g.truncated(n), n);
    GradedSeries out(n);
    for (int d = 0; d <= n; ++d)
        eval.accumulate(f[d], out);
    return out;
}

/// f[g] for a polynomial g; the result is exact through degree n.
inline GradedSeries pleth(const SymFunc& f, const SymFunc& g, int n)
{
    return pleth(f, GradedSeries::from(g, n));
}

/// The unique G with G_0 = 0, G_1 = p_1 and F[G] = p_1 through F's bound.
///
/// At degree d the only occurrence of G_d in F[G] is through F_1 = p_1, so
/// G_d = -(degree-d part of F[G_{<d}]).
inline GradedSeries pleth_inverse(const GradedSeries& f)
{
    if (!f[0].is_zero())
        throw InversionError("pleth_inverse: constant term must be zero");
    const int n = f.max_degree();
    if (n >= 1 && !(f[1] == p(1)))
        throw InversionError("pleth_inverse: degree-1 term must be exactly p_1");
    GradedSeries g(n);
    if (n >= 1)
        g.set(1, p(1));
    for (int d = 2; d <= n; ++d) {
        GradedSeries partial = pleth(f.truncated(d), g.truncated(d));
        g.set(d, -partial[d]);
    }
    return g;
}

}  // namespace sympleth
