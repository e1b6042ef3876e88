#pragma once

// Symmetric functions over the rationals, stored in the power-sum basis.

#include <sympleth/partition.hpp>
#include <sympleth/rational.hpp>

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sympleth {

/// A finite linear combination sum_l c_l p_l with exact rational c_l.
///
/// Zero coefficients are never stored. Terms may have different degrees.
class SymFunc {
public:
    using Terms = std::map<Partition, Coefficient>;

    SymFunc() = default;

    static SymFunc constant(const Coefficient& c)
    {
        SymFunc f;
        f.add_term(Partition(), c);
        return f;
    }

    static SymFunc power_sum(const Partition& lambda, const Coefficient& c = 1)
    {
        SymFunc f;
        f.add_term(lambda, c);
        return f;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Coefficient coefficient(const Partition& lambda) const
    {
        auto it = terms_.find(lambda);
        return it == terms_.end() ? Coefficient(0) : it->second;
    }

    void add_term(const Partition& lambda, const Coefficient& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(lambda, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    void add_term(Partition&& lambda, const Coefficient& c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.try_emplace(std::move(lambda), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    /// Degree of the lowest / highest term; nullopt for zero.
    std::optional<int> min_degree() const
    {
        if (terms_.empty())
            return std::nullopt;
        return terms_.begin()->first.size();
    }
    std::optional<int> max_degree() const
    {
        if (terms_.empty())
            return std::nullopt;
        return terms_.rbegin()->first.size();
    }

    /// True when every term has degree n (vacuously true for zero).
    bool is_homogeneous_of(int n) const
    {
        return terms_.empty() || (*min_degree() == n && *max_degree() == n);
    }

    bool is_homogeneous() const { return terms_.empty() || *min_degree() == *max_degree(); }

    /// Degree-d part.
    SymFunc component(int d) const
    {
        SymFunc out;
        if (d < 0)
            return out;
        // (1^d) is the smallest partition of size d
        for (auto it = terms_.lower_bound(Partition::column(d)); it != terms_.end() && it->first.size() == d; ++it)
            out.terms_.emplace_hint(out.terms_.end(), *it);
        return out;
    }

    SymFunc& operator+=(const SymFunc& g)
    {
        for (const auto& [lambda, c] : g.terms_)
            add_term(lambda, c);
        return *this;
    }

    SymFunc& operator-=(const SymFunc& g)
    {
        for (const auto& [lambda, c] : g.terms_)
            add_term(lambda, -c);
        return *this;
    }

    SymFunc& operator*=(const Coefficient& c)
    {
        if (c == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [lambda, v] : terms_)
            v *= c;
        return *this;
    }

    SymFunc operator-() const
    {
        SymFunc out = *this;
        for (auto& [lambda, v] : out.terms_)
            v = -v;
        return out;
    }

    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const Coefficient& c) { return a *= c; }
    friend SymFunc operator*(const Coefficient& c, SymFunc a) { return a *= c; }

    friend SymFunc operator*(const SymFunc& a, const SymFunc& b)
    {
        SymFunc out;
        for (const auto& [la, ca] : a.terms_)
            for (const auto& [lb, cb] : b.terms_)
                out.add_term(merge(la, lb), ca * cb);
        return out;
    }

    SymFunc& operator*=(const SymFunc& g) { return *this = *this * g; }

    friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }

private:
    Terms terms_;
};

/// p_k for k >= 1.
inline SymFunc p(int k)
{
    if (k < 1)
        throw std::invalid_argument("p: index must be at least 1");
    return SymFunc::power_sum(Partition({k}));
}

/// p_lambda = prod_i p_{lambda_i}.
inline SymFunc p(const Partition& lambda) { return SymFunc::power_sum(lambda); }

/// Sign character on cycle type: (-1)^{|l| - len(l)}.
inline int sign_of(const Partition& lambda) { return (lambda.size() - lambda.length()) % 2 == 0 ? 1 : -1; }

/// Complete homogeneous h_n = sum_{l |- n} p_l / z_l.
inline SymFunc h(int n)
{
    if (n < 0)
        throw std::invalid_argument("h: negative degree");
    SymFunc out;
    for (auto& lambda : partitions_of(n))
        out.add_term(lambda, Coefficient(1, 1) / Coefficient(z_of(lambda)));
    return out;
}

/// Elementary e_n = sum_{l |- n} sign(l) p_l / z_l.
inline SymFunc e(int n)
{
    if (n < 0)
        throw std::invalid_argument("e: negative degree");
    SymFunc out;
    for (auto& lambda : partitions_of(n))
        out.add_term(lambda, Coefficient(sign_of(lambda)) / Coefficient(z_of(lambda)));
    return out;
}

/// h_lambda = prod h_{lambda_i}
inline SymFunc h(const Partition& lambda)
{
    SymFunc out = SymFunc::constant(1);
    for (int k : lambda)
        out = out * h(k);
    return out;
}

inline SymFunc e(const Partition& lambda)
{
    SymFunc out = SymFunc::constant(1);
    for (int k : lambda)
        out = out * e(k);
    return out;
}

/// The involution exchanging h_n and e_n; p_l -> sign(l) p_l.
inline SymFunc omega(const SymFunc& f)
{
    SymFunc out;
    for (const auto& [lambda, c] : f.terms())
        out.add_term(lambda, sign_of(lambda) > 0 ? c : Coefficient(-c));
    return out;
}

/// Hall inner product, <p_l, p_m> = z_l delta_{lm}.
inline Coefficient inner(const SymFunc& f, const SymFunc& g)
{
    Coefficient acc = 0;
    const auto& small = f.term_count() <= g.term_count() ? f : g;
    const auto& large = f.term_count() <= g.term_count() ? g : f;
    for (const auto& [lambda, c] : small.terms()) {
        auto it = large.terms().find(lambda);
        if (it != large.terms().end())
            acc += c * it->second * Coefficient(z_of(lambda));
    }
    return acc;
}

/// n! times the coefficient of p_{1^n}: the dimension of the module with
/// characteristic f.
inline Coefficient dimension(const SymFunc& f)
{
    if (!f.is_homogeneous())
        throw std::invalid_argument("dimension: input must be homogeneous");
    if (f.is_zero())
        return 0;
    int n = *f.min_degree();
    return Coefficient(factorial(n)) * f.coefficient(Partition::column(n));
}

namespace detail {

inline std::string render_terms(const std::map<Partition, Coefficient>& terms, char basis)
{
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [lambda, c] : terms) {
        bool neg = c < 0;
        Coefficient mag = neg ? Coefficient(-c) : c;
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        first = false;
        if (lambda.empty()) {
            out += to_string(mag);
            continue;
        }
        if (mag != 1)
            out += to_string(mag) + "*";
        out += basis;
        out += lambda.to_string();
    }
    return out;
}

}  // namespace detail

/// Terms by degree, then lexicographically: "1/2*p[1,1] - 1/2*p[2]".
inline std::string render(const SymFunc& f) { return detail::render_terms(f.terms(), 'p'); }

/// Renders a coefficient map in another basis letter, e.g. "s[2,1] + s[3]".
inline std::string render(const std::map<Partition, Coefficient>& terms, char basis)
{
    return detail::render_terms(terms, basis);
}

/// One term of the structured rendering.
struct TermRecord {
    Partition partition;
    Integer num;
    Integer den;
};

/// Terms in render order, coefficients in lowest terms.
inline std::vector<TermRecord> term_records(const SymFunc& f)
{
    std::vector<TermRecord> out;
    for (const auto& [lambda, c] : f.terms())
        out.push_back({lambda, c.get_num(), c.get_den()});
    return out;
}

}  // namespace sympleth
