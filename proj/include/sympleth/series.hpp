#pragma once

// Truncated graded series of symmetric functions.

#include <sympleth/symfunc.hpp>

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympleth {

/// Raised when a series operation needs a unit or zero constant term and
/// does not get one.
class SeriesError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Homogeneous components f_0, ..., f_N of a series sum_d f_d.
///
/// Binary operations truncate to the smaller of the two bounds.
class GradedSeries {
public:
    explicit GradedSeries(int max_degree = 0)
    {
        if (max_degree < 0)
            throw std::invalid_argument("GradedSeries: negative truncation degree");
        components_.resize(static_cast<std::size_t>(max_degree) + 1);
    }

    /// Splits f by degree; terms above N are dropped.
    static GradedSeries from(const SymFunc& f, int max_degree)
    {
        GradedSeries s(max_degree);
        for (const auto& [lambda, c] : f.terms())
            if (lambda.size() <= max_degree)
                s.components_[static_cast<std::size_t>(lambda.size())].add_term(lambda, c);
        return s;
    }

    static GradedSeries constant(const Coefficient& c, int max_degree)
    {
        return from(SymFunc::constant(c), max_degree);
    }

    /// Series whose degree-d component is build(d).
    static GradedSeries generate(int max_degree, const std::function<SymFunc(int)>& build)
    {
        GradedSeries s(max_degree);
        for (int d = 0; d <= max_degree; ++d)
            s.set(d, build(d));
        return s;
    }

    int max_degree() const { return static_cast<int>(components_.size()) - 1; }

    const SymFunc& operator[](int d) const { return components_.at(static_cast<std::size_t>(d)); }

    /// Replaces the degree-d component; f must be homogeneous of degree d.
    void set(int d, SymFunc f)
    {
        if (!f.is_homogeneous_of(d))
            throw std::invalid_argument("GradedSeries::set: component " + std::to_string(d) + " is not homogeneous");
        components_.at(static_cast<std::size_t>(d)) = std::move(f);
    }

    /// Adds f (homogeneous of degree d) into the degree-d component.
    void add(int d, const SymFunc& f)
    {
        if (!f.is_homogeneous_of(d))
            throw std::invalid_argument("GradedSeries::add: term is not homogeneous of degree " + std::to_string(d));
        components_.at(static_cast<std::size_t>(d)) += f;
    }

    GradedSeries truncated(int n) const
    {
        GradedSeries s(std::min(n, max_degree()));
        std::copy_n(components_.begin(), s.components_.size(), s.components_.begin());
        return s;
    }

    /// sum of all components as a single symmetric function
    SymFunc total() const
    {
        SymFunc out;
        for (const auto& c : components_)
            out += c;
        return out;
    }

    bool is_zero() const
    {
        return std::all_of(components_.begin(), components_.end(), [](const SymFunc& f) { return f.is_zero(); });
    }

    /// Lowest degree with a nonzero component.
    std::optional<int> valuation() const
    {
        for (int d = 0; d <= max_degree(); ++d)
            if (!(*this)[d].is_zero())
                return d;
        return std::nullopt;
    }

    GradedSeries& operator+=(const GradedSeries& g)
    {
        shrink_to(g.max_degree());
        for (int d = 0; d <= max_degree(); ++d)
            components_[static_cast<std::size_t>(d)] += g[d];
        return *this;
    }

    GradedSeries& operator-=(const GradedSeries& g)
    {
        shrink_to(g.max_degree());
        for (int d = 0; d <= max_degree(); ++d)
            components_[static_cast<std::size_t>(d)] -= g[d];
        return *this;
    }

    GradedSeries& operator*=(const Coefficient& c)
    {
        for (auto& f : components_)
            f *= c;
        return *this;
    }

    GradedSeries operator-() const
    {
        GradedSeries out = *this;
        for (auto& f : out.components_)
            f = -f;
        return out;
    }

    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
    friend GradedSeries operator*(GradedSeries a, const Coefficient& c) { return a *= c; }
    friend GradedSeries operator*(const Coefficient& c, GradedSeries a) { return a *= c; }

    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b)
    {
        const int n = std::min(a.max_degree(), b.max_degree());
        GradedSeries out(n);
        for (int i = 0; i <= n; ++i) {
            if (a[i].is_zero())
                continue;
            for (int j = 0; i + j <= n; ++j)
                if (!b[j].is_zero())
                    out.components_[static_cast<std::size_t>(i + j)] += a[i] * b[j];
        }
        return out;
    }

    friend bool operator==(const GradedSeries& a, const GradedSeries& b) { return a.components_ == b.components_; }

private:
    void shrink_to(int n)
    {
        if (n < max_degree())
            components_.resize(static_cast<std::size_t>(n) + 1);
    }

    std::vector<SymFunc> components_;
};

/// First degree at which a and b differ (compared up to the smaller bound).
inline std::optional<int> first_difference(const GradedSeries& a, const GradedSeries& b)
{
    const int n = std::min(a.max_degree(), b.max_degree());
    for (int d = 0; d <= n; ++d)
        if (!(a[d] == b[d]))
            return d;
    return std::nullopt;
}

inline GradedSeries omega(const GradedSeries& f)
{
    GradedSeries out(f.max_degree());
    for (int d = 0; d <= f.max_degree(); ++d)
        out.set(d, omega(f[d]));
    return out;
}

inline GradedSeries operator*(const GradedSeries& a, const SymFunc& b)
{
    return a * GradedSeries::from(b, a.max_degree());
}

/// 1/F for a series with nonzero constant term.
inline GradedSeries series_inverse(const GradedSeries& f)
{
    const SymFunc& f0 = f[0];
    if (f0.is_zero())
        throw SeriesError("series_inverse: constant term is zero");
    const Coefficient c0 = f0.coefficient(Partition());
    const Coefficient inv0 = 1 / c0;
    const int n = f.max_degree();
    GradedSeries g(n);
    g.set(0, SymFunc::constant(inv0));
    for (int d = 1; d <= n; ++d) {
        SymFunc acc;
        for (int i = 1; i <= d; ++i)
            if (!f[i].is_zero() && !g[d - i].is_zero())
                acc += f[i] * g[d - i];
        acc *= -inv0;
        g.set(d, std::move(acc));
    }
    return g;
}

inline GradedSeries series_div(const GradedSeries& f, const GradedSeries& g)
{
    return f * series_inverse(g.truncated(f.max_degree()));
}

enum class Parity { odd, even };

/// Keeps components of one parity. With alternating set, the component of
/// degree 2k+1 (odd) or 2k (even) is multiplied by (-1)^k.
inline GradedSeries parity_split(const GradedSeries& f, Parity parity, bool alternating = false)
{
    GradedSeries out(f.max_degree());
    const int r = parity == Parity::odd ? 1 : 0;
    for (int d = r; d <= f.max_degree(); d += 2) {
        SymFunc c = f[d];
        if (alternating && ((d - r) / 2) % 2 == 1)
            c = -c;
        out.set(d, std::move(c));
    }
    return out;
}

/// sum_{m >= 1} coeffs[m] G^m, for G with zero constant term. coeffs[0] is ignored.
inline GradedSeries compose_scalar(const std::vector<Coefficient>& coeffs, const GradedSeries& g)
{
    if (!g[0].is_zero())
        throw SeriesError("compose_scalar: inner series has a nonzero constant term");
    const int n = g.max_degree();
    GradedSeries out(n);
    GradedSeries power = g;  // G^m, valuation >= m
    for (int m = 1; m <= n; ++m) {
        if (m < static_cast<int>(coeffs.size()) && coeffs[static_cast<std::size_t>(m)] != 0)
            out += power * coeffs[static_cast<std::size_t>(m)];
        if (m < n)
            power = power * g;
    }
    return out;
}

/// Exact Taylor coefficients of elementary functions about 0.
namespace taylor {

using Coeffs = std::vector<Coefficient>;

inline Coeffs exp(int n)
{
    Coeffs c(static_cast<std::size_t>(n) + 1);
    Coefficient f = 1;
    for (int k = 0; k <= n; ++k) {
        if (k > 0)
            f /= k;
        c[static_cast<std::size_t>(k)] = f;
    }
    return c;
}

/// log(1 + x)
inline Coeffs log1p(int n)
{
    Coeffs c(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k)
        c[static_cast<std::size_t>(k)] = rational(k % 2 ? 1 : -1, k);
    return c;
}

inline Coeffs arctanh(int n)
{
    Coeffs c(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; k += 2)
        c[static_cast<std::size_t>(k)] = rational(1, k);
    return c;
}

inline Coeffs arctan(int n)
{
    Coeffs c(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; k += 2)
        c[static_cast<std::size_t>(k)] = rational((k / 2) % 2 ? -1 : 1, k);
    return c;
}

namespace detail {

inline Coeffs divide(const Coeffs& num, const Coeffs& den)
{
    Coeffs q(num.size());
    for (std::size_t k = 0; k < num.size(); ++k) {
        Coefficient acc = num[k];
        for (std::size_t i = 1; i <= k && i < den.size(); ++i)
            acc -= den[i] * q[k - i];
        q[k] = acc / den[0];
    }
    return q;
}

// sinh/cosh (hyperbolic) or sin/cos
inline Coeffs tangent(int n, bool hyperbolic)
{
    Coeffs s(static_cast<std::size_t>(n) + 1), c(static_cast<std::size_t>(n) + 1);
    auto e = exp(n);
    for (int k = 0; k <= n; ++k) {
        int sign = (hyperbolic || (k / 2) % 2 == 0) ? 1 : -1;
        (k % 2 ? s : c)[static_cast<std::size_t>(k)] = e[static_cast<std::size_t>(k)] * sign;
    }
    return divide(s, c);
}

}  // namespace detail

inline Coeffs tan(int n) { return detail::tangent(n, false); }
inline Coeffs tanh(int n) { return detail::tangent(n, true); }

}  // namespace taylor

inline GradedSeries exp_series(const GradedSeries& g)
{
    return GradedSeries::constant(1, g.max_degree()) + compose_scalar(taylor::exp(g.max_degree()), g);
}
inline GradedSeries log1p_series(const GradedSeries& g) { return compose_scalar(taylor::log1p(g.max_degree()), g); }
inline GradedSeries tan_series(const GradedSeries& g) { return compose_scalar(taylor::tan(g.max_degree()), g); }
inline GradedSeries tanh_series(const GradedSeries& g) { return compose_scalar(taylor::tanh(g.max_degree()), g); }
inline GradedSeries arctan_series(const GradedSeries& g) { return compose_scalar(taylor::arctan(g.max_degree()), g); }
inline GradedSeries arctanh_series(const GradedSeries& g)
{
    return compose_scalar(taylor::arctanh(g.max_degree()), g);
}

/// H = sum_n h_n
inline GradedSeries h_series(int n) { return GradedSeries::generate(n, [](int d) { return h(d); }); }
/// E = sum_n e_n
inline GradedSeries e_series(int n) { return GradedSeries::generate(n, [](int d) { return e(d); }); }

/// sum_{n >= 0} p_1^n = 1/(1 - p_1)
inline GradedSeries geometric_p1(int n)
{
    return GradedSeries::generate(n, [](int d) { return p(Partition::column(d)); });
}

}  // namespace sympleth
