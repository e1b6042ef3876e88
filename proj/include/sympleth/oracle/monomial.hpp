#pragma once

// Polynomials in finitely many variables x_1..x_m, used to check the
// plethysm engine by substituting explicit alphabets.

#include <sympleth/detail/linear_solve.hpp>
#include <sympleth/partition.hpp>
#include <sympleth/symfunc.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sympleth::oracle {

using Exponents = std::vector<std::uint8_t>;

/// sum_i max_{j >= i} v_j. A monomial can divide x^lambda for some
/// partition lambda of size <= b only if this is <= b.
inline int envelope(const Exponents& v)
{
    int total = 0, run = 0;
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
        run = std::max(run, static_cast<int>(*it));
        total += run;
    }
    return total;
}

/// Finite map exponent vector -> coefficient over a fixed number of variables.
///
/// With a dominance bound b, only monomials of envelope <= b are kept. Such
/// a polynomial still determines every coefficient of x^lambda, lambda a
/// partition of size <= b, which is all a symmetric polynomial of degree
/// <= b needs.
class MonomialPoly {
public:
    explicit MonomialPoly(int variables, std::optional<int> bound = std::nullopt)
        : variables_(variables), bound_(bound)
    {
        if (variables < 1)
            throw std::invalid_argument("MonomialPoly: need at least one variable");
    }

    static MonomialPoly one(int variables, std::optional<int> bound = std::nullopt)
    {
        MonomialPoly out(variables, bound);
        out.add_term(Exponents(static_cast<std::size_t>(variables), 0), 1);
        return out;
    }

    int variables() const { return variables_; }
    std::optional<int> bound() const { return bound_; }
    const std::map<Exponents, Coefficient>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Coefficient coefficient(const Exponents& x) const
    {
        auto it = terms_.find(x);
        return it == terms_.end() ? Coefficient(0) : it->second;
    }

    void add_term(const Exponents& x, const Coefficient& c)
    {
        if (static_cast<int>(x.size()) != variables_)
            throw std::invalid_argument("MonomialPoly: exponent vector has wrong length");
        if (c == 0 || (bound_ && envelope(x) > *bound_))
            return;
        auto [it, inserted] = terms_.try_emplace(x, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    MonomialPoly& operator+=(const MonomialPoly& b)
    {
        check_compatible(b);
        for (const auto& [x, c] : b.terms_)
            add_term(x, c);
        return *this;
    }

    MonomialPoly& operator*=(const Coefficient& c)
    {
        if (c == 0)
            terms_.clear();
        for (auto& [x, v] : terms_)
            v *= c;
        return *this;
    }

    friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }

    friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b)
    {
        a.check_compatible(b);
        MonomialPoly out(a.variables_, a.bound_);
        Exponents x(static_cast<std::size_t>(a.variables_));
        for (const auto& [xa, ca] : a.terms_) {
            for (const auto& [xb, cb] : b.terms_) {
                for (std::size_t i = 0; i < x.size(); ++i) {
                    int v = xa[i] + xb[i];
                    if (v > 255)
                        throw std::overflow_error("MonomialPoly: exponent overflow");
                    x[i] = static_cast<std::uint8_t>(v);
                }
                out.add_term(x, ca * cb);
            }
        }
        return out;
    }

    friend bool operator==(const MonomialPoly& a, const MonomialPoly& b)
    {
        return a.variables_ == b.variables_ && a.terms_ == b.terms_;
    }

    /// "x1^2 + 2*x1*x2", "0"
    std::string to_string() const
    {
        if (terms_.empty())
            return "0";
        std::string out;
        bool first = true;
        // highest monomials first in lexicographic exponent order
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [x, c] = *it;
            bool neg = c < 0;
            Coefficient mag = neg ? Coefficient(-c) : c;
            out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
            first = false;
            std::string mono;
            for (std::size_t i = 0; i < x.size(); ++i) {
                if (x[i] == 0)
                    continue;
                if (!mono.empty())
                    mono += '*';
                mono += "x" + std::to_string(i + 1);
                if (x[i] > 1)
                    mono += "^" + std::to_string(x[i]);
            }
            if (mono.empty())
                out += sympleth::to_string(mag);
            else if (mag == 1)
                out += mono;
            else
                out += sympleth::to_string(mag) + "*" + mono;
        }
        return out;
    }

private:
    void check_compatible(const MonomialPoly& b) const
    {
        if (variables_ != b.variables_)
            throw std::invalid_argument("MonomialPoly: variable count mismatch");
    }

    int variables_;
    std::optional<int> bound_;
    std::map<Exponents, Coefficient> terms_;
};

namespace detail {

// sum_a mult_a * a^k over an alphabet of monomials
inline MonomialPoly power_sum_over(const std::vector<std::pair<Exponents, Coefficient>>& alphabet, int k, int m,
                                   std::optional<int> bound)
{
    MonomialPoly out(m, bound);
    Exponents y(static_cast<std::size_t>(m));
    for (const auto& [x, mult] : alphabet) {
        for (std::size_t i = 0; i < y.size(); ++i) {
            int v = x[i] * k;
            if (v > 255)
                throw std::overflow_error("MonomialPoly: exponent overflow");
            y[i] = static_cast<std::uint8_t>(v);
        }
        out.add_term(y, mult);
    }
    return out;
}

inline MonomialPoly evaluate_on_alphabet(const SymFunc& f, const std::vector<std::pair<Exponents, Coefficient>>& alphabet,
                                         int m, std::optional<int> bound)
{
    std::map<int, MonomialPoly> powers;
    auto power = [&](int k) -> const MonomialPoly& {
        auto it = powers.find(k);
        if (it == powers.end())
            it = powers.emplace(k, power_sum_over(alphabet, k, m, bound)).first;
        return it->second;
    };
    MonomialPoly out(m, bound);
    for (const auto& [lambda, c] : f.terms()) {
        MonomialPoly term = MonomialPoly::one(m, bound);
        for (int k : lambda) {
            term = term * power(k);
            if (term.is_zero())
                break;
        }
        term *= c;
        out += term;
    }
    return out;
}

}  // namespace detail

/// f(x_1, ..., x_m, 0, 0, ...), via p_k -> x_1^k + ... + x_m^k.
inline MonomialPoly specialize(const SymFunc& f, int m, std::optional<int> bound = std::nullopt)
{
    std::vector<std::pair<Exponents, Coefficient>> alphabet;
    for (int i = 0; i < m; ++i) {
        Exponents x(static_cast<std::size_t>(m), 0);
        x[static_cast<std::size_t>(i)] = 1;
        alphabet.emplace_back(std::move(x), 1);
    }
    return detail::evaluate_on_alphabet(f, alphabet, m, bound);
}

/// f evaluated on the alphabet formed by the monomials of g(x_1..x_m), each
/// repeated according to its coefficient. g must specialise to a polynomial
/// with nonnegative integer coefficients.
inline MonomialPoly monomial_pleth(const SymFunc& f, const SymFunc& g, int m, std::optional<int> bound = std::nullopt)
{
    MonomialPoly gx = specialize(g, m, bound);
    std::vector<std::pair<Exponents, Coefficient>> alphabet;
    for (const auto& [x, c] : gx.terms()) {
        if (c < 0 || !is_integer(c))
            throw std::invalid_argument("monomial_pleth: inner function must have nonnegative integer monomial coefficients");
        alphabet.emplace_back(x, c);
    }
    return detail::evaluate_on_alphabet(f, alphabet, m, bound);
}

/// Recovers the homogeneous degree-n symmetric function whose specialisation
/// is `poly`, reading only the coefficients of x^lambda for lambda |- n.
/// Needs at least n variables.
inline SymFunc symmetric_from_monomials(const MonomialPoly& poly, int n)
{
    const int m = poly.variables();
    if (m < n)
        throw std::invalid_argument("symmetric_from_monomials: need at least as many variables as the degree");
    auto parts = partitions_of(n);
    const std::size_t k = parts.size();
    auto exps = [m](const Partition& lambda) {
        Exponents x(static_cast<std::size_t>(m), 0);
        for (std::size_t i = 0; i < static_cast<std::size_t>(lambda.length()); ++i)
            x[i] = static_cast<std::uint8_t>(lambda[i]);
        return x;
    };
    // a[i][j] = coefficient of x^{parts[i]} in p_{parts[j]}
    sympleth::detail::Matrix a(k, std::vector<Coefficient>(k));
    for (std::size_t j = 0; j < k; ++j) {
        MonomialPoly pj = specialize(p(parts[j]), m, n);
        for (std::size_t i = 0; i < k; ++i)
            a[i][j] = pj.coefficient(exps(parts[i]));
    }
    std::vector<Coefficient> b(k);
    for (std::size_t i = 0; i < k; ++i)
        b[i] = poly.coefficient(exps(parts[i]));
    auto c = sympleth::detail::solve(std::move(a), std::move(b));
    SymFunc out;
    for (std::size_t j = 0; j < k; ++j)
        out.add_term(parts[j], c[j]);
    return out;
}

}  // namespace sympleth::oracle
