#pragma once

// Integer partitions and the arithmetic functions keyed to them.

#include <sympleth/rational.hpp>

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sympleth {

/// A weakly decreasing sequence of positive integers.
///
/// Partitions are ordered first by size and then lexicographically by
/// parts, so within one degree [1,1,1] < [2,1] < [3]. This is the order
/// in which the terms of a symmetric function are stored and rendered.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts))
    {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] < 1)
                throw std::invalid_argument("partition parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("partition parts must be weakly decreasing");
        }
        size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// Sorts the parts and drops zeros.
    static Partition from_parts(std::vector<int> parts)
    {
        std::erase(parts, 0);
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return Partition(std::move(parts));
    }

    /// The single-row partition (n); empty for n = 0.
    static Partition row(int n) { return n == 0 ? Partition() : Partition({n}); }

    /// (1^n)
    static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

    /// (a, 1^b)
    static Partition hook(int arm, int leg)
    {
        std::vector<int> p{arm};
        p.insert(p.end(), static_cast<std::size_t>(leg), 1);
        return Partition(std::move(p));
    }

    std::span<const int> parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int operator[](std::size_t i) const { return parts_[i]; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }

    /// Number of parts equal to i.
    int multiplicity(int i) const
    {
        return static_cast<int>(std::count(parts_.begin(), parts_.end(), i));
    }

    bool all_parts_odd() const
    {
        return std::all_of(parts_.begin(), parts_.end(), [](int k) { return k % 2 != 0; });
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b)
    {
        if (auto c = a.size_ <=> b.size_; c != 0)
            return c;
        return std::lexicographical_compare_three_way(a.parts_.begin(), a.parts_.end(),
                                                      b.parts_.begin(), b.parts_.end());
    }

    /// "[3,2,1]", "[]"
    std::string to_string() const
    {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Multiset union of parts: p_a * p_b = p_{merge(a,b)}.
inline Partition merge(const Partition& a, const Partition& b)
{
    std::vector<int> out(static_cast<std::size_t>(a.length() + b.length()));
    std::merge(a.begin(), a.end(), b.begin(), b.end(), out.begin(), std::greater<>());
    return Partition(std::move(out));
}

/// Every part multiplied by k, i.e. the cycle type of the k-th power map on p.
inline Partition scale(const Partition& a, int k)
{
    std::vector<int> out(a.begin(), a.end());
    for (int& x : out)
        x *= k;
    return Partition(std::move(out));
}

/// All partitions of n in reverse-lexicographic order, [(n), ..., (1^n)].
inline std::vector<Partition> partitions_of(int n)
{
    if (n < 0)
        throw std::invalid_argument("partitions_of: negative size");
    std::vector<Partition> out;
    if (n == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> a{n};
    for (;;) {
        out.emplace_back(a);
        // rightmost part greater than 1
        int rem = 0;
        while (!a.empty() && a.back() == 1) {
            ++rem;
            a.pop_back();
        }
        if (a.empty())
            break;
        int k = --a.back();
        ++rem;
        while (rem > k) {
            a.push_back(k);
            rem -= k;
        }
        if (rem > 0)
            a.push_back(rem);
    }
    return out;
}

/// Transpose of the Young diagram.
inline Partition conjugate(const Partition& a)
{
    if (a.empty())
        return {};
    std::vector<int> out(static_cast<std::size_t>(a[0]), 0);
    for (int part : a)
        for (int j = 0; j < part; ++j)
            ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

/// Order of the centraliser of a permutation of cycle type a: prod_i i^{m_i} m_i!.
inline Integer z_of(const Partition& a)
{
    Integer z = 1;
    std::size_t i = 0;
    while (i < static_cast<std::size_t>(a.length())) {
        std::size_t j = i;
        while (j < static_cast<std::size_t>(a.length()) && a[j] == a[i])
            ++j;
        auto m = static_cast<int>(j - i);
        Integer pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(a[i]), static_cast<unsigned long>(m));
        z *= pw * factorial(m);
        i = j;
    }
    return z;
}

/// Number-theoretic Moebius function.
inline int mobius(long d)
{
    if (d < 1)
        throw std::invalid_argument("mobius: argument must be positive");
    int sign = 1;
    for (long q = 2; q * q <= d; ++q) {
        if (d % q == 0) {
            d /= q;
            if (d % q == 0)
                return 0;
            sign = -sign;
        }
    }
    if (d > 1)
        sign = -sign;
    return sign;
}

/// Staircase (n-1, n-2, ..., 1); empty for n = 1.
inline Partition staircase(int n)
{
    if (n < 1)
        throw std::invalid_argument("staircase: n must be at least 1");
    std::vector<int> parts;
    for (int k = n - 1; k >= 1; --k)
        parts.push_back(k);
    return Partition(std::move(parts));
}

/// Young-diagram containment: inner[i] <= outer[i] for every row.
inline bool contains(const Partition& outer, const Partition& inner)
{
    if (inner.length() > outer.length())
        return false;
    for (std::size_t i = 0; i < static_cast<std::size_t>(inner.length()); ++i)
        if (inner[i] > outer[i])
            return false;
    return true;
}

/// Parses "[3,2,1]" or "3,2,1" (whitespace ignored). Parts are sorted.
inline Partition parse_partition(std::string_view text)
{
    std::vector<int> parts;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
            ++i;
    };
    skip();
    bool bracket = i < text.size() && text[i] == '[';
    if (bracket)
        ++i;
    skip();
    while (i < text.size() && text[i] != ']') {
        if (text[i] < '0' || text[i] > '9')
            throw std::invalid_argument("parse_partition: expected digit in '" + std::string(text) + "'");
        int v = 0;
        while (i < text.size() && text[i] >= '0' && text[i] <= '9')
            v = v * 10 + (text[i++] - '0');
        parts.push_back(v);
        skip();
        if (i < text.size() && text[i] == ',') {
            ++i;
            skip();
        }
    }
    if (bracket) {
        if (i >= text.size())
            throw std::invalid_argument("parse_partition: missing ']'");
        ++i;
    }
    skip();
    if (i != text.size())
        throw std::invalid_argument("parse_partition: trailing characters");
    if (std::find(parts.begin(), parts.end(), 0) != parts.end())
        throw std::invalid_argument("parse_partition: parts must be positive");
    return Partition::from_parts(std::move(parts));
}

}  // namespace sympleth

template <>
struct std::hash<sympleth::Partition> {
    std::size_t operator()(const sympleth::Partition& p) const noexcept
    {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (int x : p)
            h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
        return h;
    }
};
