#pragma once

// The S_n-character of the multilinear part of the free Lie algebra,
// computed from the Lyndon bracket basis. Independent of the Moebius
// formula for Lie_n.

#include <sympleth/partition.hpp>
#include <sympleth/symfunc.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sympleth::oracle {

using Word = std::vector<std::int8_t>;
/// Noncommutative polynomial: word -> integer coefficient.
using WordPoly = std::map<Word, std::int64_t>;

/// [a, b] = ab - ba, expanded in words.
inline WordPoly bracket(const WordPoly& a, const WordPoly& b)
{
    WordPoly out;
    auto add = [&out](Word w, std::int64_t c) {
        auto& slot = out[std::move(w)];
        slot += c;
    };
    for (const auto& [u, cu] : a) {
        for (const auto& [v, cv] : b) {
            Word uv = u;
            uv.insert(uv.end(), v.begin(), v.end());
            add(std::move(uv), cu * cv);
            Word vu = v;
            vu.insert(vu.end(), u.begin(), u.end());
            add(std::move(vu), -cu * cv);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

/// Standard bracketing of a Lyndon word with distinct letters: split off the
/// longest proper Lyndon suffix, which starts at the smallest later letter.
inline WordPoly standard_bracketing(const Word& w)
{
    if (w.size() == 1)
        return WordPoly{{w, 1}};
    auto split = std::min_element(w.begin() + 1, w.end());
    Word u(w.begin(), split), v(split, w.end());
    return bracket(standard_bracketing(u), standard_bracketing(v));
}

/// Multilinear Lyndon words on letters 0..n-1: permutations starting with 0.
/// There are (n-1)! of them, listed in lexicographic order.
struct LyndonBasis {
    int degree = 0;
    std::vector<Word> words;
    std::vector<WordPoly> brackets;

    explicit LyndonBasis(int n) : degree(n)
    {
        if (n < 1)
            throw std::invalid_argument("LyndonBasis: n must be positive");
        Word rest(static_cast<std::size_t>(n - 1));
        std::iota(rest.begin(), rest.end(), std::int8_t{1});
        do {
            Word w(static_cast<std::size_t>(n), 0);
            std::copy(rest.begin(), rest.end(), w.begin() + 1);
            brackets.push_back(standard_bracketing(w));
            words.push_back(std::move(w));
        } while (std::next_permutation(rest.begin(), rest.end()));
    }
};

namespace detail {

// Lexicographic rank of a permutation of 0..n-1.
inline std::size_t permutation_rank(const Word& w)
{
    const std::size_t n = w.size();
    std::size_t rank = 0;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (int v = 0; v < w[i]; ++v)
            if (!seen[static_cast<std::size_t>(v)])
                ++smaller;
        seen[static_cast<std::size_t>(w[i])] = true;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

}  // namespace detail

/// Frobenius characteristic sum_mu chi(mu) p_mu / z_mu of S_n acting on the
/// multilinear component of the free Lie algebra on n generators.
///
/// Each standard bracket P_w equals w plus lexicographically larger words,
/// so any multilinear Lie element is decomposed by repeatedly cancelling its
/// smallest word. The coefficient of P_w in sigma.P_w is known once all
/// smaller words are cancelled.
inline SymFunc lie_character(int n)
{
    if (n < 1 || n > 7)
        throw std::invalid_argument("lie_character: supported range is 1 <= n <= 7");
    LyndonBasis basis(n);
    const std::size_t words = static_cast<std::size_t>(factorial(n).get_ui());
    // sparse (rank, coefficient) form of each basis element
    std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> sparse;
    std::vector<std::size_t> lyndon_rank;
    for (std::size_t b = 0; b < basis.words.size(); ++b) {
        std::vector<std::pair<std::size_t, std::int64_t>> s;
        for (const auto& [w, c] : basis.brackets[b])
            s.emplace_back(detail::permutation_rank(w), c);
        sparse.push_back(std::move(s));
        lyndon_rank.push_back(detail::permutation_rank(basis.words[b]));
    }
    // Lyndon words are exactly the ranks below (n-1)!, in basis order
    for (std::size_t b = 0; b < lyndon_rank.size(); ++b)
        if (lyndon_rank[b] != b)
            throw std::logic_error("lie_character: unexpected Lyndon word order");

    SymFunc out;
    std::vector<std::int64_t> dense(words);
    for (const auto& mu : partitions_of(n)) {
        // representative permutation: consecutive cycles
        Word sigma(static_cast<std::size_t>(n));
        int start = 0;
        for (int len : mu) {
            for (int i = 0; i < len; ++i)
                sigma[static_cast<std::size_t>(start + i)] = static_cast<std::int8_t>(start + (i + 1) % len);
            start += len;
        }
        std::int64_t trace = 0;
        for (std::size_t b = 0; b < basis.words.size(); ++b) {
            std::fill(dense.begin(), dense.end(), 0);
            for (const auto& [w, c] : basis.brackets[b]) {
                Word image(w.size());
                for (std::size_t i = 0; i < w.size(); ++i)
                    image[i] = sigma[static_cast<std::size_t>(w[i])];
                dense[detail::permutation_rank(image)] += c;
            }
            for (std::size_t r = 0; r <= b; ++r) {
                std::int64_t c = dense[r];
                if (c == 0)
                    continue;
                if (r == b) {
                    trace += c;
                    break;
                }
                for (const auto& [rank, coef] : sparse[r])
                    dense[rank] -= c * coef;
            }
        }
        out.add_term(mu, ratio(Integer(static_cast<long>(trace)), z_of(mu)));
    }
    return out;
}

}  // namespace sympleth::oracle
