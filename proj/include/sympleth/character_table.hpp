#pragma once

// Symmetric group character tables by the Murnaghan-Nakayama rule.

#include <sympleth/detail/memo.hpp>
#include <sympleth/partition.hpp>

#include <cstdint>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sympleth {

/// chi^lambda(mu) for all lambda, mu |- n. Rows and columns follow
/// partitions_of(n).
class CharacterTable {
public:
    explicit CharacterTable(int n) : n_(n), partitions_(partitions_of(n))
    {
        for (std::size_t i = 0; i < partitions_.size(); ++i)
            index_.emplace(partitions_[i], i);
        values_.resize(partitions_.size() * partitions_.size());
        for (std::size_t j = 0; j < partitions_.size(); ++j) {
            // memo entries depend on the class through the remaining parts
            std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t> memo;
            for (std::size_t i = 0; i < partitions_.size(); ++i)
                values_[i * partitions_.size() + j] = evaluate(beta_set(partitions_[i]), partitions_[j], 0, memo);
        }
    }

    int degree() const { return n_; }
    const std::vector<Partition>& partitions() const { return partitions_; }
    std::size_t index(const Partition& lambda) const
    {
        auto it = index_.find(lambda);
        if (it == index_.end())
            throw std::invalid_argument("character table: partition " + lambda.to_string() + " has wrong size");
        return it->second;
    }

    std::int64_t operator()(std::size_t irrep, std::size_t cls) const
    {
        return values_[irrep * partitions_.size() + cls];
    }
    std::int64_t operator()(const Partition& irrep, const Partition& cls) const
    {
        return (*this)(index(irrep), index(cls));
    }

private:
    // Beta-numbers lambda_i + (len - 1 - i), strictly decreasing.
    static std::vector<int> beta_set(const Partition& lambda)
    {
        std::vector<int> beta;
        int len = lambda.length();
        for (int i = 0; i < len; ++i)
            beta.push_back(lambda[static_cast<std::size_t>(i)] + len - 1 - i);
        return beta;
    }

    // Removing a rim hook of length k moves one bead from b to b-k; the
    // sign is (-1)^(beads strictly between).
    static std::int64_t evaluate(const std::vector<int>& beta, const Partition& mu, std::size_t pos,
                                 std::map<std::pair<std::vector<int>, std::size_t>, std::int64_t>& memo)
    {
        if (pos == static_cast<std::size_t>(mu.length()))
            return 1;
        auto key = std::make_pair(beta, pos);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;
        int k = mu[pos];
        std::int64_t total = 0;
        for (std::size_t i = 0; i < beta.size(); ++i) {
            int target = beta[i] - k;
            if (target < 0)
                continue;
            bool occupied = false;
            int between = 0;
            for (std::size_t j = 0; j < beta.size(); ++j) {
                if (beta[j] == target)
                    occupied = true;
                if (beta[j] > target && beta[j] < beta[i])
                    ++between;
            }
            if (occupied)
                continue;
            std::vector<int> next = beta;
            next[i] = target;
            std::sort(next.begin(), next.end(), std::greater<>());
            std::int64_t sub = evaluate(next, mu, pos + 1, memo);
            total += (between % 2 == 0) ? sub : -sub;
        }
        memo.emplace(std::move(key), total);
        return total;
    }

    int n_;
    std::vector<Partition> partitions_;
    std::map<Partition, std::size_t> index_;
    std::vector<std::int64_t> values_;
};

/// Shared, lazily built table for S_n.
inline const CharacterTable& character_table(int n)
{
    static detail::Memo<int, std::shared_ptr<const CharacterTable>> memo;
    if (n < 0)
        throw std::invalid_argument("character_table: negative degree");
    return *memo.get(n, [n] { return std::make_shared<const CharacterTable>(n); });
}

}  // namespace sympleth
