#include "support.hpp"

#include <gtest/gtest.h>

using namespace sympleth;
using namespace sympleth::oracle;
using testing_support::rng;

namespace {
Exponents x(std::initializer_list<int> v)
{
    Exponents out;
    for (int a : v)
        out.push_back(static_cast<std::uint8_t>(a));
    return out;
}
}  // namespace

TEST(Specialize, Examples)
{
    EXPECT_EQ(specialize(p(2), 2).to_string(), "x1^2 + x2^2");
    EXPECT_EQ(specialize(e(2), 2).to_string(), "x1*x2");
    EXPECT_EQ(specialize(schur(Partition({2, 1})), 3).coefficient(x({1, 1, 1})), 2);
    EXPECT_EQ(specialize(SymFunc(), 3).to_string(), "0");
}

TEST(Specialize, RingHomomorphism)
{
    auto& gen = rng();
    for (int trial = 0; trial < 4; ++trial) {
        SymFunc f = testing_support::random_symfunc(0, 4, gen), g = testing_support::random_symfunc(0, 4, gen);
        EXPECT_EQ(specialize(f * g, 8), specialize(f, 8) * specialize(g, 8));
        EXPECT_EQ(specialize(f + g, 8), specialize(f, 8) + specialize(g, 8));
    }
}

TEST(Specialize, SeparatesFunctionsOfDegreeAtMostM)
{
    for (int n = 1; n <= 5; ++n) {
        auto ps = partitions_of(n);
        for (std::size_t i = 0; i < ps.size(); ++i)
            for (std::size_t j = i + 1; j < ps.size(); ++j)
                EXPECT_FALSE(specialize(schur(ps[i]), n) == specialize(schur(ps[j]), n));
    }
    // fewer variables than the degree loses e_n
    EXPECT_TRUE(specialize(e(3), 2).is_zero());
}

TEST(MonomialPleth, Examples)
{
    EXPECT_EQ(monomial_pleth(p(2), p(3), 2).to_string(), "x1^6 + x2^6");
    EXPECT_EQ(monomial_pleth(h(2), e(2), 4), specialize(schur(Partition({2, 2})) + schur(Partition({1, 1, 1, 1})), 4));
    auto& gen = rng();
    SymFunc f = testing_support::random_symfunc(0, 4, gen);
    EXPECT_EQ(monomial_pleth(f, p(1), 4), specialize(f, 4));
    EXPECT_THROW(monomial_pleth(h(2), -p(1), 3), std::invalid_argument);
    EXPECT_THROW(monomial_pleth(h(2), p(1) * rational(1, 2), 3), std::invalid_argument);
}

TEST(MonomialPleth, EnvelopeBoundKeepsPartitionCoefficients)
{
    for (auto [f, g] : {std::pair{h(3), e(2)}, std::pair{schur(Partition({2, 1})), h(2)}}) {
        auto full = monomial_pleth(f, g, 6);
        auto pruned = monomial_pleth(f, g, 6, 6);
        for (const auto& l : partitions_of(6)) {
            Exponents e(6, 0);
            for (int i = 0; i < l.length(); ++i)
                e[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(l[static_cast<std::size_t>(i)]);
            EXPECT_EQ(full.coefficient(e), pruned.coefficient(e));
        }
        EXPECT_EQ(symmetric_from_monomials(pruned, 6), pleth(f, g, 6)[6]);
    }
    EXPECT_EQ(envelope(x({0, 2, 1})), 5);
}

TEST(SymmetricFromMonomials, NeedsEnoughVariables)
{
    EXPECT_THROW(symmetric_from_monomials(specialize(h(3), 2), 3), std::invalid_argument);
    EXPECT_EQ(symmetric_from_monomials(specialize(h(3), 3), 3), h(3));
}

TEST(FreeLie, LyndonBasisShape)
{
    for (int n = 1; n <= 6; ++n) {
        LyndonBasis b(n);
        EXPECT_EQ(b.words.size(), static_cast<std::size_t>(factorial(n - 1).get_ui()));
    }
    WordPoly expected{{Word{0, 1}, 1}, {Word{1, 0}, -1}};
    EXPECT_EQ(standard_bracketing(Word{0, 1}), expected);
    // the standard bracket of w has w as its smallest word, coefficient 1
    for (const auto& w : LyndonBasis(5).words)
        EXPECT_EQ(standard_bracketing(w).begin()->first, w);
}

TEST(FreeLie, CharacterExamples)
{
    EXPECT_EQ(lie_character(1), p(1));
    EXPECT_EQ(render(lie_character(2)), "1/2*p[1,1] - 1/2*p[2]");
    EXPECT_EQ(lie_character(3), lie(3));
    EXPECT_THROW(lie_character(0), std::invalid_argument);
    EXPECT_THROW(lie_character(8), std::invalid_argument);
}

TEST(FreeLie, MatchesMoebiusFormula)
{
    for (int n = 1; n <= 7; ++n)
        EXPECT_EQ(lie_character(n), lie(n)) << n;
}

TEST(Enumeration, AlternatingCounts)
{
    EXPECT_EQ(alternating_count(0), 1);
    EXPECT_EQ(alternating_count(1), 1);
    EXPECT_EQ(alternating_count(4), 5);
    EXPECT_EQ(alternating_count(5), 16);
    EXPECT_EQ(alternating_count(6), 61);
    for (int n = 0; n <= 9; ++n)
        EXPECT_EQ(alternating_count(n), testing_support::brute_alternating(n)) << n;
    EXPECT_THROW(alternating_count(-1), std::invalid_argument);
}

TEST(Enumeration, StandardTableaux)
{
    EXPECT_EQ(syt_count(Partition({1}), Partition()), 1);
    EXPECT_EQ(syt_count(Partition({3, 2, 1}), Partition({1})), 16);
    for (int n = 1; n <= 10; ++n)
        EXPECT_EQ(syt_count(Partition::row(n), Partition()), 1);
    // straight shapes: the count is the dimension of the irreducible
    for (int n = 1; n <= 7; ++n)
        for (const auto& l : partitions_of(n))
            EXPECT_EQ(Coefficient(static_cast<long>(syt_count(l, Partition()))), dimension(schur(l)));
    EXPECT_THROW(syt_count(Partition({2}), Partition({1, 1})), std::invalid_argument);
}

TEST(Enumeration, StaircaseTableauxAreAlternatingPermutations)
{
    for (int n = 2; n <= 7; ++n) {
        Partition inner = n >= 3 ? staircase(n - 2) : Partition();
        EXPECT_EQ(syt_count(staircase(n), inner), alternating_count(2 * n - 3)) << n;
    }
}
