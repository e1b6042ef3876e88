#include "support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace sympleth;

TEST(PartitionsOf, ZeroIsOnlyEmpty)
{
    auto ps = partitions_of(0);
    ASSERT_EQ(ps.size(), 1u);
    EXPECT_TRUE(ps[0].empty());
    EXPECT_EQ(ps[0].size(), 0);
}

TEST(PartitionsOf, FourInReverseLexOrder)
{
    std::vector<Partition> expected{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
    EXPECT_EQ(partitions_of(4), expected);
}

TEST(PartitionsOf, CountsMatchPentagonalRecurrence)
{
    auto counts = testing_support::partition_counts(12);
    EXPECT_EQ(partitions_of(10).size(), 42u);
    for (int n = 0; n <= 12; ++n) {
        auto ps = partitions_of(n);
        EXPECT_EQ(static_cast<long>(ps.size()), counts[static_cast<std::size_t>(n)]) << n;
        std::set<Partition> unique(ps.begin(), ps.end());
        EXPECT_EQ(unique.size(), ps.size());
        for (const auto& p : ps)
            EXPECT_EQ(p.size(), n);
    }
}

TEST(PartitionsOf, NegativeRejected) { EXPECT_THROW(partitions_of(-1), std::invalid_argument); }

TEST(Partition, RejectsInvalidParts)
{
    EXPECT_THROW(Partition({1, 2}), std::invalid_argument);
    EXPECT_THROW(Partition({2, 0}), std::invalid_argument);
    EXPECT_THROW(Partition({-1}), std::invalid_argument);
}

TEST(Partition, DerivedFields)
{
    Partition l{3, 3, 1};
    EXPECT_EQ(l.size(), 7);
    EXPECT_EQ(l.length(), 3);
    EXPECT_EQ(l.multiplicity(3), 2);
    EXPECT_EQ(l.multiplicity(2), 0);
    EXPECT_TRUE(l.all_parts_odd());
    EXPECT_FALSE(Partition({2, 1}).all_parts_odd());
}

TEST(Partition, TextForm)
{
    EXPECT_EQ(Partition({3, 2, 1}).to_string(), "[3,2,1]");
    EXPECT_EQ(Partition().to_string(), "[]");
    EXPECT_EQ(parse_partition("[3,2,1]"), Partition({3, 2, 1}));
    EXPECT_EQ(parse_partition("[]"), Partition());
    EXPECT_EQ(parse_partition("[1, 2]"), Partition({2, 1}));
    EXPECT_EQ(parse_partition("3,2"), Partition({3, 2}));
    EXPECT_THROW(parse_partition("[3,a]"), std::invalid_argument);
    EXPECT_THROW(parse_partition("[3,2"), std::invalid_argument);
    EXPECT_THROW(parse_partition("[2,0]"), std::invalid_argument);
}

TEST(Partition, OrderIsBySizeThenLex)
{
    EXPECT_LT(Partition({3}), Partition({1, 1, 1, 1}));
    EXPECT_LT(Partition({1, 1}), Partition({2}));
}

TEST(Conjugate, Examples)
{
    EXPECT_EQ(conjugate(Partition({3, 1})), Partition({2, 1, 1}));
    EXPECT_EQ(conjugate(Partition()), Partition());
    for (int n = 1; n <= 8; ++n)
        EXPECT_EQ(conjugate(Partition::row(n)), Partition::column(n));
}

TEST(Conjugate, InvolutionThroughTwelve)
{
    for (int n = 0; n <= 12; ++n)
        for (const auto& l : partitions_of(n))
            EXPECT_EQ(conjugate(conjugate(l)), l);
}

TEST(ZOf, Examples)
{
    EXPECT_EQ(z_of(Partition({1, 1, 1})), 6);
    EXPECT_EQ(z_of(Partition({3, 1, 1})), 6);
    for (int n = 1; n <= 9; ++n)
        EXPECT_EQ(z_of(Partition::row(n)), n);
    EXPECT_EQ(z_of(Partition()), 1);
}

TEST(ZOf, ClassSizesSumToGroupOrder)
{
    for (int n = 0; n <= 10; ++n) {
        Integer total = 0;
        for (const auto& l : partitions_of(n))
            total += factorial(n) / z_of(l);
        EXPECT_EQ(total, factorial(n)) << n;
    }
}

TEST(Mobius, Examples)
{
    EXPECT_EQ(mobius(1), 1);
    EXPECT_EQ(mobius(4), 0);
    EXPECT_EQ(mobius(6), 1);
    EXPECT_EQ(mobius(30), -1);
    EXPECT_THROW(mobius(0), std::invalid_argument);
}

TEST(Mobius, DivisorSumIsDelta)
{
    for (int j = 1; j <= 200; ++j) {
        int total = 0;
        for (int d = 1; d <= j; ++d)
            if (j % d == 0)
                total += mobius(d);
        EXPECT_EQ(total, j == 1 ? 1 : 0) << j;
    }
}

TEST(Staircase, Examples)
{
    EXPECT_EQ(staircase(1), Partition());
    EXPECT_EQ(staircase(2), Partition({1}));
    EXPECT_EQ(staircase(4), Partition({3, 2, 1}));
    EXPECT_THROW(staircase(0), std::invalid_argument);
}

TEST(Contains, Nesting)
{
    EXPECT_TRUE(contains(Partition({3, 2, 1}), Partition({1})));
    EXPECT_FALSE(contains(Partition({2}), Partition({1, 1})));
}
