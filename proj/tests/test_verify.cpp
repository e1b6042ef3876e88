#include "support.hpp"

#include <gtest/gtest.h>

using namespace sympleth;
using namespace sympleth::verify;

namespace {

bool same_report(const CheckReport& a, const CheckReport& b)
{
    return a.check_name == b.check_name && a.anchor == b.anchor && a.max_degree == b.max_degree &&
           a.passed == b.passed && a.first_failure_degree == b.first_failure_degree &&
           a.failed_comparison == b.failed_comparison && a.mismatch == b.mismatch;
}

GradedSeries named(const char* name, int n) { return *named_series(name, n); }

}  // namespace

TEST(Registry, NamesInOrder)
{
    std::vector<std::string> expected{
        "thrall_h",     "thrall_e",       "main_inverse", "main_inverse_alt", "arctanh_pleth", "arctan_pleth_alt",
        "he_restate",   "hook_regular",   "he_lie_even",  "hook_alt_even",    "hook_alt_odd",  "carlitz",
        "foulkes",      "alt_carlitz",    "tanh_form",    "tan_form",         "arctanh_sum",   "arctan_sum",
        "jordan",       "schur_positivity", "parity_props", "alt_parity_props", "lie_oracle",  "pleth_oracle"};
    EXPECT_EQ(check_names(), expected);
    for (const auto& c : registry()) {
        EXPECT_FALSE(c.anchor.empty()) << c.name;
        EXPECT_GE(c.max_supported_degree, 7) << c.name;
    }
}

TEST(RunCheck, UnknownNameRejected)
{
    EXPECT_THROW(run_check("no_such_check", 3), std::invalid_argument);
    EXPECT_THROW(run_check("thrall_h", -1), std::invalid_argument);
}

TEST(RunCheck, SpecExamples)
{
    auto thrall = run_check("thrall_h", 10);
    EXPECT_TRUE(thrall.passed);
    EXPECT_EQ(thrall.max_degree, 10);
    EXPECT_FALSE(thrall.first_failure_degree);
    EXPECT_TRUE(run_check("main_inverse", 11).passed);
    EXPECT_TRUE(run_check("main_inverse_alt", 11).passed);
}

TEST(RunCheck, DegreeCappedPerCheck)
{
    EXPECT_EQ(run_check("lie_oracle", 9).max_degree, 7);
    EXPECT_EQ(run_check("thrall_h", 9).max_degree, 9);
}

TEST(RunAll, DegreeZeroPassesVacuously)
{
    for (const auto& r : run_all(0))
        EXPECT_TRUE(r.passed) << r.check_name;
}

TEST(RunAll, AllPassAtNineAndAreDeterministic)
{
    auto single = run_all(9, 1);
    auto again = run_all(9, 1);
    auto threaded = run_all(9, 4);
    ASSERT_EQ(single.size(), registry().size());
    for (std::size_t i = 0; i < single.size(); ++i) {
        EXPECT_TRUE(single[i].passed) << single[i].check_name;
        EXPECT_EQ(single[i].check_name, registry()[i].name);
        EXPECT_TRUE(same_report(single[i], again[i]));
        EXPECT_TRUE(same_report(single[i], threaded[i]));
    }
}

TEST(FaultInjection, EverySideOfEveryCheckDetectsAtPerturbedDegree)
{
    for (std::uint64_t seed : {1u, 2u}) {
        auto results = testing_support::inject_faults(9, seed);
        EXPECT_GT(results.size(), registry().size());
        for (const auto& r : results)
            EXPECT_TRUE(r.detected) << r.check << " comparison " << r.comparison << " side "
                                    << (r.side == Side::lhs ? "lhs" : "rhs") << " degree " << r.degree;
    }
}

TEST(FaultInjection, ReportCarriesMismatch)
{
    const Check& check = find_check("thrall_h");
    Perturbation fault{0, Side::rhs, 4, Partition({2, 2}), rational(1, 3)};
    auto report = compare(check, 6, build(check, 6), fault);
    EXPECT_FALSE(report.passed);
    EXPECT_EQ(*report.first_failure_degree, 4);
    ASSERT_TRUE(report.mismatch);
    EXPECT_EQ(report.mismatch->first, "p[1,1,1,1]");
    EXPECT_EQ(report.mismatch->second, "p[1,1,1,1] + 1/3*p[2,2]");
    EXPECT_THROW(compare(check, 6, build(check, 6), Perturbation{0, Side::lhs, 4, Partition({3}), 1}),
                 std::invalid_argument);
    EXPECT_THROW(compare(check, 6, build(check, 6), Perturbation{7, Side::lhs, 1, Partition({1}), 1}),
                 std::out_of_range);
}

// The even alternating hook identity only holds with the sign (-1)^{m/2}
// on Hk_m; the variant with (-1)^{m/2-1} flips the whole left side.
TEST(StatementVariants, EvenHookSignMustBeMinusOneToTheHalfDegree)
{
    const int n = 10;
    auto rhs = GradedSeries::generate(n, [](int d) {
        if (d == 0 || d % 2)
            return SymFunc();
        SymFunc term = p(Partition::column(d));
        return (d / 2) % 2 ? -term : term;
    });
    auto hooks = hk_alt_series(Parity::even, n) - GradedSeries::constant(1, n);
    auto lie_alt = named("Lie_odd_alt", n);
    EXPECT_EQ(pleth(hooks, lie_alt), rhs);
    auto flipped = pleth(-hooks, lie_alt);
    EXPECT_EQ(first_difference(flipped, rhs), 2);
}

// (HE)[Lie_even] has no degree-1 part, so it cannot equal (1-p_2)(1-p_1)^-2;
// that value belongs to the product (HE)[Lie_odd] (HE)[Lie_even].
TEST(StatementVariants, HELieEvenEqualsRatioNotProduct)
{
    const int n = 10;
    auto g = geometric_p1(n);
    auto product_form = g * g * (SymFunc::constant(1) - p(2));
    auto even_side = pleth(named("HE", n), named("Lie_even", n));
    EXPECT_EQ(first_difference(even_side, product_form), 1);
    auto odd_side = pleth(named("HE", n), named("Lie_odd", n));
    EXPECT_EQ(odd_side * even_side, product_form);
    EXPECT_TRUE(run_check("he_lie_even", n).passed);
}
