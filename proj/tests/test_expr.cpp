#include "support.hpp"

#include <sympleth/expr.hpp>

#include <gtest/gtest.h>

using namespace sympleth;
using namespace sympleth::expr;

namespace {

GradedSeries S(const SymFunc& f, int n) { return GradedSeries::from(f, n); }

const std::vector<std::string>& corpus()
{
    static const std::vector<std::string> items{
        "p[2] o p[3]",
        "E_odd / E_even",
        "(E_odd/E_even) o Lie_odd",
        "Lie_odd o (E_odd/E_even)",
        "H o Lie",
        "E o Lie * (1 - p[2])",
        "h[2] o e[2] + s[2,1] o h[2]",
        "-p[1] + 3*p[2]/2",
        "tanh(odd(p[1] + p[3]))",
        "exp(p[1]) - 1",
        "omega(H) - E",
        "odd_alt(E) / even_alt(E)",
        "arctan(p[1]) + arctanh(p[2]) + log1p(p[1]) + tan(p[1])",
        "even(HE) o Lie_even",
        "p[1] o p[2] o p[3]",
        "Jordan - H o Lie_odd",
        "Hk o Lie_odd",
        "h[0] + e[2,1] + s[]",
    };
    return items;
}

}  // namespace

TEST(Parse, PlethysmNode)
{
    auto e = parse("p[2] o p[3]");
    EXPECT_EQ(e->kind, Expr::Kind::pleth);
    EXPECT_EQ(e->offset, 6u);
    EXPECT_EQ(e->args[0]->kind, Expr::Kind::generator);
    EXPECT_EQ(e->args[1]->parts, std::vector<int>{3});
}

TEST(Parse, QuotientOfNames)
{
    auto e = parse("E_odd / E_even");
    EXPECT_EQ(e->kind, Expr::Kind::div);
    EXPECT_EQ(e->args[0]->name, "E_odd");
    EXPECT_EQ(e->args[1]->name, "E_even");
}

TEST(Parse, Precedence)
{
    EXPECT_TRUE(same_tree(*parse("p[1] o p[2] o p[3]"), *parse("p[1] o (p[2] o p[3])")));
    EXPECT_FALSE(same_tree(*parse("p[1] o p[2] o p[3]"), *parse("(p[1] o p[2]) o p[3]")));
    EXPECT_TRUE(same_tree(*parse("H o Lie * p[1]"), *parse("(H o Lie) * p[1]")));
    EXPECT_TRUE(same_tree(*parse("1 + 2 * 3"), *parse("1 + (2 * 3)")));
    EXPECT_TRUE(same_tree(*parse("1 - 2 - 3"), *parse("(1 - 2) - 3")));
    EXPECT_TRUE(same_tree(*parse("-p[1] o p[2]"), *parse("-(p[1] o p[2])")));
    EXPECT_TRUE(same_tree(*parse("  H\to\nLie "), *parse("H o Lie")));
}

TEST(Parse, TruncatedPlethysmReportsOffsetSeven)
{
    try {
        parse("p[2] o");
        FAIL() << "expected a parse error";
    } catch (const ParseError& err) {
        EXPECT_EQ(err.offset(), 7u);
        std::vector<std::string> expected{"number", "generator", "name", "function", "("};
        EXPECT_EQ(err.expected(), expected);
    }
}

TEST(Parse, ErrorPositions)
{
    auto offset_of = [](const char* text) -> std::size_t {
        try {
            parse(text);
        } catch (const ParseError& err) {
            return err.offset();
        }
        return 0;
    };
    EXPECT_EQ(offset_of("p[2] + Nope"), 8u);
    EXPECT_EQ(offset_of("(H"), 3u);
    EXPECT_EQ(offset_of("H )"), 3u);
    EXPECT_EQ(offset_of("p"), 2u);
    EXPECT_EQ(offset_of("p[2,]"), 5u);
    EXPECT_EQ(offset_of("H $ E"), 3u);
    EXPECT_EQ(offset_of("exp H"), 5u);
    EXPECT_EQ(offset_of(""), 1u);
}

TEST(Render, RoundTripsCorpus)
{
    for (const auto& text : corpus()) {
        auto tree = parse(text);
        std::string shown = render(*tree);
        EXPECT_TRUE(same_tree(*parse(shown), *tree)) << text << " -> " << shown;
        EXPECT_EQ(render(*parse(shown)), shown);
    }
}

TEST(Eval, SpecExamples)
{
    EXPECT_EQ(eval("(E_odd/E_even) o Lie_odd", 9), S(p(1), 9));
    EXPECT_EQ(eval("H o Lie", 8), geometric_p1(8));
    EXPECT_EQ(eval("1", 5), GradedSeries::constant(1, 5));
    EXPECT_EQ(eval("p[2] o p[3]", 6), S(p(6), 6));
}

TEST(Eval, Generators)
{
    EXPECT_EQ(eval("h[2,1]", 4), S(h(Partition({2, 1})), 4));
    EXPECT_EQ(eval("e[1,2]", 4), S(e(Partition({2, 1})), 4));
    EXPECT_EQ(eval("s[2,1]", 4), S(schur(Partition({2, 1})), 4));
    EXPECT_EQ(eval("h[0]", 2), GradedSeries::constant(1, 2));
    EXPECT_EQ(eval("3/6", 1), GradedSeries::constant(rational(1, 2), 1));
    EXPECT_EQ(eval("omega(H)", 6), *named_series("E", 6));
    EXPECT_EQ(eval("odd(H)", 6), *named_series("H_odd", 6));
    EXPECT_EQ(eval("even_alt(E)", 6), *named_series("E_even_alt", 6));
}

TEST(Eval, TruncationExtensionIsStable)
{
    for (const auto& text : corpus()) {
        auto tree = parse(text);
        EXPECT_EQ(eval(*tree, 9).truncated(6), eval(*tree, 6)) << text;
    }
}

TEST(Eval, TypedErrorsCarryOffsets)
{
    auto offset_of = [](const char* text) -> std::size_t {
        try {
            eval(text, 4);
        } catch (const EvalError& err) {
            return err.offset();
        }
        return 0;
    };
    EXPECT_EQ(offset_of("H o 1"), 3u);
    EXPECT_EQ(offset_of("1 / p[1]"), 3u);
    EXPECT_EQ(offset_of("exp(1 + p[1])"), 1u);
    EXPECT_EQ(offset_of("2 + p[0]"), 5u);
    EXPECT_EQ(offset_of("s[1,2]"), 1u);
    EXPECT_THROW(eval("H", -1), std::invalid_argument);
}
