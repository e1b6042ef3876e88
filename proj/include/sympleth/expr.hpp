#pragma once

// A small expression language over named series and generators.
//
//   expr   := term (('+' | '-') term)*
//   term   := unary (('*' | '/') unary)*
//   unary  := '-' unary | factor
//   factor := atom | atom 'o' factor        (plethysm, right-associative)
//   atom   := integer | gen '[' parts ']' | name | fn '(' expr ')' | '(' expr ')'
//
// gen is one of p, h, e, s. Offsets are 1-based byte positions; the end of
// input sits one past the last byte.

#include <sympleth/lie.hpp>
#include <sympleth/plethysm.hpp>
#include <sympleth/schur.hpp>
#include <sympleth/series.hpp>

#include <algorithm>
#include <cctype>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sympleth::expr {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset, std::vector<std::string> expected)
        : std::runtime_error(what), offset_(offset), expected_(std::move(expected))
    {
    }
    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }

private:
    std::size_t offset_;
    std::vector<std::string> expected_;
};

/// Evaluation failure, tagged with the offset of the offending subexpression.
class EvalError : public std::runtime_error {
public:
    EvalError(const std::string& what, std::size_t offset) : std::runtime_error(what), offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
    enum class Kind { number, generator, name, negate, add, sub, mul, div, pleth, call };

    Kind kind;
    std::size_t offset = 1;
    Integer number;           // number
    char generator = 0;       // generator: p, h, e or s
    std::vector<int> parts;   // generator indices as written
    std::string name;         // name or function
    std::vector<ExprPtr> args;
};

/// Scalar-series and parity functions accepted in call position.
inline const std::vector<std::string>& function_names()
{
    static const std::vector<std::string> names{"exp",  "log1p", "tan",     "tanh",     "arctan", "arctanh",
                                                "odd",  "even",  "odd_alt", "even_alt", "omega"};
    return names;
}

/// Structural equality, ignoring offsets.
inline bool same_tree(const Expr& a, const Expr& b)
{
    if (a.kind != b.kind || a.number != b.number || a.generator != b.generator || a.parts != b.parts ||
        a.name != b.name || a.args.size() != b.args.size())
        return false;
    for (std::size_t i = 0; i < a.args.size(); ++i)
        if (!same_tree(*a.args[i], *b.args[i]))
            return false;
    return true;
}

namespace detail {

struct Token {
    enum class Kind { number, ident, punct, end };
    Kind kind;
    std::string text;
    std::size_t offset;  // 1-based
};

inline std::vector<Token> tokenize(std::string_view in)
{
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < in.size()) {
        unsigned char c = static_cast<unsigned char>(in[i]);
        if (std::isspace(c)) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (std::isdigit(c)) {
            while (i < in.size() && std::isdigit(static_cast<unsigned char>(in[i])))
                ++i;
            out.push_back({Token::Kind::number, std::string(in.substr(start, i - start)), start + 1});
        } else if (std::isalpha(c) || c == '_') {
            while (i < in.size() && (std::isalnum(static_cast<unsigned char>(in[i])) || in[i] == '_'))
                ++i;
            out.push_back({Token::Kind::ident, std::string(in.substr(start, i - start)), start + 1});
        } else if (std::string_view("+-*/()[],").find(static_cast<char>(c)) != std::string_view::npos) {
            ++i;
            out.push_back({Token::Kind::punct, std::string(1, static_cast<char>(c)), start + 1});
        } else {
            throw ParseError("unexpected character '" + std::string(1, static_cast<char>(c)) + "'", start + 1,
                             {"expression"});
        }
    }
    out.push_back({Token::Kind::end, "", in.size() + 1});
    return out;
}

class Parser {
public:
    explicit Parser(std::string_view in) : tokens_(tokenize(in)) {}

    ExprPtr parse_all()
    {
        ExprPtr e = expr();
        if (peek().kind != Token::Kind::end)
            fail("unexpected '" + peek().text + "'", {"+", "-", "*", "/", "o", "end of input"});
        return e;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    const Token& next() { return tokens_[pos_++]; }
    bool at_punct(char c) const { return peek().kind == Token::Kind::punct && peek().text[0] == c; }
    bool at_pleth() const { return peek().kind == Token::Kind::ident && peek().text == "o"; }

    [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) const
    {
        std::string msg = what + " at offset " + std::to_string(peek().offset) + "; expected one of:";
        for (const auto& e : expected)
            msg += " " + e;
        throw ParseError(msg, peek().offset, std::move(expected));
    }

    void expect(char c)
    {
        if (!at_punct(c))
            fail(peek().kind == Token::Kind::end ? "unexpected end of input" : "unexpected '" + peek().text + "'",
                 {std::string(1, c)});
        ++pos_;
    }

    static std::shared_ptr<Expr> make(Expr::Kind kind, std::size_t offset, std::vector<ExprPtr> args = {})
    {
        auto e = std::make_shared<Expr>();
        e->kind = kind;
        e->offset = offset;
        e->args = std::move(args);
        return e;
    }

    ExprPtr expr()
    {
        ExprPtr lhs = term();
        while (at_punct('+') || at_punct('-')) {
            const Token& op = next();
            lhs = make(op.text == "+" ? Expr::Kind::add : Expr::Kind::sub, op.offset, {lhs, term()});
        }
        return lhs;
    }

    ExprPtr term()
    {
        ExprPtr lhs = unary();
        while (at_punct('*') || at_punct('/')) {
            const Token& op = next();
            lhs = make(op.text == "*" ? Expr::Kind::mul : Expr::Kind::div, op.offset, {lhs, unary()});
        }
        return lhs;
    }

    ExprPtr unary()
    {
        if (at_punct('-')) {
            std::size_t offset = next().offset;
            return make(Expr::Kind::negate, offset, {unary()});
        }
        return factor();
    }

    ExprPtr factor()
    {
        ExprPtr lhs = atom();
        if (at_pleth()) {
            std::size_t offset = next().offset;
            return make(Expr::Kind::pleth, offset, {lhs, factor()});
        }
        return lhs;
    }

    ExprPtr atom()
    {
        static const std::vector<std::string> atom_start{"number", "generator", "name", "function", "("};
        const Token& t = peek();
        switch (t.kind) {
        case Token::Kind::number: {
            next();
            auto e = make(Expr::Kind::number, t.offset);
            e->number = Integer(t.text);
            return e;
        }
        case Token::Kind::ident:
            return identifier();
        case Token::Kind::punct:
            if (t.text == "(") {
                next();
                ExprPtr inner = expr();
                expect(')');
                return inner;
            }
            fail("unexpected '" + t.text + "'", atom_start);
        case Token::Kind::end:
            break;
        }
        fail("unexpected end of input", atom_start);
    }

    ExprPtr identifier()
    {
        const Token& t = next();
        const std::string& id = t.text;
        if (id.size() == 1 && std::string_view("pehs").find(id[0]) != std::string_view::npos && at_punct('['))
            return generator(id[0], t.offset);
        const auto& fns = function_names();
        if (std::find(fns.begin(), fns.end(), id) != fns.end()) {
            auto e = make(Expr::Kind::call, t.offset);
            e->name = id;
            expect('(');
            e->args.push_back(expr());
            expect(')');
            return e;
        }
        const auto& names = named_series_names();
        if (std::find(names.begin(), names.end(), id) != names.end()) {
            auto e = make(Expr::Kind::name, t.offset);
            e->name = id;
            return e;
        }
        --pos_;
        if (id.size() == 1 && std::string_view("pehs").find(id[0]) != std::string_view::npos) {
            ++pos_;
            fail("generator '" + id + "' needs an index", {"["});
        }
        fail("unknown identifier '" + id + "'", {"generator", "name", "function"});
    }

    ExprPtr generator(char g, std::size_t offset)
    {
        expect('[');
        auto e = make(Expr::Kind::generator, offset);
        e->generator = g;
        if (!at_punct(']')) {
            while (true) {
                if (peek().kind != Token::Kind::number)
                    fail("expected an index", {"number"});
                const Token& n = next();
                if (n.text.size() > 4)
                    fail("index too large", {"number"});
                e->parts.push_back(std::stoi(n.text));
                if (at_punct(','))
                    next();
                else
                    break;
            }
        }
        expect(']');
        return e;
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

// The symmetric function named by a generator node.
inline SymFunc generator_value(const Expr& e)
{
    std::vector<int> parts = e.parts;
    if (e.generator == 's') {
        if (!std::is_sorted(parts.rbegin(), parts.rend()))
            throw std::invalid_argument("s[...] needs weakly decreasing parts");
        return schur(Partition(parts));
    }
    if (parts.empty())
        throw std::invalid_argument(std::string(1, e.generator) + "[] needs at least one index");
    // h[0] = e[0] = 1; p[0] is undefined
    if (e.generator != 'p')
        std::erase(parts, 0);
    std::sort(parts.begin(), parts.end(), std::greater<>());
    if (!parts.empty() && parts.back() < 1)
        throw std::invalid_argument("p[0] is undefined");
    Partition lambda(parts);
    switch (e.generator) {
    case 'p':
        return p(lambda);
    case 'h':
        return h(lambda);
    default:
        return sympleth::e(lambda);
    }
}

inline GradedSeries call(const std::string& fn, const GradedSeries& g)
{
    if (fn == "exp")
        return exp_series(g);
    if (fn == "log1p")
        return log1p_series(g);
    if (fn == "tan")
        return tan_series(g);
    if (fn == "tanh")
        return tanh_series(g);
    if (fn == "arctan")
        return arctan_series(g);
    if (fn == "arctanh")
        return arctanh_series(g);
    if (fn == "odd")
        return parity_split(g, Parity::odd);
    if (fn == "even")
        return parity_split(g, Parity::even);
    if (fn == "odd_alt")
        return parity_split(g, Parity::odd, true);
    if (fn == "even_alt")
        return parity_split(g, Parity::even, true);
    return omega(g);
}

}  // namespace detail

inline ExprPtr parse(std::string_view input) { return detail::Parser(input).parse_all(); }

/// Fully parenthesised text that parses back to the same tree.
inline std::string render(const Expr& e)
{
    auto binary = [&e](const char* op) { return "(" + render(*e.args[0]) + " " + op + " " + render(*e.args[1]) + ")"; };
    switch (e.kind) {
    case Expr::Kind::number:
        return e.number.get_str();
    case Expr::Kind::generator: {
        std::string out(1, e.generator);
        out += '[';
        for (std::size_t i = 0; i < e.parts.size(); ++i)
            out += (i ? "," : "") + std::to_string(e.parts[i]);
        return out + "]";
    }
    case Expr::Kind::name:
        return e.name;
    case Expr::Kind::negate:
        return "(-" + render(*e.args[0]) + ")";
    case Expr::Kind::add:
        return binary("+");
    case Expr::Kind::sub:
        return binary("-");
    case Expr::Kind::mul:
        return binary("*");
    case Expr::Kind::div:
        return binary("/");
    case Expr::Kind::pleth:
        return binary("o");
    case Expr::Kind::call:
        return e.name + "(" + render(*e.args[0]) + ")";
    }
    return {};
}

/// Evaluates at truncation degree n. Engine errors come back as EvalError
/// carrying the offset of the node that raised them.
inline GradedSeries eval(const Expr& e, int n)
{
    if (n < 0)
        throw std::invalid_argument("eval: negative truncation degree");
    std::vector<GradedSeries> args;
    for (const auto& a : e.args)
        args.push_back(eval(*a, n));
    try {
        switch (e.kind) {
        case Expr::Kind::number:
            return GradedSeries::constant(Coefficient(e.number), n);
        case Expr::Kind::generator:
            return GradedSeries::from(detail::generator_value(e), n);
        case Expr::Kind::name:
            return *named_series(e.name, n);
        case Expr::Kind::negate:
            return -args[0];
        case Expr::Kind::add:
            return args[0] + args[1];
        case Expr::Kind::sub:
            return args[0] - args[1];
        case Expr::Kind::mul:
            return args[0] * args[1];
        case Expr::Kind::div:
            return series_div(args[0], args[1]);
        case Expr::Kind::pleth:
            return pleth(args[0], args[1]);
        case Expr::Kind::call:
            return detail::call(e.name, args[0]);
        }
    } catch (const std::exception& err) {
        throw EvalError(std::string(err.what()) + " (at offset " + std::to_string(e.offset) + ")", e.offset);
    }
    throw std::logic_error("eval: unhandled expression kind");
}

inline GradedSeries eval(std::string_view input, int n) { return eval(*parse(input), n); }

}  // namespace sympleth::expr
