// Command-line front end: expansion, plethysm, inversion and identity checks.

#include <sympleth/expr.hpp>
#include <sympleth/verify.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>
#include <thread>

namespace {

using json = nlohmann::ordered_json;
using namespace sympleth;

constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

BasisExpansion in_basis(const SymFunc& f, char basis)
{
    switch (basis) {
    case 's':
        return schur_expand(f);
    case 'h':
        return h_expand(f);
    case 'e':
        return e_expand(f);
    default:
        return f.terms();
    }
}

json terms_json(const BasisExpansion& terms)
{
    json out = json::array();
    for (const auto& [lambda, c] : terms)
        out.push_back({{"partition", lambda.parts()}, {"num", c.get_num().get_str()}, {"den", c.get_den().get_str()}});
    return out;
}

void print_series(const std::string& command, const GradedSeries& s, char basis, bool as_json)
{
    if (!as_json) {
        for (int d = 0; d <= s.max_degree(); ++d)
            std::cout << "deg " << d << ": " << render(in_basis(s[d], basis), basis) << '\n';
        return;
    }
    json results = json::array();
    for (int d = 0; d <= s.max_degree(); ++d)
        results.push_back({{"degree", d}, {"basis", std::string(1, basis)}, {"terms", terms_json(in_basis(s[d], basis))}});
    json out{{"command", command}, {"max_degree", s.max_degree()}, {"results", results}};
    std::cout << out.dump(2) << '\n';
}

json report_json(const verify::CheckReport& r)
{
    json j{{"check_name", r.check_name},
           {"anchor", r.anchor},
           {"max_degree", r.max_degree},
           {"passed", r.passed},
           {"first_failure_degree", r.first_failure_degree ? json(*r.first_failure_degree) : json(nullptr)}};
    if (!r.passed) {
        j["failed_comparison"] = r.failed_comparison;
        j["mismatch"] = {{"lhs", r.mismatch->first}, {"rhs", r.mismatch->second}};
    }
    return j;
}

void print_report(const verify::CheckReport& r)
{
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.check_name << " (max degree " << r.max_degree << ")";
    if (!r.passed) {
        std::cout << ": first failure at degree " << *r.first_failure_degree << " in " << r.failed_comparison << "\n"
                  << "  lhs: " << r.mismatch->first << "\n"
                  << "  rhs: " << r.mismatch->second;
    }
    std::cout << '\n';
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact symmetric functions, plethysm and identity checks"};
    app.require_subcommand(1);

    int max_degree = 8;
    std::string basis = "p";
    bool as_json = false;
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--max-degree", max_degree, "Truncation degree")->check(CLI::NonNegativeNumber);
        cmd->add_flag("--json", as_json, "Structured output");
    };
    auto add_basis = [&](CLI::App* cmd) {
        cmd->add_option("--basis", basis, "Output basis")->check(CLI::IsMember({"p", "s", "h", "e"}));
    };

    std::string expr_text, inner_text;
    auto* expand = app.add_subcommand("expand", "Expand an expression degree by degree");
    expand->add_option("expr", expr_text, "Expression")->required();
    add_common(expand);
    add_basis(expand);

    auto* pleth_cmd = app.add_subcommand("pleth", "Expand (F) o (G)");
    pleth_cmd->add_option("F", expr_text, "Outer expression")->required();
    pleth_cmd->add_option("G", inner_text, "Inner expression")->required();
    add_common(pleth_cmd);
    add_basis(pleth_cmd);

    auto* inverse = app.add_subcommand("inverse", "Plethystic inverse of a series with degree-1 term p[1]");
    inverse->add_option("expr", expr_text, "Expression")->required();
    add_common(inverse);
    add_basis(inverse);

    bool all = false;
    std::vector<std::string> checks;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    auto* verify_cmd = app.add_subcommand("verify", "Run identity checks");
    auto* all_flag = verify_cmd->add_flag("--all", all, "Run every registered check");
    verify_cmd->add_option("--check", checks, "Check name (repeatable)")->excludes(all_flag);
    verify_cmd->add_option("--threads", threads, "Worker threads for --all")->check(CLI::PositiveNumber);
    add_common(verify_cmd);

    auto* list = app.add_subcommand("list-checks", "List registered checks");
    list->add_flag("--json", as_json, "Structured output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : exit_usage;
    }

    try {
        if (*list) {
            if (as_json) {
                json results = json::array();
                for (const auto& c : verify::registry())
                    results.push_back({{"check_name", c.name}, {"anchor", c.anchor}, {"max_supported_degree", c.max_supported_degree}});
                std::cout << json{{"command", "list-checks"}, {"results", results}}.dump(2) << '\n';
            } else {
                for (const auto& c : verify::registry())
                    std::cout << c.name << "  " << c.anchor << '\n';
            }
            return 0;
        }

        if (*verify_cmd) {
            if (!all && checks.empty()) {
                std::cerr << "verify: pass --all or --check NAME\n";
                return exit_usage;
            }
            for (const auto& name : checks) {
                try {
                    verify::find_check(name);
                } catch (const std::invalid_argument& e) {
                    std::cerr << "verify: " << e.what() << '\n';
                    return exit_usage;
                }
            }
            std::vector<verify::CheckReport> reports;
            if (all) {
                reports = verify::run_all(max_degree, threads);
            } else {
                for (const auto& name : checks)
                    reports.push_back(verify::run_check(name, max_degree));
            }
            bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
            if (as_json) {
                json results = json::array();
                for (const auto& r : reports)
                    results.push_back(report_json(r));
                std::cout << json{{"command", "verify"}, {"max_degree", max_degree}, {"results", results}}.dump(2) << '\n';
            } else {
                for (const auto& r : reports)
                    print_report(r);
            }
            return ok ? 0 : exit_failure;
        }

        const char b = basis[0];
        if (*expand) {
            print_series("expand", expr::eval(expr_text, max_degree), b, as_json);
        } else if (*pleth_cmd) {
            // parse separately so error offsets refer to each argument
            auto f = expr::eval(*expr::parse(expr_text), max_degree);
            auto g = expr::eval(*expr::parse(inner_text), max_degree);
            print_series("pleth", pleth(f, g), b, as_json);
        } else if (*inverse) {
            print_series("inverse", pleth_inverse(expr::eval(expr_text, max_degree)), b, as_json);
        }
        return 0;
    } catch (const expr::ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
}
