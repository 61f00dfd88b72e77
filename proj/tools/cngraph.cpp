#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "cngraph/expr.hpp"
#include "cngraph/harness.hpp"

namespace {

using cngraph::CurlingReport;

nlohmann::json report_to_json(const CurlingReport& r) {
    nlohmann::json j;
    if (r.materialized) {
        j["order"] = r.order;
        j["size"] = r.size;
        j["degree_sequence"] = r.degree_sequence;
    }
    j["runs"] = nlohmann::json::array();
    for (const auto& run : r.runs.runs)
        j["runs"].push_back({{"value", run.value}, {"length", run.length}});
    j["cn"] = r.cn;
    j["cnc"] = r.cnc;
    j["string_cn"] = r.string_cn;
    return j;
}

void print_report(const CurlingReport& r) {
    if (r.materialized) {
        std::cout << "order: " << r.order << "\n";
        std::cout << "size: " << r.size << "\n";
        std::cout << "degree sequence:";
        for (int d : r.degree_sequence) std::cout << " " << d;
        std::cout << "\n";
    }
    std::cout << "runs:";
    for (const auto& run : r.runs.runs)
        std::cout << " (" << run.value << ")^" << run.length;
    std::cout << "\n";
    std::cout << "cn: " << r.cn << "\n";
    std::cout << "cnc: " << r.cnc << "\n";
    std::cout << "string cn: " << r.string_cn << "\n";
}

void emit(const CurlingReport& r, bool json) {
    if (json)
        std::cout << report_to_json(r).dump() << "\n";
    else
        print_report(r);
}

bool parse_ranges(const std::string& text, cngraph::FormulaRanges& out) {
    const auto sep = text.find("..");
    if (sep == std::string::npos) return false;
    try {
        out.lo = std::stoi(text.substr(0, sep));
        out.hi = std::stoi(text.substr(sep + 2));
    } catch (const std::exception&) {
        return false;
    }
    return out.lo >= 1 && out.hi >= out.lo;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"curling number and compound curling number of graph products"};
    app.require_subcommand(1);

    std::string expr_text;
    std::string path;
    std::string ranges_text = "2..12";
    int samples = 500;
    std::uint64_t seed = 42;
    bool json = false;
    bool fast = false;

    auto* eval_cmd = app.add_subcommand("eval", "evaluate a product expression");
    eval_cmd->add_option("expr", expr_text, "expression, e.g. \"C5 box P7\"")
        ->required();
    eval_cmd->add_flag("--json", json, "emit JSON");
    eval_cmd->add_flag("--fast", fast, "combine degree multisets, never build the product");

    auto* file_cmd = app.add_subcommand("file", "report on an edge-list file");
    file_cmd->add_option("path", path, "edge-list file")->required();
    file_cmd->add_flag("--json", json, "emit JSON");

    auto* check_cmd = app.add_subcommand("check", "replay the paper's propositions");
    check_cmd->add_option("--ranges", ranges_text, "parameter range a..b (default 2..12)");
    check_cmd->add_option("--samples", samples, "randomized sample count");
    check_cmd->add_option("--seed", seed, "random seed");
    check_cmd->add_flag("--json", json, "emit JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            app.exit(e);
            return 0;
        }
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (eval_cmd->parsed()) {
            const auto expr = cngraph::parse_expression(expr_text);
            emit(cngraph::evaluate(*expr, fast), json);
            return 0;
        }
        if (file_cmd->parsed()) {
            emit(cngraph::curling_report(cngraph::read_edge_list_file(path)), json);
            return 0;
        }
        // check
        cngraph::FormulaRanges ranges;
        if (!parse_ranges(ranges_text, ranges)) {
            std::cerr << "bad --ranges, expected a..b with 1 <= a <= b\n";
            return 2;
        }
        cngraph::CheckSuiteReport report = cngraph::run_formula_checks(ranges);
        report.merge(cngraph::run_bound_checks(samples, 8, seed));
        report.sort();
        if (json)
            std::cout << cngraph::report_to_json(report).dump() << "\n";
        else
            cngraph::print_report_table(std::cout, report);
        return report.fails > 0 ? 1 : 0;
    } catch (const cngraph::SyntaxError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const cngraph::GraphError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
