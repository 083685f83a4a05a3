#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mdim/expr.hpp"
#include "mdim/report.hpp"

namespace {

struct BudgetFlags {
    int max_subset_size = 0;
    long long time_ms = 0;
    long long max_order = mdim::kDefaultMaxOrder;

    mdim::SolverBudget budget() const {
        mdim::SolverBudget b;
        if (max_subset_size > 0) b.max_subset_size = max_subset_size;
        if (time_ms > 0) b.time_limit = std::chrono::milliseconds(time_ms);
        return b;
    }
};

void add_budget_flags(CLI::App* cmd, BudgetFlags& flags) {
    cmd->add_option("--budget-size", flags.max_subset_size,
                    "largest landmark-set size the solver may try");
    cmd->add_option("--budget-time-ms", flags.time_ms, "solver time limit in milliseconds");
    cmd->add_option("--max-order", flags.max_order,
                    "largest graph order a construction may produce");
}

// Builds the instance a subcommand operates on: either a parsed expression
// (canonicalized) or an imported edge list.
mdim::Instance load_instance(const std::string& expr_text, const std::string& from_file,
                             long long max_order) {
    mdim::Instance inst;
    inst.id = "cli/000";
    if (!from_file.empty()) {
        inst.graph = mdim::read_edge_list_file(from_file);
        inst.expr = "file:" + from_file;
        return inst;
    }
    if (expr_text.empty()) throw mdim::Error("give a graph expression or --from-file");
    const mdim::GraphExpression parsed = mdim::parse_graph_expr(expr_text);
    inst.graph = mdim::make_family(parsed.tree, max_order);
    inst.expr = mdim::print_descriptor(parsed.tree);
    inst.desc = parsed.tree;
    return inst;
}

std::string format_set(const std::vector<int>& ids) {
    std::string out = "{";
    for (std::size_t i = 0; i < ids.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(ids[i]);
    }
    return out + "}";
}

std::string format_representation(const mdim::Representation& rep) {
    std::string out = "(";
    for (std::size_t i = 0; i < rep.size(); ++i) {
        if (i > 0) out += ", ";
        out += std::to_string(rep[i].value());
    }
    return out + ")";
}

int exit_code_for(mdim::Verdict verdict) {
    return verdict == mdim::Verdict::Mismatch ? 2 : 0;
}

int cmd_dim(const std::string& expr_text, const std::string& from_file,
            const BudgetFlags& flags, bool as_json) {
    const mdim::Instance inst = load_instance(expr_text, from_file, flags.max_order);
    const mdim::ReportRecord record = mdim::run_instance(inst, flags.budget());

    if (as_json) {
        std::cout << mdim::record_to_json(record).dump() << "\n";
        return exit_code_for(record.verdict);
    }

    std::cout << "expr: " << record.expr << "\n";
    std::cout << "order: " << record.order << "\n";
    if (record.solver.status == mdim::SolveStatus::Exact)
        std::cout << "solver: EXACT dim = " << record.solver.value
                  << ", witness = " << format_set(record.solver.witness)
                  << ", subsets checked = " << record.solver.subsets_checked << "\n";
    else
        std::cout << "solver: BOUNDS_ONLY " << record.solver.lower << ".."
                  << record.solver.upper << " (budget exhausted after "
                  << record.solver.subsets_checked << " subsets)\n";

    if (record.oracle.empty()) {
        std::cout << "oracle: silent\n";
    } else {
        std::cout << "oracle:\n";
        for (const mdim::BoundResult& b : record.oracle) {
            std::cout << "  " << b.source << " " << mdim::to_string(b.kind) << " " << b.value;
            if (!b.conditions_checked.empty()) {
                std::cout << " (";
                for (std::size_t i = 0; i < b.conditions_checked.size(); ++i) {
                    if (i > 0) std::cout << "; ";
                    std::cout << b.conditions_checked[i];
                }
                std::cout << ")";
            }
            std::cout << "\n";
        }
        const mdim::Reconciled& rec = record.reconciled;
        std::cout << "reconciled: ";
        if (rec.exact())
            std::cout << "EXACT " << *rec.lower;
        else if (rec.lower && rec.upper)
            std::cout << "RANGE [" << *rec.lower << ", " << *rec.upper << "]";
        else if (rec.lower)
            std::cout << "LOWER " << *rec.lower;
        else if (rec.upper)
            std::cout << "UPPER " << *rec.upper;
        std::cout << "\n";
    }
    std::cout << "verdict: " << mdim::to_string(record.verdict) << "\n";
    std::cout << "time: " << record.duration.count() << " ms\n";
    return exit_code_for(record.verdict);
}

int cmd_check(const std::string& expr_text, const std::string& from_file,
              std::vector<int> landmarks, long long max_order) {
    const mdim::Instance inst = load_instance(expr_text, from_file, max_order);

    std::sort(landmarks.begin(), landmarks.end());
    landmarks.erase(std::unique(landmarks.begin(), landmarks.end()), landmarks.end());

    const mdim::DistanceMatrix dm = mdim::all_pairs(inst.graph);
    const bool resolving = mdim::is_resolving(dm, landmarks);

    std::cout << "expr: " << inst.expr << "\n";
    std::cout << "order: " << inst.graph.order() << "\n";
    std::cout << "landmarks: " << format_set(landmarks) << "\n";
    std::vector<mdim::Representation> reps;
    for (int v = 0; v < inst.graph.order(); ++v) {
        reps.push_back(mdim::representation(dm, v, landmarks));
        std::cout << "r(" << v << ") = " << format_representation(reps.back()) << "\n";
    }
    if (resolving) {
        std::cout << "resolving\n";
        return 0;
    }
    for (int u = 0; u < inst.graph.order(); ++u)
        for (int v = u + 1; v < inst.graph.order(); ++v)
            if (reps[static_cast<std::size_t>(u)] == reps[static_cast<std::size_t>(v)]) {
                std::cout << "not resolving: vertices " << u << " and " << v << " share "
                          << format_representation(reps[static_cast<std::size_t>(u)]) << "\n";
                return 2;
            }
    return 2;
}

int cmd_crossvalidate(const std::string& suite, std::uint64_t seed, const std::string& format,
                      const std::string& out_path, const BudgetFlags& flags) {
    mdim::CrossValidateOutcome outcome;
    if (out_path.empty()) {
        outcome = mdim::run_crossvalidate(suite, seed, flags.budget(), format, std::cout,
                                          std::cerr);
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw mdim::IoError("cannot open " + out_path + " for writing");
        outcome = mdim::run_crossvalidate(suite, seed, flags.budget(), format, out, std::cout);
    }
    return outcome.ok() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"metric dimension of corona product graphs"};
    app.require_subcommand(1);

    std::string expr_text, from_file, out_path;
    std::string format = "json";
    std::string suite = "all";
    std::uint64_t seed = 0;
    std::vector<int> landmarks;
    bool as_json = false;
    BudgetFlags dim_flags, check_flags, cross_flags;

    CLI::App* dim = app.add_subcommand("dim", "solve an instance and compare with the bounds");
    dim->add_option("expr", expr_text, "graph expression, e.g. \"corona(path(2), cycle(7))\"");
    dim->add_option("--from-file", from_file, "read the graph from an edge-list file");
    dim->add_flag("--json", as_json, "print the report record as JSON");
    add_budget_flags(dim, dim_flags);

    CLI::App* check = app.add_subcommand("check", "test whether a landmark set resolves");
    check->add_option("expr", expr_text, "graph expression");
    check->add_option("landmarks", landmarks, "landmark vertex ids");
    check->add_option("--from-file", from_file, "read the graph from an edge-list file");
    check->add_option("--max-order", check_flags.max_order,
                      "largest graph order a construction may produce");

    std::vector<std::string> suites = mdim::suite_names();
    suites.push_back("all");
    CLI::App* cross = app.add_subcommand("crossvalidate", "run a validation suite");
    cross->add_option("--suite", suite, "suite to run")
        ->check(CLI::IsMember(suites));
    cross->add_option("--seed", seed, "seed for the randomized suites");
    cross->add_option("--format", format, "record format")
        ->check(CLI::IsMember(std::vector<std::string>{"json", "csv"}));
    cross->add_option("--out", out_path, "write records to this file instead of stdout");
    add_budget_flags(cross, cross_flags);

    CLI11_PARSE(app, argc, argv);

    try {
        if (dim->parsed()) return cmd_dim(expr_text, from_file, dim_flags, as_json);
        if (check->parsed())
            return cmd_check(expr_text, from_file, landmarks, check_flags.max_order);
        return cmd_crossvalidate(suite, seed, format, out_path, cross_flags);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
