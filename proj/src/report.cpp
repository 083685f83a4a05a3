#include "mdim/report.hpp"

#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "mdim/corpus.hpp"

namespace mdim {

namespace {

std::string instance_id(const std::string& suite, int index) {
    std::ostringstream out;
    out << suite << '/' << std::setw(3) << std::setfill('0') << index;
    return out.str();
}

Instance from_descriptor(const std::string& suite, int index, FamilyDescriptor d) {
    Instance inst;
    inst.id = instance_id(suite, index);
    inst.expr = print_descriptor(d);
    inst.graph = make_family(d);
    inst.desc = std::move(d);
    return inst;
}

std::vector<Instance> wheels_suite() {
    std::vector<Instance> out;
    for (int n = 3; n <= 12; ++n)
        out.push_back(from_descriptor("wheels", static_cast<int>(out.size()), desc::wheel(n)));
    return out;
}

std::vector<Instance> fans_suite() {
    std::vector<Instance> out;
    for (int n = 1; n <= 12; ++n)
        out.push_back(from_descriptor("fans", static_cast<int>(out.size()), desc::fan(n)));
    return out;
}

std::vector<Instance> diam2_suite() {
    std::vector<Instance> out;
    const std::vector<FamilyDescriptor> spines = {desc::path(2), desc::path(3), desc::cycle(3)};
    const std::vector<FamilyDescriptor> attachments = {desc::complete(2), desc::complete(3),
                                                       desc::path(3),     desc::star(3),
                                                       desc::cycle(4),    desc::cycle(5)};
    for (const auto& g : spines)
        for (const auto& h : attachments)
            out.push_back(
                from_descriptor("diam2", static_cast<int>(out.size()), desc::corona(g, h)));
    out.push_back(from_descriptor("diam2", static_cast<int>(out.size()),
                                  desc::corona(desc::path(2), desc::complete(2), 2)));
    return out;
}

std::vector<Instance> cycles_suite() {
    std::vector<Instance> out;
    out.push_back(from_descriptor("cycles", 0, desc::corona(desc::path(2), desc::cycle(7))));
    out.push_back(from_descriptor("cycles", 1, desc::corona(desc::path(2), desc::path(7))));
    return out;
}

std::vector<Instance> bounds_suite() {
    std::vector<Instance> out;
    const auto add = [&out](FamilyDescriptor h) {
        out.push_back(from_descriptor("bounds", static_cast<int>(out.size()),
                                      desc::corona(desc::path(2), std::move(h))));
    };

    // Edgeless attachments.
    out.push_back(from_descriptor("bounds", 0, desc::corona(desc::path(2), desc::empty(2))));
    out.push_back(from_descriptor("bounds", 1, desc::corona(desc::path(2), desc::empty(3))));
    out.push_back(from_descriptor("bounds", 2, desc::corona(desc::path(3), desc::empty(2))));

    // Every disconnected attachment of order <= 4 with at least one edge,
    // up to isomorphism.
    add(desc::disjoint_union(desc::complete(2), desc::complete(1)));
    add(desc::disjoint_union(desc::complete(2), desc::empty(2)));
    add(desc::disjoint_union(desc::complete(2), desc::complete(2)));
    add(desc::disjoint_union(desc::path(3), desc::complete(1)));
    add(desc::disjoint_union(desc::complete(3), desc::complete(1)));

    // Every connected attachment of order 3 and 4, up to isomorphism.
    add(desc::path(3));
    add(desc::complete(3));
    add(desc::path(4));
    add(desc::star(3));
    add(desc::cycle(4));
    add(desc::join(desc::complete(1), desc::disjoint_union(desc::complete(2), desc::complete(1))));
    add(desc::join(desc::complete(2), desc::empty(2)));
    add(desc::complete(4));
    return out;
}

std::vector<Instance> trees_suite(std::uint64_t seed) {
    std::vector<Instance> out;
    std::mt19937_64 rng(seed);

    struct Kept {
        Graph tree;
        int index;
        int order;
    };
    std::vector<Kept> small;

    for (int i = 0; i < 200; ++i) {
        const int order = 5 + static_cast<int>(rng() % 6);
        Graph t = random_tree(order, rng);
        if (small.size() < 20 && order <= 6) small.push_back({t, i, order});
        Instance inst;
        inst.id = instance_id("trees", static_cast<int>(out.size()));
        inst.expr = "random_tree(order=" + std::to_string(order) +
                    ", seed=" + std::to_string(seed) + ", index=" + std::to_string(i) + ")";
        inst.graph = std::move(t);
        out.push_back(std::move(inst));
    }

    const Graph k1 = complete_graph(1);
    for (const Kept& kept : small) {
        Instance inst;
        inst.id = instance_id("trees", static_cast<int>(out.size()));
        inst.expr = "corona(random_tree(order=" + std::to_string(kept.order) +
                    ", seed=" + std::to_string(seed) + ", index=" + std::to_string(kept.index) +
                    "), complete(1))";
        inst.graph = corona(kept.tree, k1).graph;
        inst.corona_ctx = CoronaContext{kept.tree, k1, 1};
        out.push_back(std::move(inst));
    }

    out.push_back(from_descriptor("trees", static_cast<int>(out.size()),
                                  desc::corona(desc::path(3), desc::complete(1), 2)));
    return out;
}

std::vector<Instance> k1_suite(std::uint64_t seed) {
    std::vector<Instance> out;
    std::mt19937_64 rng(seed);
    const Graph k1 = complete_graph(1);

    for (int i = 0; i < 50; ++i) {
        const int order = 2 + static_cast<int>(rng() % 5);
        Graph g = random_connected_graph(order, rng);
        Instance inst;
        inst.id = instance_id("k1", static_cast<int>(out.size()));
        inst.expr = "corona(random_connected(order=" + std::to_string(order) +
                    ", seed=" + std::to_string(seed) + ", index=" + std::to_string(i) +
                    "), complete(1))";
        inst.graph = corona(g, k1).graph;
        inst.corona_ctx = CoronaContext{std::move(g), k1, 1};
        out.push_back(std::move(inst));
    }

    for (int n = 3; n <= 5; ++n)
        out.push_back(from_descriptor("k1", static_cast<int>(out.size()),
                                      desc::corona(desc::complete(n), desc::complete(1))));
    return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"wheels", "fans",  "diam2", "cycles",
                                                   "bounds", "trees", "k1"};
    return names;
}

std::vector<Instance> suite_instances(const std::string& suite, std::uint64_t seed) {
    if (suite == "wheels") return wheels_suite();
    if (suite == "fans") return fans_suite();
    if (suite == "diam2") return diam2_suite();
    if (suite == "cycles") return cycles_suite();
    if (suite == "bounds") return bounds_suite();
    if (suite == "trees") return trees_suite(seed);
    if (suite == "k1") return k1_suite(seed);
    if (suite == "all") {
        std::vector<Instance> out;
        for (const std::string& name : suite_names()) {
            std::vector<Instance> part = suite_instances(name, seed);
            out.insert(out.end(), std::make_move_iterator(part.begin()),
                       std::make_move_iterator(part.end()));
        }
        return out;
    }
    throw Error("unknown suite '" + suite + "'");
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Agree: return "AGREE";
        case Verdict::OracleSilent: return "ORACLE_SILENT";
        case Verdict::Mismatch: return "MISMATCH";
    }
    return "MISMATCH";
}

ReportRecord run_instance(const Instance& instance, const SolverBudget& budget) {
    const auto start = std::chrono::steady_clock::now();

    ReportRecord r;
    r.instance_id = instance.id;
    r.expr = instance.expr;
    r.order = instance.graph.order();
    r.solver = metric_dimension_exact(instance.graph, budget);
    r.oracle = evaluate_theorems(instance.graph,
                                 instance.desc ? &*instance.desc : nullptr,
                                 instance.corona_ctx ? &*instance.corona_ctx : nullptr, budget);
    r.reconciled = reconcile(r.oracle);

    const Reconciled& rec = r.reconciled;
    if (rec.silent()) {
        r.verdict = Verdict::OracleSilent;
    } else if (r.solver.status == SolveStatus::Exact) {
        const long long v = r.solver.value;
        const bool in_range = (!rec.lower || v >= *rec.lower) && (!rec.upper || v <= *rec.upper);
        r.verdict = in_range ? Verdict::Agree : Verdict::Mismatch;
    } else {
        const bool compatible = (!rec.lower || r.solver.upper >= *rec.lower) &&
                                (!rec.upper || r.solver.lower <= *rec.upper);
        r.verdict = compatible ? Verdict::Agree : Verdict::Mismatch;
    }

    r.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    return r;
}

nlohmann::ordered_json record_to_json(const ReportRecord& r) {
    nlohmann::ordered_json j;
    j["instance"] = r.instance_id;
    j["expr"] = r.expr;
    j["order"] = r.order;

    nlohmann::ordered_json solver;
    if (r.solver.status == SolveStatus::Exact) {
        solver["status"] = "EXACT";
        solver["value"] = r.solver.value;
    } else {
        solver["status"] = "BOUNDS_ONLY";
        solver["lower"] = r.solver.lower;
        solver["upper"] = r.solver.upper;
    }
    solver["witness"] = r.solver.witness;
    solver["subsets_checked"] = r.solver.subsets_checked;
    j["solver"] = std::move(solver);

    nlohmann::ordered_json rules = nlohmann::ordered_json::array();
    for (const BoundResult& b : r.oracle) {
        nlohmann::ordered_json rule;
        rule["source"] = b.source;
        rule["kind"] = to_string(b.kind);
        rule["value"] = b.value;
        rule["conditions"] = b.conditions_checked;
        rules.push_back(std::move(rule));
    }
    j["oracle"] = std::move(rules);

    nlohmann::ordered_json rec;
    if (r.reconciled.silent()) {
        rec["kind"] = "SILENT";
    } else if (r.reconciled.exact()) {
        rec["kind"] = "EXACT";
        rec["value"] = *r.reconciled.lower;
    } else {
        rec["kind"] = "RANGE";
        if (r.reconciled.lower) rec["lower"] = *r.reconciled.lower;
        if (r.reconciled.upper) rec["upper"] = *r.reconciled.upper;
    }
    rec["sources"] = r.reconciled.sources;
    j["reconciled"] = std::move(rec);

    j["verdict"] = to_string(r.verdict);
    return j;
}

namespace {

std::string csv_quote(const std::string& field) {
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

template <typename Range>
std::string join_spaced(const Range& values) {
    std::ostringstream out;
    bool first = true;
    for (const auto& v : values) {
        if (!first) out << ' ';
        out << v;
        first = false;
    }
    return out.str();
}

}  // namespace

std::string csv_header() {
    return "instance,expr,order,solver_status,solver_value,solver_lower,solver_upper,witness,"
           "subsets_checked,oracle_exact,oracle_lower,oracle_upper,oracle_sources,verdict";
}

std::string record_to_csv(const ReportRecord& r) {
    std::ostringstream out;
    out << csv_quote(r.instance_id) << ',' << csv_quote(r.expr) << ',' << r.order << ',';
    if (r.solver.status == SolveStatus::Exact)
        out << "EXACT," << r.solver.value << ",,";
    else
        out << "BOUNDS_ONLY,," << r.solver.lower << ',' << r.solver.upper;
    out << ',' << csv_quote(join_spaced(r.solver.witness)) << ',' << r.solver.subsets_checked
        << ',';
    if (r.reconciled.exact())
        out << *r.reconciled.lower;
    out << ',';
    if (r.reconciled.lower) out << *r.reconciled.lower;
    out << ',';
    if (r.reconciled.upper) out << *r.reconciled.upper;
    std::vector<std::string> sources;
    for (const BoundResult& b : r.oracle) sources.push_back(b.source);
    out << ',' << csv_quote(join_spaced(sources)) << ',' << to_string(r.verdict);
    return out.str();
}

CrossValidateOutcome run_crossvalidate(const std::string& suite, std::uint64_t seed,
                                       const SolverBudget& budget, const std::string& format,
                                       std::ostream& records_out, std::ostream& log) {
    if (format != "json" && format != "csv")
        throw Error("unknown report format '" + format + "'");

    const auto start = std::chrono::steady_clock::now();
    const std::vector<Instance> instances = suite_instances(suite, seed);

    if (format == "csv") records_out << csv_header() << '\n';

    CrossValidateOutcome outcome;
    for (const Instance& instance : instances) {
        const ReportRecord record = run_instance(instance, budget);
        if (format == "json")
            records_out << record_to_json(record).dump() << '\n';
        else
            records_out << record_to_csv(record) << '\n';

        ++outcome.total;
        switch (record.verdict) {
            case Verdict::Agree: ++outcome.agree; break;
            case Verdict::OracleSilent: ++outcome.oracle_silent; break;
            case Verdict::Mismatch: ++outcome.mismatch; break;
        }
        if (record.solver.status == SolveStatus::BoundsOnly) ++outcome.budget_failures;
    }

    outcome.duration = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - start);
    log << "suite " << suite << ": " << outcome.total << " instances | agree " << outcome.agree
        << " | oracle-silent " << outcome.oracle_silent << " | mismatch " << outcome.mismatch
        << " | budget-exhausted " << outcome.budget_failures << " | " << outcome.duration.count()
        << " ms\n";
    return outcome;
}

}  // namespace mdim
