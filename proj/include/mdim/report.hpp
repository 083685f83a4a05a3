#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "mdim/expr.hpp"
#include "mdim/oracle.hpp"

namespace mdim {

// One validation case: a graph plus whatever symbolic context the oracle can
// use. desc is set when the instance came from a family expression;
// corona_ctx when it is a corona of known operands that have no expression
// (e.g. products of random trees).
struct Instance {
    std::string id;    // "<suite>/<index>"
    std::string expr;  // canonical expression, or a generator label
    Graph graph;
    std::optional<FamilyDescriptor> desc;
    std::optional<CoronaContext> corona_ctx;
};

// Suite names accepted by crossvalidation, in execution order ("all" runs
// the concatenation).
const std::vector<std::string>& suite_names();

std::vector<Instance> suite_instances(const std::string& suite, std::uint64_t seed);

enum class Verdict { Agree, OracleSilent, Mismatch };

std::string to_string(Verdict v);

struct ReportRecord {
    std::string instance_id;
    std::string expr;
    int order = 0;
    SolverResult solver;
    std::vector<BoundResult> oracle;  // applicable rule results, in rule order
    Reconciled reconciled;            // oracle-only combination
    Verdict verdict = Verdict::OracleSilent;
    // Measured wall clock; reported on the summary channel only. Serialized
    // records carry no timing so identical runs stay byte-identical.
    std::chrono::milliseconds duration{0};
};

ReportRecord run_instance(const Instance& instance, const SolverBudget& budget = {});

nlohmann::ordered_json record_to_json(const ReportRecord& r);

std::string csv_header();
std::string record_to_csv(const ReportRecord& r);

struct CrossValidateOutcome {
    int total = 0;
    int agree = 0;
    int oracle_silent = 0;
    int mismatch = 0;
    int budget_failures = 0;  // instances the solver could only bound
    std::chrono::milliseconds duration{0};

    bool ok() const { return mismatch == 0 && budget_failures == 0; }
};

// Runs a suite, writing one record per line ("json" or "csv" format) to
// records_out and a closing summary to log.
CrossValidateOutcome run_crossvalidate(const std::string& suite, std::uint64_t seed,
                                       const SolverBudget& budget, const std::string& format,
                                       std::ostream& records_out, std::ostream& log);

}  // namespace mdim
