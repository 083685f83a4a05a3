#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mdim/bounds.hpp"
#include "mdim/graph.hpp"
#include "mdim/resolver.hpp"

namespace mdim {

bool is_path_graph(const Graph& g);
bool is_cycle_graph(const Graph& g);

// Finest join decomposition: the factors are the complements of the
// complement's connected components. trivial means the graph is no join at
// all (its complement is connected). factor_vertices[i] lists the original
// ids of factor i, so joining the factors along that partition rebuilds the
// input exactly.
struct JoinDecomposition {
    bool trivial = true;
    std::vector<Graph> factors;
    std::vector<std::vector<int>> factor_vertices;
};

JoinDecomposition recognize_join_decomposition(const Graph& g);

// Recognizes the three families whose metric dimension is order - 2:
// complete bipartite K_{s,t}, the join K_s + N_t (t >= 2), and the join
// K_s + (K_1 u K_t). Applicable only to connected graphs of order >= 4.
struct FamilyMatch {
    bool applicable = false;
    bool matches = false;
    std::string tag;
};

FamilyMatch recognize_dim_n_minus_2(const Graph& g);

// Everything the corona bounds need to know about one product G (.) H taken
// k times: orders, connectivity, the component profile of H (alpha =
// components with an edge, beta = isolated vertices), and the dimensions of
// H and of K_1 + H when they are obtainable within the budget.
struct CoronaParams {
    int n1 = 0;
    int n2 = 0;
    int k = 1;
    bool g_connected = false;
    bool h_connected = false;
    bool h_is_cycle = false;
    bool h_is_complete = false;
    bool h_is_empty = false;
    int alpha = 0;
    int beta = 0;
    std::optional<int> diam_h;
    std::optional<int> dim_h;
    std::optional<int> dim_k1_join_h;
};

CoronaParams corona_params(const Graph& g, const Graph& h, int k,
                           const SolverBudget& budget = {});

// Dimension of a base family by closed formula, when one exists. Sources are
// "base:<family>" for paths, cycles, complete and complete bipartite graphs,
// and the wheel/fan identifiers for those families.
BoundResult base_family_dim(const FamilyDescriptor& d);

BoundResult wheel_dim(int rim);  // rim >= 3
BoundResult fan_dim(int spokes); // spokes >= 1

// Corona product bounds. Each rule returns Inapplicable unless every one of
// its hypotheses holds; conditions_checked records the hypotheses that were
// confirmed before the rule gave up or fired.
BoundResult corona_lower(const CoronaParams& p);                       // thm:lower
BoundResult corona_exact_small_diameter(const CoronaParams& p);       // thm:diam2
BoundResult corona_upper_components(const CoronaParams& p);           // thm:alphabeta
BoundResult corona_exact_empty_h(const CoronaParams& p);              // cor:emptyH
BoundResult corona_exact_complete_h(const CoronaParams& p);           // thm:completeH
BoundResult corona_upper_k1_join(const CoronaParams& p);              // thm:k1join-upper
BoundResult corona_exact_big_diameter_or_cycle(const CoronaParams& p); // thm:diam6-or-cycle

// dim(G (.)^k K_1) <= 2^(k-1) n - 1 for a connected G of order n >= 2.
BoundResult corona_k1_upper(int n, int k, bool g_connected);          // thm:k1-corona

// Combination of several bounds on the same quantity. lower/upper are the
// tightest applicable bounds; they coincide exactly when some rule was exact
// or the interval collapsed. Both empty means every input was inapplicable.
struct Reconciled {
    std::optional<long long> lower;
    std::optional<long long> upper;
    std::vector<std::string> sources;

    bool exact() const { return lower && upper && *lower == *upper; }
    bool silent() const { return !lower && !upper; }
};

// Throws InconsistencyError when two exact values disagree or a lower bound
// exceeds an upper bound. solver_exact, when given, participates as an exact
// value with source "solver".
Reconciled reconcile(std::span<const BoundResult> results,
                     std::optional<long long> solver_exact = std::nullopt);

// The corona operands of an instance, when they are known: the product is
// ctx.g (.)^k ctx.h.
struct CoronaContext {
    Graph g;
    Graph h;
    int k = 1;
};

// Runs every rule that can say something about the given graph: the base
// family formula when desc names one, the corona rules when the instance is
// a corona (from desc or ctx), and the structural rules (tree formula,
// order-minus-2 family recognition, wheel/fan recognition of K_1-coronas) on
// the built graph itself. Returns the applicable results in a fixed order.
std::vector<BoundResult> evaluate_theorems(const Graph& built, const FamilyDescriptor* desc,
                                           const CoronaContext* ctx,
                                           const SolverBudget& budget = {});

}  // namespace mdim
