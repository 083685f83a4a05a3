#include "mdim/oracle.hpp"

#include <algorithm>
#include <utility>

#include "mdim/metric.hpp"
#include "mdim/trees.hpp"

namespace mdim {

std::string to_string(BoundKind kind) {
    switch (kind) {
        case BoundKind::Exact: return "EXACT";
        case BoundKind::Lower: return "LOWER";
        case BoundKind::Upper: return "UPPER";
        case BoundKind::Inapplicable: return "INAPPLICABLE";
    }
    return "INAPPLICABLE";
}

namespace {

// Join recognition builds the complement, which is quadratic; beyond this
// order the structural rules stay quiet rather than dominate the runtime.
constexpr int kJoinRecognitionCap = 2048;

long long checked_scale(long long base, long long factor, int times) {
    long long s = base;
    for (int i = 0; i < times; ++i) {
        if (s > (1LL << 56) / std::max(factor, 1LL))
            throw SizeLimitError("corona bound value overflows");
        s *= factor;
    }
    return s;
}

// n1 * (n2 + 1)^(k-1): the number of copy blocks the k-th corona level has.
long long corona_scale(const CoronaParams& p) {
    return checked_scale(p.n1, p.n2 + 1, p.k - 1);
}

bool induces_clique(const Graph& g, const std::vector<int>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.has_edge(vertices[i], vertices[j])) return false;
    return true;
}

bool induces_star(const Graph& g, const std::vector<int>& vertices) {
    if (vertices.size() < 2) return false;
    std::vector<int> internal_degree(vertices.size(), 0);
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (g.has_edge(vertices[i], vertices[j])) {
                ++internal_degree[i];
                ++internal_degree[j];
            }
    const int hub_degree = static_cast<int>(vertices.size()) - 1;
    int hubs = 0;
    int leaves = 0;
    for (int d : internal_degree) {
        if (d == hub_degree) ++hubs;
        if (d == 1) ++leaves;
    }
    if (vertices.size() == 2) return hubs == 2;
    return hubs == 1 && leaves == static_cast<int>(vertices.size()) - 1;
}

}  // namespace

bool is_path_graph(const Graph& g) {
    if (g.order() == 0 || !is_connected(g)) return false;
    if (g.order() == 1) return true;
    int endpoints = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) > 2) return false;
        if (g.degree(v) == 1) ++endpoints;
    }
    return endpoints == 2;
}

bool is_cycle_graph(const Graph& g) {
    if (g.order() < 3 || !is_connected(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

JoinDecomposition recognize_join_decomposition(const Graph& g) {
    JoinDecomposition result;
    const Graph cg = complement(g);
    std::vector<std::vector<int>> comps = connected_components(cg);
    if (comps.size() <= 1) return result;

    result.trivial = false;
    for (std::vector<int>& comp : comps) {
        std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
        for (std::size_t i = 0; i < comp.size(); ++i)
            local[static_cast<std::size_t>(comp[i])] = static_cast<int>(i);
        std::vector<Edge> edges;
        for (int u : comp)
            for (int v : g.neighbors(u))
                if (u < v && local[static_cast<std::size_t>(v)] >= 0)
                    edges.push_back({local[static_cast<std::size_t>(u)],
                                     local[static_cast<std::size_t>(v)]});
        result.factors.emplace_back(static_cast<int>(comp.size()), edges);
        result.factor_vertices.push_back(std::move(comp));
    }
    return result;
}

FamilyMatch recognize_dim_n_minus_2(const Graph& g) {
    FamilyMatch match;
    if (g.order() < 4 || !is_connected(g)) return match;
    match.applicable = true;

    const Graph cg = complement(g);
    const std::vector<std::vector<int>> comps = connected_components(cg);
    if (comps.size() < 2) return match;

    // G = K_{s,t} exactly when the complement is K_s u K_t.
    if (comps.size() == 2 && induces_clique(cg, comps[0]) && induces_clique(cg, comps[1])) {
        match.matches = true;
        match.tag = "kst";
        return match;
    }

    std::size_t singletons = 0;
    const std::vector<int>* nontrivial = nullptr;
    std::size_t nontrivial_count = 0;
    for (const auto& comp : comps) {
        if (comp.size() == 1) {
            ++singletons;
        } else {
            ++nontrivial_count;
            nontrivial = &comp;
        }
    }
    if (singletons < 1 || nontrivial_count != 1) return match;

    // Complement N_s u K_t  <=>  G = K_s + N_t (t >= 2).
    if (induces_clique(cg, *nontrivial)) {
        match.matches = true;
        match.tag = "ks_join_nt";
        return match;
    }
    // Complement N_s u K_{1,t}  <=>  G = K_s + (K_1 u K_t).
    if (induces_star(cg, *nontrivial)) {
        match.matches = true;
        match.tag = "ks_join_k1_union_kt";
        return match;
    }
    return match;
}

CoronaParams corona_params(const Graph& g, const Graph& h, int k, const SolverBudget& budget) {
    if (k < 1) throw InvalidDescriptorError("corona: iteration count must be at least 1");
    CoronaParams p;
    p.n1 = g.order();
    p.n2 = h.order();
    p.k = k;
    p.g_connected = is_connected(g);
    p.h_connected = is_connected(h);
    p.h_is_cycle = is_cycle_graph(h);
    p.h_is_complete = is_complete_graph(h);
    p.h_is_empty = is_empty_graph(h);
    for (const auto& comp : connected_components(h))
        comp.size() >= 2 ? ++p.alpha : ++p.beta;
    p.diam_h = diameter(h);

    if (p.h_connected && p.n2 >= 2) {
        const SolverResult r = metric_dimension_exact(h, budget);
        if (r.status == SolveStatus::Exact) p.dim_h = r.value;
    }
    if (p.n2 >= 1) {
        if (p.h_is_cycle) {
            p.dim_k1_join_h = static_cast<int>(wheel_dim(p.n2).value);
        } else if (is_path_graph(h)) {
            p.dim_k1_join_h = static_cast<int>(fan_dim(p.n2).value);
        } else {
            const Graph k1h = graph_join(complete_graph(1), h);
            const SolverResult r = metric_dimension_exact(k1h, budget);
            if (r.status == SolveStatus::Exact) p.dim_k1_join_h = r.value;
        }
    }
    return p;
}

BoundResult wheel_dim(int rim) {
    if (rim < 3) throw InvalidDescriptorError("wheel: rim must have at least 3 vertices");
    long long value = 0;
    if (rim == 3 || rim == 6)
        value = 3;
    else if (rim == 4 || rim == 5)
        value = 2;
    else
        value = (2 * rim + 2) / 5;
    return BoundResult::exact(value, "rem:wheel", {"rim>=3"});
}

BoundResult fan_dim(int spokes) {
    if (spokes < 1) throw InvalidDescriptorError("fan: needs at least 1 path vertex");
    long long value = 0;
    if (spokes == 1)
        value = 1;
    else if (spokes == 2 || spokes == 3)
        value = 2;
    else if (spokes == 6)
        value = 3;
    else
        value = (2 * spokes + 2) / 5;
    return BoundResult::exact(value, "rem:fan", {"spokes>=1"});
}

BoundResult base_family_dim(const FamilyDescriptor& d) {
    validate_descriptor(d);
    switch (d.tag) {
        case Family::Path:
            if (d.params[0] >= 2) return BoundResult::exact(1, "base:path", {"n>=2"});
            return BoundResult::inapplicable("base:path");
        case Family::Cycle:
            return BoundResult::exact(2, "base:cycle", {"n>=3"});
        case Family::Complete:
            if (d.params[0] >= 2)
                return BoundResult::exact(d.params[0] - 1, "base:complete", {"n>=2"});
            return BoundResult::inapplicable("base:complete");
        case Family::CompleteBipartite: {
            const int order = d.params[0] + d.params[1];
            if (order >= 4)
                return BoundResult::exact(order - 2, "base:kst", {"s+t>=4"});
            return BoundResult::inapplicable("base:kst");
        }
        case Family::Star: {
            const int order = 1 + d.params[0];
            if (order >= 4)
                return BoundResult::exact(order - 2, "base:kst", {"s+t>=4"});
            return BoundResult::inapplicable("base:kst");
        }
        case Family::Wheel:
            return wheel_dim(d.params[0]);
        case Family::Fan:
            return fan_dim(d.params[0]);
        default:
            return BoundResult::inapplicable("base:family");
    }
}

BoundResult corona_lower(const CoronaParams& p) {
    std::vector<std::string> conditions;
    const char* source = "thm:lower";
    if (!p.g_connected) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("G connected");
    if (!p.h_connected) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("H connected");
    if (p.n1 < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n1>=2");
    if (p.n2 < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n2>=2");
    if (!p.dim_h) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("dim(H) known");
    return BoundResult::lower(corona_scale(p) * *p.dim_h, source, conditions);
}

BoundResult corona_exact_small_diameter(const CoronaParams& p) {
    std::vector<std::string> conditions;
    const char* source = "thm:diam2";
    if (!p.g_connected) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("G connected");
    if (p.n1 < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n1>=2");
    if (p.n2 < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n2>=2");
    if (!p.diam_h || *p.diam_h > 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("diam(H)<=2");
    if (!p.dim_h) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("dim(H) known");
    return BoundResult::exact(corona_scale(p) * *p.dim_h, source, conditions);
}

BoundResult corona_upper_components(const CoronaParams& p) {
    std::vector<std::string> conditions;
    const char* source = "thm:alphabeta";
    if (!p.g_connected) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("G connected");
    if (p.n1 < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n1>=2");
    if (p.n2 < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n2>=2");

    long long factor = 0;
    if (p.alpha >= 1 && p.beta >= 1) {
        conditions.push_back("alpha>=1, beta>=1");
        factor = p.n2 - p.alpha - 1;
    } else if (p.alpha >= 1) {
        conditions.push_back("alpha>=1, beta=0");
        factor = p.n2 - p.alpha;
    } else {
        conditions.push_back("alpha=0");
        factor = p.n2 - 1;
    }
    return BoundResult::upper(corona_scale(p) * factor, source, conditions);
}

BoundResult corona_exact_empty_h(const CoronaParams& p) {
    std::vector<std::string> conditions;
    const char* source = "cor:emptyH";
    if (!p.g_connected) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("G connected");
    if (p.n1 < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n1>=2");
    if (p.n2 < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n2>=2");
    if (!p.h_is_empty) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("H has no edges");
    return BoundResult::exact(corona_scale(p) * (p.n2 - 1), source, conditions);
}

BoundResult corona_exact_complete_h(const CoronaParams& p) {
    std::vector<std::string> conditions;
    const char* source = "thm:completeH";
    if (!p.g_connected) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("G connected");
    if (!p.h_connected) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("H connected");
    if (p.n1 < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n1>=2");
    if (p.n2 < 3) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n2>=3");
    if (p.h_is_complete) {
        conditions.push_back("H complete");
        return BoundResult::exact(corona_scale(p) * (p.n2 - 1), source, conditions);
    }
    conditions.push_back("H not complete");
    return BoundResult::upper(corona_scale(p) * (p.n2 - 2), source, conditions);
}

BoundResult corona_upper_k1_join(const CoronaParams& p) {
    std::vector<std::string> conditions;
    const char* source = "thm:k1join-upper";
    if (!p.g_connected) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("G connected");
    if (p.n1 < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n1>=2");
    if (p.n2 < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n2>=2");
    if (!p.dim_k1_join_h) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("dim(K_1+H) known");
    return BoundResult::upper(corona_scale(p) * *p.dim_k1_join_h, source, conditions);
}

BoundResult corona_exact_big_diameter_or_cycle(const CoronaParams& p) {
    std::vector<std::string> conditions;
    const char* source = "thm:diam6-or-cycle";
    if (!p.g_connected) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("G connected");
    if (p.n1 < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n1>=2");
    if (p.n2 < 7) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n2>=7");
    if (p.h_is_cycle) {
        conditions.push_back("H is a cycle");
    } else if (p.diam_h && *p.diam_h >= 6) {
        conditions.push_back("diam(H)>=6");
    } else {
        return BoundResult::inapplicable(source, conditions);
    }
    if (!p.dim_k1_join_h) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("dim(K_1+H) known");
    return BoundResult::exact(corona_scale(p) * *p.dim_k1_join_h, source, conditions);
}

BoundResult corona_k1_upper(int n, int k, bool g_connected) {
    std::vector<std::string> conditions;
    const char* source = "thm:k1-corona";
    if (!g_connected) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("G connected");
    if (n < 2) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("n>=2");
    if (k < 1) return BoundResult::inapplicable(source, conditions);
    conditions.push_back("k>=1");
    return BoundResult::upper(checked_scale(1, 2, k - 1) * n - 1, source, conditions);
}

Reconciled reconcile(std::span<const BoundResult> results,
                     std::optional<long long> solver_exact) {
    std::vector<std::pair<long long, std::string>> exacts;
    std::optional<long long> best_lower, best_upper;
    std::string lower_source, upper_source;

    for (const BoundResult& r : results) {
        switch (r.kind) {
            case BoundKind::Exact:
                exacts.emplace_back(r.value, r.source);
                break;
            case BoundKind::Lower:
                if (!best_lower || r.value > *best_lower) {
                    best_lower = r.value;
                    lower_source = r.source;
                }
                break;
            case BoundKind::Upper:
                if (!best_upper || r.value < *best_upper) {
                    best_upper = r.value;
                    upper_source = r.source;
                }
                break;
            case BoundKind::Inapplicable:
                break;
        }
    }
    if (solver_exact) exacts.emplace_back(*solver_exact, "solver");

    Reconciled out;
    if (!exacts.empty()) {
        const long long value = exacts.front().first;
        for (const auto& [v, source] : exacts)
            if (v != value)
                throw InconsistencyError("exact values disagree: " + exacts.front().second +
                                         "=" + std::to_string(value) + " vs " + source + "=" +
                                         std::to_string(v));
        if (best_lower && *best_lower > value)
            throw InconsistencyError("lower bound " + lower_source + "=" +
                                     std::to_string(*best_lower) + " exceeds exact value " +
                                     std::to_string(value));
        if (best_upper && *best_upper < value)
            throw InconsistencyError("upper bound " + upper_source + "=" +
                                     std::to_string(*best_upper) + " is below exact value " +
                                     std::to_string(value));
        out.lower = out.upper = value;
        for (const auto& [v, source] : exacts) out.sources.push_back(source);
        return out;
    }

    if (best_lower && best_upper && *best_lower > *best_upper)
        throw InconsistencyError("lower bound " + lower_source + "=" +
                                 std::to_string(*best_lower) + " exceeds upper bound " +
                                 upper_source + "=" + std::to_string(*best_upper));
    out.lower = best_lower;
    out.upper = best_upper;
    if (best_lower) out.sources.push_back(lower_source);
    if (best_upper && upper_source != lower_source) out.sources.push_back(upper_source);
    return out;
}

std::vector<BoundResult> evaluate_theorems(const Graph& built, const FamilyDescriptor* desc,
                                           const CoronaContext* ctx,
                                           const SolverBudget& budget) {
    std::vector<BoundResult> out;
    const auto push = [&out](BoundResult r) {
        if (r.applicable()) out.push_back(std::move(r));
    };

    if (desc) push(base_family_dim(*desc));

    std::optional<CoronaContext> from_desc;
    if (ctx == nullptr && desc != nullptr && desc->tag == Family::Corona) {
        from_desc = CoronaContext{make_family(desc->children[0]), make_family(desc->children[1]),
                                  desc->iterations};
        ctx = &*from_desc;
    }

    if (ctx != nullptr) {
        const CoronaParams p = corona_params(ctx->g, ctx->h, ctx->k, budget);
        push(corona_lower(p));
        push(corona_exact_small_diameter(p));
        push(corona_upper_components(p));
        push(corona_exact_empty_h(p));
        push(corona_exact_complete_h(p));
        push(corona_upper_k1_join(p));
        push(corona_exact_big_diameter_or_cycle(p));
        if (p.n2 == 1) {
            push(corona_k1_upper(p.n1, p.k, p.g_connected));
            push(tree_corona_k1_dim(ctx->g, ctx->k));
        }
        // A corona with a one-vertex spine is the join K_1 + H.
        if (p.n1 == 1 && p.k == 1) {
            if (p.h_is_cycle)
                push(wheel_dim(p.n2));
            else if (is_path_graph(ctx->h))
                push(fan_dim(p.n2));
        }
    }

    if (built.order() >= 2 && is_tree(built)) push(tree_dim(built));
    if (built.order() >= 4 && built.order() <= kJoinRecognitionCap && is_connected(built)) {
        const FamilyMatch m = recognize_dim_n_minus_2(built);
        if (m.matches)
            push(BoundResult::exact(built.order() - 2, "lem:n-2",
                                    {"connected", "order>=4", m.tag}));
    }
    return out;
}

}  // namespace mdim
