#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "mdim/corpus.hpp"
#include "mdim/expr.hpp"
#include "mdim/oracle.hpp"
#include "mdim/resolver.hpp"
#include "mdim/trees.hpp"
#include "test_support.hpp"

using namespace mdim;

namespace {

std::vector<Graph> mixed_sample(std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Graph> out;
    for (int order = 2; order <= 10; ++order) {
        out.push_back(random_connected_graph(order, rng));
        out.push_back(random_tree(std::max(order, 3), rng));
    }
    out.push_back(disjoint_union(path_graph(3), cycle_graph(4)));
    out.push_back(disjoint_union(empty_graph(2), complete_graph(3)));
    return out;
}

long long power(long long base, int exp) {
    long long r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

}  // namespace

TEST_CASE("corona order, size and degree formulas") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_connected_graph(2 + static_cast<int>(rng() % 5), rng);
        const Graph h = random_connected_graph(1 + static_cast<int>(rng() % 4), rng);
        const int n1 = g.order(), n2 = h.order();
        const CoronaResult r = corona(g, h);

        CHECK(r.graph.order() == n1 * (n2 + 1));
        CHECK(r.graph.edge_count() == g.edge_count() + n1 * (h.edge_count() + n2));
        for (int i = 0; i < n1; ++i)
            CHECK(r.graph.degree(r.structure.spine[static_cast<std::size_t>(i)]) ==
                  g.degree(i) + n2);
        for (int i = 0; i < n1; ++i)
            for (int j = 0; j < n2; ++j) {
                const int v = r.structure.copies[static_cast<std::size_t>(i)]
                                               [static_cast<std::size_t>(j)];
                CHECK(r.graph.degree(v) == h.degree(j) + 1);
            }
    }
}

TEST_CASE("iterated corona order formula") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 6; ++trial) {
        const int n1 = 1 + static_cast<int>(rng() % 3);
        const int n2 = 1 + static_cast<int>(rng() % 3);
        const int k = 1 + static_cast<int>(rng() % 3);
        const Graph g = random_connected_graph(n1, rng);
        const Graph h = random_connected_graph(n2, rng);
        CHECK(iterated_corona(g, h, k).graph.order() == n1 * power(n2 + 1, k));
    }
}

TEST_CASE("complement of a join is the union of the complements") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 15; ++trial) {
        const Graph g = random_connected_graph(1 + static_cast<int>(rng() % 4), rng);
        const Graph h = random_connected_graph(1 + static_cast<int>(rng() % 4), rng);
        CHECK(complement(graph_join(g, h)).edges() ==
              disjoint_union(complement(g), complement(h)).edges());
    }
}

TEST_CASE("a corona with a one-vertex spine is the hub join") {
    for (int n = 3; n <= 9; ++n)
        CHECK(corona(complete_graph(1), cycle_graph(n)).graph.edges() == wheel_graph(n).edges());
    for (int n = 1; n <= 9; ++n)
        CHECK(corona(complete_graph(1), path_graph(n)).graph.edges() == fan_graph(n).edges());
}

TEST_CASE("bfs distances equal Floyd-Warshall everywhere") {
    for (const Graph& g : mixed_sample(21)) {
        const DistanceMatrix dm = all_pairs(g);
        const auto fw = testsupport::floyd_warshall(g);
        for (int u = 0; u < g.order(); ++u)
            for (int v = 0; v < g.order(); ++v) {
                const int expected = fw[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
                if (expected == testsupport::kUnreachable)
                    CHECK_FALSE(dm.at(u, v).reachable());
                else
                    CHECK(dm.at(u, v) == Dist::finite(expected));
            }
    }
}

TEST_CASE("distance matrices are symmetric with a zero diagonal and unit edges") {
    for (const Graph& g : mixed_sample(22)) {
        const DistanceMatrix dm = all_pairs(g);
        for (int u = 0; u < g.order(); ++u) {
            CHECK(dm.at(u, u) == Dist::finite(0));
            for (int v = u + 1; v < g.order(); ++v) {
                CHECK(dm.at(u, v) == dm.at(v, u));
                if (g.has_edge(u, v)) CHECK(dm.at(u, v) == Dist::finite(1));
                if (dm.at(u, v) == Dist::finite(1)) CHECK(g.has_edge(u, v));
            }
        }
    }
}

TEST_CASE("isomorphism-free enumeration matches the known counts") {
    CHECK(graphs_up_to_iso(1).size() == 1);
    CHECK(graphs_up_to_iso(2).size() == 2);
    CHECK(graphs_up_to_iso(3).size() == 4);
    CHECK(graphs_up_to_iso(4).size() == 11);
    CHECK(connected_graphs_up_to_iso(3).size() == 2);
    CHECK(connected_graphs_up_to_iso(4).size() == 6);
    CHECK(connected_graphs_up_to_iso(5).size() == 21);
    CHECK(connected_graphs_up_to_iso(6).size() == 112);
    CHECK(disconnected_graphs_with_edge_up_to_iso(3).size() == 1);
    CHECK(disconnected_graphs_with_edge_up_to_iso(4).size() == 4);
    CHECK(disconnected_graphs_with_edge_up_to_iso(5).size() == 12);
    CHECK_THROWS_AS(graphs_up_to_iso(7), SizeLimitError);

    // No two enumerated order-4 graphs are isomorphic.
    const auto all4 = graphs_up_to_iso(4);
    for (std::size_t i = 0; i < all4.size(); ++i)
        for (std::size_t j = i + 1; j < all4.size(); ++j)
            CHECK_FALSE(testsupport::is_isomorphic(all4[i], all4[j]));
}

TEST_CASE("twin bound, exact dimension and greedy bound are ordered") {
    for (int order = 2; order <= 6; ++order)
        for (const Graph& g : connected_graphs_up_to_iso(order)) {
            const DistanceMatrix dm = all_pairs(g);
            const int dim = testsupport::naive_dim(g);
            CHECK(twin_lower_bound(twin_partition(dm)) <= dim);
            CHECK(dim <= static_cast<int>(greedy_upper_bound(dm).size()));
        }
}

TEST_CASE("the pruned solver agrees with the unpruned reference everywhere") {
    for (int order = 2; order <= 5; ++order)
        for (const Graph& g : connected_graphs_up_to_iso(order)) {
            const SolverResult r = metric_dimension_exact(g);
            REQUIRE(r.status == SolveStatus::Exact);
            CHECK(r.value == testsupport::naive_dim(g));
            CHECK(r.witness == testsupport::naive_min_witness(g));
        }
    const auto six = connected_graphs_up_to_iso(6);
    for (std::size_t i = 0; i < six.size(); i += 4) {
        const SolverResult r = metric_dimension_exact(six[i]);
        CHECK(r.value == testsupport::naive_dim(six[i]));
        CHECK(r.witness == testsupport::naive_min_witness(six[i]));
    }
}

TEST_CASE("witnesses are minimal: removing any landmark breaks resolution") {
    std::mt19937_64 rng(31);
    std::vector<Graph> sample;
    for (int t = 0; t < 8; ++t)
        sample.push_back(random_connected_graph(4 + static_cast<int>(rng() % 6), rng));
    sample.push_back(corona(path_graph(2), cycle_graph(5)).graph);
    sample.push_back(corona(cycle_graph(3), empty_graph(2)).graph);
    for (const Graph& g : sample) {
        const SolverResult r = metric_dimension_exact(g);
        REQUIRE(r.status == SolveStatus::Exact);
        const DistanceMatrix dm = all_pairs(g);
        CHECK(is_resolving(dm, r.witness));
        for (std::size_t drop = 0; drop < r.witness.size(); ++drop) {
            LandmarkSet reduced = r.witness;
            reduced.erase(reduced.begin() + static_cast<std::ptrdiff_t>(drop));
            CHECK_FALSE(is_resolving(dm, reduced));
        }
    }
}

TEST_CASE("copy vertices are indistinguishable from outside their copy") {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_connected_graph(2 + static_cast<int>(rng() % 3), rng);
        const Graph h = trial % 3 == 0
                            ? disjoint_union(path_graph(2), empty_graph(1))
                            : random_connected_graph(2 + static_cast<int>(rng() % 3), rng);
        const CoronaResult r = corona(g, h);
        const DistanceMatrix dm = all_pairs(r.graph);
        for (const auto& copy : r.structure.copies) {
            const std::set<int> members(copy.begin(), copy.end());
            for (std::size_t a = 0; a < copy.size(); ++a)
                for (std::size_t b = a + 1; b < copy.size(); ++b)
                    for (int x = 0; x < r.graph.order(); ++x)
                        if (!members.count(x))
                            CHECK(dm.at(copy[a], x) == dm.at(copy[b], x));
        }
    }
}

TEST_CASE("every resolving set meets every copy, and spine-free cores resolve") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_connected_graph(2 + static_cast<int>(rng() % 3), rng);
        const Graph h = trial % 2 == 0 ? random_connected_graph(2 + static_cast<int>(rng() % 3), rng)
                                       : empty_graph(2 + static_cast<int>(rng() % 3));
        const CoronaResult r = corona(g, h);
        const DistanceMatrix dm = all_pairs(r.graph);
        const SolverResult solved = metric_dimension_exact(r.graph);
        REQUIRE(solved.status == SolveStatus::Exact);

        for (const LandmarkSet& s : {solved.witness, greedy_upper_bound(dm)}) {
            for (const auto& copy : r.structure.copies) {
                bool hit = false;
                for (int v : copy)
                    if (std::binary_search(s.begin(), s.end(), v)) hit = true;
                CHECK(hit);
            }
        }

        // Dropping the spine from a minimum witness never loses resolution.
        LandmarkSet stripped;
        for (int v : solved.witness)
            if (v >= g.order()) stripped.push_back(v);
        CHECK(is_resolving(dm, stripped));

        // With the spine gone, its size shows the per-copy split of the minimum.
        if (h.order() >= 2) CHECK(stripped.size() == solved.witness.size());
    }
}

TEST_CASE("witness slices resolve their own copies when the operand is connected") {
    std::mt19937_64 rng(43);
    for (int trial = 0; trial < 10; ++trial) {
        const Graph g = random_connected_graph(2 + static_cast<int>(rng() % 3), rng);
        const Graph h = random_connected_graph(2 + static_cast<int>(rng() % 4), rng);
        const CoronaResult r = corona(g, h);
        const SolverResult solved = metric_dimension_exact(r.graph);
        REQUIRE(solved.status == SolveStatus::Exact);
        const DistanceMatrix dm_h = all_pairs(h);
        for (std::size_t i = 0; i < r.structure.copies.size(); ++i) {
            const auto& copy = r.structure.copies[i];
            LandmarkSet inside;
            for (std::size_t j = 0; j < copy.size(); ++j)
                if (std::binary_search(solved.witness.begin(), solved.witness.end(), copy[j]))
                    inside.push_back(static_cast<int>(j));
            CHECK(is_resolving(dm_h, inside));
        }
    }
}

TEST_CASE("a neighbor of a branching vertex never sits on all its shortest paths") {
    // For adjacent u, v with deg(v) >= 2 some third vertex x has
    // d(v,x) != d(u,x) + 1.
    std::mt19937_64 rng(44);
    std::vector<Graph> sample = mixed_sample(44);
    for (int t = 0; t < 5; ++t)
        sample.push_back(random_tree(5 + static_cast<int>(rng() % 5), rng));
    for (const Graph& g : sample) {
        if (!is_connected(g) || g.order() < 3) continue;
        const DistanceMatrix dm = all_pairs(g);
        for (int v = 0; v < g.order(); ++v) {
            if (g.degree(v) < 2) continue;
            for (int u : g.neighbors(v)) {
                bool found = false;
                for (int x = 0; x < g.order() && !found; ++x) {
                    if (x == u || x == v) continue;
                    if (dm.at(v, x).value() != dm.at(u, x).value() + 1) found = true;
                }
                CHECK(found);
            }
        }
    }
}

TEST_CASE("adding a pendant vertex changes the dimension by at most one") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 12; ++trial) {
        const Graph g = random_connected_graph(3 + static_cast<int>(rng() % 5), rng);
        const int anchor = static_cast<int>(rng() % static_cast<std::uint64_t>(g.order()));
        std::vector<Edge> edges = g.edges();
        edges.push_back({anchor, g.order()});
        const Graph extended(g.order() + 1, edges);
        const int base = testsupport::naive_dim(g);
        const int grown = testsupport::naive_dim(extended);
        CHECK(base <= grown);
        CHECK(grown <= base + 1);
    }
}

TEST_CASE("random descriptors survive a print-parse round trip") {
    std::mt19937_64 rng(46);
    const auto random_leaf = [&rng]() {
        switch (rng() % 6) {
            case 0: return desc::path(1 + static_cast<int>(rng() % 9));
            case 1: return desc::cycle(3 + static_cast<int>(rng() % 7));
            case 2: return desc::complete(1 + static_cast<int>(rng() % 6));
            case 3: return desc::empty(1 + static_cast<int>(rng() % 5));
            case 4: return desc::kst(1 + static_cast<int>(rng() % 3), 1 + static_cast<int>(rng() % 3));
            default: return desc::wheel(3 + static_cast<int>(rng() % 6));
        }
    };
    for (int trial = 0; trial < 40; ++trial) {
        FamilyDescriptor d = random_leaf();
        for (int depth = static_cast<int>(rng() % 3); depth > 0; --depth) {
            switch (rng() % 4) {
                case 0: d = desc::join(d, random_leaf()); break;
                case 1: d = desc::disjoint_union(random_leaf(), d); break;
                case 2: d = desc::complement(d); break;
                default: d = desc::corona(d, random_leaf(), 1 + static_cast<int>(rng() % 3)); break;
            }
        }
        CAPTURE(print_descriptor(d));
        CHECK(parse_graph_expr(print_descriptor(d)).tree == d);
    }
}

TEST_CASE("tree dimension formula matches the solver on random trees") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph t = random_tree(4 + static_cast<int>(rng() % 7), rng);
        CAPTURE(write_edge_list(t));
        CHECK(tree_dim(t).value == metric_dimension_exact(t).value);
    }
}

TEST_CASE("random trees are trees and random connected graphs are connected") {
    std::mt19937_64 rng(48);
    for (int trial = 0; trial < 25; ++trial) {
        const Graph t = random_tree(2 + static_cast<int>(rng() % 9), rng);
        CHECK(is_tree(t));
        const Graph g = random_connected_graph(1 + static_cast<int>(rng() % 9), rng);
        CHECK(is_connected(g));
    }
}

TEST_CASE("order-minus-two recognition is exactly the dimension condition") {
    // Forward on every connected graph; backward on the small-diameter ones,
    // where the characterization applies.
    for (int order = 4; order <= 6; ++order)
        for (const Graph& g : connected_graphs_up_to_iso(order)) {
            const FamilyMatch m = recognize_dim_n_minus_2(g);
            REQUIRE(m.applicable);
            const int dim = testsupport::naive_dim(g);
            if (m.matches) CHECK(dim == order - 2);
            const auto diam = diameter(g);
            if (diam && *diam <= 2 && dim == order - 2) CHECK(m.matches);
        }
}

TEST_CASE("products with small-diameter operands multiply the dimension") {
    for (const Graph& h : connected_graphs_up_to_iso(4)) {
        const auto diam = diameter(h);
        if (!diam || *diam > 2) continue;
        const Graph product = corona(path_graph(2), h).graph;
        CHECK(metric_dimension_exact(product).value == 2 * testsupport::naive_dim(h));
    }
}

TEST_CASE("products with disconnected operands respect the component bound") {
    for (int order = 3; order <= 4; ++order)
        for (const Graph& h : disconnected_graphs_with_edge_up_to_iso(order)) {
            int alpha = 0, beta = 0;
            for (const auto& comp : connected_components(h))
                comp.size() >= 2 ? ++alpha : ++beta;
            const int factor = beta >= 1 ? h.order() - alpha - 1 : h.order() - alpha;
            const Graph product = corona(path_graph(2), h).graph;
            const int dim = metric_dimension_exact(product).value;
            CHECK(dim <= 2 * factor);
            CHECK(dim <= 2 * (h.order() - 2));
        }
}

TEST_CASE("large cycle and path operands hit the hub-join dimension exactly") {
    CHECK(metric_dimension_exact(corona(path_graph(2), cycle_graph(8)).graph).value == 2 * 3);
    CHECK(metric_dimension_exact(corona(path_graph(2), path_graph(8)).graph).value == 2 * 3);
    // Wheel operand of order 8: its own dimension is 3 and its diameter 2.
    CHECK(metric_dimension_exact(corona(path_graph(2), wheel_graph(7)).graph).value == 2 * 3);
}

TEST_CASE("every theorem sandwiches the solver on small base-family products") {
    std::vector<std::pair<std::string, FamilyDescriptor>> operand_pool;
    for (int n = 1; n <= 4; ++n) operand_pool.emplace_back("path", desc::path(n));
    for (int n = 3; n <= 4; ++n) operand_pool.emplace_back("cycle", desc::cycle(n));
    for (int n = 1; n <= 4; ++n) operand_pool.emplace_back("complete", desc::complete(n));
    for (int n = 1; n <= 4; ++n) operand_pool.emplace_back("empty", desc::empty(n));
    operand_pool.emplace_back("star", desc::star(3));
    operand_pool.emplace_back("kst", desc::kst(2, 2));

    int combinations = 0;
    for (const auto& [gname, gd] : operand_pool) {
        if (gname == "empty" && gd.params[0] > 1) continue;  // spine must be connected
        const Graph g = make_family(gd);
        for (const auto& [hname, hd] : operand_pool) {
            const Graph h = make_family(hd);
            for (int k = 1; k <= 3; ++k) {
                long long order = g.order();
                for (int i = 0; i < k; ++i) order *= h.order() + 1;
                if (order > 20 || order < 2) continue;

                const FamilyDescriptor cd = desc::corona(gd, hd, k);
                const Graph product = make_family(cd);
                const SolverResult solved = metric_dimension_exact(product);
                REQUIRE(solved.status == SolveStatus::Exact);
                const auto oracle = evaluate_theorems(product, &cd, nullptr);
                CAPTURE(print_descriptor(cd));
                const Reconciled together = reconcile(oracle, solved.value);
                CHECK(together.exact());
                CHECK(*together.lower == solved.value);
                ++combinations;
            }
        }
    }
    CHECK(combinations > 100);
}
