#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mdim/metric.hpp"
#include "test_support.hpp"

using namespace mdim;

TEST_CASE("unreachable distances compare above every finite distance") {
    const Dist inf = Dist::unreachable();
    const Dist zero = Dist::finite(0);
    const Dist five = Dist::finite(5);
    CHECK(zero < five);
    CHECK(five < inf);
    CHECK(zero < inf);
    CHECK_FALSE(inf < inf);
    CHECK(inf == Dist::unreachable());
    CHECK(inf != five);
    CHECK(five.value() == 5);
    CHECK_FALSE(inf.reachable());
    CHECK_THROWS_AS(inf.value(), Error);
}

TEST_CASE("bfs distances on a path count the hops") {
    const auto d = bfs_distances(path_graph(4), 0);
    REQUIRE(d.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(d[static_cast<std::size_t>(v)] == Dist::finite(v));
}

TEST_CASE("bfs marks the other component unreachable") {
    const Graph g = disjoint_union(path_graph(2), path_graph(2));
    const auto d = bfs_distances(g, 0);
    CHECK(d[1] == Dist::finite(1));
    CHECK_FALSE(d[2].reachable());
    CHECK_FALSE(d[3].reachable());
}

TEST_CASE("all_pairs agrees with Floyd-Warshall on a corona product") {
    const Graph g = corona(cycle_graph(4), path_graph(3)).graph;
    const DistanceMatrix dm = all_pairs(g);
    const auto fw = testsupport::floyd_warshall(g);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < g.order(); ++v)
            CHECK(dm.at(u, v) == Dist::finite(fw[static_cast<std::size_t>(u)]
                                                [static_cast<std::size_t>(v)]));
    CHECK(dm.all_finite());
}

TEST_CASE("distance matrix flags disconnected graphs") {
    const DistanceMatrix dm = all_pairs(disjoint_union(path_graph(2), complete_graph(3)));
    CHECK_FALSE(dm.all_finite());
    CHECK_FALSE(dm.at(0, 2).reachable());
    CHECK(dm.at(2, 4) == Dist::finite(1));
}

TEST_CASE("diameter of the standard families") {
    CHECK(diameter(path_graph(5)) == 4);
    CHECK(diameter(cycle_graph(6)) == 3);
    CHECK(diameter(cycle_graph(7)) == 3);
    CHECK(diameter(complete_graph(4)) == 1);
    CHECK(diameter(wheel_graph(6)) == 2);
    CHECK(diameter(path_graph(1)) == 0);
    CHECK(diameter(empty_graph(0)) == std::nullopt);
    CHECK(diameter(empty_graph(2)) == std::nullopt);
    CHECK(diameter(disjoint_union(path_graph(2), path_graph(2))) == std::nullopt);
}

TEST_CASE("connectivity and components") {
    CHECK(is_connected(cycle_graph(5)));
    CHECK(is_connected(path_graph(1)));
    CHECK_FALSE(is_connected(empty_graph(3)));
    CHECK(is_connected(empty_graph(0)));  // vacuously: zero components
    CHECK(connected_components(empty_graph(0)).empty());

    const Graph g = disjoint_union(disjoint_union(path_graph(2), complete_graph(1)),
                                   cycle_graph(3));
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector<int>{0, 1});
    CHECK(comps[1] == std::vector<int>{2});
    CHECK(comps[2] == std::vector<int>{3, 4, 5});
}

TEST_CASE("representations list distances in landmark order") {
    const DistanceMatrix dm = all_pairs(cycle_graph(6));
    const std::vector<int> landmarks{0, 2};
    const Representation r4 = representation(dm, 4, landmarks);
    REQUIRE(r4.size() == 2);
    CHECK(r4[0] == Dist::finite(2));
    CHECK(r4[1] == Dist::finite(2));
    const Representation r0 = representation(dm, 0, landmarks);
    CHECK(r0[0] == Dist::finite(0));
    CHECK(r0[1] == Dist::finite(2));
}
