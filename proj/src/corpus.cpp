#include "mdim/corpus.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mdim/metric.hpp"

namespace mdim {

Graph random_tree(int order, std::mt19937_64& rng) {
    if (order < 1) throw InvalidDescriptorError("random tree needs at least one vertex");
    if (order == 1) return Graph(1);
    if (order == 2) return path_graph(2);

    std::vector<int> prufer(static_cast<std::size_t>(order - 2));
    for (int& x : prufer) x = static_cast<int>(rng() % static_cast<std::uint64_t>(order));

    std::vector<int> degree(static_cast<std::size_t>(order), 1);
    for (int x : prufer) ++degree[static_cast<std::size_t>(x)];

    std::set<int> leaves;
    for (int v = 0; v < order; ++v)
        if (degree[static_cast<std::size_t>(v)] == 1) leaves.insert(v);

    std::vector<Edge> edges;
    for (int x : prufer) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.push_back({std::min(leaf, x), std::max(leaf, x)});
        if (--degree[static_cast<std::size_t>(x)] == 1) leaves.insert(x);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.push_back({a, b});
    return Graph(order, edges);
}

Graph random_connected_graph(int order, std::mt19937_64& rng) {
    if (order < 1) throw InvalidDescriptorError("random graph needs at least one vertex");
    while (true) {
        std::vector<Edge> edges;
        for (int u = 0; u < order; ++u)
            for (int v = u + 1; v < order; ++v)
                if (rng() & 1) edges.push_back({u, v});
        Graph g(order, edges);
        if (is_connected(g)) return g;
    }
}

namespace {

std::vector<Graph> enumerate_up_to_iso(int order, bool (*keep)(const Graph&)) {
    if (order < 1 || order > 6)
        throw SizeLimitError("exhaustive enumeration is limited to orders 1..6");

    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < order; ++u)
        for (int v = u + 1; v < order; ++v) pairs.emplace_back(u, v);
    const int m = static_cast<int>(pairs.size());

    std::vector<int> pair_index(static_cast<std::size_t>(order) * order, -1);
    for (int i = 0; i < m; ++i) {
        pair_index[static_cast<std::size_t>(pairs[i].first) * order + pairs[i].second] = i;
        pair_index[static_cast<std::size_t>(pairs[i].second) * order + pairs[i].first] = i;
    }

    // pair_maps[p][i]: where edge slot i lands under permutation p.
    std::vector<std::vector<int>> pair_maps;
    std::vector<int> perm(static_cast<std::size_t>(order));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<int> map(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i)
            map[static_cast<std::size_t>(i)] =
                pair_index[static_cast<std::size_t>(perm[static_cast<std::size_t>(pairs[i].first)]) * order +
                           perm[static_cast<std::size_t>(pairs[i].second)]];
        pair_maps.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<Graph> out;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        bool canonical = true;
        for (const auto& map : pair_maps) {
            std::uint32_t remapped = 0;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) remapped |= 1u << map[static_cast<std::size_t>(i)];
            if (remapped < mask) {
                canonical = false;
                break;
            }
        }
        if (!canonical) continue;
        std::vector<Edge> edges;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i)) edges.push_back({pairs[i].first, pairs[i].second});
        Graph g(order, edges);
        if (keep(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace

std::vector<Graph> graphs_up_to_iso(int order) {
    return enumerate_up_to_iso(order, [](const Graph&) { return true; });
}

std::vector<Graph> connected_graphs_up_to_iso(int order) {
    return enumerate_up_to_iso(order, [](const Graph& g) { return is_connected(g); });
}

std::vector<Graph> disconnected_graphs_with_edge_up_to_iso(int order) {
    return enumerate_up_to_iso(
        order, [](const Graph& g) { return !is_connected(g) && g.edge_count() >= 1; });
}

}  // namespace mdim
