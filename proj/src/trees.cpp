#include "mdim/trees.hpp"

#include <algorithm>

#include "mdim/metric.hpp"

namespace mdim {

bool is_tree(const Graph& g) {
    if (g.order() == 0) return false;
    return g.edge_count() == static_cast<std::size_t>(g.order()) - 1 && is_connected(g);
}

TreeProfile tree_profile(const Graph& t) {
    if (!is_tree(t) || t.order() < 2)
        throw Error("tree profile needs a tree with at least two vertices");

    TreeProfile profile;
    std::vector<int> leaves, majors;
    for (int v = 0; v < t.order(); ++v) {
        if (t.degree(v) == 1) leaves.push_back(v);
        if (t.degree(v) >= 3) majors.push_back(v);
    }
    profile.leaf_count = static_cast<int>(leaves.size());
    profile.is_path = majors.empty();
    if (profile.is_path) return profile;

    std::vector<int> terminal_degree(majors.size(), 0);
    for (int leaf : leaves) {
        const std::vector<Dist> dist = bfs_distances(t, leaf);
        std::size_t closest = 0;
        int ties = 1;
        for (std::size_t m = 1; m < majors.size(); ++m) {
            const int dm = dist[static_cast<std::size_t>(majors[m])].value();
            const int dc = dist[static_cast<std::size_t>(majors[closest])].value();
            if (dm < dc) {
                closest = m;
                ties = 1;
            } else if (dm == dc) {
                ++ties;
            }
        }
        if (ties != 1) throw Error("leaf equidistant from two major vertices in a tree");
        ++terminal_degree[closest];
    }

    for (std::size_t m = 0; m < majors.size(); ++m) {
        profile.major_vertices.emplace_back(majors[m], terminal_degree[m]);
        if (terminal_degree[m] > 0) ++profile.exterior_major_count;
    }
    return profile;
}

BoundResult tree_dim(const Graph& t) {
    if (t.order() < 2 || !is_tree(t)) return BoundResult::inapplicable("lem:tree");
    const TreeProfile profile = tree_profile(t);
    if (profile.is_path) return BoundResult::exact(1, "lem:tree", {"tree", "path"});
    return BoundResult::exact(profile.leaf_count - profile.exterior_major_count, "lem:tree",
                              {"tree", "non-path"});
}

BoundResult tree_corona_k1_dim(const Graph& t, int k) {
    std::vector<std::string> conditions;
    if (!is_tree(t)) return BoundResult::inapplicable("thm:tree-corona", conditions);
    conditions.push_back("tree");
    if (t.order() < 3) return BoundResult::inapplicable("thm:tree-corona", conditions);
    conditions.push_back("order>=3");
    if (k < 1) return BoundResult::inapplicable("thm:tree-corona", conditions);
    conditions.push_back("k>=1");

    if (k == 1)
        return BoundResult::exact(tree_profile(t).leaf_count, "thm:tree-corona", conditions);
    const long long scale = 1LL << (k - 2);
    return BoundResult::exact(scale * t.order(), "thm:tree-corona", conditions);
}

}  // namespace mdim
