#pragma once

#include <utility>
#include <vector>

#include "mdim/bounds.hpp"
#include "mdim/graph.hpp"

namespace mdim {

struct TreeProfile {
    bool is_path = false;
    int leaf_count = 0;
    int exterior_major_count = 0;
    // (vertex id, number of leaves whose closest major vertex it is),
    // restricted to major vertices (degree >= 3), ascending by id.
    std::vector<std::pair<int, int>> major_vertices;
};

bool is_tree(const Graph& g);

// Leaf/major-vertex statistics of a tree with at least two vertices. Every
// leaf is charged to its unique closest major vertex; a tie between two
// major vertices is impossible in a tree, because the paths would fork at a
// third, strictly closer major vertex.
TreeProfile tree_profile(const Graph& t);

// Metric dimension of a tree: 1 for paths, otherwise leaf count minus the
// number of exterior major vertices.
BoundResult tree_dim(const Graph& t);

// Dimension of the k-fold corona of a tree (order >= 3) with a single
// vertex: the leaf count for k = 1, and 2^(k-2) * order for k >= 2.
BoundResult tree_corona_k1_dim(const Graph& t, int k);

}  // namespace mdim
