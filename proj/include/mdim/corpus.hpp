#pragma once

#include <random>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

// Uniformly random labeled tree on the given order, decoded from a random
// Prufer sequence. Deterministic for a given generator state.
Graph random_tree(int order, std::mt19937_64& rng);

// G(n, 1/2) rejection-sampled until connected. order >= 1.
Graph random_connected_graph(int order, std::mt19937_64& rng);

// Every graph of the given order up to isomorphism (canonical = the
// lexicographically smallest edge bitmask over all vertex relabelings),
// in ascending mask order. order <= 6.
std::vector<Graph> graphs_up_to_iso(int order);
std::vector<Graph> connected_graphs_up_to_iso(int order);
std::vector<Graph> disconnected_graphs_with_edge_up_to_iso(int order);

}  // namespace mdim
