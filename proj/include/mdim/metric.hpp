#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mdim/graph.hpp"

namespace mdim {

// Shortest-path distance with an explicit unreachable marker. Unreachable
// compares strictly greater than every finite distance and equal only to
// itself. No arithmetic is defined on Dist: callers must go through value(),
// which refuses to produce a number for the unreachable marker.
class Dist {
public:
    constexpr Dist() = default;  // unreachable

    static constexpr Dist unreachable() { return Dist{}; }
    static constexpr Dist finite(int v) {
        Dist d;
        d.raw_ = v;
        return d;
    }

    constexpr bool reachable() const { return raw_ >= 0; }

    int value() const {
        if (raw_ < 0) throw Error("value() called on an unreachable distance");
        return raw_;
    }

    friend constexpr bool operator==(Dist, Dist) = default;
    friend constexpr bool operator<(Dist a, Dist b) {
        if (b.raw_ < 0) return a.raw_ >= 0;
        if (a.raw_ < 0) return false;
        return a.raw_ < b.raw_;
    }
    friend constexpr bool operator>(Dist a, Dist b) { return b < a; }
    friend constexpr bool operator<=(Dist a, Dist b) { return !(b < a); }
    friend constexpr bool operator>=(Dist a, Dist b) { return !(a < b); }

private:
    int raw_ = -1;
};

class DistanceMatrix {
public:
    DistanceMatrix() = default;
    DistanceMatrix(int n, std::vector<Dist> cells);

    int order() const { return n_; }
    Dist at(int u, int v) const;
    std::span<const Dist> row(int u) const;
    bool all_finite() const { return finite_; }

private:
    int n_ = 0;
    std::vector<Dist> cells_;
    bool finite_ = true;
};

std::vector<Dist> bfs_distances(const Graph& g, int source);

// n breadth-first traversals; rows are independent, so the result never
// depends on traversal order.
DistanceMatrix all_pairs(const Graph& g);

// Largest finite pairwise distance. Empty and disconnected graphs have no
// diameter; the 1-vertex graph has diameter 0.
std::optional<int> diameter(const Graph& g);

bool is_connected(const Graph& g);

// Vertex sets of the connected components, each sorted, ordered by smallest
// member.
std::vector<std::vector<int>> connected_components(const Graph& g);

using Representation = std::vector<Dist>;

// Distance vector from v to each landmark, in landmark order.
Representation representation(const DistanceMatrix& dm, int v, std::span<const int> landmarks);

}  // namespace mdim
