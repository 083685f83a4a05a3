#include "mdim/metric.hpp"

#include <algorithm>
#include <queue>

namespace mdim {

DistanceMatrix::DistanceMatrix(int n, std::vector<Dist> cells)
    : n_(n), cells_(std::move(cells)) {
    if (cells_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
        throw Error("distance matrix cell count does not match its order");
    finite_ = std::all_of(cells_.begin(), cells_.end(), [](Dist d) { return d.reachable(); });
}

Dist DistanceMatrix::at(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw InvalidVertexError("distance query out of range");
    return cells_[static_cast<std::size_t>(u) * n_ + v];
}

std::span<const Dist> DistanceMatrix::row(int u) const {
    if (u < 0 || u >= n_) throw InvalidVertexError("distance row out of range");
    return {cells_.data() + static_cast<std::size_t>(u) * n_, static_cast<std::size_t>(n_)};
}

std::vector<Dist> bfs_distances(const Graph& g, int source) {
    if (source < 0 || source >= g.order())
        throw InvalidVertexError("bfs source out of range");
    std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
    dist[static_cast<std::size_t>(source)] = 0;
    std::queue<int> frontier;
    frontier.push(source);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        for (int v : g.neighbors(u)) {
            if (dist[static_cast<std::size_t>(v)] >= 0) continue;
            dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
            frontier.push(v);
        }
    }
    std::vector<Dist> out(dist.size());
    for (std::size_t i = 0; i < dist.size(); ++i)
        out[i] = dist[i] < 0 ? Dist::unreachable() : Dist::finite(dist[i]);
    return out;
}

DistanceMatrix all_pairs(const Graph& g) {
    const int n = g.order();
    std::vector<Dist> cells(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int s = 0; s < n; ++s) {
        std::vector<Dist> row = bfs_distances(g, s);
        std::copy(row.begin(), row.end(), cells.begin() + static_cast<std::size_t>(s) * n);
    }
    return DistanceMatrix(n, std::move(cells));
}

std::optional<int> diameter(const Graph& g) {
    if (g.order() == 0) return std::nullopt;
    if (g.order() == 1) return 0;
    int best = 0;
    for (int s = 0; s < g.order(); ++s) {
        for (Dist d : bfs_distances(g, s)) {
            if (!d.reachable()) return std::nullopt;
            best = std::max(best, d.value());
        }
    }
    return best;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    const std::vector<Dist> from_zero = bfs_distances(g, 0);
    return std::all_of(from_zero.begin(), from_zero.end(),
                       [](Dist d) { return d.reachable(); });
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    for (int s = 0; s < g.order(); ++s) {
        if (seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> component;
        std::queue<int> frontier;
        frontier.push(s);
        seen[static_cast<std::size_t>(s)] = true;
        while (!frontier.empty()) {
            const int u = frontier.front();
            frontier.pop();
            component.push_back(u);
            for (int v : g.neighbors(u)) {
                if (seen[static_cast<std::size_t>(v)]) continue;
                seen[static_cast<std::size_t>(v)] = true;
                frontier.push(v);
            }
        }
        std::sort(component.begin(), component.end());
        out.push_back(std::move(component));
    }
    return out;
}

Representation representation(const DistanceMatrix& dm, int v, std::span<const int> landmarks) {
    Representation rep;
    rep.reserve(landmarks.size());
    for (int s : landmarks) rep.push_back(dm.at(v, s));
    return rep;
}

}  // namespace mdim
