#include "mdim/resolver.hpp"

#include <algorithm>
#include <numeric>

namespace mdim {

namespace {

void validate_landmarks(int n, const LandmarkSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 0 || s[i] >= n)
            throw InvalidVertexError("landmark " + std::to_string(s[i]) + " out of range");
        if (i > 0 && s[i - 1] >= s[i])
            throw Error("landmarks must be sorted strictly ascending");
    }
}

// Representation-distinctness over finite distances. Rows are compared via a
// flat buffer and an index sort to avoid per-vertex allocations.
bool resolves(const DistanceMatrix& dm, std::span<const int> landmarks,
              std::vector<int>& flat, std::vector<int>& index) {
    const int n = dm.order();
    const int k = static_cast<int>(landmarks.size());
    if (k == 0) return n <= 1;

    flat.resize(static_cast<std::size_t>(n) * k);
    for (int v = 0; v < n; ++v) {
        std::span<const Dist> row = dm.row(v);
        int* out = flat.data() + static_cast<std::size_t>(v) * k;
        for (int j = 0; j < k; ++j) out[j] = row[static_cast<std::size_t>(landmarks[j])].value();
    }

    index.resize(static_cast<std::size_t>(n));
    std::iota(index.begin(), index.end(), 0);
    const auto rep = [&](int v) {
        return std::span<const int>(flat.data() + static_cast<std::size_t>(v) * k,
                                    static_cast<std::size_t>(k));
    };
    std::sort(index.begin(), index.end(), [&](int a, int b) {
        return std::ranges::lexicographical_compare(rep(a), rep(b));
    });
    for (int i = 0; i + 1 < n; ++i)
        if (std::ranges::equal(rep(index[static_cast<std::size_t>(i)]),
                               rep(index[static_cast<std::size_t>(i + 1)])))
            return false;
    return true;
}

}  // namespace

bool is_resolving(const DistanceMatrix& dm, const LandmarkSet& s) {
    if (!dm.all_finite())
        throw DisconnectedError("resolving sets are defined on connected graphs only");
    validate_landmarks(dm.order(), s);
    std::vector<int> flat, index;
    return resolves(dm, s, flat, index);
}

std::vector<std::vector<int>> twin_partition(const DistanceMatrix& dm) {
    const int n = dm.order();
    std::vector<std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
        bool placed = false;
        for (auto& cls : classes) {
            const int leader = cls.front();
            bool twin = true;
            for (int x = 0; x < n && twin; ++x) {
                if (x == v || x == leader) continue;
                twin = dm.at(v, x) == dm.at(leader, x);
            }
            if (twin) {
                cls.push_back(v);
                placed = true;
                break;
            }
        }
        if (!placed) classes.push_back({v});
    }
    return classes;
}

int twin_lower_bound(const std::vector<std::vector<int>>& partition) {
    int n = 0;
    int bound = 0;
    for (const auto& cls : partition) {
        n += static_cast<int>(cls.size());
        bound += static_cast<int>(cls.size()) - 1;
    }
    if (n >= 2) bound = std::max(bound, 1);
    return bound;
}

LandmarkSet greedy_upper_bound(const DistanceMatrix& dm) {
    if (!dm.all_finite())
        throw DisconnectedError("greedy upper bound needs a connected graph");
    const int n = dm.order();

    std::vector<std::pair<int, int>> unresolved;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) unresolved.emplace_back(u, v);

    LandmarkSet chosen;
    while (!unresolved.empty()) {
        int best = -1;
        long long best_count = 0;
        for (int w = 0; w < n; ++w) {
            long long count = 0;
            for (const auto& [a, b] : unresolved)
                if (dm.at(a, w) != dm.at(b, w)) ++count;
            if (count > best_count) {
                best_count = count;
                best = w;
            }
        }
        if (best < 0) throw Error("greedy upper bound failed to make progress");
        chosen.push_back(best);
        std::erase_if(unresolved, [&](const std::pair<int, int>& p) {
            return dm.at(p.first, best) != dm.at(p.second, best);
        });
    }

    std::sort(chosen.begin(), chosen.end());
    if (!is_resolving(dm, chosen)) throw Error("greedy produced a non-resolving set");
    return chosen;
}

SolverResult metric_dimension_exact(const Graph& g, const SolverBudget& budget) {
    const int n = g.order();
    if (n < 2) throw TrivialInputError("metric dimension search needs at least two vertices");
    const DistanceMatrix dm = all_pairs(g);
    if (!dm.all_finite())
        throw DisconnectedError("metric dimension is defined for connected graphs only");

    const auto partition = twin_partition(dm);
    const int lower = twin_lower_bound(partition);
    const LandmarkSet greedy = greedy_upper_bound(dm);

    std::vector<int> class_of(static_cast<std::size_t>(n));
    std::vector<int> class_size(partition.size());
    for (std::size_t c = 0; c < partition.size(); ++c) {
        class_size[c] = static_cast<int>(partition[c].size());
        for (int v : partition[c]) class_of[static_cast<std::size_t>(v)] = static_cast<int>(c);
    }

    const int size_cap = std::min(budget.max_subset_size.value_or(n - 1), n - 1);
    const auto deadline = std::chrono::steady_clock::now() + budget.time_limit;

    SolverResult result;
    std::vector<int> flat, index, selected(partition.size());
    std::vector<int> idx;
    long long enumerated = 0;

    for (int k = std::max(lower, 1); k <= size_cap; ++k) {
        idx.resize(static_cast<std::size_t>(k));
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            // Twin filter: a candidate that misses two members of one class
            // leaves those members with identical representations.
            std::fill(selected.begin(), selected.end(), 0);
            for (int v : idx) ++selected[static_cast<std::size_t>(class_of[static_cast<std::size_t>(v)])];
            bool viable = true;
            for (std::size_t c = 0; c < class_size.size() && viable; ++c)
                viable = selected[c] >= class_size[c] - 1;

            if (viable) {
                ++result.subsets_checked;
                if (resolves(dm, idx, flat, index)) {
                    result.status = SolveStatus::Exact;
                    result.value = k;
                    result.witness = idx;
                    return result;
                }
            }
            if (result.subsets_checked >= budget.max_subsets_checked ||
                (++enumerated % 1024 == 0 && std::chrono::steady_clock::now() >= deadline)) {
                result.status = SolveStatus::BoundsOnly;
                result.lower = k;
                result.upper = static_cast<int>(greedy.size());
                result.witness = greedy;
                return result;
            }

            // Advance to the next k-combination in lexicographic order.
            int i = k - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < k; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }

    // All cardinalities up to the cap are exhausted; on a connected graph the
    // search at n-1 always succeeds, so this is reachable only with a
    // restricted budget.
    result.status = SolveStatus::BoundsOnly;
    result.lower = size_cap + 1;
    result.upper = static_cast<int>(greedy.size());
    result.witness = greedy;
    return result;
}

}  // namespace mdim
