#pragma once

#include <chrono>
#include <optional>
#include <vector>

#include "mdim/metric.hpp"

namespace mdim {

// Landmark ids, sorted strictly ascending.
using LandmarkSet = std::vector<int>;

struct SolverBudget {
    // Largest landmark-set cardinality the search will try; defaults to
    // order - 1, which always suffices on a connected graph.
    std::optional<int> max_subset_size;
    std::chrono::milliseconds time_limit{60'000};
    long long max_subsets_checked = 100'000'000;
};

enum class SolveStatus { Exact, BoundsOnly };

struct SolverResult {
    SolveStatus status = SolveStatus::Exact;
    int value = 0;                 // Exact only
    int lower = 0;                 // BoundsOnly: cardinalities below this are exhausted
    int upper = 0;                 // BoundsOnly: size of a verified resolving set
    LandmarkSet witness;           // minimum resolving set, or the greedy set for BoundsOnly
    long long subsets_checked = 0;
};

// True when the landmark distance vectors of all vertices are pairwise
// distinct. Landmarks must be sorted, distinct and in range.
bool is_resolving(const DistanceMatrix& dm, const LandmarkSet& s);

// Vertices u, v are twins when d(u,x) = d(v,x) for every x outside {u,v}.
// Classes are sorted internally and ordered by smallest member.
std::vector<std::vector<int>> twin_partition(const DistanceMatrix& dm);

// Any resolving set misses at most one vertex of each twin class, giving
// sum(|class| - 1) as a lower bound, clamped to 1 once the graph has two
// vertices.
int twin_lower_bound(const std::vector<std::vector<int>>& partition);

// Grows a landmark set by repeatedly adding the vertex that separates the
// most still-unresolved vertex pairs (smallest id on ties). The returned set
// is verified resolving.
LandmarkSet greedy_upper_bound(const DistanceMatrix& dm);

// Exhaustive search in increasing cardinality, starting at the twin lower
// bound. Candidate subsets are enumerated in lexicographic order and subsets
// missing two or more members of a twin class are skipped (they can never
// resolve), so the first hit is the lexicographically smallest minimum
// resolving set. Returns BoundsOnly when the budget runs out first.
SolverResult metric_dimension_exact(const Graph& g, const SolverBudget& budget = {});

}  // namespace mdim
