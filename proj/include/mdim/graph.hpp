#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_set>
#include <vector>

#include "mdim/errors.hpp"

namespace mdim {

struct Edge {
    int u = 0;
    int v = 0;  // stored normalized so that u < v

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertex ids 0..n-1: no loops, no duplicate
// edges. Immutable once constructed. Neighbor lists are kept sorted so
// traversals are deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int order() const { return n_; }
    std::size_t edge_count() const { return edge_keys_.size(); }
    bool has_edge(int u, int v) const;
    std::span<const int> neighbors(int v) const;
    int degree(int v) const;
    std::vector<Edge> edges() const;  // lexicographically sorted

private:
    void insert_edge(int u, int v);
    void check_vertex(int v) const;

    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::unordered_set<std::uint64_t> edge_keys_;
};

// --- base families ---------------------------------------------------------

Graph path_graph(int n);                         // n >= 1
Graph cycle_graph(int n);                        // n >= 3
Graph complete_graph(int n);                     // n >= 0
Graph empty_graph(int n);                        // n >= 0
Graph complete_bipartite_graph(int s, int t);    // s, t >= 1; parts 0..s-1 and s..s+t-1
Graph star_graph(int leaves);                    // K_{1,leaves}, hub 0
Graph wheel_graph(int rim);                      // K_1 joined with C_rim, hub 0
Graph fan_graph(int spokes);                     // K_1 joined with P_spokes, hub 0

// --- operators --------------------------------------------------------------

// Vertices of g keep their ids; vertices of h are shifted by g.order().
Graph graph_join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);
Graph complement(const Graph& g);

bool is_complete_graph(const Graph& g);
bool is_empty_graph(const Graph& g);

// --- corona products ---------------------------------------------------------

// Vertex bookkeeping for one corona application: spine holds the ids of the
// left operand's copy, copies[i] the ids of the i-th copy of the right
// operand (attached to spine[i]).
struct CoronaStructure {
    std::vector<int> spine;
    std::vector<std::vector<int>> copies;
};

struct CoronaResult {
    Graph graph;
    CoronaStructure structure;
};

inline constexpr long long kDefaultMaxOrder = 1'000'000;

// Corona product: one copy of g, |g| copies of h, the i-th copy totally
// joined to spine vertex i. Spine keeps ids 0..|g|-1; copy i occupies
// |g| + i*|h| .. |g| + (i+1)*|h| - 1. h may have no vertices, in which case
// the product is g itself. g must have at least one vertex; it need not be
// connected here (theorems that require connectivity check it themselves).
CoronaResult corona(const Graph& g, const Graph& h);

struct IteratedCoronaResult {
    Graph graph;
    std::vector<CoronaStructure> levels;  // levels[j] describes application j+1
};

// k-fold right-associated corona; throws SizeLimitError before materializing
// a product whose order would exceed max_order.
IteratedCoronaResult iterated_corona(const Graph& g, const Graph& h, int k,
                                     long long max_order = kDefaultMaxOrder);

// --- symbolic family descriptors ---------------------------------------------

enum class Family {
    Path,
    Cycle,
    Complete,
    Empty,
    CompleteBipartite,
    Star,
    Wheel,
    Fan,
    Join,
    Union,
    Complement,
    Corona,
};

// Symbolic recipe for a graph: a family tag plus integer parameters and/or
// child descriptors. Corona descriptors carry the iteration count k.
struct FamilyDescriptor {
    Family tag = Family::Path;
    std::vector<int> params;
    std::vector<FamilyDescriptor> children;
    int iterations = 1;

    friend bool operator==(const FamilyDescriptor& a, const FamilyDescriptor& b) {
        return a.tag == b.tag && a.params == b.params && a.iterations == b.iterations &&
               a.children == b.children;
    }
};

namespace desc {
FamilyDescriptor path(int n);
FamilyDescriptor cycle(int n);
FamilyDescriptor complete(int n);
FamilyDescriptor empty(int n);
FamilyDescriptor kst(int s, int t);
FamilyDescriptor star(int n);
FamilyDescriptor wheel(int n);
FamilyDescriptor fan(int n);
FamilyDescriptor join(FamilyDescriptor a, FamilyDescriptor b);
FamilyDescriptor disjoint_union(FamilyDescriptor a, FamilyDescriptor b);
FamilyDescriptor complement(FamilyDescriptor a);
FamilyDescriptor corona(FamilyDescriptor g, FamilyDescriptor h, int k = 1);
}  // namespace desc

// Throws InvalidDescriptorError on arity or minimum-order violations.
void validate_descriptor(const FamilyDescriptor& d);

Graph make_family(const FamilyDescriptor& d, long long max_order = kDefaultMaxOrder);

// --- edge-list text format ----------------------------------------------------
//
// First line "n <order>", then one line "<u> <v>" per edge, 0-indexed.
// Exported edges appear in lexicographic order.

std::string write_edge_list(const Graph& g);
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

}  // namespace mdim
