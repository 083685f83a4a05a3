#include "mdim/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

namespace mdim {

namespace {

std::uint64_t edge_key(int u, int v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint32_t>(v);
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0))) {
    if (n < 0) throw InvalidVertexError("graph order must be non-negative");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) insert_edge(e.u, e.v);
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

void Graph::insert_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw InvalidEdgeError("self-loop at vertex " + std::to_string(u));
    if (!edge_keys_.insert(edge_key(u, v)).second) return;  // duplicate input line
    adj_[static_cast<std::size_t>(u)].push_back(v);
    adj_[static_cast<std::size_t>(v)].push_back(u);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidVertexError("vertex " + std::to_string(v) + " out of range [0, " +
                                 std::to_string(n_) + ")");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return edge_keys_.contains(edge_key(u, v));
}

std::span<const int> Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[static_cast<std::size_t>(v)].size());
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_keys_.size());
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.push_back({u, v});
    std::sort(out.begin(), out.end());
    return out;
}

// --- base families ---------------------------------------------------------

namespace {

void require_min_order(const char* family, int n, int minimum) {
    if (n < minimum)
        throw InvalidDescriptorError(std::string(family) + "(" + std::to_string(n) +
                                     "): minimum order is " + std::to_string(minimum));
}

}  // namespace

Graph path_graph(int n) {
    require_min_order("path", n, 1);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    require_min_order("cycle", n, 3);
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    require_min_order("complete", n, 0);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph empty_graph(int n) {
    require_min_order("empty", n, 0);
    return Graph(n);
}

Graph complete_bipartite_graph(int s, int t) {
    require_min_order("kst", s, 1);
    require_min_order("kst", t, 1);
    std::vector<Edge> edges;
    for (int u = 0; u < s; ++u)
        for (int v = 0; v < t; ++v) edges.push_back({u, s + v});
    return Graph(s + t, edges);
}

Graph star_graph(int leaves) {
    require_min_order("star", leaves, 1);
    return complete_bipartite_graph(1, leaves);
}

Graph wheel_graph(int rim) {
    require_min_order("wheel", rim, 3);
    return graph_join(complete_graph(1), cycle_graph(rim));
}

Graph fan_graph(int spokes) {
    require_min_order("fan", spokes, 1);
    return graph_join(complete_graph(1), path_graph(spokes));
}

// --- operators --------------------------------------------------------------

Graph graph_join(const Graph& g, const Graph& h) {
    const int gn = g.order();
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) edges.push_back({e.u + gn, e.v + gn});
    for (int u = 0; u < gn; ++u)
        for (int v = 0; v < h.order(); ++v) edges.push_back({u, gn + v});
    return Graph(gn + h.order(), edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const int gn = g.order();
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) edges.push_back({e.u + gn, e.v + gn});
    return Graph(gn + h.order(), edges);
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v)) edges.push_back({u, v});
    return Graph(g.order(), edges);
}

bool is_complete_graph(const Graph& g) {
    const long long n = g.order();
    return static_cast<long long>(g.edge_count()) == n * (n - 1) / 2;
}

bool is_empty_graph(const Graph& g) { return g.edge_count() == 0; }

// --- corona products ----------------------------------------------------------

CoronaResult corona(const Graph& g, const Graph& h) {
    const int n1 = g.order();
    const int n2 = h.order();
    if (n1 < 1) throw InvalidDescriptorError("corona: left operand needs at least one vertex");

    CoronaStructure structure;
    structure.spine.resize(static_cast<std::size_t>(n1));
    for (int i = 0; i < n1; ++i) structure.spine[static_cast<std::size_t>(i)] = i;
    structure.copies.assign(static_cast<std::size_t>(n1), {});

    if (n2 == 0) return {Graph(n1, g.edges()), std::move(structure)};

    std::vector<Edge> edges = g.edges();
    const std::vector<Edge> h_edges = h.edges();
    for (int i = 0; i < n1; ++i) {
        const int base = n1 + i * n2;
        auto& copy = structure.copies[static_cast<std::size_t>(i)];
        copy.resize(static_cast<std::size_t>(n2));
        for (int j = 0; j < n2; ++j) copy[static_cast<std::size_t>(j)] = base + j;
        for (const Edge& e : h_edges) edges.push_back({base + e.u, base + e.v});
        for (int j = 0; j < n2; ++j) edges.push_back({i, base + j});
    }
    return {Graph(n1 + n1 * n2, edges), std::move(structure)};
}

IteratedCoronaResult iterated_corona(const Graph& g, const Graph& h, int k, long long max_order) {
    if (k < 1) throw InvalidDescriptorError("corona: iteration count must be at least 1");
    if (g.order() > max_order)
        throw SizeLimitError("corona: base graph already exceeds the maximum order " +
                             std::to_string(max_order));

    IteratedCoronaResult result;
    result.graph = Graph(g.order(), g.edges());
    for (int step = 0; step < k; ++step) {
        const long long next_order =
            static_cast<long long>(result.graph.order()) * (h.order() + 1);
        if (next_order > max_order)
            throw SizeLimitError("corona: product order " + std::to_string(next_order) +
                                 " exceeds the maximum order " + std::to_string(max_order));
        CoronaResult next = corona(result.graph, h);
        result.graph = std::move(next.graph);
        result.levels.push_back(std::move(next.structure));
    }
    return result;
}

// --- symbolic family descriptors ------------------------------------------------

namespace desc {

namespace {
FamilyDescriptor leaf(Family tag, std::vector<int> params) {
    FamilyDescriptor d;
    d.tag = tag;
    d.params = std::move(params);
    return d;
}
}  // namespace

FamilyDescriptor path(int n) { return leaf(Family::Path, {n}); }
FamilyDescriptor cycle(int n) { return leaf(Family::Cycle, {n}); }
FamilyDescriptor complete(int n) { return leaf(Family::Complete, {n}); }
FamilyDescriptor empty(int n) { return leaf(Family::Empty, {n}); }
FamilyDescriptor kst(int s, int t) { return leaf(Family::CompleteBipartite, {s, t}); }
FamilyDescriptor star(int n) { return leaf(Family::Star, {n}); }
FamilyDescriptor wheel(int n) { return leaf(Family::Wheel, {n}); }
FamilyDescriptor fan(int n) { return leaf(Family::Fan, {n}); }

FamilyDescriptor join(FamilyDescriptor a, FamilyDescriptor b) {
    FamilyDescriptor d;
    d.tag = Family::Join;
    d.children.push_back(std::move(a));
    d.children.push_back(std::move(b));
    return d;
}

FamilyDescriptor disjoint_union(FamilyDescriptor a, FamilyDescriptor b) {
    FamilyDescriptor d;
    d.tag = Family::Union;
    d.children.push_back(std::move(a));
    d.children.push_back(std::move(b));
    return d;
}

FamilyDescriptor complement(FamilyDescriptor a) {
    FamilyDescriptor d;
    d.tag = Family::Complement;
    d.children.push_back(std::move(a));
    return d;
}

FamilyDescriptor corona(FamilyDescriptor g, FamilyDescriptor h, int k) {
    FamilyDescriptor d;
    d.tag = Family::Corona;
    d.children.push_back(std::move(g));
    d.children.push_back(std::move(h));
    d.iterations = k;
    return d;
}

}  // namespace desc

namespace {

void check_arity(const FamilyDescriptor& d, std::size_t params, std::size_t children) {
    if (d.params.size() != params || d.children.size() != children)
        throw InvalidDescriptorError("descriptor has the wrong number of arguments");
}

}  // namespace

void validate_descriptor(const FamilyDescriptor& d) {
    switch (d.tag) {
        case Family::Path:
            check_arity(d, 1, 0);
            require_min_order("path", d.params[0], 1);
            break;
        case Family::Cycle:
            check_arity(d, 1, 0);
            require_min_order("cycle", d.params[0], 3);
            break;
        case Family::Complete:
            check_arity(d, 1, 0);
            require_min_order("complete", d.params[0], 0);
            break;
        case Family::Empty:
            check_arity(d, 1, 0);
            require_min_order("empty", d.params[0], 0);
            break;
        case Family::CompleteBipartite:
            check_arity(d, 2, 0);
            require_min_order("kst", d.params[0], 1);
            require_min_order("kst", d.params[1], 1);
            break;
        case Family::Star:
            check_arity(d, 1, 0);
            require_min_order("star", d.params[0], 1);
            break;
        case Family::Wheel:
            check_arity(d, 1, 0);
            require_min_order("wheel", d.params[0], 3);
            break;
        case Family::Fan:
            check_arity(d, 1, 0);
            require_min_order("fan", d.params[0], 1);
            break;
        case Family::Join:
        case Family::Union:
            check_arity(d, 0, 2);
            validate_descriptor(d.children[0]);
            validate_descriptor(d.children[1]);
            break;
        case Family::Complement:
            check_arity(d, 0, 1);
            validate_descriptor(d.children[0]);
            break;
        case Family::Corona:
            check_arity(d, 0, 2);
            if (d.iterations < 1)
                throw InvalidDescriptorError("corona: iteration count must be at least 1");
            validate_descriptor(d.children[0]);
            validate_descriptor(d.children[1]);
            break;
    }
}

Graph make_family(const FamilyDescriptor& d, long long max_order) {
    validate_descriptor(d);
    switch (d.tag) {
        case Family::Path: return path_graph(d.params[0]);
        case Family::Cycle: return cycle_graph(d.params[0]);
        case Family::Complete: return complete_graph(d.params[0]);
        case Family::Empty: return empty_graph(d.params[0]);
        case Family::CompleteBipartite:
            return complete_bipartite_graph(d.params[0], d.params[1]);
        case Family::Star: return star_graph(d.params[0]);
        case Family::Wheel: return wheel_graph(d.params[0]);
        case Family::Fan: return fan_graph(d.params[0]);
        case Family::Join:
            return graph_join(make_family(d.children[0], max_order),
                              make_family(d.children[1], max_order));
        case Family::Union:
            return disjoint_union(make_family(d.children[0], max_order),
                                  make_family(d.children[1], max_order));
        case Family::Complement: return complement(make_family(d.children[0], max_order));
        case Family::Corona:
            return iterated_corona(make_family(d.children[0], max_order),
                                   make_family(d.children[1], max_order), d.iterations,
                                   max_order)
                .graph;
    }
    throw InvalidDescriptorError("unknown family tag");
}

// --- edge-list text format -------------------------------------------------------

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.order() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

Graph read_edge_list(std::istream& in) {
    std::string header;
    if (!(in >> header) || header != "n")
        throw IoError("edge list must start with a header line \"n <order>\"");
    long long order = 0;
    if (!(in >> order) || order < 0) throw IoError("edge list header has an invalid order");

    std::vector<Edge> edges;
    long long u = 0, v = 0;
    while (in >> u) {
        if (!(in >> v)) throw IoError("edge list has a dangling endpoint");
        if (u < 0 || u >= order || v < 0 || v >= order)
            throw IoError("edge endpoint out of range: " + std::to_string(u) + " " +
                          std::to_string(v));
        edges.push_back({static_cast<int>(u), static_cast<int>(v)});
    }
    if (!in.eof()) throw IoError("edge list contains a non-numeric token");
    try {
        return Graph(static_cast<int>(order), edges);
    } catch (const Error& e) {
        throw IoError(std::string("invalid edge list: ") + e.what());
    }
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_edge_list(in);
}

}  // namespace mdim
