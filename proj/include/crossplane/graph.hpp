#ifndef CROSSPLANE_GRAPH_HPP
#define CROSSPLANE_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace crossplane {

using vertex_t = std::uint32_t;

// An edge is the ordered-normalized pair (min, max). All modules reference
// edges by this pair, never by index, so certificates and traces stay
// stable across serialization.
using edge_t = std::pair<vertex_t, vertex_t>;

inline edge_t make_edge(vertex_t u, vertex_t v) {
    return u < v ? edge_t{u, v} : edge_t{v, u};
}

// Simple undirected graph with dense 0-based vertex ids and an optional
// two-coloring. Values are immutable once built and safe to share across
// threads; the add_edge mutator exists for construction only.
class graph {
public:
    graph() = default;
    explicit graph(vertex_t n) : n_(n) {}
    graph(vertex_t n, std::vector<edge_t> edges);

    static graph complete(vertex_t n);
    static graph complete_bipartite(vertex_t p, vertex_t q);

    vertex_t vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<edge_t>& edges() const { return edges_; }

    bool has_edge(vertex_t u, vertex_t v) const;
    void add_edge(vertex_t u, vertex_t v);

    const std::optional<std::vector<std::uint8_t>>& bipartition() const {
        return bipartition_;
    }
    void set_bipartition(std::vector<std::uint8_t> colors);

    std::vector<int> degrees() const;

    // Subgraph on the same vertex set with one edge dropped.
    graph without_edge(vertex_t u, vertex_t v) const;

    // The subgraph induced by the edges: isolated vertices are dropped and
    // the remaining vertices relabeled densely, preserving order.
    graph edge_induced() const;

    bool operator==(const graph& o) const {
        return n_ == o.n_ && edges_ == o.edges_;
    }

private:
    void check_edge(vertex_t u, vertex_t v) const;

    vertex_t n_ = 0;
    std::vector<edge_t> edges_; // sorted, unique
    std::optional<std::vector<std::uint8_t>> bipartition_;
};

// Edge-list text format: one "u v" per line, 0-based decimal ids,
// "#"-prefixed comment lines, "\n" separators. Parse errors name the line.
graph load_graph(const std::string& text);
std::string serialize_graph(const graph& g);

// Exact isomorphism for graphs with at most 12 vertices; refuses above.
bool is_isomorphic_small(const graph& a, const graph& b);

// Minimum adjacency-bitstring canonical key over all vertex permutations,
// computed only for graphs with at most 8 vertices (refuses above). The
// upper triangle is read column-wise; key packs (n, bits).
std::uint64_t canonical_key(const graph& g);

// Streams one representative per isomorphism class among graphs with
// <= max_vertices vertices (max 8), <= max_edges edges and minimum degree
// >= 1, in deterministic order (by edge count, then canonical key).
class graph_enumerator {
public:
    graph_enumerator(int max_vertices, int max_edges);
    std::optional<graph> next();

private:
    void advance_level();

    int max_vertices_;
    int max_edges_;
    int level_edges_ = 1;
    std::size_t cursor_ = 0;
    std::vector<graph> level_;
};

std::vector<graph> enumerate_graphs(int max_vertices, int max_edges);

} // namespace crossplane

#endif
