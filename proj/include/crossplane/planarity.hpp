#ifndef CROSSPLANE_PLANARITY_HPP
#define CROSSPLANE_PLANARITY_HPP

#include "crossplane/graph.hpp"

#include <optional>
#include <vector>

namespace crossplane {

bool is_planar(const graph& g);

// A subdivision of K5 or K33 inside a host graph: branch vertices plus the
// internally disjoint paths realizing each branch edge.
struct kuratowski_witness {
    enum class kind_t { k5_subdivision, k33_subdivision };
    kind_t kind;
    std::vector<vertex_t> branch_vertices;       // 5, or 3+3 grouped by side
    std::vector<std::vector<vertex_t>> paths;    // 10 or 9, endpoints inclusive
};

// Empty iff the graph is planar.
std::optional<kuratowski_witness> find_kuratowski_witness(const graph& g);

enum class small_nonplanar_class {
    planar,
    k5,
    k33,
    k33_plus_edge,
    k33_subdivided,
    other_nonplanar, // only reachable for inputs with more than 10 edges
};

const char* to_string(small_nonplanar_class c);

// Classification of the edge-induced graph; callers may pass graphs with
// isolated vertices. "K33 plus edge" is a family: the extra edge may sit
// inside one side, hang pendant, or be vertex-disjoint from the K33.
small_nonplanar_class classify_small_nonplanar(const graph& g);

} // namespace crossplane

#endif
