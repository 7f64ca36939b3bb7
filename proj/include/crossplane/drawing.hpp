#ifndef CROSSPLANE_DRAWING_HPP
#define CROSSPLANE_DRAWING_HPP

#include "crossplane/graph.hpp"
#include "crossplane/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace crossplane {

// Unordered pair of distinct, non-adjacent edges; stored normalized
// (first < second).
using crossing_t = std::pair<edge_t, edge_t>;

inline crossing_t make_crossing(edge_t e, edge_t f) {
    return e < f ? crossing_t{e, f} : crossing_t{f, e};
}

// A graph together with the crossing pairs of a simple drawing. Geometric
// realizability is not checked; downstream algorithms use only the
// crossing incidences.
struct combinatorial_drawing {
    graph host;
    std::vector<crossing_t> crossings; // sorted, unique
};

struct rational_point {
    big_rat x, y;
};

// Exact rational vertex coordinates; crossings derive geometrically.
struct straight_line_drawing {
    graph host;
    std::vector<rational_point> coords; // one per vertex
};

// Counts unordered pairs of non-adjacent edges whose open segments
// intersect, with exact rational orientation tests (int128 fast path for
// small integer coordinates). Throws degeneracy_error naming the offending
// (vertex, edge) triple if a vertex lies in the open interior of a
// non-incident segment.
std::pair<std::uint64_t, combinatorial_drawing>
count_crossings(const straight_line_drawing& d);

// Z(p,q), the four-floor product.
big_int zarankiewicz_number(std::int64_t p, std::int64_t q);

// Z(n); the floor product is always divisible by 4.
big_int guy_number(std::int64_t n);

// Axis construction realizing exactly Z(p,q) crossings: one side split
// over the positive/negative x-axis, the other over the y-axis.
straight_line_drawing zarankiewicz_drawing(int p, int q);

// Two-concentric-circle drawing of K_n with exactly Z(n) crossings,
// supported for 3 <= n <= 12 (refuses outside). Outer/inner cliques are
// drawn in their caps (convex interleaving rule); the bipartite annulus
// edges wind as forward spirals.
combinatorial_drawing cylindrical_drawing(int n);

// True iff all crossing pairs reference existing, non-adjacent edges and
// no pair repeats.
bool validate_drawing(const combinatorial_drawing& d);

// JSON schemas:
//   straight-line:  { "n": int, "edges": [[u,v],...], "coords": [[xn,xd,yn,yd],...] }
//   combinatorial:  { "n": int, "edges": [[u,v],...], "crossings": [[[u1,v1],[u2,v2]],...] }
// Rational components are numerator/denominator integer pairs (emitted as
// numbers when they fit 64 bits, decimal strings otherwise; both parse).
std::string to_json(const straight_line_drawing& d);
std::string to_json(const combinatorial_drawing& d);
straight_line_drawing straight_line_drawing_from_json(const std::string& text);
combinatorial_drawing combinatorial_drawing_from_json(const std::string& text);

// Parses either drawing schema; straight-line input is converted via
// count_crossings.
combinatorial_drawing drawing_from_json(const std::string& text);

} // namespace crossplane

#endif
