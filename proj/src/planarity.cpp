#include "crossplane/planarity.hpp"

#include "crossplane/errors.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace crossplane {

namespace {

using boost_graph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

boost_graph to_boost(const graph& g) {
    boost_graph bg(g.vertex_count());
    int idx = 0;
    for (const auto& [u, v] : g.edges()) boost::add_edge(u, v, idx++, bg);
    return bg;
}

bool boost_planar(const graph& g) {
    boost_graph bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

bool planar_edge_set(vertex_t n, const std::vector<edge_t>& edges) {
    return boost_planar(graph(n, edges));
}

} // namespace

bool is_planar(const graph& g) {
    vertex_t n = g.vertex_count();
    std::size_t m = g.edge_count();
    if (n < 5 || m < 9) return true; // every graph below K5/K33 size is planar
    if (n >= 3 && m > 3 * static_cast<std::size_t>(n) - 6) return false;
    return boost_planar(g);
}

std::optional<kuratowski_witness> find_kuratowski_witness(const graph& g) {
    if (is_planar(g)) return std::nullopt;

    // Boyer-Myrvold suggests a nonplanar edge subset; one deletion pass
    // makes it edge-minimal, which pins it to exactly a K5/K33 subdivision.
    boost_graph bg = to_boost(g);
    std::vector<boost::graph_traits<boost_graph>::edge_descriptor> kur;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::kuratowski_subgraph =
            std::back_inserter(kur));
    std::vector<edge_t> sub;
    if (!planar && !kur.empty()) {
        for (const auto& ed : kur)
            sub.push_back(make_edge(
                static_cast<vertex_t>(boost::source(ed, bg)),
                static_cast<vertex_t>(boost::target(ed, bg))));
        std::sort(sub.begin(), sub.end());
        sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    } else {
        sub = g.edges();
    }
    if (planar_edge_set(g.vertex_count(), sub)) sub = g.edges();

    for (std::size_t i = 0; i < sub.size();) {
        std::vector<edge_t> trial;
        trial.reserve(sub.size() - 1);
        for (std::size_t j = 0; j < sub.size(); ++j)
            if (j != i) trial.push_back(sub[j]);
        if (!planar_edge_set(g.vertex_count(), trial))
            sub = std::move(trial); // edge was expendable, keep index
        else
            ++i;
    }

    // Structure the subdivision: branch vertices have degree >= 3, interior
    // vertices degree 2.
    std::map<vertex_t, std::vector<vertex_t>> adj;
    for (const auto& [u, v] : sub) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<vertex_t> branch;
    for (const auto& [v, nb] : adj)
        if (nb.size() >= 3) branch.push_back(v);

    kuratowski_witness w;
    if (branch.size() == 5)
        w.kind = kuratowski_witness::kind_t::k5_subdivision;
    else if (branch.size() == 6)
        w.kind = kuratowski_witness::kind_t::k33_subdivision;
    else
        throw error("kuratowski extraction: unexpected branch structure");

    std::set<vertex_t> branch_set(branch.begin(), branch.end());
    std::set<edge_t> visited;
    for (vertex_t b : branch) {
        for (vertex_t first : adj[b]) {
            edge_t e0 = make_edge(b, first);
            if (visited.count(e0)) continue;
            std::vector<vertex_t> path{b};
            vertex_t prev = b, cur = first;
            visited.insert(e0);
            while (!branch_set.count(cur)) {
                path.push_back(cur);
                const auto& nb = adj[cur];
                vertex_t nxt = (nb[0] == prev) ? nb[1] : nb[0];
                visited.insert(make_edge(cur, nxt));
                prev = cur;
                cur = nxt;
            }
            path.push_back(cur);
            w.paths.push_back(std::move(path));
        }
    }

    if (w.kind == kuratowski_witness::kind_t::k5_subdivision) {
        if (w.paths.size() != 10)
            throw error("kuratowski extraction: K5 witness path count");
        w.branch_vertices = branch;
    } else {
        if (w.paths.size() != 9)
            throw error("kuratowski extraction: K33 witness path count");
        // group branch vertices by side: endpoints of a path lie on
        // opposite sides
        std::map<vertex_t, int> side;
        side[branch[0]] = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            for (const auto& p : w.paths) {
                vertex_t s = p.front(), t = p.back();
                if (side.count(s) && !side.count(t)) {
                    side[t] = 1 - side[s];
                    changed = true;
                } else if (side.count(t) && !side.count(s)) {
                    side[s] = 1 - side[t];
                    changed = true;
                }
            }
        }
        std::vector<vertex_t> left, right;
        for (vertex_t b : branch)
            (side[b] == 0 ? left : right).push_back(b);
        if (left.size() != 3 || right.size() != 3)
            throw error("kuratowski extraction: K33 witness sides");
        w.branch_vertices = left;
        w.branch_vertices.insert(w.branch_vertices.end(), right.begin(),
                                 right.end());
    }
    return w;
}

const char* to_string(small_nonplanar_class c) {
    switch (c) {
    case small_nonplanar_class::planar: return "planar";
    case small_nonplanar_class::k5: return "K5";
    case small_nonplanar_class::k33: return "K33";
    case small_nonplanar_class::k33_plus_edge: return "K33-plus-edge";
    case small_nonplanar_class::k33_subdivided: return "K33-subdivided";
    case small_nonplanar_class::other_nonplanar: return "other-nonplanar";
    }
    return "?";
}

namespace {

graph k33_reference() { return graph::complete_bipartite(3, 3); }

graph k33_subdivided_reference() {
    // K33 on {0,1,2 | 3,4,5} with edge (0,3) subdivided through 6
    graph k33 = graph::complete_bipartite(3, 3);
    graph g(7, k33.without_edge(0, 3).edges());
    g.add_edge(0, 6);
    g.add_edge(3, 6);
    return g;
}

} // namespace

small_nonplanar_class classify_small_nonplanar(const graph& g_in) {
    graph g = g_in.edge_induced();
    if (is_planar(g)) return small_nonplanar_class::planar;
    std::size_t m = g.edge_count();
    if (m == 10 && g.vertex_count() == 5 &&
        is_isomorphic_small(g, graph::complete(5)))
        return small_nonplanar_class::k5;
    if (m == 9 && g.vertex_count() == 6 &&
        is_isomorphic_small(g, k33_reference()))
        return small_nonplanar_class::k33;
    if (m == 10 && g.vertex_count() == 7 &&
        is_isomorphic_small(g, k33_subdivided_reference()))
        return small_nonplanar_class::k33_subdivided;
    if (m == 10 && g.vertex_count() <= 8) {
        graph k33 = k33_reference();
        for (const auto& [u, v] : g.edges()) {
            graph rest = g.without_edge(u, v).edge_induced();
            if (rest.vertex_count() == 6 && is_isomorphic_small(rest, k33))
                return small_nonplanar_class::k33_plus_edge;
        }
    }
    return small_nonplanar_class::other_nonplanar;
}

} // namespace crossplane
