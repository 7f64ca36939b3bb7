#include "doctest.h"

#include "crossplane/graph.hpp"
#include "crossplane/planarity.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>

using namespace crossplane;

namespace {

graph grid(int rows, int cols) {
    auto id = [&](int r, int c) {
        return static_cast<vertex_t>(r * cols + c);
    };
    std::vector<edge_t> es;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) es.push_back(make_edge(id(r, c), id(r, c + 1)));
            if (r + 1 < rows) es.push_back(make_edge(id(r, c), id(r + 1, c)));
        }
    return graph(static_cast<vertex_t>(rows * cols), std::move(es));
}

graph untagged_k33() { return graph(6, graph::complete_bipartite(3, 3).edges()); }

graph k33_subdivided_once() {
    graph g(7, untagged_k33().without_edge(0, 3).edges());
    g.add_edge(0, 6);
    g.add_edge(3, 6);
    return g;
}

graph petersen() {
    std::vector<edge_t> es;
    for (vertex_t i = 0; i < 5; ++i) {
        es.push_back(make_edge(i, (i + 1) % 5));         // outer cycle
        es.push_back(make_edge(i, i + 5));               // spokes
        es.push_back(make_edge(i + 5, (i + 2) % 5 + 5)); // pentagram
    }
    return graph(10, es);
}

// Full witness invariant checker: structure, disjointness, host edges,
// and that contracting the paths yields K5 or K33 exactly.
void check_witness(const graph& host, const kuratowski_witness& w) {
    bool k5 = w.kind == kuratowski_witness::kind_t::k5_subdivision;
    REQUIRE(w.branch_vertices.size() == (k5 ? 5u : 6u));
    REQUIRE(w.paths.size() == (k5 ? 10u : 9u));

    std::set<vertex_t> branch(w.branch_vertices.begin(),
                              w.branch_vertices.end());
    REQUIRE(branch.size() == w.branch_vertices.size());

    std::set<vertex_t> interior_seen;
    std::set<std::pair<vertex_t, vertex_t>> contracted;
    for (const auto& p : w.paths) {
        REQUIRE(p.size() >= 2);
        CHECK(branch.count(p.front()));
        CHECK(branch.count(p.back()));
        for (std::size_t i = 0; i + 1 < p.size(); ++i)
            CHECK(host.has_edge(p[i], p[i + 1]));
        for (std::size_t i = 1; i + 1 < p.size(); ++i) {
            CHECK_FALSE(branch.count(p[i]));
            CHECK(interior_seen.insert(p[i]).second); // internally disjoint
        }
        bool fresh = contracted
                         .insert({std::min(p.front(), p.back()),
                                  std::max(p.front(), p.back())})
                         .second;
        CHECK(fresh); // no two paths join the same branch pair
    }

    if (k5) {
        CHECK(contracted.size() == 10); // every branch pair joined
    } else {
        CHECK(contracted.size() == 9);
        // 3 + 3 sides; every path straddles them
        std::set<vertex_t> left(w.branch_vertices.begin(),
                                w.branch_vertices.begin() + 3);
        for (const auto& [a, b] : contracted)
            CHECK(left.count(a) + left.count(b) == 1);
    }
}

} // namespace

TEST_CASE("is_planar basics") {
    CHECK(is_planar(graph::complete(4)));
    CHECK_FALSE(is_planar(graph::complete(5)));
    CHECK_FALSE(is_planar(graph::complete_bipartite(3, 3)));
    CHECK(is_planar(grid(3, 3)));
    CHECK(is_planar(graph(0)));
    CHECK(is_planar(graph(1)));
    CHECK_FALSE(is_planar(petersen()));
    CHECK(is_planar(graph::complete_bipartite(2, 7)));
}

TEST_CASE("is_planar agrees with Euler conditions and edge deletion") {
    std::mt19937_64 rng(99);
    int planar_seen = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        vertex_t n = 3 + rng() % 8;
        std::vector<edge_t> es;
        for (vertex_t u = 0; u < n; ++u)
            for (vertex_t v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) es.push_back({u, v});
        graph g(n, es);
        if (!is_planar(g)) continue;
        ++planar_seen;
        CHECK(g.edge_count() <= 3 * std::size_t(n) - 6 + (n < 3 ? 6 : 0));
        if (!es.empty()) {
            auto [u, v] = es[rng() % es.size()];
            CHECK(is_planar(g.without_edge(u, v)));
        }
    }
    CHECK(planar_seen > 100);

    // bipartite Euler condition
    for (vertex_t p = 2; p <= 6; ++p)
        for (vertex_t q = 2; q <= 6; ++q) {
            graph g = graph::complete_bipartite(p, q);
            if (is_planar(g))
                CHECK(g.edge_count() <= 2 * std::size_t(g.vertex_count()) - 4);
        }
}

TEST_CASE("is_planar handles large planar graphs quickly") {
    auto t0 = std::chrono::steady_clock::now();
    graph g = grid(220, 230); // ~10^5 edges
    CHECK(g.edge_count() > 100000);
    CHECK(is_planar(g));
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    CHECK(ms < 10000);
}

TEST_CASE("kuratowski witnesses") {
    SUBCASE("K5 is its own witness") {
        auto w = find_kuratowski_witness(graph::complete(5));
        REQUIRE(w.has_value());
        CHECK(w->kind == kuratowski_witness::kind_t::k5_subdivision);
        for (const auto& p : w->paths) CHECK(p.size() == 2);
        check_witness(graph::complete(5), *w);
    }
    SUBCASE("subdivided K33 keeps the long path") {
        graph g = k33_subdivided_once();
        auto w = find_kuratowski_witness(g);
        REQUIRE(w.has_value());
        CHECK(w->kind == kuratowski_witness::kind_t::k33_subdivision);
        int long_paths = 0;
        for (const auto& p : w->paths)
            if (p.size() == 3) ++long_paths;
        CHECK(long_paths == 1);
        check_witness(g, *w);
    }
    SUBCASE("planar graphs have none") {
        CHECK_FALSE(find_kuratowski_witness(grid(3, 3)).has_value());
    }
    SUBCASE("witnesses on assorted nonplanar hosts") {
        for (const graph& g :
             {graph::complete(6), graph::complete_bipartite(3, 4), petersen(),
              graph::complete(7)}) {
            auto w = find_kuratowski_witness(g);
            REQUIRE(w.has_value());
            check_witness(g, *w);
        }
    }
    SUBCASE("random nonplanar hosts") {
        std::mt19937_64 rng(1234);
        int found = 0;
        for (int trial = 0; trial < 60; ++trial) {
            vertex_t n = 6 + rng() % 5;
            std::vector<edge_t> es;
            for (vertex_t u = 0; u < n; ++u)
                for (vertex_t v = u + 1; v < n; ++v)
                    if (rng() % 2) es.push_back({u, v});
            graph g(n, es);
            auto w = find_kuratowski_witness(g);
            CHECK(w.has_value() == !is_planar(g));
            if (w) {
                check_witness(g, *w);
                ++found;
            }
        }
        CHECK(found > 10);
    }
}

TEST_CASE("classification of small nonplanar graphs") {
    CHECK(classify_small_nonplanar(grid(2, 4)) == small_nonplanar_class::planar);
    CHECK(classify_small_nonplanar(graph::complete(5)) ==
          small_nonplanar_class::k5);
    CHECK(classify_small_nonplanar(graph::complete_bipartite(3, 3)) ==
          small_nonplanar_class::k33);
    CHECK(classify_small_nonplanar(k33_subdivided_once()) ==
          small_nonplanar_class::k33_subdivided);

    SUBCASE("the K33-plus-edge family") {
        graph in_part = untagged_k33();
        in_part.add_edge(0, 1);
        CHECK(classify_small_nonplanar(in_part) ==
              small_nonplanar_class::k33_plus_edge);

        graph pendant(7, untagged_k33().edges());
        pendant.add_edge(2, 6);
        CHECK(classify_small_nonplanar(pendant) ==
              small_nonplanar_class::k33_plus_edge);

        graph disjoint(8, untagged_k33().edges());
        disjoint.add_edge(6, 7);
        CHECK(classify_small_nonplanar(disjoint) ==
              small_nonplanar_class::k33_plus_edge);
    }

    SUBCASE("isolated vertices are ignored") {
        graph padded(9, graph::complete(5).edges());
        CHECK(classify_small_nonplanar(padded) == small_nonplanar_class::k5);
    }

    SUBCASE("larger nonplanar graphs fall through") {
        CHECK(classify_small_nonplanar(graph::complete(6)) ==
              small_nonplanar_class::other_nonplanar);
        CHECK(classify_small_nonplanar(petersen()) ==
              small_nonplanar_class::other_nonplanar);
    }

    SUBCASE("every graph with at most 8 edges is planar") {
        for (const graph& g : enumerate_graphs(6, 8))
            CHECK(classify_small_nonplanar(g) == small_nonplanar_class::planar);
    }
}
