#include "doctest.h"

#include "crossplane/biplanarize.hpp"
#include "crossplane/errors.hpp"
#include "crossplane/planarity.hpp"

#include <algorithm>
#include <set>

using namespace crossplane;

namespace {

// straight-line K5 with exactly one crossing: outer triangle 0,1,2 and two
// interior vertices 3, 4 whose cross-links intersect once
straight_line_drawing k5_one_crossing() {
    straight_line_drawing d{graph::complete(5), {}};
    for (auto [x, y] : std::initializer_list<std::pair<int, int>>{
             {0, 0}, {8, 0}, {4, 6}, {3, 2}, {5, 2}})
        d.coords.push_back({big_rat(x), big_rat(y)});
    return d;
}

// check that parts exactly partition the host's edges
void check_partition(const graph& host, const decomposition& d) {
    std::vector<edge_t> merged;
    for (const auto& part : d.parts)
        merged.insert(merged.end(), part.begin(), part.end());
    std::sort(merged.begin(), merged.end());
    CHECK(merged == host.edges());
    CHECK(d.all_planar());
    for (const auto& part : d.parts)
        CHECK(is_planar(graph(host.vertex_count(), part)));
}

// host = special + a disjoint planar matching; every special edge crosses
// its own matching partner, so the greedy peel (lex ties) removes exactly
// the special edges and leaves G2 = special
combinatorial_drawing crossing_rig(const graph& special) {
    vertex_t base = special.vertex_count();
    std::size_t m = special.edge_count();
    std::vector<edge_t> edges = special.edges();
    std::vector<crossing_t> crossings;
    for (std::size_t i = 0; i < m; ++i) {
        edge_t partner{static_cast<vertex_t>(base + 2 * i),
                       static_cast<vertex_t>(base + 2 * i + 1)};
        edges.push_back(partner);
        crossings.push_back(make_crossing(special.edges()[i], partner));
    }
    graph host(static_cast<vertex_t>(base + 2 * m), edges);
    std::sort(crossings.begin(), crossings.end());
    return {host, crossings};
}

graph untagged_k33() { return graph(6, graph::complete_bipartite(3, 3).edges()); }

} // namespace

TEST_CASE("greedy peel") {
    SUBCASE("crossing-free drawings peel nothing") {
        auto trace = greedy_peel({graph::complete(4), {}});
        CHECK(trace.records.empty());
        CHECK(trace.residual.empty());
    }
    SUBCASE("a single crossing removes one edge") {
        auto [count, cd] = count_crossings(k5_one_crossing());
        REQUIRE(count == 1);
        auto trace = greedy_peel(cd);
        REQUIRE(trace.records.size() == 1);
        CHECK(trace.records[0].crossings_at_removal == 1);
        CHECK(trace.residual.empty());
    }
    SUBCASE("the busiest edge goes first") {
        graph host(6, {{0, 1}, {2, 3}, {4, 5}});
        combinatorial_drawing d{host,
                                {make_crossing({0, 1}, {2, 3}),
                                 make_crossing({0, 1}, {4, 5})}};
        auto trace = greedy_peel(d);
        REQUIRE(trace.records.size() == 1);
        CHECK(trace.records[0].removed == edge_t{0, 1});
        CHECK(trace.records[0].crossings_at_removal == 2);
        CHECK(trace.records[0].partners ==
              std::vector<edge_t>{{2, 3}, {4, 5}});
    }
    SUBCASE("ties break toward the lexicographically smallest edge") {
        graph host(4, {{0, 1}, {2, 3}});
        combinatorial_drawing d{host, {make_crossing({0, 1}, {2, 3})}};
        auto trace = greedy_peel(d);
        CHECK(trace.records[0].removed == edge_t{0, 1});
    }
}

TEST_CASE("biplanarize on easy inputs") {
    SUBCASE("planar graph with no crossings keeps everything in part one") {
        graph g = graph::complete(4);
        auto res = biplanarize_low_crossing({g, {}});
        REQUIRE(res.ok());
        CHECK(res.parts->parts[0] == g.edges());
        CHECK(res.parts->parts[1].empty());
        check_partition(g, *res.parts);
    }
    SUBCASE("K5 with one crossing moves exactly one edge") {
        auto [count, cd] = count_crossings(k5_one_crossing());
        auto res = biplanarize_low_crossing(cd);
        REQUIRE(res.ok());
        CHECK(res.parts->parts[1].size() == 1);
        CHECK_FALSE(res.swapped);
        check_partition(cd.host, *res.parts);
    }
    SUBCASE("cylindrical K6 splits fine") {
        auto cd = cylindrical_drawing(6);
        auto res = biplanarize_low_crossing(cd);
        REQUIRE(res.ok());
        check_partition(cd.host, *res.parts);
    }
}

TEST_CASE("biplanarize switch cases") {
    SUBCASE("peeled part is K5") {
        auto rig = crossing_rig(graph::complete(5));
        REQUIRE(validate_drawing(rig));
        auto res = biplanarize_low_crossing(rig);
        REQUIRE_MESSAGE(res.ok(), res.diagnostic);
        CHECK(res.swapped);
        check_partition(rig.host, *res.parts);
        CHECK(res.trace.records.size() == 10);
    }
    SUBCASE("peeled part is K33") {
        auto rig = crossing_rig(untagged_k33());
        auto res = biplanarize_low_crossing(rig);
        REQUIRE_MESSAGE(res.ok(), res.diagnostic);
        CHECK(res.swapped);
        check_partition(rig.host, *res.parts);
    }
    SUBCASE("peeled part is K33 plus an edge") {
        graph special = untagged_k33();
        special.add_edge(0, 1); // inside one side
        auto rig = crossing_rig(special);
        auto res = biplanarize_low_crossing(rig);
        REQUIRE_MESSAGE(res.ok(), res.diagnostic);
        CHECK(res.swapped);
        check_partition(rig.host, *res.parts);
    }
    SUBCASE("peeled part is K33 with a subdivided edge") {
        graph special(7, untagged_k33().without_edge(0, 3).edges());
        special.add_edge(0, 6);
        special.add_edge(3, 6);
        auto rig = crossing_rig(special);
        auto res = biplanarize_low_crossing(rig);
        REQUIRE_MESSAGE(res.ok(), res.diagnostic);
        CHECK(res.swapped);
        check_partition(rig.host, *res.parts);
    }
}

TEST_CASE("biplanarize failure paths") {
    SUBCASE("K9 at 36 crossings is out of domain") {
        auto cd = cylindrical_drawing(9);
        REQUIRE(cd.crossings.size() == 36);
        auto res = biplanarize_low_crossing(cd);
        CHECK_FALSE(res.ok());
    }
    SUBCASE("inconsistent crossing-free claim is rejected") {
        combinatorial_drawing lie{graph::complete(5), {}};
        auto res = biplanarize_low_crossing(lie);
        CHECK(res.status == biplanarize_status::input_invalid);
    }
    SUBCASE("invalid crossing pairs are rejected") {
        combinatorial_drawing bad{graph::complete(4),
                                  {make_crossing({0, 1}, {1, 2})}};
        auto res = biplanarize_low_crossing(bad);
        CHECK(res.status == biplanarize_status::input_invalid);
    }
}

TEST_CASE("exhaustive biplanarity") {
    SUBCASE("K6 is biplanar") {
        auto d = exhaustive_biplanarity(graph::complete(6));
        REQUIRE(d.has_value());
        check_partition(graph::complete(6), *d);
    }
    SUBCASE("K33 is biplanar") {
        auto d = exhaustive_biplanarity(untagged_k33());
        REQUIRE(d.has_value());
        check_partition(untagged_k33(), *d);
    }
    SUBCASE("single edge") {
        graph g(2, {{0, 1}});
        auto d = exhaustive_biplanarity(g);
        REQUIRE(d.has_value());
        CHECK(d->parts[0] == g.edges());
        CHECK(d->parts[1].empty());
    }
    SUBCASE("edge cap is refused") {
        CHECK_THROWS_AS(exhaustive_biplanarity(graph::complete(8)),
                        refusal_error);
    }
}

TEST_CASE("generated low-crossing instances") {
    SUBCASE("zero-crossing seed") {
        auto cd = random_low_crossing_instance(1, 0);
        CHECK(cd.crossings.empty());
        CHECK(validate_drawing(cd));
    }
    SUBCASE("bounded targets and validity") {
        for (std::uint64_t seed = 0; seed < 60; ++seed) {
            auto cd = random_low_crossing_instance(seed, 10);
            CHECK(validate_drawing(cd));
            CHECK(cd.crossings.size() <= 10);
        }
        CHECK_THROWS_AS(random_low_crossing_instance(1, 11), refusal_error);
    }
    SUBCASE("biplanarizer succeeds on every generated instance") {
        for (std::uint64_t seed = 0; seed < 120; ++seed) {
            auto cd = random_low_crossing_instance(seed, 7 + seed % 4);
            auto res = biplanarize_low_crossing(cd);
            REQUIRE_MESSAGE(res.ok(), "seed " << seed << ": " << res.diagnostic);
            check_partition(cd.host, *res.parts);
            CHECK(res.trace.records.size() <= cd.crossings.size());
            if (res.trace.records.size() <= 8) CHECK_FALSE(res.swapped);
        }
    }
    SUBCASE("exhaustive oracle agrees on small instances") {
        int compared = 0;
        for (std::uint64_t seed = 200; seed < 260; ++seed) {
            auto cd = random_low_crossing_instance(seed, 6);
            if (cd.host.edge_count() > 16) continue;
            auto greedy = biplanarize_low_crossing(cd);
            if (!greedy.ok()) continue;
            auto witness = exhaustive_biplanarity(cd.host);
            REQUIRE(witness.has_value());
            check_partition(cd.host, *witness);
            ++compared;
        }
        CHECK(compared > 5);
    }
}

TEST_CASE("decomposition json round-trip") {
    auto res = biplanarize_low_crossing(count_crossings(k5_one_crossing()).second);
    REQUIRE(res.ok());
    decomposition back = decomposition_from_json(to_json(*res.parts));
    CHECK(back.parts == res.parts->parts);
    CHECK(back.planar == res.parts->planar);
}
