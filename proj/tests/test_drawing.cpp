#include "doctest.h"

#include "crossplane/drawing.hpp"
#include "crossplane/errors.hpp"

#include <array>
#include <random>
#include <set>

using namespace crossplane;

namespace {

straight_line_drawing int_drawing(vertex_t n, std::vector<edge_t> es,
                                  std::vector<std::pair<int, int>> pts) {
    straight_line_drawing d{graph(n, std::move(es)), {}};
    for (auto [x, y] : pts) d.coords.push_back({big_rat(x), big_rat(y)});
    return d;
}

} // namespace

TEST_CASE("zarankiewicz numbers") {
    CHECK(zarankiewicz_number(3, 3) == 1);
    CHECK(zarankiewicz_number(21, 21) == 10000);
    CHECK(zarankiewicz_number(1, 17) == 0);
    CHECK(zarankiewicz_number(0, 5) == 0);
    CHECK(zarankiewicz_number(4, 4) == 4);
    CHECK(zarankiewicz_number(5, 5) == 16);
    CHECK(zarankiewicz_number(7, 9) == 144);
    for (int p = 0; p <= 15; ++p)
        for (int q = 0; q <= 15; ++q) {
            CHECK(zarankiewicz_number(p, q) == zarankiewicz_number(q, p));
            if (p > 0)
                CHECK(zarankiewicz_number(p, q) >=
                      zarankiewicz_number(p - 1, q));
        }
}

TEST_CASE("guy numbers") {
    CHECK(guy_number(5) == 1);
    CHECK(guy_number(12) == 150);
    CHECK(guy_number(4) == 0);
    CHECK(guy_number(6) == 3);
    CHECK(guy_number(9) == 36);
    for (int n = 4; n <= 40; ++n) CHECK(guy_number(n) >= guy_number(n - 1));
}

TEST_CASE("count_crossings on hand drawings") {
    SUBCASE("convex quadrilateral with both diagonals") {
        auto d = int_drawing(
            4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}, {1, 3}},
            {{0, 0}, {2, 0}, {2, 2}, {0, 2}});
        auto [count, cd] = count_crossings(d);
        CHECK(count == 1);
        REQUIRE(cd.crossings.size() == 1);
        CHECK(cd.crossings[0] == make_crossing({0, 2}, {1, 3}));
        CHECK(validate_drawing(cd));
    }
    SUBCASE("triangles have none") {
        auto d = int_drawing(3, {{0, 1}, {1, 2}, {0, 2}},
                             {{0, 0}, {5, 1}, {2, 7}});
        CHECK(count_crossings(d).first == 0);
    }
    SUBCASE("vertex on a non-incident edge is a degeneracy") {
        auto d = int_drawing(4, {{0, 1}, {2, 3}},
                             {{0, 0}, {4, 0}, {2, 0}, {2, 5}});
        CHECK_THROWS_AS(count_crossings(d), degeneracy_error);
    }
    SUBCASE("coincident vertices are a degeneracy") {
        auto d = int_drawing(3, {{0, 1}}, {{0, 0}, {1, 1}, {1, 1}});
        CHECK_THROWS_AS(count_crossings(d), degeneracy_error);
    }
    SUBCASE("adjacent edges never count") {
        auto d = int_drawing(3, {{0, 1}, {0, 2}}, {{0, 0}, {3, 1}, {1, 3}});
        CHECK(count_crossings(d).first == 0);
    }
}

TEST_CASE("rational and integer predicate paths agree") {
    std::mt19937_64 rng(4242);
    for (int trial = 0; trial < 80; ++trial) {
        vertex_t n = 4 + rng() % 5;
        std::vector<edge_t> es;
        for (vertex_t u = 0; u < n; ++u)
            for (vertex_t v = u + 1; v < n; ++v)
                if (rng() % 2) es.push_back({u, v});
        if (es.empty()) continue;
        // distinct random integer points, then the same points scaled by
        // 1/7 to force the exact-rational path
        std::vector<std::pair<int, int>> pts;
        std::set<std::pair<int, int>> seen;
        while (pts.size() < n) {
            int x = static_cast<int>(rng() % 2000) - 1000;
            int y = static_cast<int>(rng() % 2000) - 1000;
            if (seen.insert({x, y}).second) pts.push_back({x, y});
        }
        straight_line_drawing fast{graph(n, es), {}};
        straight_line_drawing slow{graph(n, es), {}};
        for (auto [x, y] : pts) {
            fast.coords.push_back({big_rat(x), big_rat(y)});
            slow.coords.push_back({big_rat(x, 7), big_rat(y, 7)});
        }
        std::uint64_t a = 0;
        try {
            a = count_crossings(fast).first;
        } catch (const degeneracy_error&) {
            CHECK_THROWS_AS(count_crossings(slow), degeneracy_error);
            continue;
        }
        CHECK(a == count_crossings(slow).first);
    }
}

TEST_CASE("count_crossings is affine invariant") {
    auto base = zarankiewicz_drawing(5, 6);
    auto expect = count_crossings(base).first;
    // positive-determinant rational maps
    std::vector<std::array<big_rat, 6>> maps = {
        {big_rat(2), big_rat(1), big_rat(0), big_rat(3), big_rat(5),
         big_rat(-7)},
        {big_rat(1, 3), big_rat(0), big_rat(1, 2), big_rat(2), big_rat(-1, 5),
         big_rat(4)},
    };
    for (const auto& m : maps) {
        const auto &a = m[0], &b = m[1], &c = m[2], &d = m[3], &e = m[4],
                   &f = m[5];
        REQUIRE(a * d - b * c > 0);
        straight_line_drawing mapped = base;
        for (auto& p : mapped.coords) {
            big_rat x = a * p.x + b * p.y + e;
            big_rat y = c * p.x + d * p.y + f;
            p = {x, y};
        }
        CHECK(count_crossings(mapped).first == expect);
    }
}

TEST_CASE("zarankiewicz drawings achieve Z(p,q)") {
    CHECK(count_crossings(zarankiewicz_drawing(2, 2)).first == 0);
    CHECK(count_crossings(zarankiewicz_drawing(5, 5)).first == 16);
    CHECK(count_crossings(zarankiewicz_drawing(7, 9)).first == 144);
    for (int p = 2; p <= 8; ++p)
        for (int q = 2; q <= 8; ++q) {
            auto [count, cd] = count_crossings(zarankiewicz_drawing(p, q));
            CHECK(big_int(count) == zarankiewicz_number(p, q));
            CHECK(validate_drawing(cd));
        }
    CHECK_THROWS_AS(zarankiewicz_drawing(0, 3), refusal_error);
}

TEST_CASE("cylindrical drawings achieve Z(n)") {
    CHECK(cylindrical_drawing(4).crossings.empty());
    CHECK(cylindrical_drawing(5).crossings.size() == 1);
    CHECK(cylindrical_drawing(6).crossings.size() == 3);
    for (int n = 3; n <= 12; ++n) {
        auto cd = cylindrical_drawing(n);
        CHECK(big_int(cd.crossings.size()) == guy_number(n));
        CHECK(validate_drawing(cd));
        CHECK(cd.host == graph::complete(static_cast<vertex_t>(n)));
    }
    CHECK_THROWS_AS(cylindrical_drawing(2), refusal_error);
    CHECK_THROWS_AS(cylindrical_drawing(13), refusal_error);
}

TEST_CASE("validate_drawing") {
    graph g = graph::complete(5);
    SUBCASE("empty crossing set is fine") {
        CHECK(validate_drawing({g, {}}));
    }
    SUBCASE("adjacent pair rejected") {
        CHECK_FALSE(validate_drawing({g, {make_crossing({0, 1}, {1, 2})}}));
    }
    SUBCASE("unknown edge rejected") {
        graph path(3, {{0, 1}, {1, 2}});
        CHECK_FALSE(validate_drawing({path, {make_crossing({0, 1}, {0, 2})}}));
    }
    SUBCASE("duplicate pair rejected") {
        combinatorial_drawing d{g,
                                {make_crossing({0, 1}, {2, 3}),
                                 make_crossing({2, 3}, {0, 1})}};
        CHECK_FALSE(validate_drawing(d));
    }
}

TEST_CASE("drawing json round-trips") {
    SUBCASE("straight-line") {
        auto d = zarankiewicz_drawing(4, 5);
        auto back = straight_line_drawing_from_json(to_json(d));
        CHECK(back.host == d.host);
        REQUIRE(back.coords.size() == d.coords.size());
        for (std::size_t i = 0; i < d.coords.size(); ++i) {
            CHECK(back.coords[i].x == d.coords[i].x);
            CHECK(back.coords[i].y == d.coords[i].y);
        }
    }
    SUBCASE("combinatorial") {
        auto cd = cylindrical_drawing(7);
        auto back = combinatorial_drawing_from_json(to_json(cd));
        CHECK(back.host == cd.host);
        CHECK(back.crossings == cd.crossings);
    }
    SUBCASE("huge rational components travel as strings") {
        straight_line_drawing d{graph(2, {{0, 1}}), {}};
        big_int huge("123456789012345678901234567890");
        d.coords.push_back({big_rat(huge, 7), big_rat(0)});
        d.coords.push_back({big_rat(1), big_rat(huge)});
        auto back = straight_line_drawing_from_json(to_json(d));
        CHECK(back.coords[0].x == d.coords[0].x);
        CHECK(back.coords[1].y == d.coords[1].y);
    }
    SUBCASE("dispatching parser picks the right schema") {
        auto cd = drawing_from_json(to_json(zarankiewicz_drawing(3, 3)));
        CHECK(cd.crossings.size() == 1);
        auto cd2 = drawing_from_json(to_json(cylindrical_drawing(5)));
        CHECK(cd2.crossings.size() == 1);
    }
    SUBCASE("malformed files raise errors") {
        CHECK_THROWS(drawing_from_json("{\"n\": 2}"));
        CHECK_THROWS(drawing_from_json("not json"));
        CHECK_THROWS(straight_line_drawing_from_json(
            "{\"n\":1,\"edges\":[],\"coords\":[[1,0,1,1]]}"));
    }
}
