#include "crossplane/drawing.hpp"

#include "crossplane/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace crossplane {

using nlohmann::json;

namespace {

int sign(const big_rat& x) { return x == 0 ? 0 : (x < 0 ? -1 : 1); }

// orientation of c relative to the directed line a->b
int orient_rat(const rational_point& a, const rational_point& b,
               const rational_point& c) {
    big_rat det = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return sign(det);
}

struct int_coords {
    std::vector<std::int64_t> x, y;
    bool valid = false;
};

// Integer fast path: exact as long as every coordinate is an integer with
// magnitude below 2^30 (orientation determinants then fit __int128
// comfortably).
int_coords try_int_coords(const straight_line_drawing& d) {
    int_coords c;
    constexpr std::int64_t kLimit = std::int64_t{1} << 30;
    c.x.reserve(d.coords.size());
    c.y.reserve(d.coords.size());
    for (const auto& p : d.coords) {
        if (denominator(p.x) != 1 || denominator(p.y) != 1) return c;
        const big_int &nx = numerator(p.x), &ny = numerator(p.y);
        if (nx >= kLimit || nx <= -kLimit || ny >= kLimit || ny <= -kLimit)
            return c;
        c.x.push_back(static_cast<std::int64_t>(nx));
        c.y.push_back(static_cast<std::int64_t>(ny));
    }
    c.valid = true;
    return c;
}

int orient_int(const int_coords& c, vertex_t a, vertex_t b, vertex_t p) {
    using i128 = __int128;
    i128 det = i128(c.x[b] - c.x[a]) * i128(c.y[p] - c.y[a]) -
               i128(c.y[b] - c.y[a]) * i128(c.x[p] - c.x[a]);
    return det == 0 ? 0 : (det < 0 ? -1 : 1);
}

// strictly between a and b on their common line
bool on_open_segment_rat(const rational_point& a, const rational_point& b,
                         const rational_point& p) {
    if (orient_rat(a, b, p) != 0) return false;
    big_rat dot = (p.x - a.x) * (p.x - b.x) + (p.y - a.y) * (p.y - b.y);
    return dot < 0;
}

bool on_open_segment_int(const int_coords& c, vertex_t a, vertex_t b,
                         vertex_t p) {
    if (orient_int(c, a, b, p) != 0) return false;
    using i128 = __int128;
    i128 dot = i128(c.x[p] - c.x[a]) * i128(c.x[p] - c.x[b]) +
               i128(c.y[p] - c.y[a]) * i128(c.y[p] - c.y[b]);
    return dot < 0;
}

} // namespace

std::pair<std::uint64_t, combinatorial_drawing>
count_crossings(const straight_line_drawing& d) {
    const graph& g = d.host;
    vertex_t n = g.vertex_count();
    if (d.coords.size() != n)
        throw degeneracy_error("coordinate count does not match vertex count");

    int_coords ic = try_int_coords(d);

    // distinct coordinates
    {
        std::vector<std::pair<std::pair<big_int, big_int>,
                              std::pair<big_int, big_int>>>
            pts;
        pts.reserve(n);
        for (const auto& p : d.coords)
            pts.push_back({{numerator(p.x), denominator(p.x)},
                           {numerator(p.y), denominator(p.y)}});
        auto sorted = pts;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw degeneracy_error("two vertices share coordinates");
    }

    // no vertex inside a non-incident segment
    for (const auto& [u, w] : g.edges())
        for (vertex_t v = 0; v < n; ++v) {
            if (v == u || v == w) continue;
            bool hit = ic.valid
                           ? on_open_segment_int(ic, u, w, v)
                           : on_open_segment_rat(d.coords[u], d.coords[w],
                                                 d.coords[v]);
            if (hit)
                throw degeneracy_error(
                    "vertex " + std::to_string(v) + " lies on edge (" +
                    std::to_string(u) + ", " + std::to_string(w) + ")");
        }

    const auto& es = g.edges();
    std::vector<crossing_t> crossings;
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            auto [a, b] = es[i];
            auto [c, e] = es[j];
            if (a == c || a == e || b == c || b == e) continue;
            bool cross;
            if (ic.valid) {
                cross = orient_int(ic, a, b, c) * orient_int(ic, a, b, e) < 0 &&
                        orient_int(ic, c, e, a) * orient_int(ic, c, e, b) < 0;
            } else {
                const auto &pa = d.coords[a], &pb = d.coords[b],
                           &pc = d.coords[c], &pe = d.coords[e];
                cross = orient_rat(pa, pb, pc) * orient_rat(pa, pb, pe) < 0 &&
                        orient_rat(pc, pe, pa) * orient_rat(pc, pe, pb) < 0;
            }
            if (cross) crossings.push_back(make_crossing(es[i], es[j]));
        }
    std::sort(crossings.begin(), crossings.end());
    std::uint64_t count = crossings.size();
    return {count, combinatorial_drawing{g, std::move(crossings)}};
}

big_int zarankiewicz_number(std::int64_t p, std::int64_t q) {
    if (p < 0 || q < 0) throw refusal_error("Z(p,q) needs p, q >= 0");
    if (p < 2 || q < 2) return 0;
    return big_int(p / 2) * ((p - 1) / 2) * (q / 2) * ((q - 1) / 2);
}

big_int guy_number(std::int64_t n) {
    if (n < 0) throw refusal_error("Z(n) needs n >= 0");
    if (n < 4) return 0;
    big_int prod = big_int(n / 2) * ((n - 1) / 2) * ((n - 2) / 2) * ((n - 3) / 2);
    // two pairs of consecutive floors make the product divisible by 4
    if (prod % 4 != 0) throw error("guy_number: floor product not divisible by 4");
    return prod / 4;
}

straight_line_drawing zarankiewicz_drawing(int p, int q) {
    if (p < 1 || q < 1) throw refusal_error("zarankiewicz_drawing needs p, q >= 1");
    graph g = graph::complete_bipartite(static_cast<vertex_t>(p),
                                        static_cast<vertex_t>(q));
    straight_line_drawing d{std::move(g), {}};
    d.coords.reserve(static_cast<std::size_t>(p + q));
    int p_pos = (p + 1) / 2; // ceil(p/2) on the positive x-axis
    for (int i = 0; i < p; ++i) {
        std::int64_t x = (i < p_pos) ? (i + 1) : -(i - p_pos + 1);
        d.coords.push_back({big_rat(x), big_rat(0)});
    }
    int q_pos = (q + 1) / 2;
    for (int j = 0; j < q; ++j) {
        std::int64_t y = (j < q_pos) ? (j + 1) : -(j - q_pos + 1);
        d.coords.push_back({big_rat(0), big_rat(y)});
    }
    return d;
}

namespace {

// integers strictly inside the open interval (lo, hi); endpoints are
// never integers here
big_int open_interval_integers(const big_rat& lo, const big_rat& hi) {
    return floor_rat(hi) - floor_rat(lo);
}

} // namespace

combinatorial_drawing cylindrical_drawing(int n) {
    if (n < 3 || n > 12)
        throw refusal_error("cylindrical_drawing supports 3 <= n <= 12");
    int outer = (n + 1) / 2;
    int inner = n / 2;
    graph g = graph::complete(static_cast<vertex_t>(n));
    // vertex v < outer sits on the outer circle at angle v/outer (turns);
    // vertex outer + j sits on the inner circle at angle j/inner
    auto angle = [&](vertex_t v) -> big_rat {
        if (static_cast<int>(v) < outer) return big_rat(v, outer);
        return big_rat(v - outer, inner);
    };
    std::vector<crossing_t> crossings;

    // caps: chords of one circle cross iff their endpoints interleave
    auto cap = [&](vertex_t lo, vertex_t hi) {
        for (vertex_t a = lo; a < hi; ++a)
            for (vertex_t b = a + 1; b < hi; ++b)
                for (vertex_t c = a; c < hi; ++c)
                    for (vertex_t e = c + 1; e < hi; ++e) {
                        if (edge_t{a, b} >= edge_t{c, e}) continue;
                        if (a == c || a == e || b == c || b == e) continue;
                        bool c_inside = (a < c && c < b);
                        bool e_inside = (a < e && e < b);
                        if (c_inside != e_inside)
                            crossings.push_back(
                                make_crossing({a, b}, {c, e}));
                    }
    };
    cap(0, static_cast<vertex_t>(outer));
    cap(static_cast<vertex_t>(outer), static_cast<vertex_t>(n));

    // annulus: edge (i, j) winds forward by (angle(j) - angle(i)) mod 1;
    // two spiral edges cross once per integer inside the angular gap sweep
    std::vector<std::pair<edge_t, big_rat>> spirals;
    for (vertex_t i = 0; i < static_cast<vertex_t>(outer); ++i)
        for (vertex_t j = static_cast<vertex_t>(outer);
             j < static_cast<vertex_t>(n); ++j) {
            big_rat w = angle(j) - angle(i);
            w -= floor_rat(w);
            spirals.push_back({edge_t{i, j}, w});
        }
    for (std::size_t s = 0; s < spirals.size(); ++s)
        for (std::size_t t = s + 1; t < spirals.size(); ++t) {
            const auto& [e, we] = spirals[s];
            const auto& [f, wf] = spirals[t];
            if (e.first == f.first || e.second == f.second) continue;
            big_rat d0 = angle(e.first) - angle(f.first);
            big_rat d1 = d0 + we - wf;
            big_rat lo = std::min(d0, d1), hi = std::max(d0, d1);
            big_int hits = open_interval_integers(lo, hi);
            if (hits > 1) throw error("cylindrical_drawing: double crossing");
            if (hits == 1) crossings.push_back(make_crossing(e, f));
        }

    std::sort(crossings.begin(), crossings.end());
    crossings.erase(std::unique(crossings.begin(), crossings.end()),
                    crossings.end());
    return combinatorial_drawing{std::move(g), std::move(crossings)};
}

bool validate_drawing(const combinatorial_drawing& d) {
    std::vector<crossing_t> seen;
    for (const auto& [e, f] : d.crossings) {
        if (!d.host.has_edge(e.first, e.second) ||
            !d.host.has_edge(f.first, f.second))
            return false;
        if (e.first == f.first || e.first == f.second ||
            e.second == f.first || e.second == f.second)
            return false;
        seen.push_back(make_crossing(e, f));
    }
    std::sort(seen.begin(), seen.end());
    return std::adjacent_find(seen.begin(), seen.end()) == seen.end();
}

namespace {

json edges_to_json(const graph& g) {
    json arr = json::array();
    for (const auto& [u, v] : g.edges()) arr.push_back({u, v});
    return arr;
}

graph graph_from_json(const json& j) {
    if (!j.contains("n") || !j.contains("edges"))
        throw error("drawing json: missing \"n\" or \"edges\"");
    vertex_t n = j.at("n").get<vertex_t>();
    std::vector<edge_t> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2)
            throw error("drawing json: edge must be a pair");
        es.push_back(make_edge(e[0].get<vertex_t>(), e[1].get<vertex_t>()));
    }
    return graph(n, std::move(es));
}

json int_component(const big_int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

big_int component_to_int(const json& j) {
    if (j.is_number_integer()) return big_int(j.get<std::int64_t>());
    if (j.is_string()) return big_int(j.get<std::string>());
    throw error("drawing json: rational component must be integer or string");
}

} // namespace

std::string to_json(const straight_line_drawing& d) {
    json j;
    j["n"] = d.host.vertex_count();
    j["edges"] = edges_to_json(d.host);
    json coords = json::array();
    for (const auto& p : d.coords)
        coords.push_back({int_component(numerator(p.x)),
                          int_component(denominator(p.x)),
                          int_component(numerator(p.y)),
                          int_component(denominator(p.y))});
    j["coords"] = coords;
    return j.dump(2) + "\n";
}

std::string to_json(const combinatorial_drawing& d) {
    json j;
    j["n"] = d.host.vertex_count();
    j["edges"] = edges_to_json(d.host);
    json cr = json::array();
    for (const auto& [e, f] : d.crossings)
        cr.push_back({{e.first, e.second}, {f.first, f.second}});
    j["crossings"] = cr;
    return j.dump(2) + "\n";
}

straight_line_drawing straight_line_drawing_from_json(const std::string& text) {
    json j = json::parse(text);
    straight_line_drawing d{graph_from_json(j), {}};
    if (!j.contains("coords")) throw error("drawing json: missing \"coords\"");
    for (const auto& c : j.at("coords")) {
        if (!c.is_array() || c.size() != 4)
            throw error("drawing json: coord must be [xn, xd, yn, yd]");
        big_int xd = component_to_int(c[1]), yd = component_to_int(c[3]);
        if (xd == 0 || yd == 0) throw error("drawing json: zero denominator");
        d.coords.push_back({big_rat(component_to_int(c[0]), xd),
                            big_rat(component_to_int(c[2]), yd)});
    }
    if (d.coords.size() != d.host.vertex_count())
        throw error("drawing json: coords/vertex count mismatch");
    return d;
}

combinatorial_drawing combinatorial_drawing_from_json(const std::string& text) {
    json j = json::parse(text);
    combinatorial_drawing d{graph_from_json(j), {}};
    if (!j.contains("crossings"))
        throw error("drawing json: missing \"crossings\"");
    for (const auto& c : j.at("crossings")) {
        if (!c.is_array() || c.size() != 2)
            throw error("drawing json: crossing must pair two edges");
        auto rd = [&](const json& e) {
            return make_edge(e[0].get<vertex_t>(), e[1].get<vertex_t>());
        };
        d.crossings.push_back(make_crossing(rd(c[0]), rd(c[1])));
    }
    std::sort(d.crossings.begin(), d.crossings.end());
    return d;
}

combinatorial_drawing drawing_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.contains("coords")) {
        auto sld = straight_line_drawing_from_json(text);
        return count_crossings(sld).second;
    }
    return combinatorial_drawing_from_json(text);
}

} // namespace crossplane
