#include "crossplane/graph.hpp"

#include "crossplane/errors.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_set>

namespace crossplane {

graph::graph(vertex_t n, std::vector<edge_t> edges) : n_(n) {
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        check_edge(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw error("duplicate edge (" + std::to_string(dup->first) + ", " +
                    std::to_string(dup->second) + ")");
    edges_ = std::move(edges);
}

void graph::check_edge(vertex_t u, vertex_t v) const {
    if (u == v)
        throw error("self-loop at vertex " + std::to_string(u));
    if (v >= n_)
        throw error("endpoint " + std::to_string(v) + " out of range (n = " +
                    std::to_string(n_) + ")");
}

graph graph::complete(vertex_t n) {
    std::vector<edge_t> es;
    es.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (vertex_t u = 0; u < n; ++u)
        for (vertex_t v = u + 1; v < n; ++v) es.emplace_back(u, v);
    return graph(n, std::move(es));
}

graph graph::complete_bipartite(vertex_t p, vertex_t q) {
    std::vector<edge_t> es;
    es.reserve(static_cast<std::size_t>(p) * q);
    for (vertex_t u = 0; u < p; ++u)
        for (vertex_t v = 0; v < q; ++v) es.emplace_back(u, p + v);
    graph g(p + q, std::move(es));
    std::vector<std::uint8_t> colors(p + q, 0);
    for (vertex_t v = p; v < p + q; ++v) colors[v] = 1;
    g.set_bipartition(std::move(colors));
    return g;
}

bool graph::has_edge(vertex_t u, vertex_t v) const {
    edge_t e = make_edge(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

void graph::add_edge(vertex_t u, vertex_t v) {
    edge_t e = make_edge(u, v);
    check_edge(e.first, e.second);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it != edges_.end() && *it == e)
        throw error("duplicate edge (" + std::to_string(e.first) + ", " +
                    std::to_string(e.second) + ")");
    if (bipartition_ && (*bipartition_)[e.first] == (*bipartition_)[e.second])
        throw error("edge inside one bipartition class");
    edges_.insert(it, e);
}

void graph::set_bipartition(std::vector<std::uint8_t> colors) {
    if (colors.size() != n_)
        throw error("bipartition size mismatch");
    for (const auto& [u, v] : edges_)
        if (colors[u] == colors[v])
            throw error("edge inside one bipartition class");
    bipartition_ = std::move(colors);
}

std::vector<int> graph::degrees() const {
    std::vector<int> deg(n_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

graph graph::without_edge(vertex_t u, vertex_t v) const {
    edge_t e = make_edge(u, v);
    std::vector<edge_t> es;
    es.reserve(edges_.size());
    for (const auto& f : edges_)
        if (f != e) es.push_back(f);
    return graph(n_, std::move(es));
}

graph graph::edge_induced() const {
    std::vector<vertex_t> remap(n_, 0);
    std::vector<bool> used(n_, false);
    for (const auto& [u, v] : edges_) used[u] = used[v] = true;
    vertex_t next = 0;
    for (vertex_t v = 0; v < n_; ++v)
        if (used[v]) remap[v] = next++;
    std::vector<edge_t> es;
    es.reserve(edges_.size());
    for (const auto& [u, v] : edges_) es.emplace_back(remap[u], remap[v]);
    return graph(next, std::move(es));
}

graph load_graph(const std::string& text) {
    std::vector<edge_t> edges;
    std::vector<int> edge_line;
    vertex_t max_v = 0;
    int line_no = 0;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long u = -1, v = -1;
        std::string rest;
        if (!(ls >> u >> v) || (ls >> rest))
            throw parse_error(line_no, "expected \"u v\"");
        if (u < 0 || v < 0)
            throw parse_error(line_no, "negative vertex id");
        if (u > 0xfffffffeLL || v > 0xfffffffeLL)
            throw parse_error(line_no, "vertex id too large");
        if (u == v)
            throw parse_error(line_no, "self-loop at vertex " + std::to_string(u));
        edge_t e = make_edge(static_cast<vertex_t>(u), static_cast<vertex_t>(v));
        edges.push_back(e);
        edge_line.push_back(line_no);
        max_v = std::max(max_v, e.second);
    }
    // report duplicates against the later line
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return edges[a] != edges[b] ? edges[a] < edges[b]
                                    : edge_line[a] < edge_line[b];
    });
    for (std::size_t i = 1; i < order.size(); ++i)
        if (edges[order[i]] == edges[order[i - 1]])
            throw parse_error(edge_line[order[i]],
                              "duplicate edge (" +
                                  std::to_string(edges[order[i]].first) + ", " +
                                  std::to_string(edges[order[i]].second) + ")");
    vertex_t n = edges.empty() ? 0 : max_v + 1;
    return graph(n, std::move(edges));
}

std::string serialize_graph(const graph& g) {
    std::string out;
    for (const auto& [u, v] : g.edges()) {
        out += std::to_string(u);
        out += ' ';
        out += std::to_string(v);
        out += '\n';
    }
    return out;
}

namespace {

// Adjacency rows as bitmasks, usable up to 32 vertices.
std::vector<std::uint32_t> adjacency_rows(const graph& g) {
    std::vector<std::uint32_t> rows(g.vertex_count(), 0);
    for (const auto& [u, v] : g.edges()) {
        rows[u] |= 1u << v;
        rows[v] |= 1u << u;
    }
    return rows;
}

// Backtracking isomorphism with degree-class pruning.
struct iso_search {
    const std::vector<std::uint32_t>& a;
    const std::vector<std::uint32_t>& b;
    const std::vector<int>& deg_a;
    const std::vector<int>& deg_b;
    int n;
    std::vector<int> map_ab;
    std::uint32_t used_b = 0;

    bool extend(int i) {
        if (i == n) return true;
        for (int cand = 0; cand < n; ++cand) {
            if (used_b & (1u << cand)) continue;
            if (deg_a[i] != deg_b[cand]) continue;
            bool ok = true;
            for (int j = 0; j < i; ++j) {
                bool adj_a = (a[i] >> j) & 1u;
                bool adj_b = (b[cand] >> map_ab[j]) & 1u;
                if (adj_a != adj_b) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            map_ab[i] = cand;
            used_b |= 1u << cand;
            if (extend(i + 1)) return true;
            used_b &= ~(1u << cand);
        }
        return false;
    }
};

} // namespace

bool is_isomorphic_small(const graph& ga, const graph& gb) {
    if (ga.vertex_count() > 12 || gb.vertex_count() > 12)
        throw refusal_error("is_isomorphic_small supports at most 12 vertices");
    if (ga.vertex_count() != gb.vertex_count() ||
        ga.edge_count() != gb.edge_count())
        return false;
    int n = static_cast<int>(ga.vertex_count());
    if (n == 0) return true;
    std::vector<int> da = ga.degrees(), db = gb.degrees();
    {
        std::vector<int> sa = da, sb = db;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return false;
    }
    auto ra = adjacency_rows(ga), rb = adjacency_rows(gb);
    iso_search s{ra, rb, da, db, n, std::vector<int>(n, -1), 0};
    return s.extend(0);
}

namespace {

constexpr int kCanonMaxVertices = 8;

// Minimum adjacency bitstring over all permutations; the upper triangle is
// read column-wise so each placed vertex appends its bits against the
// prefix. Branch and bound over placements.
struct canon_search {
    const std::vector<std::uint32_t>& rows;
    int n;
    int total_bits;
    std::uint32_t best = ~0u;
    std::array<int, kCanonMaxVertices> perm{};
    std::uint32_t used = 0;

    void run(int pos, std::uint32_t value, int bits) {
        if (pos == n) {
            if (value < best) best = value;
            return;
        }
        // candidate bit-blocks for this position, ascending
        std::array<std::pair<std::uint32_t, int>, kCanonMaxVertices> cand{};
        int cn = 0;
        for (int v = 0; v < n; ++v) {
            if (used & (1u << v)) continue;
            std::uint32_t block = 0;
            for (int j = 0; j < pos; ++j)
                block = (block << 1) | ((rows[v] >> perm[j]) & 1u);
            cand[cn++] = {block, v};
        }
        std::sort(cand.begin(), cand.begin() + cn);
        for (int c = 0; c < cn; ++c) {
            auto [block, v] = cand[c];
            std::uint32_t nv = (value << pos) | block;
            int nb = bits + pos;
            // compare against the best prefix of equal length
            if (best != ~0u) {
                std::uint32_t best_prefix = best >> (total_bits - nb);
                if (nv > best_prefix) break; // sorted: the rest are larger too
            }
            perm[pos] = v;
            used |= 1u << v;
            run(pos + 1, nv, nb);
            used &= ~(1u << v);
        }
    }
};

} // namespace

std::uint64_t canonical_key(const graph& g) {
    if (g.vertex_count() > kCanonMaxVertices)
        throw refusal_error("canonical_key supports at most 8 vertices");
    int n = static_cast<int>(g.vertex_count());
    if (n <= 1) return static_cast<std::uint64_t>(n) << 32;
    auto rows = adjacency_rows(g);
    canon_search s{rows, n, n * (n - 1) / 2};
    s.run(0, 0, 0);
    return (static_cast<std::uint64_t>(n) << 32) | s.best;
}

namespace {

// Rebuild a graph from a canonical key (column-wise upper triangle).
graph graph_from_key(std::uint64_t key) {
    int n = static_cast<int>(key >> 32);
    std::uint32_t bits = static_cast<std::uint32_t>(key & 0xffffffffu);
    int total = n * (n - 1) / 2;
    std::vector<edge_t> es;
    int pos = total;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            --pos;
            if ((bits >> pos) & 1u)
                es.emplace_back(static_cast<vertex_t>(i), static_cast<vertex_t>(j));
        }
    return graph(static_cast<vertex_t>(n), std::move(es));
}

} // namespace

graph_enumerator::graph_enumerator(int max_vertices, int max_edges)
    : max_vertices_(max_vertices), max_edges_(max_edges) {
    if (max_vertices > kCanonMaxVertices)
        throw refusal_error("enumerate_graphs supports at most 8 vertices");
    if (max_vertices < 2 || max_edges < 1) {
        level_edges_ = max_edges + 1; // nothing to yield
        return;
    }
    level_ = {graph_from_key(canonical_key(graph::complete(2)))};
}

void graph_enumerator::advance_level() {
    std::unordered_set<std::uint64_t> seen;
    std::vector<std::uint64_t> keys;
    for (const graph& g : level_) {
        vertex_t n = g.vertex_count();
        auto try_insert = [&](graph h) {
            std::uint64_t key = canonical_key(h);
            if (seen.insert(key).second) keys.push_back(key);
        };
        for (vertex_t u = 0; u < n; ++u)
            for (vertex_t v = u + 1; v < n; ++v)
                if (!g.has_edge(u, v)) {
                    graph h = g;
                    h.add_edge(u, v);
                    try_insert(std::move(h));
                }
        if (n + 1 <= static_cast<vertex_t>(max_vertices_)) {
            for (vertex_t u = 0; u < n; ++u) {
                graph h(n + 1, g.edges());
                h.add_edge(u, n);
                try_insert(std::move(h));
            }
        }
        if (n + 2 <= static_cast<vertex_t>(max_vertices_)) {
            graph h(n + 2, g.edges());
            h.add_edge(n, n + 1);
            try_insert(std::move(h));
        }
    }
    std::sort(keys.begin(), keys.end());
    level_.clear();
    level_.reserve(keys.size());
    for (std::uint64_t k : keys) level_.push_back(graph_from_key(k));
    ++level_edges_;
    cursor_ = 0;
}

std::optional<graph> graph_enumerator::next() {
    while (level_edges_ <= max_edges_) {
        if (cursor_ < level_.size()) return level_[cursor_++];
        if (level_edges_ == max_edges_ || level_.empty()) break;
        advance_level();
    }
    return std::nullopt;
}

std::vector<graph> enumerate_graphs(int max_vertices, int max_edges) {
    graph_enumerator en(max_vertices, max_edges);
    std::vector<graph> out;
    while (auto g = en.next()) out.push_back(std::move(*g));
    return out;
}

} // namespace crossplane
