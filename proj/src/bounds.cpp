#include "crossplane/bounds.hpp"

#include "crossplane/drawing.hpp"
#include "crossplane/errors.hpp"

#include <algorithm>

namespace crossplane {

const char* to_string(graph_family f) {
    return f == graph_family::complete ? "complete" : "bipartite";
}

big_rat linear_bound::evaluate(std::int64_t n, std::int64_t m) const {
    big_rat v = slope * m - vertex_coeff * n + constant;
    return v < 0 ? big_rat(0) : v;
}

linear_bound euler_linear(bool bipartite) {
    linear_bound lb;
    lb.slope = 1;
    lb.vertex_coeff = bipartite ? 2 : 3;
    lb.constant = bipartite ? 4 : 6;
    lb.bipartite_only = bipartite;
    lb.source = bipartite ? "euler-bipartite" : "euler-simple";
    return lb;
}

linear_bound cascade_tier_linear(int tier) {
    linear_bound lb;
    lb.bipartite_only = true;
    switch (tier) {
    case 1:
        return euler_linear(true);
    case 2:
        lb.slope = 2;
        lb.vertex_coeff = 5;
        lb.constant = 12;
        lb.source = "bipartite-tier2";
        return lb;
    case 3:
        lb.slope = 3;
        lb.vertex_coeff = big_rat(17, 2);
        lb.constant = 19;
        lb.source = "bipartite-tier3";
        return lb;
    default:
        throw refusal_error("cascade tier must be 1, 2 or 3");
    }
}

linear_bound ackerman_linear() {
    linear_bound lb;
    lb.slope = 5;
    lb.vertex_coeff = big_rat(139, 6);
    lb.constant = big_rat(139, 3); // (139/6) * 2
    lb.source = "ackerman";
    return lb;
}

linear_bound hereditary_lift(const linear_bound& lb, int k) {
    if (k < 1) throw refusal_error("hereditary_lift needs k >= 1");
    if (lb.planes != 1)
        throw refusal_error("hereditary_lift: bound is already lifted");
    linear_bound out = lb;
    out.vertex_coeff = lb.vertex_coeff * k;
    out.constant = lb.constant * k;
    out.planes = k;
    return out;
}

namespace {

void require_planes(int k) {
    if (k < 1) throw refusal_error("plane count must be >= 1");
}

big_int clamp0(big_int v) { return v < 0 ? big_int(0) : std::move(v); }

} // namespace

big_int euler_bound(std::int64_t n, std::int64_t m, bool bipartite, int k) {
    require_planes(k);
    if (n < 3) throw refusal_error("euler_bound needs n >= 3");
    big_int g = big_int(bipartite ? 2 : 3) * k * (n - 2);
    return clamp0(big_int(m) - g);
}

big_int bipartite_cascade_bound(std::int64_t n, std::int64_t m, int k) {
    require_planes(k);
    if (n < 4) throw refusal_error("bipartite_cascade_bound needs n >= 4");
    // floor(3.5n - 7) = floor((7n - 14) / 2)
    big_int density_2planar = floor_div(big_int(7) * n - 14, 2);
    big_int t1 = big_int(m) - big_int(2) * k * (n - 2);
    big_int t2 = big_int(2) * m - big_int(k) * (5 * n - 12);
    big_int t3 = big_int(3) * m -
                 big_int(k) * (density_2planar + (3 * n - 8) + 2 * (n - 2));
    return clamp0(std::max({big_int(0), t1, t2, t3}));
}

big_rat ackerman_bound(std::int64_t n, std::int64_t m, int k) {
    require_planes(k);
    if (n < 3) throw refusal_error("ackerman_bound needs n >= 3");
    big_rat v = big_rat(5) * m - big_rat(139, 6) * k * (n - 2);
    return v < 0 ? big_rat(0) : v;
}

big_int counting_step(std::int64_t alpha, std::int64_t beta,
                      const big_int& lower_h) {
    if (alpha < 1 || beta < 1)
        throw refusal_error("counting_step needs alpha, beta >= 1");
    if (lower_h < 0) throw refusal_error("counting_step needs lower_h >= 0");
    return ceil_div(alpha * lower_h, big_int(beta));
}

std::vector<std::pair<int, big_int>>
bipartite_chain_table(int start, int end, const big_int& seed, chain_mode mode) {
    if (start < 4) throw refusal_error("bipartite_chain needs start >= 4");
    if (end < start) throw refusal_error("bipartite_chain needs end >= start");
    if (seed < 0) throw refusal_error("bipartite_chain needs seed >= 0");
    std::vector<std::pair<int, big_int>> table{{start, seed}};
    big_int a = seed;
    for (int t = start; t < end; ++t) {
        if (mode == chain_mode::nested) {
            // through K_{t+1,t}: t+1 copies, each crossing in at most t-1
            a = counting_step(t + 1, t - 1, a);
            a = counting_step(t + 1, t - 1, a);
        } else {
            a = counting_step(static_cast<std::int64_t>(t + 1) * (t + 1),
                              static_cast<std::int64_t>(t - 1) * (t - 1), a);
        }
        table.emplace_back(t + 1, a);
    }
    return table;
}

big_int bipartite_chain(int start, int end, const big_int& seed, chain_mode mode) {
    return bipartite_chain_table(start, end, seed, mode).back().second;
}

std::vector<std::pair<int, big_int>>
complete_chain_table(int start, int end, const big_int& seed) {
    if (start < 5) throw refusal_error("complete_chain needs start >= 5");
    if (end < start) throw refusal_error("complete_chain needs end >= start");
    if (seed < 0) throw refusal_error("complete_chain needs seed >= 0");
    std::vector<std::pair<int, big_int>> table{{start, seed}};
    big_int a = seed;
    for (int t = start; t < end; ++t) {
        a = counting_step(t + 1, t - 3, a);
        table.emplace_back(t + 1, a);
    }
    return table;
}

big_int complete_chain(int start, int end, const big_int& seed) {
    return complete_chain_table(start, end, seed).back().second;
}

big_int scale_bipartite(int r, const big_int& lower_rr, std::int64_t p,
                        std::int64_t q) {
    if (r < 2) throw refusal_error("scale_bipartite needs r >= 2");
    if (p < r || q < r)
        throw refusal_error("scale_bipartite needs p, q >= r");
    if (lower_rr < 0) throw refusal_error("scale_bipartite needs lower >= 0");
    big_int num = big_int(p) * (p - 1) * q * (q - 1) * lower_rr;
    big_int den = big_int(r) * (r - 1);
    den *= den;
    return ceil_div(num, den);
}

big_int scale_complete(int r, const big_int& lower_r, std::int64_t n) {
    if (r < 5) throw refusal_error("scale_complete needs r >= 5");
    if (n < r) throw refusal_error("scale_complete needs n >= r");
    if (lower_r < 0) throw refusal_error("scale_complete needs lower >= 0");
    big_int num = big_int(n) * (n - 1) * (n - 2) * (n - 3) * lower_r;
    big_int den = big_int(r) * (r - 1) * (r - 2) * (r - 3);
    return ceil_div(num, den);
}

// --- certificate construction -------------------------------------------

namespace {

certificate_step make_step(std::string op,
                           std::vector<std::pair<std::string, std::string>> args,
                           std::string result) {
    std::sort(args.begin(), args.end());
    return certificate_step{std::move(op), std::move(args), std::move(result)};
}

struct pipeline {
    big_int value;
    std::vector<certificate_step> steps;
    bool operator<(const pipeline& o) const { return value < o.value; }
};

enum class density_kind { euler_simple, euler_bip, cascade, ackerman };

// Density bound evaluated at (n, m) with the lift recorded as its own
// step, matching the derivations: single-plane value first, then the
// k-plane lift, then a ceiling when the value is fractional.
pipeline density_pipeline(density_kind kind, std::int64_t n, std::int64_t m,
                          int k) {
    pipeline p;
    big_rat v1, vk;
    switch (kind) {
    case density_kind::euler_simple:
    case density_kind::euler_bip: {
        bool bip = kind == density_kind::euler_bip;
        v1 = big_rat(euler_bound(n, m, bip, 1));
        vk = big_rat(euler_bound(n, m, bip, k));
        p.steps.push_back(make_step("euler_bound",
                                    {{"n", std::to_string(n)},
                                     {"m", std::to_string(m)},
                                     {"bipartite", bip ? "true" : "false"}},
                                    rat_to_string(v1)));
        break;
    }
    case density_kind::cascade:
        v1 = big_rat(bipartite_cascade_bound(n, m, 1));
        vk = big_rat(bipartite_cascade_bound(n, m, k));
        p.steps.push_back(make_step("cascade_bound",
                                    {{"n", std::to_string(n)},
                                     {"m", std::to_string(m)}},
                                    rat_to_string(v1)));
        break;
    case density_kind::ackerman:
        v1 = ackerman_bound(n, m, 1);
        vk = ackerman_bound(n, m, k);
        p.steps.push_back(make_step("ackerman_bound",
                                    {{"n", std::to_string(n)},
                                     {"m", std::to_string(m)}},
                                    rat_to_string(v1)));
        break;
    }
    big_rat v = v1;
    if (k > 1) {
        v = vk;
        p.steps.push_back(make_step("hereditary_lift", {{"k", std::to_string(k)}},
                                    rat_to_string(v)));
    }
    if (!is_integer(v)) {
        p.steps.push_back(make_step("ceil", {}, ceil_rat(v).str()));
    }
    p.value = ceil_rat(v);
    return p;
}

pipeline best_density(graph_family family, std::int64_t n, std::int64_t m,
                      int k) {
    std::vector<pipeline> cands;
    if (family == graph_family::bipartite) {
        if (n >= 4) cands.push_back(density_pipeline(density_kind::cascade, n, m, k));
        if (n >= 3) {
            cands.push_back(density_pipeline(density_kind::euler_bip, n, m, k));
            cands.push_back(density_pipeline(density_kind::ackerman, n, m, k));
        }
    } else {
        if (n >= 3) {
            cands.push_back(density_pipeline(density_kind::euler_simple, n, m, k));
            cands.push_back(density_pipeline(density_kind::ackerman, n, m, k));
        }
    }
    if (cands.empty()) return pipeline{big_int(0), {}};
    return *std::max_element(cands.begin(), cands.end());
}

constexpr std::int64_t kSearchCap = 200;

} // namespace

bound_certificate kplanar_seed_bound(graph_family family, int k) {
    require_planes(k);
    bound_certificate cert;
    cert.family = family;
    cert.k = k;
    if (family == graph_family::complete) {
        std::int64_t n = 14 * static_cast<std::int64_t>(k) - 3;
        std::int64_t m = n * (n - 1) / 2;
        cert.params = {n};
        pipeline p = density_pipeline(density_kind::ackerman, n, m, k);
        cert.value = p.value;
        cert.steps = std::move(p.steps);
    } else {
        std::int64_t side = 8 * static_cast<std::int64_t>(k) + 2;
        cert.params = {side, side};
        pipeline p = density_pipeline(density_kind::cascade, 2 * side,
                                      side * side, k);
        cert.value = p.value;
        cert.steps = std::move(p.steps);
    }
    return cert;
}

big_rat upper_bound_estimate(graph_family family, int k,
                             const std::vector<std::int64_t>& params) {
    require_planes(k);
    if (family == graph_family::bipartite) {
        if (params.size() != 2)
            throw refusal_error("bipartite estimate needs params [p, q]");
        big_rat z(zarankiewicz_number(params[0], params[1]));
        // 2/9 at k = 2 beats the generic 2/k^2 there
        big_rat factor = (k == 2) ? big_rat(2, 9)
                                  : big_rat(2, static_cast<std::int64_t>(k) * k);
        return factor * z;
    }
    if (params.size() != 1)
        throw refusal_error("complete estimate needs params [n]");
    big_rat z(guy_number(params[0]));
    big_rat factor = (k == 2) ? big_rat(7, 24)
                              : big_rat(2, static_cast<std::int64_t>(k) * k);
    return factor * z;
}

bound_certificate best_lower_bound(graph_family family, int k,
                                   const std::vector<std::int64_t>& params) {
    require_planes(k);
    bound_certificate cert;
    cert.family = family;
    cert.k = k;
    cert.params = params;

    std::vector<pipeline> cands;
    if (family == graph_family::complete) {
        if (params.size() != 1 || params[0] < 0)
            throw refusal_error("complete family needs params [n] with n >= 0");
        std::int64_t n = params[0];
        if (n > kSearchCap)
            throw refusal_error("best_lower_bound instance cap is 200");
        std::int64_t m = n * (n - 1) / 2;
        if (n >= 3) cands.push_back(best_density(family, n, m, k));
        for (std::int64_t r = 5; r < n; ++r) {
            pipeline seed = best_density(family, r, r * (r - 1) / 2, k);
            pipeline p = seed;
            p.value = complete_chain(static_cast<int>(r), static_cast<int>(n),
                                     seed.value);
            p.steps.push_back(make_step("complete_chain",
                                        {{"start", std::to_string(r)},
                                         {"end", std::to_string(n)}},
                                        p.value.str()));
            cands.push_back(std::move(p));
        }
    } else {
        if (params.size() != 2 || params[0] < 0 || params[1] < 0)
            throw refusal_error("bipartite family needs params [p, q]");
        std::int64_t p_ = params[0], q_ = params[1];
        if (p_ > kSearchCap || q_ > kSearchCap)
            throw refusal_error("best_lower_bound instance cap is 200");
        std::int64_t n = p_ + q_, m = p_ * q_;
        if (n >= 3) cands.push_back(best_density(family, n, m, k));
        std::int64_t t = std::min(p_, q_);
        for (std::int64_t r = 4; r <= t; ++r) {
            pipeline seed = best_density(family, 2 * r, r * r, k);
            for (chain_mode mode : {chain_mode::per_step, chain_mode::nested}) {
                pipeline p = seed;
                big_int chained = bipartite_chain(
                    static_cast<int>(r), static_cast<int>(t), seed.value, mode);
                if (t > r)
                    p.steps.push_back(make_step(
                        "bipartite_chain",
                        {{"start", std::to_string(r)},
                         {"end", std::to_string(t)},
                         {"mode", mode == chain_mode::nested ? "nested"
                                                             : "per-step"}},
                        chained.str()));
                p.value = chained;
                if (p_ != t || q_ != t) {
                    p.value = scale_bipartite(static_cast<int>(t), chained, p_, q_);
                    p.steps.push_back(make_step("scale_bipartite",
                                                {{"r", std::to_string(t)},
                                                 {"p", std::to_string(p_)},
                                                 {"q", std::to_string(q_)}},
                                                p.value.str()));
                }
                cands.push_back(std::move(p));
                if (t == r) break; // empty chain: modes coincide
            }
        }
    }

    if (cands.empty()) {
        cert.value = 0;
        return cert;
    }
    // deterministic winner: maximum value, shortest derivation, then
    // lexicographic step order
    auto better = [](const pipeline& a, const pipeline& b) {
        if (a.value != b.value) return a.value > b.value;
        if (a.steps.size() != b.steps.size())
            return a.steps.size() < b.steps.size();
        auto key = [](const pipeline& p) {
            std::string s;
            for (const auto& st : p.steps) {
                s += st.op;
                for (const auto& [ak, av] : st.args) s += "," + ak + "=" + av;
                s += ";";
            }
            return s;
        };
        return key(a) < key(b);
    };
    const pipeline* win = &cands[0];
    for (const auto& c : cands)
        if (better(c, *win)) win = &c;
    cert.value = win->value;
    cert.steps = win->steps;
    return cert;
}

std::vector<approx_factor_row> approx_factor_table() {
    // upper/lower leading constants of the p^2q^2 (resp. n^4) terms
    std::vector<approx_factor_row> rows;
    rows.push_back({"cr_2(K_{p,q})", big_rat(290, 72), big_rat(216, 72)});
    rows.push_back({"cr_2(K_n)", big_rat(952 * 7, 1536), big_rat(694 * 7, 1536)});
    rows.push_back({"cr_k(K_{p,q})", big_rat(108, 8), big_rat(366, 5) / 8});
    rows.push_back({"cr_k(K_n)", big_rat(432, 32), big_rat(232, 32)});
    return rows;
}

big_rat cstar_lower() { return big_rat(64, 694); }

} // namespace crossplane
