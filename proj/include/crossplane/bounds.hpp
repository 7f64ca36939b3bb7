#ifndef CROSSPLANE_BOUNDS_HPP
#define CROSSPLANE_BOUNDS_HPP

#include "crossplane/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace crossplane {

enum class graph_family { complete, bipartite };

const char* to_string(graph_family f);

// The statement "for every graph in the class, cr_k >= slope*m -
// vertex_coeff*n + constant". Only the density factories below and
// hereditary_lift construct these.
struct linear_bound {
    big_rat slope;
    big_rat vertex_coeff;
    big_rat constant;
    bool bipartite_only = false;
    int planes = 1;
    std::string source;

    // max(0, slope*m - vertex_coeff*n + constant)
    big_rat evaluate(std::int64_t n, std::int64_t m) const;
};

// cr(G) >= m - 3(n-2), or m - 2(n-2) on bipartite hosts.
linear_bound euler_linear(bool bipartite);
// cr(G) >= 2m - 5n + 12 (tier 2) and cr(G) >= 3m - 8.5n + 19 (tier 3) for
// bipartite hosts with n >= 4.
linear_bound cascade_tier_linear(int tier);
// cr(G) >= 5m - (139/6)(n-2) for simple graphs with n >= 3.
linear_bound ackerman_linear();

// Single-plane bound lifted to k planes: the m-term keeps its slope, the
// vertex-and-constant part is multiplied by k. Refuses to lift an
// already-lifted bound.
linear_bound hereditary_lift(const linear_bound& lb, int k);

// --- scalar density bounds (k-plane forms; k = 1 matches the classic
// statements) ---

// max(0, m - 3k(n-2)) simple / max(0, m - 2k(n-2)) bipartite; n >= 3.
big_int euler_bound(std::int64_t n, std::int64_t m, bool bipartite, int k = 1);

// Piecewise bipartite cascade, n >= 4: max over tiers
//   0,  m - 2k(n-2),  2m - k(5n-12),  3m - k(floor(3.5n-7) + 5n - 12).
// The floor makes the strongest tier valid for every m.
big_int bipartite_cascade_bound(std::int64_t n, std::int64_t m, int k = 1);

// max(0, 5m - (139/6)k(n-2)) as an exact rational; n >= 3.
big_rat ackerman_bound(std::int64_t n, std::int64_t m, int k = 1);

// ceil(alpha * lower_h / beta); alpha, beta >= 1.
big_int counting_step(std::int64_t alpha, std::int64_t beta, const big_int& lower_h);

enum class chain_mode { per_step, nested };

// Iterates the K_{t,t} -> K_{t+1,t+1} counting recurrence from start to
// end (4 <= start <= end). Nested mode applies two ceilinged steps through
// K_{t+1,t}; per-step mode applies one ceiling to the squared ratio.
big_int bipartite_chain(int start, int end, const big_int& seed, chain_mode mode);
std::vector<std::pair<int, big_int>>
bipartite_chain_table(int start, int end, const big_int& seed, chain_mode mode);

// Iterates cr_k(K_{t+1}) >= ceil((t+1) cr_k(K_t) / (t-3)) from start to
// end; start >= 5.
big_int complete_chain(int start, int end, const big_int& seed);
std::vector<std::pair<int, big_int>>
complete_chain_table(int start, int end, const big_int& seed);

// ceil(p(p-1)q(q-1) * lower_rr / (r(r-1))^2); p, q >= r >= 2.
big_int scale_bipartite(int r, const big_int& lower_rr, std::int64_t p, std::int64_t q);

// ceil(n(n-1)(n-2)(n-3) * lower_r / (r(r-1)(r-2)(r-3))); n >= r >= 5.
big_int scale_complete(int r, const big_int& lower_r, std::int64_t n);

// --- certificates ---

struct certificate_step {
    std::string op;
    std::vector<std::pair<std::string, std::string>> args; // sorted by key
    std::string result;
};

// An integer lower bound on cr_k of a family instance plus the full
// derivation chain; verify_certificate replays it exactly.
struct bound_certificate {
    graph_family family;
    std::vector<std::int64_t> params; // [n] or [p, q]
    int k = 1;
    big_int value;
    std::vector<certificate_step> steps;
};

std::string to_json(const bound_certificate& c);
bound_certificate certificate_from_json(const std::string& text);

struct verify_outcome {
    bool ok = false;
    int step_index = -1; // failing step, or -1 for header/final checks
    std::string diagnostic;
};

// Replays every step with exact arithmetic, checking preconditions (chain
// index bounds, the lift-once rule, instance continuity) and every
// recorded intermediate value.
verify_outcome verify_certificate(const bound_certificate& cert);

// Closed-form k-planar seed bounds: complete evaluates the
// lifted density bound at K_{14k-3} (equals ceil((497/3)k^2 - (775/6)k + 30));
// bipartite evaluates the lifted cascade at K_{8k+2,8k+2} (equals
// 56k^2 + 81k + 12).
bound_certificate kplanar_seed_bound(graph_family family, int k);

// Leading-term upper estimate: cited constant times the Z-value, lower
// order terms dropped. Never participates in certificates.
big_rat upper_bound_estimate(graph_family family, int k,
                             const std::vector<std::int64_t>& params);

// Maximum over direct density bounds at the target, chains from every
// admissible seed (both ceiling modes for bipartite), and scaled chain
// values, with the winning derivation recorded. Instance sizes capped
// at 200.
bound_certificate best_lower_bound(graph_family family, int k,
                                   const std::vector<std::int64_t>& params);

struct approx_factor_row {
    std::string quantity;
    big_rat prior;
    big_rat current;
};

// The asymptotic approximation-factor table, exact rationals; display via
// format_factor reproduces the published two-decimal values.
std::vector<approx_factor_row> approx_factor_table();

// 64/694: the best constant ratio between the biplanar and ordinary
// crossing-number scales derived here.
big_rat cstar_lower();

} // namespace crossplane

#endif
