#ifndef CROSSPLANE_BIPLANARIZE_HPP
#define CROSSPLANE_BIPLANARIZE_HPP

#include "crossplane/drawing.hpp"
#include "crossplane/graph.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace crossplane {

// A partition of the host's edges into parts with per-part planarity
// verdicts. Accepted only when every verdict is true.
struct decomposition {
    std::vector<std::vector<edge_t>> parts; // each sorted
    std::vector<bool> planar;

    bool all_planar() const;
};

std::string to_json(const decomposition& d);
decomposition decomposition_from_json(const std::string& text);

struct peel_record {
    edge_t removed;
    int crossings_at_removal = 0;
    std::vector<edge_t> partners; // live crossing partners when removed
};

// Removal log of the greedy peel; replaying the removals against the
// input drawing leaves the residual set, which is empty on completion.
struct peel_trace {
    std::vector<peel_record> records;
    std::vector<crossing_t> residual;
};

// Repeatedly removes an edge with the maximum current crossing count
// (ties: lexicographically smallest edge) until no crossings remain.
peel_trace greedy_peel(const combinatorial_drawing& d);

enum class biplanarize_status {
    ok,
    input_invalid,
    g2_other_nonplanar,
    post_swap_nonplanar,
};

const char* to_string(biplanarize_status s);

struct biplanarize_result {
    biplanarize_status status = biplanarize_status::ok;
    std::optional<decomposition> parts; // set iff status == ok
    peel_trace trace;
    bool swapped = false;
    std::string diagnostic;

    bool ok() const { return status == biplanarize_status::ok; }
};

// Splits the drawn graph into (residual crossing-free part, peeled part),
// repairing a nonplanar peeled part by the single edge/partner switch its
// classification dictates. Succeeds on every drawing with at most 10
// crossings; larger inputs get a best-effort repair search over the
// original crossing pairs before failure. g2_other_nonplanar and
// post_swap_nonplanar on a <=10-crossing input signal an internal
// correctness alarm.
biplanarize_result biplanarize_low_crossing(const combinatorial_drawing& d);

// Searches all 2^(m-1) edge bipartitions with planarity pruning; m <= 20
// (refuses above). Empty iff no biplanar split exists.
std::optional<decomposition> exhaustive_biplanarity(const graph& g);

// Deterministic per seed: a fan-triangulation base drawing (crossing-free)
// on parabola points plus random chords admitted while the exact crossing
// count stays within target_crossings (<= 10).
combinatorial_drawing random_low_crossing_instance(std::uint64_t seed,
                                                   int target_crossings);

} // namespace crossplane

#endif
