#ifndef CROSSPLANE_PARALLEL_HPP
#define CROSSPLANE_PARALLEL_HPP

#include <cstdlib>
#include <thread>
#include <vector>

namespace crossplane {

// Harness parallelism cap from CROSSPLANE_THREADS; default 1 for
// reproducibility.
inline int thread_budget() {
    const char* env = std::getenv("CROSSPLANE_THREADS");
    if (!env) return 1;
    int v = std::atoi(env);
    if (v < 1) return 1;
    unsigned hw = std::thread::hardware_concurrency();
    if (hw > 0 && v > static_cast<int>(hw)) v = static_cast<int>(hw);
    return v;
}

// Runs fn(i) for i in [0, count); items must be independent. Callers get
// determinism by writing to index i of a pre-sized buffer.
template <typename Fn>
void parallel_for(std::size_t count, Fn fn) {
    int threads = thread_budget();
    if (threads <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (std::size_t i = static_cast<std::size_t>(t); i < count;
                 i += static_cast<std::size_t>(threads))
                fn(i);
        });
    }
    for (auto& th : pool) th.join();
}

} // namespace crossplane

#endif
