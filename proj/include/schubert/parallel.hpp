// Static fan-out over independent instances. All library operations are pure,
// so workers share nothing; results land in caller-owned slots by index and
// aggregation stays deterministic.
#pragma once

#include <cstdlib>
#include <string>
#include <thread>
#include <vector>

namespace schubert {

// Worker cap: SCHUBERT_LAB_WORKERS if set, else the hardware count.
inline unsigned worker_count() {
    if (const char* env = std::getenv("SCHUBERT_LAB_WORKERS")) {
        try {
            long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
    const unsigned workers = std::min<std::size_t>(worker_count(), count);
    if (workers <= 1 || count < 8) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    for (auto& th : pool) th.join();
}

}  // namespace schubert
