#include "triadic/rng.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace triadic {

int worker_count() {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("TRIADIC_THREADS")) {
        char* end = nullptr;
        long cap = std::strtol(env, &end, 10);
        if (end != env && cap >= 1) hw = std::min<long>(hw, cap);
    }
    return hw;
}

void parallel_for(long long count, int threads, const std::function<void(long long)>& f) {
    threads = static_cast<int>(std::max<long long>(1, std::min<long long>(threads, count)));
    if (threads == 1) {
        for (long long i = 0; i < count; ++i) f(i);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    const long long chunk = (count + threads - 1) / threads;
    for (int t = 0; t < threads; ++t) {
        const long long lo = t * chunk;
        const long long hi = std::min(count, lo + chunk);
        if (lo >= hi) break;
        pool.emplace_back([&f, lo, hi] {
            for (long long i = lo; i < hi; ++i) f(i);
        });
    }
    for (auto& th : pool) th.join();
}

}  // namespace triadic
