#pragma once

#include <cstdint>
#include <functional>
#include <random>

namespace triadic {

// Stream-splitting rule used by every Monte Carlo loop: sample index i of a
// run with base seed s draws from mt19937_64 seeded with
// splitmix64(s + golden * (i + 1)). Results are therefore identical for any
// partitioning of the index range across workers.

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t stream_seed(uint64_t base_seed, uint64_t sample_index) {
    return splitmix64(base_seed + 0x9e3779b97f4a7c15ull * (sample_index + 1));
}

inline std::mt19937_64 make_rng(uint64_t seed) { return std::mt19937_64(splitmix64(seed)); }

// Uniform in [0,1) from the top 53 bits; avoids the implementation-defined
// std distributions so streams are stable across standard libraries.
inline double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Worker count for Monte Carlo loops: hardware concurrency capped by the
// TRIADIC_THREADS environment variable.
int worker_count();

// Runs f(i) for i in [0, count) partitioned in contiguous blocks across
// `threads` workers. f must only touch state owned by index i.
void parallel_for(long long count, int threads, const std::function<void(long long)>& f);

}  // namespace triadic
