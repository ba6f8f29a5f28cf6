#pragma once

#include <array>
#include <cstdint>

#include "triadic/graph.hpp"

namespace triadic {

// Erdos-Renyi parameters. Density matching a graph with e edges:
// p = 2e/(n(n-1)) undirected, e/(n(n-1)) directed, e/n^2 with loops.
struct ErParams {
    int n = 0;
    double p = 0.0;
    void validate() const;
};

double er_p_undirected(int n, long long edges);
double er_p_directed(int n, long long arcs);
double er_p_loop(int n, long long arcs);

// Each possible edge/arc appears independently with probability p;
// deterministic for a fixed seed.
UndirectedGraph sample_er_undirected(const ErParams& params, uint64_t seed);
Digraph sample_er_directed(const ErParams& params, uint64_t seed);
LoopDigraph sample_er_loop(const ErParams& params, uint64_t seed);

// Expected i-edge triad counts in G(n,p):
// C(n,3) * [(1-p)^3, 3p(1-p)^2, 3p^2(1-p), p^3].
std::array<double, 4> expected_census_undirected(const ErParams& params);

// Expected class-c counts in the directed model:
// C(n,3) * size(c) * p^d(c) * (1-p)^(6-d(c)).
std::array<double, 16> expected_census_directed(const ErParams& params);

// n(n-1)(n-2) p^2 (1-p): ordered distinct triples failing M1.
double expected_intransitive_triples(const ErParams& params);

// Expected counts of V^3 triples failing M1'-M4' in a random loop digraph.
// `leading` is the n^3 leading-order form; `exact` sums the per-pattern
// probabilities over the five coincidence patterns of (x,y,z), under which
// some of the three arcs collapse into one another.
struct MottoPrimeExpectation {
    std::array<double, 4> leading{};
    std::array<double, 4> exact{};
};

MottoPrimeExpectation expected_motto_prime_failures(const ErParams& params);

}  // namespace triadic
