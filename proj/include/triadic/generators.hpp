#pragma once

#include <array>
#include <cmath>
#include <cstdint>

#include "triadic/graph.hpp"

namespace triadic {

// Node 0 adjacent to all others, no other edges. n >= 2.
UndirectedGraph star_graph(int n);

// k disjoint complete graphs of size n.
UndirectedGraph clique_union(int k, int n);

// k disjoint noisy stars on n nodes: hub-leaf edges always present, each
// leaf-leaf pair inserted independently with probability delta.
struct ConstellationParams {
    int k = 1;
    int n = 2;
    double delta = 0.0;
    void validate() const;
    // Operational reading of the asymptotic window n^-2 << delta << n^-1/2.
    bool regime_ok() const { return delta * n * n >= 10.0 && delta * std::sqrt(double(n)) <= 0.1; }
};

UndirectedGraph sample_constellation(const ConstellationParams& params, uint64_t seed);

// Exact expected census of the constellation (ea) and of the density-matched
// Erdos-Renyi graph G(kn, p_match) (eb); both sum to C(kn,3).
struct ConstellationExpectation {
    double eps = 0.0;      // expected edge count
    double p_match = 0.0;  // eps / C(kn,2)
    std::array<double, 4> ea{};
    std::array<double, 4> eb{};
};

ConstellationExpectation constellation_expectation(const ConstellationParams& params);

// Comparison of the exact expectations against their leading-order forms:
// each ratio approaches 1 as n grows inside the regime window.
struct Theorem53Report {
    ConstellationParams params;
    bool regime_ok = false;
    ConstellationExpectation expectation;
    std::array<int, 4> sign{};        // sign(ea[i] - eb[i])
    double ratio_e3 = 0.0;            // ea[3] / ((k/2) n^2 delta)
    double ratio_e2 = 0.0;            // ea[2] / ((k/2) n^2)
    double ratio_e1_gap = 0.0;        // (eb[1] - ea[1]) / (k n^2)
    double ratio_e0_gap = 0.0;        // (ea[0] - eb[0]) / ((k/2) n^2)
    bool small_delta_branch = false;  // delta well below 1/n
    double e1_small_delta_pred = 0.0; // k(k-1) n^2, or n^3 delta / 2 when k = 1
    double ratio_e1_small_delta = 0.0;
};

Theorem53Report theorem53_report(const ConstellationParams& params);

}  // namespace triadic
