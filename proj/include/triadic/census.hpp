#pragma once

#include <array>
#include <optional>
#include <vector>

#include "triadic/graph.hpp"

namespace triadic {

long long choose2(long long n);
long long choose3(long long n);

// counts[i] = number of triads with i edges; sums to C(n,3)
struct CensusU {
    std::array<long long, 4> counts{};
    long long total() const { return counts[0] + counts[1] + counts[2] + counts[3]; }
    friend bool operator==(const CensusU&, const CensusU&) = default;
};

// counts[c-1] = number of triads in class c (1..16); sums to C(n,3)
struct CensusD {
    std::array<long long, 16> counts{};
    long long total() const;
    friend bool operator==(const CensusD&, const CensusD&) = default;
};

// Closed-form census from edge count, triangle count and path count:
//   counts[3] = T,  counts[2] = P2 - 3T,  counts[1] = m(n-2) - 2 P2 + 3T,
// with P2 = sum_v C(deg v, 2); counts[0] by complement. Requires n >= 3.
CensusU census_undirected(const UndirectedGraph& g);

// Classifies every unordered node triple through the 64-mask table. O(n^3).
CensusD census_directed(const Digraph& g);

long long triangle_count(const UndirectedGraph& g);

struct TransitivityCount {
    long long intransitive_triples = 0;  // ordered distinct triples failing M1
    long long total_triples = 0;         // n(n-1)(n-2)
};

// Ordered distinct triples (x,y,z) with x->y and y->z present, x->z absent.
TransitivityCount count_intransitive_triples(const Digraph& g);

// A graph is completely balanced iff every triad has 1 or 3 edges;
// then it is a clique or a disjoint union of two cliques.
struct BalancePartition {
    bool balanced = false;
    std::vector<std::vector<int>> parts;          // clique partition when balanced
    std::optional<std::array<int, 3>> witness;    // a 0- or 2-edge triad when not;
                                                  // a 2-edge witness is preferred
};

BalancePartition is_completely_balanced(const UndirectedGraph& g);

struct FlowBalanceResult {
    bool balanced = true;
    int node = -1;  // first violating node when unbalanced
    double in_weight = 0.0;
    double out_weight = 0.0;
};

// Balanced iff |in-weight - out-weight| <= tol at every node.
FlowBalanceResult flow_balance(const WeightedDigraph& g, double tol);

// 0 for all-integer weights, otherwise 1e-9 x the largest node throughput.
double default_flow_tolerance(const WeightedDigraph& g);

}  // namespace triadic
