#pragma once

#include <random>
#include <vector>

#include "triadic/census.hpp"
#include "triadic/graph.hpp"

namespace test_helpers {

// Independent census oracle: plain triple enumeration over the edge relation.
inline triadic::CensusU brute_census(const triadic::UndirectedGraph& g) {
    triadic::CensusU c;
    const int n = g.node_count();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                ++c.counts[g.has_edge(i, j) + g.has_edge(i, k) + g.has_edge(j, k)];
    return c;
}

inline triadic::UndirectedGraph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (u(rng) < p) edges.emplace_back(i, j);
    return triadic::UndirectedGraph(n, std::move(edges));
}

inline triadic::Digraph random_digraph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> arcs;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && u(rng) < p) arcs.emplace_back(i, j);
    return triadic::Digraph(n, std::move(arcs));
}

inline triadic::LoopDigraph random_loop_digraph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> arcs;
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (u(rng) < p) arcs.emplace_back(i, j);
    return triadic::LoopDigraph(n, std::move(arcs));
}

// Connected graph containing at least one cycle: a random spanning tree plus
// extra edges, the first of which is remembered so tests can delete a
// non-bridge edge.
struct CyclicConnected {
    triadic::UndirectedGraph graph;
    std::pair<int, int> cycle_edge;
};

inline CyclicConnected random_cyclic_connected(int n, int extra, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        edges.emplace_back(static_cast<int>(rng() % v), v);
    std::pair<int, int> first_extra{-1, -1};
    int added = 0;
    while (added < extra) {
        int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        bool dup = false;
        for (auto e : edges)
            if (e == std::pair{u, v}) dup = true;
        if (dup) continue;
        edges.emplace_back(u, v);
        if (first_extra.first < 0) first_extra = {u, v};
        ++added;
    }
    return {triadic::UndirectedGraph(n, std::move(edges)), first_extra};
}

}  // namespace test_helpers
