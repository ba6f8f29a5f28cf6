#include "triadic/census.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "triadic/triads.hpp"

namespace triadic {

namespace {

void require_n3(int n) {
    if (n < 3) throw std::invalid_argument("census requires at least 3 nodes");
}

}  // namespace

long long choose2(long long n) { return n < 2 ? 0 : n * (n - 1) / 2; }
long long choose3(long long n) { return n < 3 ? 0 : n * (n - 1) / 2 * (n - 2) / 3; }

long long CensusD::total() const {
    return std::accumulate(counts.begin(), counts.end(), 0ll);
}

long long triangle_count(const UndirectedGraph& g) {
    long long thrice = 0;
    for (auto [u, v] : g.edges()) thrice += g.bits().row_and_count(u, v);
    return thrice / 3;
}

CensusU census_undirected(const UndirectedGraph& g) {
    const long long n = g.node_count();
    require_n3(static_cast<int>(n));
    const long long m = g.edge_count();
    const long long t = triangle_count(g);
    long long p2 = 0;
    for (int v = 0; v < n; ++v) p2 += choose2(g.degree(v));
    CensusU c;
    c.counts[3] = t;
    c.counts[2] = p2 - 3 * t;
    c.counts[1] = m * (n - 2) - 2 * p2 + 3 * t;
    c.counts[0] = choose3(n) - c.counts[1] - c.counts[2] - c.counts[3];
    return c;
}

CensusD census_directed(const Digraph& g) {
    const int n = g.node_count();
    require_n3(n);
    CensusD c;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const uint8_t ij = uint8_t(g.has_arc(i, j) << arc_bit(0, 1)) |
                               uint8_t(g.has_arc(j, i) << arc_bit(1, 0));
            for (int k = j + 1; k < n; ++k) {
                uint8_t mask = ij;
                mask |= uint8_t(g.has_arc(i, k) << arc_bit(0, 2));
                mask |= uint8_t(g.has_arc(k, i) << arc_bit(2, 0));
                mask |= uint8_t(g.has_arc(j, k) << arc_bit(1, 2));
                mask |= uint8_t(g.has_arc(k, j) << arc_bit(2, 1));
                ++c.counts[classify_mask(mask) - 1];
            }
        }
    }
    return c;
}

TransitivityCount count_intransitive_triples(const Digraph& g) {
    const long long n = g.node_count();
    require_n3(static_cast<int>(n));
    TransitivityCount tc;
    tc.total_triples = n * (n - 1) * (n - 2);
    for (int y = 0; y < n; ++y)
        for (int x : g.in_neighbors(y))
            for (int z : g.out_neighbors(y))
                if (x != z && !g.has_arc(x, z)) ++tc.intransitive_triples;
    return tc;
}

BalancePartition is_completely_balanced(const UndirectedGraph& g) {
    const int n = g.node_count();
    require_n3(n);
    std::optional<std::array<int, 3>> first_any, first_two_edge;
    for (int i = 0; i < n && !first_two_edge; ++i) {
        for (int j = i + 1; j < n && !first_two_edge; ++j) {
            for (int k = j + 1; k < n; ++k) {
                const int e = g.has_edge(i, j) + g.has_edge(i, k) + g.has_edge(j, k);
                if (e == 1 || e == 3) continue;
                if (!first_any) first_any = {{i, j, k}};
                if (e == 2) {
                    first_two_edge = {{i, j, k}};
                    break;
                }
            }
        }
    }
    if (first_two_edge) return {false, {}, first_two_edge};
    if (first_any) return {false, {}, first_any};

    // every triad balanced: connected components are cliques, at most two
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (auto [u, v] : g.edges()) root[find(u)] = find(v);
    BalancePartition out;
    out.balanced = true;
    std::vector<int> idx(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (idx[r] < 0) {
            idx[r] = static_cast<int>(out.parts.size());
            out.parts.emplace_back();
        }
        out.parts[idx[r]].push_back(v);
    }
    return out;
}

FlowBalanceResult flow_balance(const WeightedDigraph& g, double tol) {
    if (tol < 0) throw std::invalid_argument("tolerance must be nonnegative");
    const int n = g.node_count();
    std::vector<double> in(n, 0.0), out(n, 0.0);
    for (const auto& a : g.arcs()) {
        out[a.from] += a.weight;
        in[a.to] += a.weight;
    }
    for (int v = 0; v < n; ++v)
        if (std::abs(in[v] - out[v]) > tol) return {false, v, in[v], out[v]};
    return {};
}

double default_flow_tolerance(const WeightedDigraph& g) {
    bool integral = true;
    for (const auto& a : g.arcs())
        if (a.weight != std::floor(a.weight)) integral = false;
    if (integral) return 0.0;
    const int n = g.node_count();
    std::vector<double> through(n, 0.0);
    for (const auto& a : g.arcs()) {
        through[a.from] += a.weight;
        through[a.to] += a.weight;
    }
    double mx = 0.0;
    for (double t : through) mx = std::max(mx, t);
    return 1e-9 * mx;
}

}  // namespace triadic
