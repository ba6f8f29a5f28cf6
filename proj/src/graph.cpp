#include "triadic/graph.hpp"

#include <algorithm>
#include <bit>

namespace triadic {

namespace {

std::string pair_str(int u, int v) {
    // 1-based in messages, matching the external id convention
    return "(" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ")";
}

void check_node(int v, int n) {
    if (v < 0 || v >= n)
        throw std::invalid_argument("node id " + std::to_string(v + 1) + " out of range 1.." +
                                    std::to_string(n));
}

void check_distinct_triple(const std::array<int, 3>& t, int n) {
    for (int v : t) check_node(v, n);
    if (t[0] == t[1] || t[0] == t[2] || t[1] == t[2])
        throw std::invalid_argument("triad nodes must be distinct");
}

}  // namespace

const char* mode_name(GraphMode m) {
    switch (m) {
        case GraphMode::Undirected: return "undirected";
        case GraphMode::Directed: return "directed";
        case GraphMode::Loop: return "loop";
        case GraphMode::Weighted: return "weighted";
    }
    return "?";
}

GraphMode mode_from_name(const std::string& s) {
    if (s == "undirected") return GraphMode::Undirected;
    if (s == "directed") return GraphMode::Directed;
    if (s == "loop") return GraphMode::Loop;
    if (s == "weighted") return GraphMode::Weighted;
    throw std::invalid_argument("unknown graph mode '" + s + "'");
}

int BitMatrix::row_and_count(int i, int j) const {
    int c = 0;
    const uint64_t* a = &w_[static_cast<size_t>(i) * wpr_];
    const uint64_t* b = &w_[static_cast<size_t>(j) * wpr_];
    for (int k = 0; k < wpr_; ++k) c += std::popcount(a[k] & b[k]);
    return c;
}

UndirectedGraph::UndirectedGraph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative node count");
    for (auto& [u, v] : edges) {
        check_node(u, n);
        check_node(v, n);
        if (u == v) throw std::invalid_argument("loop " + pair_str(u, v) + " forbidden in an undirected graph");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw std::invalid_argument("duplicate edge " + pair_str(dup->first, dup->second));
    edges_ = std::move(edges);
    adj_.assign(n, {});
    bits_ = BitMatrix(n);
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
        bits_.set(u, v);
        bits_.set(v, u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Digraph::Digraph(int n, std::vector<std::pair<int, int>> arcs) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative node count");
    for (auto [u, v] : arcs) {
        check_node(u, n);
        check_node(v, n);
        if (u == v) throw std::invalid_argument("loop " + pair_str(u, v) + " forbidden in a digraph");
    }
    std::sort(arcs.begin(), arcs.end());
    auto dup = std::adjacent_find(arcs.begin(), arcs.end());
    if (dup != arcs.end())
        throw std::invalid_argument("duplicate arc " + pair_str(dup->first, dup->second));
    arcs_ = std::move(arcs);
    out_.assign(n, {});
    in_.assign(n, {});
    bits_ = BitMatrix(n);
    for (auto [u, v] : arcs_) {
        out_[u].push_back(v);
        in_[v].push_back(u);
        bits_.set(u, v);
    }
    for (auto& a : out_) std::sort(a.begin(), a.end());
    for (auto& a : in_) std::sort(a.begin(), a.end());
}

LoopDigraph::LoopDigraph(int n, std::vector<std::pair<int, int>> arcs) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative node count");
    for (auto [u, v] : arcs) {
        check_node(u, n);
        check_node(v, n);
    }
    std::sort(arcs.begin(), arcs.end());
    auto dup = std::adjacent_find(arcs.begin(), arcs.end());
    if (dup != arcs.end())
        throw std::invalid_argument("duplicate arc " + pair_str(dup->first, dup->second));
    arcs_ = std::move(arcs);
    bits_ = BitMatrix(n);
    for (auto [u, v] : arcs_) bits_.set(u, v);
}

WeightedDigraph::WeightedDigraph(int n, std::vector<WeightedArc> arcs) : n_(n) {
    if (n < 0) throw std::invalid_argument("negative node count");
    for (const auto& a : arcs) {
        check_node(a.from, n);
        check_node(a.to, n);
        if (a.weight < 0)
            throw std::invalid_argument("negative weight on arc " + pair_str(a.from, a.to));
    }
    std::sort(arcs.begin(), arcs.end(), [](const WeightedArc& a, const WeightedArc& b) {
        return std::pair{a.from, a.to} < std::pair{b.from, b.to};
    });
    for (size_t i = 1; i < arcs.size(); ++i)
        if (arcs[i - 1].from == arcs[i].from && arcs[i - 1].to == arcs[i].to)
            throw std::invalid_argument("duplicate arc " + pair_str(arcs[i].from, arcs[i].to));
    arcs_ = std::move(arcs);
}

double WeightedDigraph::weight(int u, int v) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::pair{u, v},
                               [](const WeightedArc& a, const std::pair<int, int>& key) {
                                   return std::pair{a.from, a.to} < key;
                               });
    if (it != arcs_.end() && it->from == u && it->to == v) return it->weight;
    return 0.0;
}

UndirectedGraph symmetrize(const Digraph& d) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : d.arcs()) {
        if (!d.has_arc(v, u))
            throw std::invalid_argument("digraph is not symmetric: arc " + pair_str(u, v) +
                                        " has no reverse");
        if (u < v) edges.emplace_back(u, v);
    }
    return UndirectedGraph(d.node_count(), std::move(edges));
}

Digraph direct(const UndirectedGraph& g) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(2 * g.edges().size());
    for (auto [u, v] : g.edges()) {
        arcs.emplace_back(u, v);
        arcs.emplace_back(v, u);
    }
    return Digraph(g.node_count(), std::move(arcs));
}

UndirectedGraph induced_triad(const UndirectedGraph& g, const std::array<int, 3>& nodes) {
    check_distinct_triple(nodes, g.node_count());
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
            if (g.has_edge(nodes[i], nodes[j])) edges.emplace_back(i, j);
    return UndirectedGraph(3, std::move(edges));
}

Digraph induced_triad(const Digraph& g, const std::array<int, 3>& nodes) {
    check_distinct_triple(nodes, g.node_count());
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && g.has_arc(nodes[i], nodes[j])) arcs.emplace_back(i, j);
    return Digraph(3, std::move(arcs));
}

LoopDigraph induced_triad(const LoopDigraph& g, const std::array<int, 3>& nodes) {
    check_distinct_triple(nodes, g.node_count());
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (g.has_arc(nodes[i], nodes[j])) arcs.emplace_back(i, j);
    return LoopDigraph(3, std::move(arcs));
}

WeightedDigraph induced_triad(const WeightedDigraph& g, const std::array<int, 3>& nodes) {
    check_distinct_triple(nodes, g.node_count());
    std::vector<WeightedArc> arcs;
    for (const auto& a : g.arcs())
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                if (a.from == nodes[i] && a.to == nodes[j]) arcs.push_back({i, j, a.weight});
    return WeightedDigraph(3, std::move(arcs));
}

}  // namespace triadic
