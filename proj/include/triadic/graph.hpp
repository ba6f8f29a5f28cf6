#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace triadic {

// Error for malformed input text; line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string msg, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

enum class GraphMode { Undirected, Directed, Loop, Weighted };

const char* mode_name(GraphMode m);
GraphMode mode_from_name(const std::string& s);

// Row-major n x n bit matrix for O(1) adjacency queries.
class BitMatrix {
public:
    BitMatrix() = default;
    explicit BitMatrix(int n) : n_(n), wpr_((n + 63) / 64), w_(static_cast<size_t>(n) * wpr_, 0) {}
    void set(int i, int j) { w_[static_cast<size_t>(i) * wpr_ + j / 64] |= 1ull << (j % 64); }
    bool get(int i, int j) const { return (w_[static_cast<size_t>(i) * wpr_ + j / 64] >> (j % 64)) & 1; }
    // popcount of the AND of two rows (common out-neighbours)
    int row_and_count(int i, int j) const;

private:
    int n_ = 0;
    int wpr_ = 0;
    std::vector<uint64_t> w_;
};

// Simple graph: no loops, no duplicate edges. Nodes are 0-based internally;
// all text/JSON formats use 1-based ids. Immutable after construction.
class UndirectedGraph {
public:
    UndirectedGraph() = default;
    UndirectedGraph(int n, std::vector<std::pair<int, int>> edges);

    int node_count() const { return n_; }
    long long edge_count() const { return static_cast<long long>(edges_.size()); }
    bool has_edge(int u, int v) const { return u != v && bits_.get(u, v); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const BitMatrix& bits() const { return bits_; }

    friend bool operator==(const UndirectedGraph& a, const UndirectedGraph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;  // canonical: u < v, sorted
    std::vector<std::vector<int>> adj_;
    BitMatrix bits_;
};

// Directed graph: no loops, at most one arc per ordered pair.
class Digraph {
public:
    Digraph() = default;
    Digraph(int n, std::vector<std::pair<int, int>> arcs);

    int node_count() const { return n_; }
    long long arc_count() const { return static_cast<long long>(arcs_.size()); }
    bool has_arc(int u, int v) const { return bits_.get(u, v); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const std::vector<int>& out_neighbors(int v) const { return out_[v]; }
    const std::vector<int>& in_neighbors(int v) const { return in_[v]; }

    friend bool operator==(const Digraph& a, const Digraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;  // sorted
    std::vector<std::vector<int>> out_, in_;
    BitMatrix bits_;
};

// Digraph with self-arcs permitted.
class LoopDigraph {
public:
    LoopDigraph() = default;
    LoopDigraph(int n, std::vector<std::pair<int, int>> arcs);

    int node_count() const { return n_; }
    long long arc_count() const { return static_cast<long long>(arcs_.size()); }
    bool has_arc(int u, int v) const { return bits_.get(u, v); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }

    friend bool operator==(const LoopDigraph& a, const LoopDigraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    BitMatrix bits_;
};

struct WeightedArc {
    int from = 0;
    int to = 0;
    double weight = 0.0;
    friend bool operator==(const WeightedArc&, const WeightedArc&) = default;
};

// Weighted digraph; absent arc is weight 0, stored weights must be >= 0.
class WeightedDigraph {
public:
    WeightedDigraph() = default;
    WeightedDigraph(int n, std::vector<WeightedArc> arcs);

    int node_count() const { return n_; }
    long long arc_count() const { return static_cast<long long>(arcs_.size()); }
    double weight(int u, int v) const;
    const std::vector<WeightedArc>& arcs() const { return arcs_; }

    friend bool operator==(const WeightedDigraph& a, const WeightedDigraph& b) {
        return a.n_ == b.n_ && a.arcs_ == b.arcs_;
    }

private:
    int n_ = 0;
    std::vector<WeightedArc> arcs_;  // sorted by (from, to)
};

// Collapses a symmetric digraph to a graph; throws naming a witness pair
// if some arc lacks its reverse.
UndirectedGraph symmetrize(const Digraph& d);

// Replaces each undirected edge by the two opposite arcs.
Digraph direct(const UndirectedGraph& g);

// Induced subgraph on three distinct nodes, relabeled 0,1,2 in input order.
UndirectedGraph induced_triad(const UndirectedGraph& g, const std::array<int, 3>& nodes);
Digraph induced_triad(const Digraph& g, const std::array<int, 3>& nodes);
LoopDigraph induced_triad(const LoopDigraph& g, const std::array<int, 3>& nodes);
WeightedDigraph induced_triad(const WeightedDigraph& g, const std::array<int, 3>& nodes);

}  // namespace triadic
