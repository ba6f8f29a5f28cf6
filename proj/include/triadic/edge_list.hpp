#pragma once

#include <iosfwd>
#include <string>
#include <variant>

#include "triadic/graph.hpp"

namespace triadic {

using AnyGraph = std::variant<UndirectedGraph, Digraph, LoopDigraph, WeightedDigraph>;

// Text format, one edge per line ("u v", or "u v w" in weighted mode),
// 1-based ids, '#' starts a comment, optional "n=<k>" header line.
// n defaults to the largest id seen.
AnyGraph parse_edge_list(std::istream& in, GraphMode mode);
AnyGraph parse_edge_list(const std::string& text, GraphMode mode);

UndirectedGraph parse_undirected(const std::string& text);
Digraph parse_directed(const std::string& text);
LoopDigraph parse_loop(const std::string& text);
WeightedDigraph parse_weighted(const std::string& text);

std::string serialize_edge_list(const UndirectedGraph& g);
std::string serialize_edge_list(const Digraph& g);
std::string serialize_edge_list(const LoopDigraph& g);
std::string serialize_edge_list(const WeightedDigraph& g);
std::string serialize_edge_list(const AnyGraph& g);

// JSON form: {"n": int, "mode": "undirected|directed|loop|weighted",
// "edges": [[u,v],...]} with [u,v,w] triples in weighted mode, 1-based ids.
std::string graph_to_json(const AnyGraph& g);
AnyGraph graph_from_json(const std::string& text);

GraphMode mode_of(const AnyGraph& g);
int node_count_of(const AnyGraph& g);

}  // namespace triadic
