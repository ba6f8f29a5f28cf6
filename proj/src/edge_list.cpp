#include "triadic/edge_list.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <sstream>

#include <json.hpp>

namespace triadic {

namespace {

struct RawLine {
    int line_no;
    long long u, v;
    double w;
    bool has_w;
};

// Parses the line-oriented format into raw 1-based entries plus an optional
// n= header, leaving type-specific validation to the graph constructors.
struct RawEdgeList {
    std::vector<RawLine> entries;
    long long header_n = -1;
    long long max_id = 0;
};

RawEdgeList read_raw(std::istream& in, bool weighted) {
    RawEdgeList raw;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ss(line);
        std::string first;
        if (!(ss >> first)) continue;  // blank or comment-only
        if (first.rfind("n=", 0) == 0) {
            if (raw.header_n >= 0) throw ParseError("duplicate n= header", line_no);
            try {
                size_t pos = 0;
                raw.header_n = std::stoll(first.substr(2), &pos);
                if (pos != first.size() - 2 || raw.header_n < 0) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("malformed header '" + first + "'", line_no);
            }
            std::string extra;
            if (ss >> extra) throw ParseError("unexpected token '" + extra + "' after header", line_no);
            continue;
        }
        RawLine e{line_no, 0, 0, 0.0, weighted};
        std::istringstream es(line);
        if (!(es >> e.u >> e.v)) throw ParseError("expected two node ids, got '" + line + "'", line_no);
        if (weighted && !(es >> e.w))
            throw ParseError("expected weight after node pair, got '" + line + "'", line_no);
        std::string extra;
        if (es >> extra) throw ParseError("unexpected token '" + extra + "'", line_no);
        if (e.u < 1 || e.v < 1) throw ParseError("node ids are 1-based positive integers", line_no);
        if (weighted && e.w < 0) throw ParseError("negative weight", line_no);
        raw.max_id = std::max({raw.max_id, e.u, e.v});
        raw.entries.push_back(e);
    }
    return raw;
}

int resolve_n(const RawEdgeList& raw) {
    long long n = raw.header_n >= 0 ? raw.header_n : raw.max_id;
    if (raw.header_n >= 0 && raw.max_id > raw.header_n)
        throw ParseError("node id " + std::to_string(raw.max_id) + " exceeds declared n=" +
                         std::to_string(raw.header_n));
    if (n > 100000) throw ParseError("node count " + std::to_string(n) + " too large");
    return static_cast<int>(n);
}

// Re-raise constructor complaints with the offending line number attached.
template <typename Build>
auto with_line_context(const std::vector<RawLine>& entries, Build build) {
    try {
        return build();
    } catch (const std::invalid_argument& e) {
        std::string what = e.what();
        for (const auto& en : entries) {
            std::string tag = "(" + std::to_string(en.u) + "," + std::to_string(en.v) + ")";
            if (what.find(tag) != std::string::npos) throw ParseError(what, en.line_no);
        }
        throw ParseError(what);
    }
}

std::string format_weight(double w) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", w);
    return buf;
}

template <typename Pairs>
std::string serialize_pairs(int n, const Pairs& pairs) {
    std::string out = "n=" + std::to_string(n) + "\n";
    for (auto [u, v] : pairs)
        out += std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
    return out;
}

}  // namespace

AnyGraph parse_edge_list(std::istream& in, GraphMode mode) {
    const bool weighted = mode == GraphMode::Weighted;
    RawEdgeList raw = read_raw(in, weighted);
    const int n = resolve_n(raw);
    switch (mode) {
        case GraphMode::Undirected: {
            std::vector<std::pair<int, int>> edges;
            for (const auto& e : raw.entries) {
                if (e.u == e.v) throw ParseError("loop forbidden in undirected mode", e.line_no);
                edges.emplace_back(static_cast<int>(e.u) - 1, static_cast<int>(e.v) - 1);
            }
            return with_line_context(raw.entries,
                                     [&] { return AnyGraph(UndirectedGraph(n, std::move(edges))); });
        }
        case GraphMode::Directed: {
            std::vector<std::pair<int, int>> arcs;
            for (const auto& e : raw.entries) {
                if (e.u == e.v) throw ParseError("loop forbidden in directed mode", e.line_no);
                arcs.emplace_back(static_cast<int>(e.u) - 1, static_cast<int>(e.v) - 1);
            }
            return with_line_context(raw.entries, [&] { return AnyGraph(Digraph(n, std::move(arcs))); });
        }
        case GraphMode::Loop: {
            std::vector<std::pair<int, int>> arcs;
            for (const auto& e : raw.entries)
                arcs.emplace_back(static_cast<int>(e.u) - 1, static_cast<int>(e.v) - 1);
            return with_line_context(raw.entries,
                                     [&] { return AnyGraph(LoopDigraph(n, std::move(arcs))); });
        }
        case GraphMode::Weighted: {
            std::vector<WeightedArc> arcs;
            for (const auto& e : raw.entries) {
                if (e.u == e.v) throw ParseError("loop forbidden in weighted mode", e.line_no);
                arcs.push_back({static_cast<int>(e.u) - 1, static_cast<int>(e.v) - 1, e.w});
            }
            return with_line_context(raw.entries,
                                     [&] { return AnyGraph(WeightedDigraph(n, std::move(arcs))); });
        }
    }
    throw std::logic_error("unreachable");
}

AnyGraph parse_edge_list(const std::string& text, GraphMode mode) {
    std::istringstream in(text);
    return parse_edge_list(in, mode);
}

UndirectedGraph parse_undirected(const std::string& t) {
    return std::get<UndirectedGraph>(parse_edge_list(t, GraphMode::Undirected));
}
Digraph parse_directed(const std::string& t) {
    return std::get<Digraph>(parse_edge_list(t, GraphMode::Directed));
}
LoopDigraph parse_loop(const std::string& t) {
    return std::get<LoopDigraph>(parse_edge_list(t, GraphMode::Loop));
}
WeightedDigraph parse_weighted(const std::string& t) {
    return std::get<WeightedDigraph>(parse_edge_list(t, GraphMode::Weighted));
}

std::string serialize_edge_list(const UndirectedGraph& g) {
    return serialize_pairs(g.node_count(), g.edges());
}
std::string serialize_edge_list(const Digraph& g) {
    return serialize_pairs(g.node_count(), g.arcs());
}
std::string serialize_edge_list(const LoopDigraph& g) {
    return serialize_pairs(g.node_count(), g.arcs());
}
std::string serialize_edge_list(const WeightedDigraph& g) {
    std::string out = "n=" + std::to_string(g.node_count()) + "\n";
    for (const auto& a : g.arcs())
        out += std::to_string(a.from + 1) + " " + std::to_string(a.to + 1) + " " +
               format_weight(a.weight) + "\n";
    return out;
}
std::string serialize_edge_list(const AnyGraph& g) {
    return std::visit([](const auto& x) { return serialize_edge_list(x); }, g);
}

GraphMode mode_of(const AnyGraph& g) {
    switch (g.index()) {
        case 0: return GraphMode::Undirected;
        case 1: return GraphMode::Directed;
        case 2: return GraphMode::Loop;
        default: return GraphMode::Weighted;
    }
}

int node_count_of(const AnyGraph& g) {
    return std::visit([](const auto& x) { return x.node_count(); }, g);
}

std::string graph_to_json(const AnyGraph& g) {
    nlohmann::ordered_json j;
    j["n"] = node_count_of(g);
    j["mode"] = mode_name(mode_of(g));
    auto& edges = j["edges"] = nlohmann::ordered_json::array();
    if (mode_of(g) == GraphMode::Weighted) {
        for (const auto& a : std::get<WeightedDigraph>(g).arcs())
            edges.push_back({a.from + 1, a.to + 1, a.weight});
    } else {
        std::visit(
            [&](const auto& x) {
                using T = std::decay_t<decltype(x)>;
                if constexpr (std::is_same_v<T, UndirectedGraph>) {
                    for (auto [u, v] : x.edges()) edges.push_back({u + 1, v + 1});
                } else if constexpr (!std::is_same_v<T, WeightedDigraph>) {
                    for (auto [u, v] : x.arcs()) edges.push_back({u + 1, v + 1});
                }
            },
            g);
    }
    return j.dump();
}

AnyGraph graph_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("mode") || !j.contains("edges"))
        throw ParseError("graph JSON requires fields n, mode, edges");
    GraphMode mode = mode_from_name(j["mode"].get<std::string>());
    // reuse the text path so both formats share validation
    std::string el = "n=" + std::to_string(j["n"].get<long long>()) + "\n";
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() < 2) throw ParseError("edge entries must be [u,v] arrays");
        el += e[0].dump() + " " + e[1].dump();
        if (mode == GraphMode::Weighted) {
            if (e.size() != 3) throw ParseError("weighted edges must be [u,v,w] triples");
            el += " " + format_weight(e[2].get<double>());
        } else if (e.size() != 2) {
            throw ParseError("edge entries must be [u,v] arrays");
        }
        el += "\n";
    }
    return parse_edge_list(el, mode);
}

}  // namespace triadic
