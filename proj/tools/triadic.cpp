#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "triadic/census.hpp"
#include "triadic/edge_list.hpp"
#include "triadic/generators.hpp"
#include "triadic/hypothesis.hpp"
#include "triadic/karate.hpp"
#include "triadic/null_models.hpp"
#include "triadic/rng.hpp"
#include "triadic/triads.hpp"

using nlohmann::ordered_json;
using namespace triadic;

namespace {

constexpr const char* kSchema = "triadic/1";
constexpr const char* kWrongNullLabel =
    "INVALID COMPARISON: directed-graph null applied to an undirected graph";

std::string fixed6(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

// Serializer with a stable contract: insertion-ordered keys, floats always
// printed with six decimals.
void dump_json(const ordered_json& j, std::string& out, int depth) {
    const std::string pad(2 * static_cast<size_t>(depth), ' ');
    const std::string pad_in(2 * static_cast<size_t>(depth + 1), ' ');
    switch (j.type()) {
        case ordered_json::value_t::object: {
            if (j.empty()) {
                out += "{}";
                return;
            }
            out += "{\n";
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ",\n";
                first = false;
                out += pad_in + "\"" + escape(it.key()) + "\": ";
                dump_json(it.value(), out, depth + 1);
            }
            out += "\n" + pad + "}";
            return;
        }
        case ordered_json::value_t::array: {
            if (j.empty()) {
                out += "[]";
                return;
            }
            bool scalar = true;
            for (const auto& v : j)
                if (v.is_object() || v.is_array()) scalar = false;
            if (scalar) {
                out += "[";
                bool first = true;
                for (const auto& v : j) {
                    if (!first) out += ", ";
                    first = false;
                    dump_json(v, out, depth);
                }
                out += "]";
            } else {
                out += "[\n";
                bool first = true;
                for (const auto& v : j) {
                    if (!first) out += ",\n";
                    first = false;
                    out += pad_in;
                    dump_json(v, out, depth + 1);
                }
                out += "\n" + pad + "]";
            }
            return;
        }
        case ordered_json::value_t::number_float: out += fixed6(j.get<double>()); return;
        case ordered_json::value_t::string: out += "\"" + escape(j.get<std::string>()) + "\""; return;
        case ordered_json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; return;
        case ordered_json::value_t::null: out += "null"; return;
        default: out += j.dump(); return;
    }
}

std::string dump_json(const ordered_json& j) {
    std::string out;
    dump_json(j, out, 0);
    out += "\n";
    return out;
}

struct OutputOpts {
    std::string format = "text";
    std::string out_path;
};

void add_output_opts(CLI::App* cmd, OutputOpts& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", o.out_path, "Write output to a file instead of stdout");
}

void emit(const std::string& text, const OutputOpts& o) {
    if (o.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out_path);
    if (!f) throw std::runtime_error("cannot open output file '" + o.out_path + "'");
    f << text;
}

std::string read_input(const std::string& path) {
    std::ostringstream ss;
    if (path == "-") {
        ss << std::cin.rdbuf();
    } else {
        std::ifstream f(path);
        if (!f) throw ParseError("cannot open input file '" + path + "'");
        ss << f.rdbuf();
    }
    return ss.str();
}

// Edge-list text by default; a leading '{' switches to the JSON graph form.
AnyGraph load_graph(const std::string& path, GraphMode mode) {
    const std::string text = read_input(path);
    size_t i = text.find_first_not_of(" \t\r\n");
    if (i != std::string::npos && text[i] == '{') {
        AnyGraph g = graph_from_json(text);
        if (mode_of(g) != mode)
            throw ParseError(std::string("graph JSON has mode '") + mode_name(mode_of(g)) +
                             "', expected '" + mode_name(mode) + "'");
        return g;
    }
    return parse_edge_list(text, mode);
}

ordered_json json_array(const double* v, int n) {
    ordered_json a = ordered_json::array();
    for (int i = 0; i < n; ++i) a.push_back(v[i]);
    return a;
}

ordered_json json_array(const long long* v, int n) {
    ordered_json a = ordered_json::array();
    for (int i = 0; i < n; ++i) a.push_back(v[i]);
    return a;
}

// ---------------------------------------------------------------- census ---

int run_census(const std::string& file, GraphMode mode, const OutputOpts& o) {
    AnyGraph g = load_graph(file, mode);
    const int n = node_count_of(g);
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "census";
    j["mode"] = mode_name(mode);
    j["n"] = n;
    std::array<long long, 16> counts16{};
    std::array<long long, 4> counts4{};
    bool undirected = mode == GraphMode::Undirected;
    long long links = 0;
    if (undirected) {
        const auto& ug = std::get<UndirectedGraph>(g);
        links = ug.edge_count();
        counts4 = census_undirected(ug).counts;
    } else if (mode == GraphMode::Directed) {
        const auto& dg = std::get<Digraph>(g);
        links = dg.arc_count();
        counts16 = census_directed(dg).counts;
    } else if (mode == GraphMode::Loop) {
        // triads of a loop digraph are classified by their non-loop arcs
        const auto& lg = std::get<LoopDigraph>(g);
        links = lg.arc_count();
        std::vector<std::pair<int, int>> arcs;
        for (auto [u, v] : lg.arcs())
            if (u != v) arcs.emplace_back(u, v);
        counts16 = census_directed(Digraph(n, std::move(arcs))).counts;
    } else {
        // weighted: an arc is any ordered pair of positive weight
        const auto& wg = std::get<WeightedDigraph>(g);
        links = wg.arc_count();
        std::vector<std::pair<int, int>> arcs;
        for (const auto& a : wg.arcs())
            if (a.weight > 0 && a.from != a.to) arcs.emplace_back(a.from, a.to);
        counts16 = census_directed(Digraph(n, std::move(arcs))).counts;
    }
    j[undirected ? "edges" : "arcs"] = links;
    j["counts"] = undirected ? json_array(counts4.data(), 4) : json_array(counts16.data(), 16);
    j["total"] = choose3(n);

    if (o.format == "json") {
        emit(dump_json(j), o);
    } else if (o.format == "csv") {
        std::string out = "class,name,count\n";
        if (undirected) {
            const char* names[] = {"empty", "1-edge", "intransitive", "triangle"};
            for (int i = 0; i < 4; ++i)
                out += std::to_string(i) + "," + names[i] + "," + std::to_string(counts4[i]) + "\n";
        } else {
            for (const auto& c : triad_classes())
                out += std::to_string(c.index) + "," + c.name + "," +
                       std::to_string(counts16[c.index - 1]) + "\n";
        }
        emit(out, o);
    } else {
        char buf[128];
        std::string out;
        std::snprintf(buf, sizeof buf, "triad census (%s), n=%d, %s=%lld, %lld triads\n",
                      mode_name(mode), n, undirected ? "edges" : "arcs", links,
                      static_cast<long long>(choose3(n)));
        out = buf;
        if (undirected) {
            const char* names[] = {"empty", "1-edge", "intransitive", "triangle"};
            for (int i = 0; i < 4; ++i) {
                std::snprintf(buf, sizeof buf, "  %d edges  %-12s %10lld\n", i, names[i], counts4[i]);
                out += buf;
            }
        } else {
            for (const auto& c : triad_classes()) {
                std::snprintf(buf, sizeof buf, "  type %2d  %-5s %10lld\n", c.index, c.name,
                              counts16[c.index - 1]);
                out += buf;
            }
        }
        emit(out, o);
    }
    return 0;
}

// -------------------------------------------------------------- expected ---

int run_expected(int n, long long edges, bool has_edges, double p, GraphMode mode, bool wrong_null,
                 const OutputOpts& o) {
    if (has_edges) {
        p = mode == GraphMode::Undirected ? er_p_undirected(n, edges)
            : mode == GraphMode::Directed ? er_p_directed(n, edges)
                                          : er_p_loop(n, edges);
    }
    ErParams params{n, p};
    params.validate();

    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "expected";
    j["mode"] = mode_name(mode);
    j["n"] = n;
    if (has_edges) j["edges"] = edges;
    j["p"] = p;
    std::string out_text;
    char buf[160];

    if (mode == GraphMode::Undirected) {
        const auto e = expected_census_undirected(params);
        j["expected"] = json_array(e.data(), 4);
        j["total"] = choose3(n);
        if (wrong_null) {
            const auto w = expected_census_directed(params);
            ordered_json wn;
            wn["label"] = kWrongNullLabel;
            wn["expected"] = json_array(w.data(), 16);
            wn["mutual_dyad_triads"] = w[3 - 1];
            wn["complete_triads"] = w[16 - 1];
            j["wrong_null"] = wn;
        }
        std::snprintf(buf, sizeof buf, "expected triad census, G(%d, %.6f), %lld triads\n", n, p,
                      static_cast<long long>(choose3(n)));
        out_text = buf;
        for (int i = 0; i < 4; ++i) {
            std::snprintf(buf, sizeof buf, "  %d edges  %14.6f\n", i, e[i]);
            out_text += buf;
        }
        if (wrong_null) {
            const auto w = expected_census_directed(params);
            out_text += std::string(kWrongNullLabel) + "\n";
            std::snprintf(buf, sizeof buf,
                          "  type  3 (mutual dyad) %14.6f\n  type 16 (complete)    %14.6f\n", w[2],
                          w[15]);
            out_text += buf;
        }
    } else if (mode == GraphMode::Directed) {
        const auto e = expected_census_directed(params);
        j["expected"] = json_array(e.data(), 16);
        j["total"] = choose3(n);
        j["intransitive_triples"] = expected_intransitive_triples(params);
        std::snprintf(buf, sizeof buf, "expected directed triad census, G(%d, %.6f)\n", n, p);
        out_text = buf;
        for (const auto& c : triad_classes()) {
            std::snprintf(buf, sizeof buf, "  type %2d  %-5s %14.6f\n", c.index, c.name,
                          e[c.index - 1]);
            out_text += buf;
        }
        out_text +=
            "  intransitive ordered triples " + fixed6(expected_intransitive_triples(params)) + "\n";
    } else {
        const auto e = expected_motto_prime_failures(params);
        j["failing_triples_leading"] = json_array(e.leading.data(), 4);
        j["failing_triples_exact"] = json_array(e.exact.data(), 4);
        out_text = "expected counts of ordered triples failing M1'-M4', random loop digraph\n";
        const char* names[] = {"M1'", "M2'", "M3'", "M4'"};
        for (int i = 0; i < 4; ++i) {
            std::snprintf(buf, sizeof buf, "  %s  leading %14.6f  exact %14.6f\n", names[i],
                          e.leading[i], e.exact[i]);
            out_text += buf;
        }
    }

    if (o.format == "json") {
        emit(dump_json(j), o);
    } else if (o.format == "csv") {
        std::string out;
        if (mode == GraphMode::Undirected) {
            out = "class,expected\n";
            const auto e = expected_census_undirected(params);
            for (int i = 0; i < 4; ++i) out += std::to_string(i) + "," + fixed6(e[i]) + "\n";
            if (wrong_null) {
                const auto w = expected_census_directed(params);
                for (int i = 0; i < 16; ++i)
                    out += "wrong_null_" + std::to_string(i + 1) + "," + fixed6(w[i]) + "\n";
            }
        } else if (mode == GraphMode::Directed) {
            out = "class,expected\n";
            const auto e = expected_census_directed(params);
            for (int i = 0; i < 16; ++i) out += std::to_string(i + 1) + "," + fixed6(e[i]) + "\n";
        } else {
            out = "motto,leading,exact\n";
            const auto e = expected_motto_prime_failures(params);
            const char* names[] = {"M1p", "M2p", "M3p", "M4p"};
            for (int i = 0; i < 4; ++i)
                out += std::string(names[i]) + "," + fixed6(e.leading[i]) + "," + fixed6(e.exact[i]) +
                       "\n";
        }
        emit(out, o);
    } else {
        emit(out_text, o);
    }
    return 0;
}

// ------------------------------------------------------------ hypothesis ---

ordered_json gbh_json(const GbhReport& r, const char* command) {
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["model"] = "GBH";
    j["n"] = r.n;
    j["edges"] = r.edges;
    j["p"] = r.p;
    j["degenerate"] = r.degenerate;
    j["counts"] = json_array(r.observed.counts.data(), 4);
    j["total"] = r.observed.total();
    j["expected"] = json_array(r.expected.data(), 4);
    ordered_json dirs = ordered_json::array();
    for (auto d : r.direction) dirs.push_back(direction_name(d));
    j["direction"] = dirs;
    j["gbh_holds"] = r.gbh_holds;
    j["samples"] = r.samples;
    if (r.samples > 0) {
        j["seed"] = r.seed;
        j["mc_quantile"] = json_array(r.mc_quantile.data(), 4);
        j["mc_mean"] = json_array(r.mc_mean.data(), 4);
        j["mc_se"] = json_array(r.mc_se.data(), 4);
    }
    return j;
}

std::string gbh_text(const GbhReport& r, const std::string& header) {
    char buf[200];
    std::string out = header;
    std::snprintf(buf, sizeof buf, "n=%d edges=%lld density p=%.6f%s\n", r.n, r.edges, r.p,
                  r.degenerate ? "  [degenerate density]" : "");
    out += buf;
    const char* names[] = {"empty", "1-edge", "intransitive", "triangle"};
    for (int i = 0; i < 4; ++i) {
        std::snprintf(buf, sizeof buf, "  %-12s observed %8lld  expected %12.6f  %s\n", names[i],
                      r.observed.counts[i], r.expected[i], direction_name(r.direction[i]));
        out += buf;
        if (r.samples > 0) {
            std::snprintf(buf, sizeof buf, "  %-12s null mean %12.6f  se %10.6f  quantile %.6f\n",
                          "", r.mc_mean[i], r.mc_se[i], r.mc_quantile[i]);
            out += buf;
        }
    }
    out += std::string("balance hypothesis (1,3 over; 0,2 under): ") +
           (r.gbh_holds ? "holds" : "fails") + "\n";
    return out;
}

std::string gbh_csv(const GbhReport& r) {
    std::string out = "class,observed,expected,direction,mc_quantile,mc_mean,mc_se\n";
    for (int i = 0; i < 4; ++i) {
        out += std::to_string(i) + "," + std::to_string(r.observed.counts[i]) + "," +
               fixed6(r.expected[i]) + "," + direction_name(r.direction[i]);
        if (r.samples > 0)
            out += "," + fixed6(r.mc_quantile[i]) + "," + fixed6(r.mc_mean[i]) + "," +
                   fixed6(r.mc_se[i]);
        out += "\n";
    }
    return out;
}

int run_hypothesis(const std::string& file, bool directed, int samples, uint64_t seed,
                   const OutputOpts& o) {
    if (!directed) {
        const auto g = std::get<UndirectedGraph>(load_graph(file, GraphMode::Undirected));
        const GbhReport r = evaluate_gbh(g, samples, seed);
        if (o.format == "json") emit(dump_json(gbh_json(r, "hypothesis")), o);
        else if (o.format == "csv") emit(gbh_csv(r), o);
        else emit(gbh_text(r, "general balance hypothesis\n"), o);
        return 0;
    }
    const auto g = std::get<Digraph>(load_graph(file, GraphMode::Directed));
    const GthReport r = evaluate_gth(g, samples, seed);
    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "hypothesis";
    j["model"] = "GTH";
    j["n"] = r.n;
    j["arcs"] = r.arcs;
    j["p"] = r.p;
    j["degenerate"] = r.degenerate;
    j["intransitive_triples"] = r.observed;
    j["total_triples"] = r.total_triples;
    j["expected"] = r.expected;
    j["direction"] = direction_name(r.direction);
    j["gth_holds"] = r.gth_holds;
    j["samples"] = r.samples;
    if (r.samples > 0) {
        j["seed"] = r.seed;
        j["mc_quantile"] = r.mc_quantile;
        j["mc_mean"] = r.mc_mean;
        j["mc_se"] = r.mc_se;
    }
    if (o.format == "json") {
        emit(dump_json(j), o);
    } else if (o.format == "csv") {
        std::string out = "observed,total,expected,direction,gth_holds\n";
        out += std::to_string(r.observed) + "," + std::to_string(r.total_triples) + "," +
               fixed6(r.expected) + "," + direction_name(r.direction) + "," +
               (r.gth_holds ? "true" : "false") + "\n";
        emit(out, o);
    } else {
        char buf[200];
        std::string out = "general transitivity hypothesis\n";
        std::snprintf(buf, sizeof buf, "n=%d arcs=%lld density p=%.6f%s\n", r.n, r.arcs, r.p,
                      r.degenerate ? "  [degenerate density]" : "");
        out += buf;
        std::snprintf(buf, sizeof buf,
                      "  intransitive ordered triples observed %lld of %lld, expected %.6f (%s)\n",
                      r.observed, r.total_triples, r.expected, direction_name(r.direction));
        out += buf;
        if (r.samples > 0) {
            std::snprintf(buf, sizeof buf, "  null mean %.6f  se %.6f  quantile %.6f\n", r.mc_mean,
                          r.mc_se, r.mc_quantile);
            out += buf;
        }
        out += std::string("transitivity hypothesis (observed < expected): ") +
               (r.gth_holds ? "holds" : "fails") + "\n";
        emit(out, o);
    }
    return 0;
}

// ---------------------------------------------------------------- karate ---

int run_karate(int samples, uint64_t seed, const OutputOpts& o) {
    const KarateReport r = karate_reference_report(samples, seed);
    if (o.format == "json") {
        ordered_json j = gbh_json(r.gbh, "karate");
        ordered_json wn;
        wn["label"] = kWrongNullLabel;
        wn["expected"] = json_array(r.wrong_null_expected.data(), 16);
        wn["mutual_dyad_triads"] = r.wrong_null_e1;
        wn["complete_triads"] = r.wrong_null_e3;
        j["wrong_null"] = wn;
        ordered_json val;
        val["possible_edges"] = r.possible_edges;
        ordered_json degs;
        for (auto [id, d] : r.key_degrees) degs[std::to_string(id)] = d;
        val["degrees"] = degs;
        ordered_json rem = ordered_json::array();
        for (int id : r.removed_hubs) rem.push_back(id);
        val["removed_hubs"] = rem;
        val["residual_nodes"] = r.residual_nodes;
        val["residual_edges"] = r.residual_edges;
        val["residual_density"] = r.residual_density;
        ordered_json cross = ordered_json::array();
        for (auto [u, v] : r.residual_cross_faction) cross.push_back(ordered_json::array({u, v}));
        val["cross_faction_edges"] = cross;
        j["validation"] = val;
        emit(dump_json(j), o);
    } else if (o.format == "csv") {
        emit(gbh_csv(r.gbh), o);
    } else {
        std::string out = gbh_text(r.gbh, "karate club reference analysis\n");
        char buf[200];
        out += std::string(kWrongNullLabel) + "\n";
        std::snprintf(buf, sizeof buf,
                      "  type  3 (mutual dyad) %14.6f\n  type 16 (complete)    %14.6f\n",
                      r.wrong_null_e1, r.wrong_null_e3);
        out += buf;
        out += "dataset validation\n";
        std::snprintf(buf, sizeof buf, "  %lld of %lld possible edges\n", r.edges, r.possible_edges);
        out += buf;
        out += "  degrees:";
        for (auto [id, d] : r.key_degrees) {
            std::snprintf(buf, sizeof buf, " %d->%d", id, d);
            out += buf;
        }
        out += "\n";
        std::snprintf(buf, sizeof buf,
                      "  removing the five hubs leaves %lld edges on %d nodes (density %.6f)\n",
                      r.residual_edges, r.residual_nodes, r.residual_density);
        out += buf;
        out += "  residual cross-faction edges:";
        for (auto [u, v] : r.residual_cross_faction) {
            std::snprintf(buf, sizeof buf, " {%d,%d}", u, v);
            out += buf;
        }
        out += "\n";
        emit(out, o);
    }
    return 0;
}

// -------------------------------------------------------------- generate ---

int run_generate(const AnyGraph& g, const OutputOpts& o) {
    if (o.format == "json") emit(graph_to_json(g) + "\n", o);
    else emit(serialize_edge_list(g), o);
    return 0;
}

// ---------------------------------------------------- verify-constellation -

int run_verify_constellation(int k, int n, double delta, int samples, uint64_t seed,
                             const OutputOpts& o) {
    const Theorem53Report r = theorem53_report({k, n, delta});
    std::array<double, 4> mc_mean{}, mc_se{};
    bool mc_ok = true;
    if (samples > 0) {
        std::array<std::vector<long long>, 4> counts;
        for (auto& v : counts) v.assign(samples, 0);
        const ConstellationParams params{k, n, delta};
        parallel_for(samples, worker_count(), [&](long long s) {
            const CensusU c = census_undirected(sample_constellation(params, stream_seed(seed, s)));
            for (int i = 0; i < 4; ++i) counts[i][s] = c.counts[i];
        });
        for (int i = 0; i < 4; ++i) {
            double mean = 0;
            for (long long x : counts[i]) mean += static_cast<double>(x);
            mean /= samples;
            double ss = 0;
            for (long long x : counts[i]) ss += (x - mean) * (x - mean);
            const double se = samples > 1 ? std::sqrt(ss / (samples - 1.0) / samples) : 0.0;
            mc_mean[i] = mean;
            mc_se[i] = se;
            if (std::abs(mean - r.expectation.ea[i]) > 3 * se) mc_ok = false;
        }
    }

    ordered_json j;
    j["schema"] = kSchema;
    j["command"] = "verify-constellation";
    j["k"] = k;
    j["n"] = n;
    j["delta"] = delta;
    j["regime_ok"] = r.regime_ok;
    j["eps"] = r.expectation.eps;
    j["p_match"] = r.expectation.p_match;
    j["expected_constellation"] = json_array(r.expectation.ea.data(), 4);
    j["expected_er"] = json_array(r.expectation.eb.data(), 4);
    ordered_json signs = ordered_json::array();
    for (int s : r.sign) signs.push_back(s > 0 ? "+" : s < 0 ? "-" : "0");
    j["sign"] = signs;
    ordered_json ratios;
    ratios["triangles_vs_kn2delta_over_2"] = r.ratio_e3;
    ratios["intransitive_vs_kn2_over_2"] = r.ratio_e2;
    ratios["one_edge_gap_vs_kn2"] = r.ratio_e1_gap;
    ratios["empty_gap_vs_kn2_over_2"] = r.ratio_e0_gap;
    j["ratios"] = ratios;
    j["small_delta_branch"] = r.small_delta_branch;
    j["e1_small_delta_prediction"] = r.e1_small_delta_pred;
    j["e1_small_delta_ratio"] = r.ratio_e1_small_delta;
    j["samples"] = samples;
    if (samples > 0) {
        j["seed"] = seed;
        j["mc_mean"] = json_array(mc_mean.data(), 4);
        j["mc_se"] = json_array(mc_se.data(), 4);
        j["mc_within_3se"] = mc_ok;
    }

    if (o.format == "json") {
        emit(dump_json(j), o);
    } else if (o.format == "csv") {
        std::string out = "class,expected_constellation,expected_er,sign\n";
        for (int i = 0; i < 4; ++i)
            out += std::to_string(i) + "," + fixed6(r.expectation.ea[i]) + "," +
                   fixed6(r.expectation.eb[i]) + "," +
                   (r.sign[i] > 0 ? "+" : r.sign[i] < 0 ? "-" : "0") + "\n";
        emit(out, o);
    } else {
        char buf[220];
        std::string out;
        std::snprintf(buf, sizeof buf,
                      "noisy constellation, k=%d n=%d delta=%.6f  (asymptotic regime: %s)\n", k, n,
                      delta, r.regime_ok ? "yes" : "no");
        out = buf;
        std::snprintf(buf, sizeof buf, "expected edges %.6f, matched density %.6f\n",
                      r.expectation.eps, r.expectation.p_match);
        out += buf;
        for (int i = 0; i < 4; ++i) {
            std::snprintf(buf, sizeof buf, "  %d edges  constellation %16.6f  er %16.6f  [%s]\n", i,
                          r.expectation.ea[i], r.expectation.eb[i],
                          r.sign[i] > 0 ? "over" : r.sign[i] < 0 ? "under" : "equal");
            out += buf;
        }
        std::snprintf(buf, sizeof buf,
                      "leading-order ratios: triangles %.4f, intransitive %.4f, 1-edge gap %.4f, "
                      "empty gap %.4f\n",
                      r.ratio_e3, r.ratio_e2, r.ratio_e1_gap, r.ratio_e0_gap);
        out += buf;
        if (samples > 0) {
            for (int i = 0; i < 4; ++i) {
                std::snprintf(buf, sizeof buf, "  mc class %d: mean %.6f  se %.6f\n", i, mc_mean[i],
                              mc_se[i]);
                out += buf;
            }
            out += std::string("monte carlo within 3 se of closed forms: ") +
                   (mc_ok ? "yes" : "NO") + "\n";
        }
        emit(out, o);
    }
    return 0;
}

// ------------------------------------------------------------ triad-table -

int run_triad_table(const OutputOpts& o) {
    const auto rows = motto_table();
    const auto& classes = triad_classes();
    if (o.format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["command"] = "triad-table";
        ordered_json arr = ordered_json::array();
        for (int c = 0; c < 16; ++c) {
            ordered_json row;
            row["type"] = classes[c].index;
            row["name"] = classes[c].name;
            row["arcs"] = classes[c].arc_count;
            row["size"] = classes[c].class_size;
            row["m1"] = rows[c].m1;
            row["m2"] = rows[c].m2;
            row["m3"] = rows[c].m3;
            row["m4"] = rows[c].m4;
            row["balanced"] = rows[c].all();
            arr.push_back(row);
        }
        j["rows"] = arr;
        emit(dump_json(j), o);
    } else if (o.format == "csv") {
        std::string out = "type,name,arcs,size,m1,m2,m3,m4\n";
        for (int c = 0; c < 16; ++c) {
            out += std::to_string(classes[c].index) + "," + classes[c].name + "," +
                   std::to_string(classes[c].arc_count) + "," +
                   std::to_string(classes[c].class_size);
            for (bool b : {rows[c].m1, rows[c].m2, rows[c].m3, rows[c].m4}) out += b ? ",Y" : ",N";
            out += "\n";
        }
        emit(out, o);
    } else {
        std::string out = "type  name   arcs  size  M1 M2 M3 M4\n";
        char buf[100];
        for (int c = 0; c < 16; ++c) {
            std::snprintf(buf, sizeof buf, "%4d  %-5s %5d %5d   %c  %c  %c  %c%s\n",
                          classes[c].index, classes[c].name, classes[c].arc_count,
                          classes[c].class_size, rows[c].m1 ? 'Y' : 'N', rows[c].m2 ? 'Y' : 'N',
                          rows[c].m3 ? 'Y' : 'N', rows[c].m4 ? 'Y' : 'N',
                          rows[c].all() ? "   balanced" : "");
            out += buf;
        }
        emit(out, o);
    }
    return 0;
}

// ------------------------------------------------------------ loop-census -

int run_loop_census(const std::string& file, const OutputOpts& o) {
    const auto g = std::get<LoopDigraph>(load_graph(file, GraphMode::Loop));
    const auto fails = motto_prime_failures(g);
    const auto structure = balanced_loop_digraph_structure(g);
    const char* names[] = {"M1p", "M2p", "M3p", "M4p"};

    if (o.format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["command"] = "loop-census";
        j["n"] = g.node_count();
        j["arcs"] = g.arc_count();
        ordered_json f;
        for (int i = 0; i < 4; ++i) f[names[i]] = fails[i];
        j["failing_triples"] = f;
        j["balanced"] = structure.balanced;
        if (structure.balanced) {
            ordered_json classes = ordered_json::array();
            for (const auto& cls : structure.classes) {
                ordered_json c = ordered_json::array();
                for (int v : cls) c.push_back(v + 1);
                classes.push_back(c);
            }
            j["classes"] = classes;
        } else {
            ordered_json w;
            w["motto"] = names[static_cast<int>(structure.witness->motto) - 1];
            ordered_json t = ordered_json::array();
            for (int v : structure.witness->triple) t.push_back(v + 1);
            w["triple"] = t;
            j["witness"] = w;
        }
        emit(dump_json(j), o);
    } else if (o.format == "csv") {
        std::string out = "motto,failing_triples\n";
        for (int i = 0; i < 4; ++i)
            out += std::string(names[i]) + "," + std::to_string(fails[i]) + "\n";
        emit(out, o);
    } else {
        char buf[160];
        std::snprintf(buf, sizeof buf, "loop digraph, n=%d, arcs=%lld\n", g.node_count(),
                      g.arc_count());
        std::string out = buf;
        for (int i = 0; i < 4; ++i) {
            std::snprintf(buf, sizeof buf, "  triples failing %s: %lld\n", names[i], fails[i]);
            out += buf;
        }
        if (structure.balanced) {
            out += "balanced: the arc relation is an equivalence with classes";
            for (const auto& cls : structure.classes) {
                out += " {";
                for (size_t i = 0; i < cls.size(); ++i)
                    out += (i ? "," : "") + std::to_string(cls[i] + 1);
                out += "}";
            }
            out += "\n";
        } else {
            const auto& w = *structure.witness;
            std::snprintf(buf, sizeof buf, "not balanced: triple (%d,%d,%d) fails %s\n",
                          w.triple[0] + 1, w.triple[1] + 1, w.triple[2] + 1,
                          names[static_cast<int>(w.motto) - 1]);
            out += buf;
        }
        emit(out, o);
    }
    return 0;
}

// ----------------------------------------------------------- flow-balance -

int run_flow_balance(const std::string& file, double tol, bool has_tol, const OutputOpts& o) {
    const auto g = std::get<WeightedDigraph>(load_graph(file, GraphMode::Weighted));
    if (!has_tol) tol = default_flow_tolerance(g);
    const auto r = flow_balance(g, tol);
    if (o.format == "json") {
        ordered_json j;
        j["schema"] = kSchema;
        j["command"] = "flow-balance";
        j["n"] = g.node_count();
        j["arcs"] = g.arc_count();
        j["tol"] = tol;
        j["balanced"] = r.balanced;
        if (!r.balanced) {
            j["node"] = r.node + 1;
            j["in_weight"] = r.in_weight;
            j["out_weight"] = r.out_weight;
        }
        emit(dump_json(j), o);
    } else if (o.format == "csv") {
        std::string out = "balanced,node,in_weight,out_weight\n";
        out += r.balanced ? "true,,,"
                          : "false," + std::to_string(r.node + 1) + "," + fixed6(r.in_weight) + "," +
                                fixed6(r.out_weight);
        out += "\n";
        emit(out, o);
    } else {
        char buf[160];
        std::string out;
        if (r.balanced) {
            std::snprintf(buf, sizeof buf,
                          "balanced: in-weight equals out-weight at every node (tol %.3g)\n", tol);
        } else {
            std::snprintf(buf, sizeof buf,
                          "not balanced: node %d has in-weight %.6f, out-weight %.6f\n", r.node + 1,
                          r.in_weight, r.out_weight);
        }
        out = buf;
        emit(out, o);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triad censuses, balance and transitivity analysis for social networks"};
    app.require_subcommand(1);

    // census
    std::string census_file;
    bool census_directed_f = false, census_loop_f = false, census_weighted_f = false;
    OutputOpts census_o;
    auto* census_cmd = app.add_subcommand("census", "Count triad configurations of a network");
    census_cmd->add_option("file", census_file, "Edge-list or graph-JSON file, '-' for stdin")
        ->required();
    auto* cd = census_cmd->add_flag("--directed", census_directed_f, "Treat input as a digraph");
    auto* cl = census_cmd->add_flag("--loop", census_loop_f, "Treat input as a loop digraph");
    auto* cw =
        census_cmd->add_flag("--weighted", census_weighted_f, "Treat input as a weighted digraph");
    cd->excludes(cl)->excludes(cw);
    cl->excludes(cw);
    add_output_opts(census_cmd, census_o);

    // expected
    int exp_n = 0;
    long long exp_edges = 0;
    double exp_p = 0.0;
    bool exp_directed = false, exp_loop = false, exp_wrong_null = false;
    OutputOpts exp_o;
    auto* exp_cmd = app.add_subcommand(
        "expected", "Closed-form expected triad counts in the matched random graph");
    exp_cmd->add_option("--n", exp_n, "Number of nodes")->required()->check(CLI::PositiveNumber);
    auto* exp_edges_opt = exp_cmd->add_option("--edges", exp_edges, "Edge count to match");
    auto* exp_p_opt = exp_cmd->add_option("--p", exp_p, "Edge probability");
    exp_edges_opt->excludes(exp_p_opt);
    auto* ed = exp_cmd->add_flag("--directed", exp_directed, "Directed model");
    auto* el = exp_cmd->add_flag("--loop", exp_loop, "Loop-digraph model");
    ed->excludes(el);
    auto* exp_wn_opt = exp_cmd->add_flag(
        "--wrong-null", exp_wrong_null,
        "Also print directed-model expectations for this undirected input "
        "(an invalid comparison, for illustration)");
    exp_wn_opt->excludes(ed)->excludes(el);
    add_output_opts(exp_cmd, exp_o);

    // hypothesis
    std::string hyp_file;
    bool hyp_directed = false;
    int hyp_samples = 0;
    uint64_t hyp_seed = 0;
    OutputOpts hyp_o;
    auto* hyp_cmd = app.add_subcommand(
        "hypothesis", "Evaluate the balance (undirected) or transitivity (directed) hypothesis");
    hyp_cmd->add_option("file", hyp_file, "Edge-list or graph-JSON file, '-' for stdin")->required();
    hyp_cmd->add_flag("--directed", hyp_directed, "Evaluate the transitivity hypothesis instead");
    hyp_cmd->add_option("--samples", hyp_samples, "Monte Carlo null samples")
        ->check(CLI::NonNegativeNumber);
    auto* hyp_seed_opt = hyp_cmd->add_option("--seed", hyp_seed, "Monte Carlo seed");
    add_output_opts(hyp_cmd, hyp_o);

    // generate
    auto* gen_cmd = app.add_subcommand("generate", "Write a generated network as an edge list");
    gen_cmd->require_subcommand(1);
    OutputOpts gen_o;

    int gs_n = 0;
    auto* gen_star = gen_cmd->add_subcommand("star", "Star graph: node 1 joined to all others");
    gen_star->add_option("--n", gs_n, "Number of nodes")->required();

    int gc_k = 0, gc_n = 0;
    double gc_delta = 0.0;
    uint64_t gc_seed = 0;
    auto* gen_con = gen_cmd->add_subcommand("constellation", "Disjoint noisy star graphs");
    gen_con->add_option("--k", gc_k, "Number of components")->required();
    gen_con->add_option("--n", gc_n, "Nodes per component")->required();
    gen_con->add_option("--delta", gc_delta, "Leaf-leaf noise probability")->required();
    gen_con->add_option("--seed", gc_seed, "Seed")->required();

    int gq_k = 0, gq_n = 0;
    auto* gen_clq = gen_cmd->add_subcommand("cliques", "Disjoint union of complete graphs");
    gen_clq->add_option("--k", gq_k, "Number of cliques")->required();
    gen_clq->add_option("--n", gq_n, "Clique size")->required();

    int ge_n = 0;
    double ge_p = 0.0;
    long long ge_edges = 0;
    uint64_t ge_seed = 0;
    bool ge_directed = false, ge_loop = false;
    auto* gen_er = gen_cmd->add_subcommand("er", "Erdos-Renyi random graph");
    gen_er->add_option("--n", ge_n, "Number of nodes")->required();
    auto* ge_p_opt = gen_er->add_option("--p", ge_p, "Edge probability");
    auto* ge_e_opt = gen_er->add_option("--edges", ge_edges, "Expected edge count to match");
    ge_p_opt->excludes(ge_e_opt);
    gen_er->add_option("--seed", ge_seed, "Seed")->required();
    auto* ge_d = gen_er->add_flag("--directed", ge_directed, "Directed model");
    auto* ge_l = gen_er->add_flag("--loop", ge_loop, "Loop-digraph model");
    ge_d->excludes(ge_l);

    for (auto* c : {gen_star, gen_con, gen_clq, gen_er}) add_output_opts(c, gen_o);

    // verify-constellation
    int vc_k = 0, vc_n = 0;
    double vc_delta = 0.0;
    int vc_samples = 0;
    uint64_t vc_seed = 0;
    OutputOpts vc_o;
    auto* vc_cmd = app.add_subcommand(
        "verify-constellation",
        "Compare noisy-constellation census expectations against the matched random graph");
    vc_cmd->add_option("--k", vc_k, "Number of components")->required();
    vc_cmd->add_option("--n", vc_n, "Nodes per component")->required();
    vc_cmd->add_option("--delta", vc_delta, "Leaf-leaf noise probability")->required();
    vc_cmd->add_option("--samples", vc_samples, "Monte Carlo samples")
        ->check(CLI::NonNegativeNumber);
    auto* vc_seed_opt = vc_cmd->add_option("--seed", vc_seed, "Monte Carlo seed");
    add_output_opts(vc_cmd, vc_o);

    // triad-table
    OutputOpts tt_o;
    auto* tt_cmd = app.add_subcommand(
        "triad-table", "The 16 directed triad types and which mottoes M1-M4 each satisfies");
    add_output_opts(tt_cmd, tt_o);

    // loop-census
    std::string lc_file;
    OutputOpts lc_o;
    auto* lc_cmd =
        app.add_subcommand("loop-census", "Count ordered triples failing M1'-M4' in a loop digraph");
    lc_cmd->add_option("file", lc_file, "Edge-list or graph-JSON file, '-' for stdin")->required();
    add_output_opts(lc_cmd, lc_o);

    // flow-balance
    std::string fb_file;
    double fb_tol = 0.0;
    OutputOpts fb_o;
    auto* fb_cmd = app.add_subcommand(
        "flow-balance", "Check in-weight = out-weight at every node of a weighted digraph");
    fb_cmd->add_option("file", fb_file, "Edge-list or graph-JSON file, '-' for stdin")->required();
    auto* fb_tol_opt = fb_cmd->add_option("--tol", fb_tol, "Absolute tolerance per node");
    add_output_opts(fb_cmd, fb_o);

    // karate
    int ka_samples = 0;
    uint64_t ka_seed = 0;
    OutputOpts ka_o;
    auto* ka_cmd =
        app.add_subcommand("karate", "Reference triad analysis of the embedded karate-club network");
    ka_cmd->add_option("--samples", ka_samples, "Monte Carlo null samples")
        ->check(CLI::NonNegativeNumber);
    auto* ka_seed_opt = ka_cmd->add_option("--seed", ka_seed, "Monte Carlo seed");
    add_output_opts(ka_cmd, ka_o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        // reproducibility by default: sampling demands an explicit seed
        if (hyp_cmd->parsed() && hyp_samples > 0 && hyp_seed_opt->count() == 0)
            throw CLI::ValidationError("--seed is required when --samples > 0");
        if (vc_cmd->parsed() && vc_samples > 0 && vc_seed_opt->count() == 0)
            throw CLI::ValidationError("--seed is required when --samples > 0");
        if (ka_cmd->parsed() && ka_samples > 0 && ka_seed_opt->count() == 0)
            throw CLI::ValidationError("--seed is required when --samples > 0");

        if (census_cmd->parsed()) {
            GraphMode mode = census_directed_f   ? GraphMode::Directed
                             : census_loop_f     ? GraphMode::Loop
                             : census_weighted_f ? GraphMode::Weighted
                                                 : GraphMode::Undirected;
            return run_census(census_file, mode, census_o);
        }
        if (exp_cmd->parsed()) {
            if (exp_edges_opt->count() == 0 && exp_p_opt->count() == 0)
                throw CLI::ValidationError("one of --edges or --p is required");
            GraphMode mode = exp_directed ? GraphMode::Directed
                             : exp_loop   ? GraphMode::Loop
                                          : GraphMode::Undirected;
            return run_expected(exp_n, exp_edges, exp_edges_opt->count() > 0, exp_p, mode,
                                exp_wrong_null, exp_o);
        }
        if (hyp_cmd->parsed())
            return run_hypothesis(hyp_file, hyp_directed, hyp_samples, hyp_seed, hyp_o);
        if (gen_cmd->parsed()) {
            if (gen_star->parsed()) return run_generate(AnyGraph(star_graph(gs_n)), gen_o);
            if (gen_con->parsed())
                return run_generate(AnyGraph(sample_constellation({gc_k, gc_n, gc_delta}, gc_seed)),
                                    gen_o);
            if (gen_clq->parsed()) return run_generate(AnyGraph(clique_union(gq_k, gq_n)), gen_o);
            if (gen_er->parsed()) {
                if (ge_p_opt->count() == 0 && ge_e_opt->count() == 0)
                    throw CLI::ValidationError("one of --p or --edges is required");
                double p = ge_p;
                if (ge_e_opt->count() > 0)
                    p = ge_directed ? er_p_directed(ge_n, ge_edges)
                        : ge_loop   ? er_p_loop(ge_n, ge_edges)
                                    : er_p_undirected(ge_n, ge_edges);
                ErParams params{ge_n, p};
                if (ge_directed)
                    return run_generate(AnyGraph(sample_er_directed(params, ge_seed)), gen_o);
                if (ge_loop) return run_generate(AnyGraph(sample_er_loop(params, ge_seed)), gen_o);
                return run_generate(AnyGraph(sample_er_undirected(params, ge_seed)), gen_o);
            }
        }
        if (vc_cmd->parsed())
            return run_verify_constellation(vc_k, vc_n, vc_delta, vc_samples, vc_seed, vc_o);
        if (tt_cmd->parsed()) return run_triad_table(tt_o);
        if (lc_cmd->parsed()) return run_loop_census(lc_file, lc_o);
        if (fb_cmd->parsed()) return run_flow_balance(fb_file, fb_tol, fb_tol_opt->count() > 0, fb_o);
        if (ka_cmd->parsed()) return run_karate(ka_samples, ka_seed, ka_o);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
