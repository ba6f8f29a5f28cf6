#include "triadic/hypothesis.hpp"

#include <algorithm>
#include <cmath>

#include "triadic/karate.hpp"
#include "triadic/rng.hpp"

namespace triadic {

namespace {

Direction direction_of(double observed, double expected) {
    if (observed > expected) return Direction::Over;
    if (observed < expected) return Direction::Under;
    return Direction::Exact;
}

struct MomentStats {
    double mean = 0.0;
    double se = 0.0;
};

MomentStats moments(const std::vector<long long>& xs) {
    if (xs.empty()) return {};
    double mean = 0.0;
    for (long long x : xs) mean += static_cast<double>(x);
    mean /= static_cast<double>(xs.size());
    if (xs.size() < 2) return {mean, 0.0};
    double ss = 0.0;
    for (long long x : xs) ss += (x - mean) * (x - mean);
    const double sd = std::sqrt(ss / (static_cast<double>(xs.size()) - 1));
    return {mean, sd / std::sqrt(static_cast<double>(xs.size()))};
}

}  // namespace

const char* direction_name(Direction d) {
    switch (d) {
        case Direction::Over: return "over";
        case Direction::Under: return "under";
        case Direction::Exact: return "exact";
    }
    return "?";
}

std::array<std::vector<long long>, 4> sample_null_censuses(const ErParams& params, int samples,
                                                           uint64_t seed, int threads) {
    params.validate();
    if (threads <= 0) threads = worker_count();
    std::array<std::vector<long long>, 4> out;
    for (auto& v : out) v.assign(samples, 0);
    parallel_for(samples, threads, [&](long long s) {
        const CensusU c = census_undirected(sample_er_undirected(params, stream_seed(seed, s)));
        for (int i = 0; i < 4; ++i) out[i][s] = c.counts[i];
    });
    return out;
}

std::vector<long long> sample_null_intransitive(const ErParams& params, int samples,
                                                uint64_t seed, int threads) {
    params.validate();
    if (threads <= 0) threads = worker_count();
    std::vector<long long> out(samples, 0);
    parallel_for(samples, threads, [&](long long s) {
        out[s] = count_intransitive_triples(sample_er_directed(params, stream_seed(seed, s)))
                     .intransitive_triples;
    });
    return out;
}

double empirical_quantile(const std::vector<long long>& samples, long long observed) {
    if (samples.empty()) return 0.0;
    long long below = 0, equal = 0;
    for (long long x : samples) {
        if (x < observed) ++below;
        else if (x == observed) ++equal;
    }
    return (below + 0.5 * equal) / static_cast<double>(samples.size());
}

GbhReport evaluate_gbh(const UndirectedGraph& g, int samples, uint64_t seed) {
    GbhReport r;
    r.n = g.node_count();
    if (r.n < 3) throw std::invalid_argument("hypothesis evaluation requires at least 3 nodes");
    r.edges = g.edge_count();
    r.p = er_p_undirected(r.n, r.edges);
    r.degenerate = r.p == 0.0 || r.p == 1.0;
    r.observed = census_undirected(g);
    r.expected = expected_census_undirected({r.n, r.p});
    for (int i = 0; i < 4; ++i)
        r.direction[i] = direction_of(static_cast<double>(r.observed.counts[i]), r.expected[i]);
    r.gbh_holds = r.direction[1] == Direction::Over && r.direction[3] == Direction::Over &&
                  r.direction[0] == Direction::Under && r.direction[2] == Direction::Under;
    r.samples = samples;
    r.seed = seed;
    if (samples > 0) {
        auto null = sample_null_censuses({r.n, r.p}, samples, seed);
        for (int i = 0; i < 4; ++i) {
            r.mc_quantile[i] = empirical_quantile(null[i], r.observed.counts[i]);
            const auto m = moments(null[i]);
            r.mc_mean[i] = m.mean;
            r.mc_se[i] = m.se;
        }
    }
    return r;
}

GthReport evaluate_gth(const Digraph& g, int samples, uint64_t seed) {
    GthReport r;
    r.n = g.node_count();
    if (r.n < 3) throw std::invalid_argument("hypothesis evaluation requires at least 3 nodes");
    r.arcs = g.arc_count();
    r.p = er_p_directed(r.n, r.arcs);
    r.degenerate = r.p == 0.0 || r.p == 1.0;
    const auto tc = count_intransitive_triples(g);
    r.observed = tc.intransitive_triples;
    r.total_triples = tc.total_triples;
    r.expected = expected_intransitive_triples({r.n, r.p});
    r.direction = direction_of(static_cast<double>(r.observed), r.expected);
    // strict under-representation, except the all-or-nothing densities where
    // observed and expected are both exactly zero
    r.gth_holds = r.observed < r.expected || (r.observed == 0 && r.expected == 0.0);
    r.samples = samples;
    r.seed = seed;
    if (samples > 0) {
        auto null = sample_null_intransitive({r.n, r.p}, samples, seed);
        r.mc_quantile = empirical_quantile(null, r.observed);
        const auto m = moments(null);
        r.mc_mean = m.mean;
        r.mc_se = m.se;
    }
    return r;
}

KarateReport karate_reference_report(int samples, uint64_t seed) {
    const UndirectedGraph& g = karate_graph();
    KarateReport r;
    r.gbh = evaluate_gbh(g, samples, seed);
    r.wrong_null_expected = expected_census_directed({g.node_count(), r.gbh.p});
    r.wrong_null_e1 = r.wrong_null_expected[3 - 1];
    r.wrong_null_e3 = r.wrong_null_expected[16 - 1];

    r.n = g.node_count();
    r.edges = g.edge_count();
    r.possible_edges = choose2(r.n);
    for (int id : {1, 2, 3, 33, 34}) r.key_degrees[id] = g.degree(id - 1);

    r.removed_hubs = {1, 2, 3, 33, 34};
    std::array<bool, 34> removed{};
    for (int id : r.removed_hubs) removed[id - 1] = true;
    r.residual_nodes = r.n - static_cast<int>(r.removed_hubs.size());
    const auto& factions = karate_factions();
    for (auto [u, v] : g.edges()) {
        if (removed[u] || removed[v]) continue;
        ++r.residual_edges;
        if (factions[u] != factions[v]) r.residual_cross_faction.emplace_back(u + 1, v + 1);
    }
    r.residual_density =
        static_cast<double>(r.residual_edges) / static_cast<double>(choose2(r.residual_nodes));
    return r;
}

}  // namespace triadic
