#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include "triadic/census.hpp"
#include "triadic/null_models.hpp"

namespace triadic {

enum class Direction { Over, Under, Exact };
const char* direction_name(Direction d);

// Monte Carlo null censuses: samples[i][s] = class-i count of ER draw s at
// stream_seed(seed, s). Deterministic for a fixed seed and any thread count.
std::array<std::vector<long long>, 4> sample_null_censuses(const ErParams& params, int samples,
                                                           uint64_t seed, int threads = 0);
std::vector<long long> sample_null_intransitive(const ErParams& params, int samples,
                                                uint64_t seed, int threads = 0);

// Mid-rank empirical quantile of `observed` among `samples`:
// (#below + 0.5 #equal) / N.
double empirical_quantile(const std::vector<long long>& samples, long long observed);

// The balance hypothesis: against the density-matched G(n,p), 1- and 3-edge
// triads should be over-represented and 0- and 2-edge triads under-represented.
struct GbhReport {
    int n = 0;
    long long edges = 0;
    double p = 0.0;
    bool degenerate = false;  // p is 0 or 1
    CensusU observed;
    std::array<double, 4> expected{};
    std::array<Direction, 4> direction{};
    bool gbh_holds = false;
    int samples = 0;
    uint64_t seed = 0;
    std::array<double, 4> mc_quantile{};  // valid when samples > 0
    std::array<double, 4> mc_mean{};
    std::array<double, 4> mc_se{};
};

GbhReport evaluate_gbh(const UndirectedGraph& g, int samples, uint64_t seed);

// The transitivity hypothesis: ordered distinct triples failing M1 should be
// fewer than the n(n-1)(n-2) p^2 (1-p) expected in the matched random digraph.
struct GthReport {
    int n = 0;
    long long arcs = 0;
    double p = 0.0;
    bool degenerate = false;
    long long observed = 0;
    long long total_triples = 0;
    double expected = 0.0;
    Direction direction = Direction::Exact;
    bool gth_holds = false;
    int samples = 0;
    uint64_t seed = 0;
    double mc_quantile = 0.0;
    double mc_mean = 0.0;
    double mc_se = 0.0;
};

GthReport evaluate_gth(const Digraph& g, int samples, uint64_t seed);

// The full reference analysis of the embedded karate club network, including
// the deliberately mislabeled directed-null comparison and the dataset
// validation statistics.
struct KarateReport {
    GbhReport gbh;
    std::array<double, 16> wrong_null_expected{};  // directed-model values at the
                                                   // undirected density
    double wrong_null_e1 = 0.0;                    // class 3 (single mutual dyad)
    double wrong_null_e3 = 0.0;                    // class 16 (complete triad)
    // dataset validation
    int n = 0;
    long long edges = 0;
    long long possible_edges = 0;
    std::map<int, int> key_degrees;  // 1-based id -> degree for nodes 1,2,3,33,34
    std::vector<int> removed_hubs;   // 1-based
    int residual_nodes = 0;
    long long residual_edges = 0;
    double residual_density = 0.0;
    std::vector<std::pair<int, int>> residual_cross_faction;  // 1-based
};

KarateReport karate_reference_report(int samples, uint64_t seed);

}  // namespace triadic
