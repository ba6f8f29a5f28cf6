#include "triadic/generators.hpp"

#include "triadic/census.hpp"
#include "triadic/null_models.hpp"
#include "triadic/rng.hpp"

namespace triadic {

UndirectedGraph star_graph(int n) {
    if (n < 2) throw std::invalid_argument("star graph needs at least 2 nodes");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(n - 1);
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph clique_union(int k, int n) {
    if (k < 1 || n < 1) throw std::invalid_argument("clique union needs k >= 1, n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < k; ++c) {
        const int base = c * n;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(base + i, base + j);
    }
    return UndirectedGraph(k * n, std::move(edges));
}

void ConstellationParams::validate() const {
    if (k < 1) throw std::invalid_argument("constellation needs k >= 1 components");
    if (n < 2) throw std::invalid_argument("constellation needs n >= 2 nodes per component");
    if (!(delta >= 0.0 && delta <= 1.0))
        throw std::invalid_argument("noise probability must lie in [0,1]");
}

UndirectedGraph sample_constellation(const ConstellationParams& params, uint64_t seed) {
    params.validate();
    auto rng = make_rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int c = 0; c < params.k; ++c) {
        const int hub = c * params.n;
        for (int l = 1; l < params.n; ++l) edges.emplace_back(hub, hub + l);
        for (int a = 1; a < params.n; ++a)
            for (int b = a + 1; b < params.n; ++b)
                if (canonical(rng) < params.delta) edges.emplace_back(hub + a, hub + b);
    }
    return UndirectedGraph(params.k * params.n, std::move(edges));
}

ConstellationExpectation constellation_expectation(const ConstellationParams& params) {
    params.validate();
    const double k = params.k, d = params.delta;
    const double c2 = static_cast<double>(choose2(params.n - 1));
    const double c3 = static_cast<double>(choose3(params.n - 1));
    const double total = static_cast<double>(choose3(static_cast<long long>(params.k) * params.n));

    ConstellationExpectation e;
    e.eps = k * (params.n - 1 + d * c2);
    e.p_match = e.eps / static_cast<double>(choose2(static_cast<long long>(params.k) * params.n));

    // triangles: three leaves (all three noise edges) or hub plus an adjacent
    // leaf pair; cross-component triples never reach two edges
    e.ea[3] = k * (d * d * d * c3 + d * c2);
    e.ea[2] = k * ((1 - d) * c2 + 3 * d * d * (1 - d) * c3);
    e.ea[1] = k * c3 * 3 * d * (1 - d) * (1 - d) +
              k * (k - 1) *
                  (static_cast<double>(params.n) * (params.n - 1) + d * params.n * c2);
    e.ea[0] = total - e.ea[1] - e.ea[2] - e.ea[3];
    e.eb = expected_census_undirected({params.k * params.n, e.p_match});
    return e;
}

Theorem53Report theorem53_report(const ConstellationParams& params) {
    Theorem53Report r;
    r.params = params;
    r.regime_ok = params.regime_ok();
    r.expectation = constellation_expectation(params);
    const auto& ea = r.expectation.ea;
    const auto& eb = r.expectation.eb;
    for (int i = 0; i < 4; ++i) {
        const double gap = ea[i] - eb[i];
        r.sign[i] = gap > 0 ? 1 : gap < 0 ? -1 : 0;
    }
    const double k = params.k;
    const double n2 = static_cast<double>(params.n) * params.n;
    r.ratio_e3 = ea[3] / (k / 2 * n2 * params.delta);
    r.ratio_e2 = ea[2] / (k / 2 * n2);
    r.ratio_e1_gap = (eb[1] - ea[1]) / (k * n2);
    r.ratio_e0_gap = (ea[0] - eb[0]) / (k / 2 * n2);
    r.small_delta_branch = params.delta * params.n <= 0.1;
    r.e1_small_delta_pred = params.k >= 2 ? k * (k - 1) * n2 : n2 * params.n * params.delta / 2;
    r.ratio_e1_small_delta =
        r.e1_small_delta_pred > 0 ? ea[1] / r.e1_small_delta_pred : 0.0;
    return r;
}

}  // namespace triadic
