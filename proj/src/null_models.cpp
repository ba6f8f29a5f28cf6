#include "triadic/null_models.hpp"

#include <cmath>

#include "triadic/census.hpp"
#include "triadic/rng.hpp"
#include "triadic/triads.hpp"

namespace triadic {

void ErParams::validate() const {
    if (n < 0) throw std::invalid_argument("node count must be nonnegative");
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0,1]");
}

double er_p_undirected(int n, long long edges) {
    return n < 2 ? 0.0 : static_cast<double>(edges) / (static_cast<double>(n) * (n - 1) / 2.0);
}
double er_p_directed(int n, long long arcs) {
    return n < 2 ? 0.0 : static_cast<double>(arcs) / (static_cast<double>(n) * (n - 1));
}
double er_p_loop(int n, long long arcs) {
    return n < 1 ? 0.0 : static_cast<double>(arcs) / (static_cast<double>(n) * n);
}

UndirectedGraph sample_er_undirected(const ErParams& params, uint64_t seed) {
    params.validate();
    auto rng = make_rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < params.n; ++u)
        for (int v = u + 1; v < params.n; ++v)
            if (canonical(rng) < params.p) edges.emplace_back(u, v);
    return UndirectedGraph(params.n, std::move(edges));
}

Digraph sample_er_directed(const ErParams& params, uint64_t seed) {
    params.validate();
    auto rng = make_rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < params.n; ++u)
        for (int v = 0; v < params.n; ++v)
            if (u != v && canonical(rng) < params.p) arcs.emplace_back(u, v);
    return Digraph(params.n, std::move(arcs));
}

LoopDigraph sample_er_loop(const ErParams& params, uint64_t seed) {
    params.validate();
    auto rng = make_rng(seed);
    std::vector<std::pair<int, int>> arcs;
    for (int u = 0; u < params.n; ++u)
        for (int v = 0; v < params.n; ++v)
            if (canonical(rng) < params.p) arcs.emplace_back(u, v);
    return LoopDigraph(params.n, std::move(arcs));
}

std::array<double, 4> expected_census_undirected(const ErParams& params) {
    params.validate();
    const double p = params.p, q = 1.0 - p;
    const double t = static_cast<double>(choose3(params.n));
    return {t * q * q * q, t * 3 * p * q * q, t * 3 * p * p * q, t * p * p * p};
}

std::array<double, 16> expected_census_directed(const ErParams& params) {
    params.validate();
    const double p = params.p, q = 1.0 - p;
    const double t = static_cast<double>(choose3(params.n));
    std::array<double, 16> e{};
    for (const auto& c : triad_classes())
        e[c.index - 1] = t * c.class_size * std::pow(p, c.arc_count) * std::pow(q, 6 - c.arc_count);
    return e;
}

double expected_intransitive_triples(const ErParams& params) {
    params.validate();
    const double n = params.n;
    return n * (n - 1) * (n - 2) * params.p * params.p * (1.0 - params.p);
}

MottoPrimeExpectation expected_motto_prime_failures(const ErParams& params) {
    params.validate();
    const double n = params.n;
    const double p = params.p, q = 1.0 - p;
    MottoPrimeExpectation e;
    const double n3 = n * n * n;
    e.leading = {n3 * p * p * q, n3 * q * q * q, n3 * p * p * q, n3 * p * p * q};

    // Coincidence patterns and their counts:
    //   all distinct       d3 = n(n-1)(n-2)
    //   x=y!=z, y=z!=x,
    //   x=z!=y             d2 = n(n-1) each
    //   x=y=z              d1 = n
    // For each, the three arcs (x->y, y->z, x->z) may coincide, which either
    // kills the failure event (conclusion equals a hypothesis arc) or drops a
    // factor.
    const double d3 = n * (n - 1) * (n - 2);
    const double d2 = n * (n - 1);
    const double d1 = n;
    // M1': x=y and y=z patterns are impossible; x=z contributes p^2 q.
    e.exact[0] = (d3 + d2) * p * p * q;
    // M2': x=y and y=z force two coincident absent arcs (q^2); x=z keeps q^3;
    //      x=y=z is a single absent loop (q).
    e.exact[1] = (d3 + d2) * q * q * q + 2 * d2 * q * q + d1 * q;
    // M3': x=y impossible; y=z collapses conclusion onto hypothesis (p q);
    //      x=z keeps p^2 q; x=y=z impossible.
    e.exact[2] = d3 * p * p * q + d2 * p * q + d2 * p * p * q;
    // M4': mirror of M3' (y=z impossible, x=y collapses).
    e.exact[3] = e.exact[2];
    return e;
}

}  // namespace triadic
