#include "triadic/triads.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace triadic {

namespace {

constexpr std::array<std::array<int, 3>, 6> kPerms = {{
    {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0},
}};

uint8_t permute_mask(uint8_t mask, const std::array<int, 3>& p) {
    uint8_t out = 0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && (mask >> arc_bit(i, j) & 1)) out |= uint8_t(1u << arc_bit(p[i], p[j]));
    return out;
}

uint8_t canonical_mask(uint8_t mask) {
    uint8_t best = 0x3f;
    for (const auto& p : kPerms) best = std::min(best, permute_mask(mask, p));
    return best;
}

uint8_t mask_of(std::initializer_list<std::pair<int, int>> arcs) {
    uint8_t m = 0;
    for (auto [i, j] : arcs) m |= uint8_t(1u << arc_bit(i, j));
    return m;
}

// Canonical representatives in M-A-N order. Types 7 (111D) and 8 (111U)
// carry the lone arc into resp. out of the mutual dyad; the motto table
// assertions in the tests are the authority for this orientation.
struct RepDef {
    const char* name;
    uint8_t mask;
};

std::array<RepDef, 16> rep_defs() {
    return {{
        {"003", mask_of({})},
        {"012", mask_of({{0, 1}})},
        {"102", mask_of({{0, 1}, {1, 0}})},
        {"021D", mask_of({{1, 0}, {1, 2}})},
        {"021U", mask_of({{0, 1}, {2, 1}})},
        {"021C", mask_of({{0, 1}, {1, 2}})},
        {"111D", mask_of({{0, 1}, {1, 0}, {2, 1}})},
        {"111U", mask_of({{0, 1}, {1, 0}, {1, 2}})},
        {"030T", mask_of({{0, 1}, {1, 2}, {0, 2}})},
        {"030C", mask_of({{0, 1}, {1, 2}, {2, 0}})},
        {"201", mask_of({{0, 1}, {1, 0}, {0, 2}, {2, 0}})},
        {"120D", mask_of({{1, 2}, {2, 1}, {0, 1}, {0, 2}})},
        {"120U", mask_of({{1, 2}, {2, 1}, {1, 0}, {2, 0}})},
        {"120C", mask_of({{0, 1}, {1, 2}, {2, 1}, {2, 0}})},
        {"210", mask_of({{0, 1}, {1, 0}, {1, 2}, {2, 1}, {0, 2}})},
        {"300", uint8_t(0x3f)},
    }};
}

struct Tables {
    std::array<int, 64> class_of;  // mask -> 1..16
    std::array<TriadClassInfo, 16> classes;
};

Tables build_tables() {
    Tables t{};
    auto reps = rep_defs();
    std::array<uint8_t, 16> canon{};
    for (int c = 0; c < 16; ++c) canon[c] = canonical_mask(reps[c].mask);
    std::array<int, 16> sizes{};
    for (int m = 0; m < 64; ++m) {
        uint8_t cm = canonical_mask(uint8_t(m));
        int found = 0;
        for (int c = 0; c < 16; ++c) {
            if (canon[c] == cm) {
                t.class_of[m] = c + 1;
                ++sizes[c];
                ++found;
            }
        }
        if (found != 1) throw std::logic_error("triad class table is not a partition of the 64 masks");
    }
    for (int c = 0; c < 16; ++c)
        t.classes[c] = {c + 1, reps[c].name, reps[c].mask, std::popcount(reps[c].mask), sizes[c]};
    return t;
}

const Tables& tables() {
    static const Tables t = build_tables();
    return t;
}

}  // namespace

bool MottoProfile::get(Motto m) const {
    switch (m) {
        case Motto::M1: return m1;
        case Motto::M2: return m2;
        case Motto::M3: return m3;
        case Motto::M4: return m4;
    }
    return false;
}

int arc_bit(int i, int j) { return i * 2 + (j > i ? j - 1 : j); }

const std::array<TriadClassInfo, 16>& triad_classes() { return tables().classes; }

uint8_t triad_mask(const Digraph& t) {
    if (t.node_count() != 3) throw std::invalid_argument("triad must have exactly 3 nodes");
    uint8_t m = 0;
    for (auto [u, v] : t.arcs()) m |= uint8_t(1u << arc_bit(u, v));
    return m;
}

Digraph triad_from_mask(uint8_t mask) {
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j && (mask >> arc_bit(i, j) & 1)) arcs.emplace_back(i, j);
    return Digraph(3, std::move(arcs));
}

int classify_mask(uint8_t mask) { return tables().class_of[mask & 0x3f]; }

int classify_directed_triad(const Digraph& t) { return classify_mask(triad_mask(t)); }

int classify_undirected_triad(const UndirectedGraph& t) {
    if (t.node_count() != 3) throw std::invalid_argument("triad must have exactly 3 nodes");
    return static_cast<int>(t.edge_count());
}

bool motto_holds(uint8_t mask, Motto m) {
    auto has = [mask](int i, int j) { return (mask >> arc_bit(i, j)) & 1; };
    for (const auto& p : kPerms) {
        const int x = p[0], y = p[1], z = p[2];
        const bool xy = has(x, y), yz = has(y, z), xz = has(x, z);
        bool fail = false;
        switch (m) {
            case Motto::M1: fail = xy && yz && !xz; break;
            case Motto::M2: fail = !xy && !yz && !xz; break;
            case Motto::M3: fail = xy && !yz && xz; break;
            case Motto::M4: fail = !xy && yz && xz; break;
        }
        if (fail) return false;
    }
    return true;
}

bool motto_holds(const Digraph& t, Motto m) { return motto_holds(triad_mask(t), m); }

std::array<MottoProfile, 16> motto_table() {
    std::array<MottoProfile, 16> rows{};
    for (int c = 0; c < 16; ++c) {
        uint8_t rep = triad_classes()[c].rep_mask;
        rows[c] = {motto_holds(rep, Motto::M1), motto_holds(rep, Motto::M2),
                   motto_holds(rep, Motto::M3), motto_holds(rep, Motto::M4)};
    }
    return rows;
}

bool is_balanced_triad(const Digraph& t) {
    uint8_t m = triad_mask(t);
    return motto_holds(m, Motto::M1) && motto_holds(m, Motto::M2) && motto_holds(m, Motto::M3) &&
           motto_holds(m, Motto::M4);
}

namespace {

// Failure test for one M' motto at one triple; arcs may coincide when
// nodes repeat, which is the whole point of the primed variants.
bool prime_fails(const LoopDigraph& g, Motto m, int x, int y, int z) {
    const bool xy = g.has_arc(x, y), yz = g.has_arc(y, z), xz = g.has_arc(x, z);
    switch (m) {
        case Motto::M1: return xy && yz && !xz;
        case Motto::M2: return !xy && !yz && !xz;
        case Motto::M3: return xy && !yz && xz;
        case Motto::M4: return !xy && yz && xz;
    }
    return false;
}

}  // namespace

std::array<long long, 4> motto_prime_failures(const LoopDigraph& g) {
    std::array<long long, 4> fails{};
    const int n = g.node_count();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int m = 0; m < 4; ++m)
                    if (prime_fails(g, Motto(m + 1), x, y, z)) ++fails[m];
    return fails;
}

LoopBalanceResult balanced_loop_digraph_structure(const LoopDigraph& g) {
    const int n = g.node_count();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int m = 0; m < 4; ++m)
                    if (prime_fails(g, Motto(m + 1), x, y, z))
                        return {false, {}, LoopMottoWitness{Motto(m + 1), {x, y, z}}};

    // Balanced: the arc relation is reflexive, symmetric and transitive,
    // so its classes are the components of the arc set.
    std::vector<int> root(n);
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int v) {
        while (root[v] != v) v = root[v] = root[root[v]];
        return v;
    };
    for (auto [u, v] : g.arcs()) root[find(u)] = find(v);
    std::vector<std::vector<int>> classes;
    std::vector<int> idx(n, -1);
    for (int v = 0; v < n; ++v) {
        int r = find(v);
        if (idx[r] < 0) {
            idx[r] = static_cast<int>(classes.size());
            classes.emplace_back();
        }
        classes[idx[r]].push_back(v);
    }
    return {true, std::move(classes), std::nullopt};
}

}  // namespace triadic
