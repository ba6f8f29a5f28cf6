#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "triadic/graph.hpp"

namespace triadic {

// The four friend/enemy implications, quantified over ordered triples.
// M1 "friend of my friend is my friend":   x->y, y->z        =>  x->z
// M2 "enemy of my enemy is my friend":    !x->y, !y->z       =>  x->z
// M3 "enemy of my friend is my enemy":     x->y, !y->z       => !x->z
// M4 "friend of my enemy is my enemy":    !x->y, y->z        => !x->z
enum class Motto { M1 = 1, M2 = 2, M3 = 3, M4 = 4 };

struct MottoProfile {
    bool m1, m2, m3, m4;
    bool all() const { return m1 && m2 && m3 && m4; }
    bool get(Motto m) const;
    friend bool operator==(const MottoProfile&, const MottoProfile&) = default;
};

// One of the 16 conventional isomorphism classes of digraph triads,
// indexed 1..16 in the standard M-A-N order
// (003, 012, 102, 021D, 021U, 021C, 111D, 111U,
//  030T, 030C, 201, 120D, 120U, 120C, 210, 300).
struct TriadClassInfo {
    int index;            // 1..16
    const char* name;     // M-A-N label
    uint8_t rep_mask;     // canonical representative, 6-bit arc mask
    int arc_count;        // 0..6
    int class_size;       // orbit size among the 64 labeled triads
};

const std::array<TriadClassInfo, 16>& triad_classes();

// Bit layout for a labeled 3-node digraph: ordered pairs (i,j), i != j,
// in lexicographic order: (0,1) (0,2) (1,0) (1,2) (2,0) (2,1) -> bits 0..5.
int arc_bit(int i, int j);
uint8_t triad_mask(const Digraph& t);  // requires 3 nodes
Digraph triad_from_mask(uint8_t mask);

// Class index 1..16 of a labeled triad (constant-time table lookup).
int classify_mask(uint8_t mask);
int classify_directed_triad(const Digraph& t);

// Edge count 0..3; the class of an undirected triad (2-edge = intransitive).
int classify_undirected_triad(const UndirectedGraph& t);

// True iff the motto's implication holds for all 6 ordered triples of
// distinct nodes of the triad.
bool motto_holds(uint8_t mask, Motto m);
bool motto_holds(const Digraph& t, Motto m);

// Profiles of the 16 canonical representatives, in class order.
std::array<MottoProfile, 16> motto_table();

// All of M1-M4; equivalent to class index 3 or 16.
bool is_balanced_triad(const Digraph& t);

// Number of ordered triples (x,y,z) in V^3 (repeats allowed) violating each
// of M1'-M4', the mottoes without the distinct-node restriction.
std::array<long long, 4> motto_prime_failures(const LoopDigraph& g);

struct LoopMottoWitness {
    Motto motto;
    std::array<int, 3> triple;
};

// When M1'-M4' all hold, the arc relation is an equivalence with at most two
// classes; otherwise reports a violating triple.
struct LoopBalanceResult {
    bool balanced;
    std::vector<std::vector<int>> classes;     // when balanced
    std::optional<LoopMottoWitness> witness;   // when not
};

LoopBalanceResult balanced_loop_digraph_structure(const LoopDigraph& g);

}  // namespace triadic
