#pragma once

#include <array>

#include "triadic/graph.hpp"

namespace triadic {

// Zachary's karate club: 34 members, 78 friendship edges, recorded shortly
// before the club split into two factions.
const UndirectedGraph& karate_graph();

// Post-split faction per node (0-based index): 1 = the instructor's group,
// 2 = the president's group.
const std::array<int, 34>& karate_factions();

std::string karate_edge_list();

}  // namespace triadic
