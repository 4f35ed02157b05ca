#pragma once

#include <cstdint>

#include "graph.hpp"

namespace icm {

// Preferential attachment: seed clique on m0+1 nodes, then each new node
// attaches to m0 distinct existing nodes chosen proportionally to degree.
// Always connected; m = C(m0+1, 2) + (n - m0 - 1) * m0.
Graph generate_ba(int n, int m0, std::uint64_t seed);

// Ring lattice with k_ring neighbors per node, each edge rewired with
// probability p (no duplicates or self-loops), then reduced to its largest
// connected component.
Graph generate_ws(int n, int k_ring, double p, std::uint64_t seed);

}  // namespace icm
