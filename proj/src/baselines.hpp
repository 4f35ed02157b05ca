#pragma once

#include <cstdint>

#include "exact.hpp"
#include "graph.hpp"

namespace icm {

// k uniformly chosen non-bridge edges, removed sequentially; picks that
// land on a current bridge are redrawn.
GreedyResult random_edges(Graph g, int k, std::uint64_t seed);

// Scores every edge by the fraction of shortest paths from v to each node
// that pass through it (single-source Brandes accumulation). Selects the
// top-scoring non-bridge edge; with rescore, scores are recomputed on the
// updated graph after each removal, otherwise the initial scores are kept.
GreedyResult betweenness_edges(Graph g, int v, int k, bool rescore = true);

// Scores every edge by its effective resistance (equal to the fraction of
// spanning trees containing it). Same selection discipline as above;
// rescoring uses rank-1 pseudoinverse updates.
GreedyResult spanning_edges(Graph g, int k, bool rescore = true);

}  // namespace icm
