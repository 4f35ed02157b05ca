#pragma once

#include <cstdint>
#include <vector>

#include "exact.hpp"
#include "graph.hpp"
#include "walks.hpp"

namespace icm {

// First occurrence of a tracked node on each side of one walk; -1 = absent.
struct QOcc {
  int u;
  int p0;
  int p1;
};

struct SchurWeights {
  int target = -1;
  std::vector<double> C;        // accumulated two-terminal weight per node
  std::vector<char> in_q;
  std::vector<char> estimated;  // C[u] above noise floor
  std::vector<int> q_nodes;

  int estimated_count() const;
  // Sum of 1/C[u] over estimated nodes: the resistance-sum estimate.
  double base_sum() const;
};

// Walk store plus the per-node weights and the per-walk index of tracked
// node occurrences, with reusable candidate-evaluation scratch.
struct SchurState {
  WalkStore store;
  SchurWeights weights;
  std::vector<std::vector<QOcc>> walk_q;

  // scratch (sized lazily): per-walk stamps for candidate evaluation
  std::vector<int> wstamp;
  std::vector<int> px[2], py[2];   // first positions of candidate endpoints
  std::vector<int> h3pos[2];       // triple-graph first hits
  std::vector<std::int8_t> h3lab[2];
  std::vector<int> wlist;
  int wepoch = 0;
  // per-node quad accumulators
  std::vector<int> ustamp;
  std::vector<std::array<double, 6>> uacc;
  std::vector<int> ulist;
  int uepoch = 0;
  // per-side node stamps for rebuilding QOcc lists
  std::vector<int> nstamp;
  std::vector<int> npos;
  int nepoch = 0;
};

// Samples walks and accumulates the two-terminal weights C[u] for u in Q:
// every valid walk on which u appears on exactly one side contributes
// 1/(rho * ltilde). R_uv is then estimated by 1/C[u]; nodes with no
// coverage are flagged unestimated.
SchurState initialization(const Graph& g, int v, const std::vector<int>& Q,
                          const WalkParams& p, std::uint64_t seed);

// Removes one walk's weight contributions from C (pre-repair state).
void subtract_walk_weights(SchurState& st, int walk_id);
// Rebuilds the walk's QOcc index from its current state and re-adds its
// weight contributions.
void add_walk_weights(SchurState& st, int walk_id);

struct EvalDiagnostics {
  int fallback_quads = 0;        // quad solve lost u-v connectivity
  int negative_decrements = 0;   // sampled candidate weight fell below -1e-6
};

struct CandidateEval {
  std::vector<double> rbar;      // per edge id: estimated resistance sum after removal
  std::vector<char> is_sentinel; // bridges (exact test) get rbar 0
  EvalDiagnostics diag;
};

// Evaluates every live candidate edge e = (x, y): builds the sampled
// three-terminal graph on {v,x,y}, refines it to a four-terminal graph per
// tracked node co-occurring with x or y, applies the unit decrement on
// (x,y), and sums the updated per-node resistances. Nodes never seen with
// x or y receive the shared triple-graph increase min(dR(x,v), dR(y,v)).
// Bridges are sentineled by the exact lowpoint test, never by sampling.
CandidateEval evaluate_candidates(const Graph& g, SchurState& st);

// Sampling greedy driver: each iteration resamples walks on the current
// graph, evaluates all candidates and removes the one with the largest
// post-removal resistance sum. Tie-break: smallest edge id.
GreedyResult approxi_sc(Graph g, int v, int k, const TruncationParams& tp,
                        std::uint64_t seed);

// Two-terminal resistance on a <= 4-node nonnegative conductance matrix by
// star-mesh elimination; +inf when a and b end up disconnected. Consumes w.
double small_graph_resistance(double w[4][4], int nn, int a, int b);

}  // namespace icm
