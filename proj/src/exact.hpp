#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"

namespace icm {

// Dense Moore-Penrose pseudoinverse of the Laplacian plus cached trace.
struct PseudoinverseState {
  Eigen::MatrixXd Ldag;
  double trace = 0.0;
  int n() const { return static_cast<int>(Ldag.rows()); }
};

inline constexpr double kBridgeTol = 1e-9;

// Exhaustive-search work limit exceeded.
class BudgetError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Built via (L + J/n)^-1 - J/n with a dense symmetric solve.
// Throws on disconnected input or n < 2.
PseudoinverseState pseudoinverse(const Graph& g);

double effective_resistance(const PseudoinverseState& s, int x, int y);

// n * Ldag[v][v] + trace; cross-checked against the pairwise sum in tests.
double resistance_distance(const PseudoinverseState& s, int v);

double information_centrality(const PseudoinverseState& s, int v);

// Closed-form change of information centrality of v if edge e were removed.
// Bridges (1 - R_e <= kBridgeTol) yield nullopt, the caller's "gain 0".
std::optional<double> marginal_gain(const PseudoinverseState& s, const Graph& g,
                                    int edge_id, int v);

// Rank-1 update of the pseudoinverse after removing a non-bridge edge.
// Throws if the edge is a bridge.
void rank1_update(PseudoinverseState& s, const Graph& g, int edge_id);

enum class RunStatus { Complete, Exhausted, Infeasible };

struct IterationPick {
  int iteration = 0;       // 1-based
  int edge_id = -1;
  double value = 0.0;      // information centrality of v after the removal
  bool value_exact = true; // false when the value is an estimate
  double elapsed_ms = 0.0;
};

struct GreedyResult {
  std::vector<int> edges;
  std::vector<IterationPick> picks;
  RunStatus status = RunStatus::Complete;
};

// Greedy exact minimizer: k rounds of best marginal gain with a rank-1
// update after each committed removal. Tie-break: smallest edge id.
// Stops early (status Exhausted) when only bridges remain.
GreedyResult exact_sm(Graph g, int v, int k);

struct BruteResult {
  std::vector<int> edges;       // sorted edge ids of the optimal subset
  double centrality = 0.0;      // I_v on the optimal subgraph
  RunStatus status = RunStatus::Complete;
};

// Exhaustive minimum over all connectivity-preserving k-subsets.
// Ties broken lexicographically by sorted edge ids. Throws if C(m,k)
// exceeds the budget.
BruteResult brute_force(const Graph& g, int v, int k,
                        std::uint64_t budget = 1000000);

struct SupermodularityWitness {
  Graph g;
  int v = 0;
  int e1 = 0;  // H = {e1}
  int e2 = 0;  // tested edge
  double margin = 0.0;
};

// Searches connected 5-node graphs for a configuration violating
// supermodularity of F(P) = I_v after removing P, i.e. a pair with
// F({e2}) - F({}) > F({e1,e2}) - F({e1}).
std::optional<SupermodularityWitness> find_nonsupermodular_witness();

}  // namespace icm
