#pragma once

#include <cstdint>
#include <vector>

#include "exact.hpp"
#include "graph.hpp"
#include "schur.hpp"
#include "walks.hpp"

namespace icm {

// Bernoulli inclusion probability min(1, phi * sqrt(log n) / (beta * sqrt(n))).
double bernoulli_probability(int n, double phi, double beta);

// Independent inclusion of every node != exclude with probability p.
std::vector<int> bernoulli_subset(int n, int exclude, double p,
                                  std::uint64_t seed);

// Horvitz-Thompson style scale-up of a Bernoulli-sampled sum.
double estimate_sum(const std::vector<double>& xs, double p);

struct FastIcmInfo {
  double beta = 0.0;
  double epsilon = 0.0;
  double p = 1.0;          // inclusion probability after clamping
  bool p_clamped = false;  // raw probability reached 1 (estimator exact in
                           // the sampling dimension; small-n regime)
  int subset_size = 0;
  int estimated = 0;       // subset nodes covered by at least one valid walk
  double p_eff = 1.0;      // p scaled by the covered fraction
  int rho = 0;
  int l = 0;
};

// Nearly-linear greedy: one Bernoulli node sample, one walk-sampling pass,
// then k iterations of candidate evaluation over the sampled nodes with
// incremental walk repair after each committed removal. The per-candidate
// score scales the sampled resistance sum by 1/p_eff.
GreedyResult fast_icm(Graph g, int v, int k, double alpha, double phi,
                      TruncationParams tp, std::uint64_t seed,
                      FastIcmInfo* info = nullptr);

// Exact effective-resistance diameter; quadratic, guarded to n <= 500.
double resistance_diameter(const Graph& g);

}  // namespace icm
