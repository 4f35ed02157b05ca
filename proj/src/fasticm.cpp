#include "fasticm.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "rng.hpp"

namespace icm {

namespace {

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

double bernoulli_probability(int n, double phi, double beta) {
  if (n < 2) throw GraphError("bernoulli_probability: n < 2");
  if (phi <= 0.0 || beta <= 0.0)
    throw GraphError("bernoulli_probability: phi and beta must be positive");
  double p = phi * std::sqrt(std::log(static_cast<double>(n))) /
             (beta * std::sqrt(static_cast<double>(n)));
  return std::min(1.0, p);
}

std::vector<int> bernoulli_subset(int n, int exclude, double p,
                                  std::uint64_t seed) {
  if (p <= 0.0 || p > 1.0) throw GraphError("bernoulli_subset: bad p");
  std::vector<int> out;
  for (int u = 0; u < n; ++u) {
    if (u == exclude) continue;
    Rng rng(mix_key(seed, static_cast<std::uint64_t>(u)));
    if (p >= 1.0 || rng.uniform01() < p) out.push_back(u);
  }
  return out;
}

double estimate_sum(const std::vector<double>& xs, double p) {
  if (p <= 0.0) throw GraphError("estimate_sum: p must be positive");
  double s = 0.0;
  for (double x : xs) s += x;
  return s / p;
}

double resistance_diameter(const Graph& g) {
  if (g.n > 500) throw GraphError("resistance_diameter: guarded to n <= 500");
  PseudoinverseState s = pseudoinverse(g);
  double best = 0.0;
  for (int u = 0; u < g.n; ++u)
    for (int w = u + 1; w < g.n; ++w)
      best = std::max(best, effective_resistance(s, u, w));
  return best;
}

GreedyResult fast_icm(Graph g, int v, int k, double alpha, double phi,
                      TruncationParams tp, std::uint64_t seed,
                      FastIcmInfo* info) {
  if (v < 0 || v >= g.n) throw GraphError("fast_icm: bad target");
  if (k < 1 || k >= g.m()) throw GraphError("fast_icm: need 1 <= k < m");
  if (alpha <= 0.0 || alpha >= 1.0) throw GraphError("fast_icm: alpha in (0,1)");
  if (phi < 1.0) throw GraphError("fast_icm: phi >= 1");
  if (!is_connected(g)) throw GraphError("fast_icm: disconnected graph");

  const double beta = alpha / 2.0;
  tp.epsilon = alpha / (2.0 * phi);
  double p_raw = phi * std::sqrt(std::log(static_cast<double>(g.n))) /
                 (beta * std::sqrt(static_cast<double>(g.n)));
  const double p = std::min(1.0, p_raw);
  std::vector<int> subset =
      bernoulli_subset(g.n, v, p, mix_key(seed, 0xb5ULL));
  if (subset.empty()) throw GraphError("fast_icm: empty node sample");

  WalkParams wp = resolve_walk_params(g, v, tp);
  SchurState st = initialization(g, v, subset, wp, mix_key(seed, 1));

  FastIcmInfo local;
  local.beta = beta;
  local.epsilon = tp.epsilon;
  local.p = p;
  local.p_clamped = p_raw >= 1.0;
  local.subset_size = static_cast<int>(st.weights.q_nodes.size());
  local.rho = wp.rho;
  local.l = wp.l;

  GreedyResult res;
  for (int it = 1; it <= k; ++it) {
    double t0 = now_ms();
    CandidateEval ev = evaluate_candidates(g, st);
    int est = st.weights.estimated_count();
    double p_eff = p * est / std::max(1, local.subset_size);
    local.estimated = est;
    local.p_eff = p_eff;
    int best = -1;
    for (int e = 0; e < g.m_total(); ++e) {
      if (!g.alive(e) || ev.is_sentinel[e] || ev.rbar[e] <= 0.0) continue;
      if (best < 0 || ev.rbar[e] > ev.rbar[best]) best = e;
    }
    if (best < 0) {
      res.status = RunStatus::Exhausted;
      break;
    }
    remove_edge(g, best);
    if (tp.resample_every > 0 && it % tp.resample_every == 0) {
      wp = resolve_walk_params(g, v, tp);
      st = initialization(g, v, subset, wp, mix_key(seed, 1 + it));
    } else {
      RepairHooks hooks;
      hooks.before_change = [&st](int wid) { subtract_walk_weights(st, wid); };
      hooks.after_change = [&st](int wid) { add_walk_weights(st, wid); };
      repair_walks(st.store, g, best, mix_key(seed, 0x9eULL, it), &hooks);
    }
    res.edges.push_back(best);
    double rhat = p_eff > 0.0 ? ev.rbar[best] / p_eff : ev.rbar[best];
    res.picks.push_back({it, best, g.n / rhat, false, now_ms() - t0});
  }
  if (res.edges.empty() && res.status == RunStatus::Complete)
    res.status = RunStatus::Exhausted;
  if (info) *info = local;
  return res;
}

}  // namespace icm
