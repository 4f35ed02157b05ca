#include "exact.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

namespace icm {

namespace {

Eigen::MatrixXd laplacian(const Graph& g) {
  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(g.n, g.n);
  for (int e = 0; e < g.m_total(); ++e) {
    if (!g.alive(e)) continue;
    auto [u, v] = g.edges[e];
    L(u, u) += 1.0;
    L(v, v) += 1.0;
    L(u, v) -= 1.0;
    L(v, u) -= 1.0;
  }
  return L;
}

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

PseudoinverseState pseudoinverse(const Graph& g) {
  if (g.n < 2) throw GraphError("pseudoinverse: need at least 2 nodes");
  if (!is_connected(g)) throw GraphError("pseudoinverse: disconnected graph");
  const double inv_n = 1.0 / g.n;
  Eigen::MatrixXd M = laplacian(g);
  M.array() += inv_n;
  Eigen::MatrixXd inv = Eigen::LLT<Eigen::MatrixXd>(M).solve(
      Eigen::MatrixXd::Identity(g.n, g.n));
  inv.array() -= inv_n;
  PseudoinverseState s;
  s.Ldag = 0.5 * (inv + inv.transpose());
  s.trace = s.Ldag.trace();
  return s;
}

double effective_resistance(const PseudoinverseState& s, int x, int y) {
  if (x == y) throw GraphError("effective_resistance: x == y");
  return s.Ldag(x, x) + s.Ldag(y, y) - 2.0 * s.Ldag(x, y);
}

double resistance_distance(const PseudoinverseState& s, int v) {
  return s.n() * s.Ldag(v, v) + s.trace;
}

double information_centrality(const PseudoinverseState& s, int v) {
  return s.n() / resistance_distance(s, v);
}

std::optional<double> marginal_gain(const PseudoinverseState& s, const Graph& g,
                                    int edge_id, int v) {
  auto [x, y] = g.edges[edge_id];
  const Eigen::MatrixXd& M = s.Ldag;
  const int n = s.n();
  Eigen::VectorXd w = M.col(x) - M.col(y);
  const double a = 1.0 - (w(x) - w(y));
  if (a <= kBridgeTol) return std::nullopt;
  const double b = w.squaredNorm();
  const double c = w(v) * w(v);
  const double Lvv = M(v, v);
  const double tr = s.trace;
  const double denom =
      (n * a * Lvv + n * c + a * tr + b) * (n * Lvv + tr);
  return -(n * b + n * n * c) / denom;
}

void rank1_update(PseudoinverseState& s, const Graph& g, int edge_id) {
  auto [x, y] = g.edges[edge_id];
  Eigen::VectorXd w = s.Ldag.col(x) - s.Ldag.col(y);
  const double a = 1.0 - (w(x) - w(y));
  if (a <= kBridgeTol) throw GraphError("rank1_update: bridge edge");
  s.Ldag.noalias() += (w * w.transpose()) / a;
  s.trace += w.squaredNorm() / a;
}

GreedyResult exact_sm(Graph g, int v, int k) {
  if (v < 0 || v >= g.n) throw GraphError("exact_sm: bad target");
  if (k < 1 || k >= g.m()) throw GraphError("exact_sm: need 1 <= k < m");
  if (!is_connected(g)) throw GraphError("exact_sm: disconnected graph");

  GreedyResult res;
  PseudoinverseState state = pseudoinverse(g);
  for (int it = 1; it <= k; ++it) {
    double t0 = now_ms();
    std::vector<char> is_bridge(g.m_total(), 0);
    for (int b : bridges(g)) is_bridge[b] = 1;
    int best_edge = -1;
    double best_gain = 0.0;
    for (int e = 0; e < g.m_total(); ++e) {
      if (!g.alive(e) || is_bridge[e]) continue;
      auto gain = marginal_gain(state, g, e, v);
      if (!gain) continue;
      if (best_edge < 0 || *gain < best_gain) {
        best_edge = e;
        best_gain = *gain;
      }
    }
    if (best_edge < 0) {
      res.status = RunStatus::Exhausted;
      break;
    }
    rank1_update(state, g, best_edge);
    remove_edge(g, best_edge);
    res.edges.push_back(best_edge);
    res.picks.push_back({it, best_edge, information_centrality(state, v), true,
                         now_ms() - t0});
  }
  if (res.edges.empty() && res.status == RunStatus::Complete)
    res.status = RunStatus::Exhausted;
  return res;
}

BruteResult brute_force(const Graph& g, int v, int k, std::uint64_t budget) {
  if (v < 0 || v >= g.n) throw GraphError("brute_force: bad target");
  if (k < 1 || k >= g.m()) throw GraphError("brute_force: need 1 <= k < m");
  std::vector<int> live;
  for (int e = 0; e < g.m_total(); ++e)
    if (g.alive(e)) live.push_back(e);
  const int m = static_cast<int>(live.size());

  // C(m, k) against the budget, saturating.
  long double subsets = 1.0L;
  for (int i = 0; i < k; ++i) subsets = subsets * (m - i) / (i + 1);
  if (subsets > static_cast<long double>(budget))
    throw BudgetError("brute_force: subset count exceeds budget");

  BruteResult res;
  res.status = RunStatus::Infeasible;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  Graph work = g;
  for (;;) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      remove_edge(work, live[idx[i]]);
      if (!is_connected(work)) ok = false;
    }
    if (ok) {
      double centrality = information_centrality(pseudoinverse(work), v);
      if (res.status == RunStatus::Infeasible || centrality < res.centrality) {
        res.status = RunStatus::Complete;
        res.centrality = centrality;
        res.edges.clear();
        for (int i : idx) res.edges.push_back(live[i]);
      }
    }
    for (int i = 0; i < k; ++i)
      if (work.removed[live[idx[i]]]) {
        work.removed[live[idx[i]]] = 0;
        auto [a, b] = work.edges[live[idx[i]]];
        ++work.degrees[a];
        ++work.degrees[b];
        ++work.m_alive;
      }
    // next lexicographic combination
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return res;
}

std::optional<SupermodularityWitness> find_nonsupermodular_witness() {
  const int n = 5;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) pairs.emplace_back(u, w);
  const int np = static_cast<int>(pairs.size());

  for (int mask = 0; mask < (1 << np); ++mask) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_node();
    for (int b = 0; b < np; ++b)
      if (mask & (1 << b)) g.add_edge(pairs[b].first, pairs[b].second);
    if (g.m() < 2 || !is_connected(g)) continue;

    PseudoinverseState base = pseudoinverse(g);
    for (int v = 0; v < n; ++v) {
      double f0 = information_centrality(base, v);
      for (int e1 = 0; e1 < g.m_total(); ++e1) {
        Graph g1 = g;
        remove_edge(g1, e1);
        if (!is_connected(g1)) continue;
        double f1 = information_centrality(pseudoinverse(g1), v);
        for (int e2 = 0; e2 < g.m_total(); ++e2) {
          if (e2 == e1) continue;
          Graph g2 = g;
          remove_edge(g2, e2);
          if (!is_connected(g2)) continue;
          Graph g12 = g1;
          remove_edge(g12, e2);
          if (!is_connected(g12)) continue;
          double f2 = information_centrality(pseudoinverse(g2), v);
          double f12 = information_centrality(pseudoinverse(g12), v);
          // supermodular would require f2 - f0 <= f12 - f1
          double margin = (f2 - f0) - (f12 - f1);
          if (margin > 1e-9) {
            SupermodularityWitness w{g, v, e1, e2, margin};
            return w;
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace icm
