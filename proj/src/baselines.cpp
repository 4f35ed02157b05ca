#include "baselines.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <vector>

#include "rng.hpp"

namespace icm {

namespace {

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch())
      .count();
}

std::vector<char> bridge_mask(const Graph& g) {
  std::vector<char> mask(g.m_total(), 0);
  for (int b : bridges(g)) mask[b] = 1;
  return mask;
}

// Single-source shortest-path edge scores from v: each edge gets the sum
// over nodes u of (shortest v-u paths through the edge) / (all shortest
// v-u paths).
std::vector<double> sssp_edge_scores(const Graph& g, int v) {
  std::vector<double> score(g.m_total(), 0.0);
  std::vector<int> dist(g.n, -1), order;
  std::vector<double> sigma(g.n, 0.0), delta(g.n, 0.0);
  order.reserve(g.n);
  dist[v] = 0;
  sigma[v] = 1.0;
  order.push_back(v);
  for (size_t head = 0; head < order.size(); ++head) {
    int u = order[head];
    g.for_neighbors(u, [&](int w, int) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        order.push_back(w);
      }
      if (dist[w] == dist[u] + 1) sigma[w] += sigma[u];
    });
  }
  for (size_t i = order.size(); i-- > 1;) {
    int w = order[i];
    g.for_neighbors(w, [&](int u, int e) {
      if (dist[u] >= 0 && dist[u] + 1 == dist[w]) {
        double c = sigma[u] / sigma[w] * (1.0 + delta[w]);
        score[e] += c;
        delta[u] += c;
      }
    });
  }
  return score;
}

int best_scored_edge(const Graph& g, const std::vector<double>& score,
                     const std::vector<char>& is_bridge) {
  int best = -1;
  for (int e = 0; e < g.m_total(); ++e) {
    if (!g.alive(e) || is_bridge[e]) continue;
    if (best < 0 || score[e] > score[best]) best = e;
  }
  return best;
}

}  // namespace

GreedyResult random_edges(Graph g, int k, std::uint64_t seed) {
  if (k < 1) throw GraphError("random_edges: k >= 1");
  if (!is_connected(g)) throw GraphError("random_edges: disconnected graph");
  GreedyResult res;
  Rng rng(seed);
  std::vector<int> live;
  for (int it = 1; it <= k; ++it) {
    double t0 = now_ms();
    std::vector<char> is_bridge = bridge_mask(g);
    live.clear();
    for (int e = 0; e < g.m_total(); ++e)
      if (g.alive(e) && !is_bridge[e]) live.push_back(e);
    if (live.empty()) {
      res.status = RunStatus::Exhausted;
      break;
    }
    std::vector<int> all;
    for (int e = 0; e < g.m_total(); ++e)
      if (g.alive(e)) all.push_back(e);
    int pick;
    do {
      // draw over all live edges, rejecting bridges, so the accepted
      // distribution is uniform over removable edges
      pick = all[rng.bounded(all.size())];
    } while (is_bridge[pick]);
    remove_edge(g, pick);
    res.edges.push_back(pick);
    res.picks.push_back({it, pick, 0.0, false, now_ms() - t0});
  }
  if (res.edges.empty() && res.status == RunStatus::Complete)
    res.status = RunStatus::Exhausted;
  return res;
}

GreedyResult betweenness_edges(Graph g, int v, int k, bool rescore) {
  if (v < 0 || v >= g.n) throw GraphError("betweenness_edges: bad target");
  if (k < 1) throw GraphError("betweenness_edges: k >= 1");
  if (!is_connected(g)) throw GraphError("betweenness_edges: disconnected graph");
  GreedyResult res;
  std::vector<double> score = sssp_edge_scores(g, v);
  for (int it = 1; it <= k; ++it) {
    double t0 = now_ms();
    if (rescore && it > 1) score = sssp_edge_scores(g, v);
    int best = best_scored_edge(g, score, bridge_mask(g));
    if (best < 0) {
      res.status = RunStatus::Exhausted;
      break;
    }
    remove_edge(g, best);
    res.edges.push_back(best);
    res.picks.push_back({it, best, 0.0, false, now_ms() - t0});
  }
  if (res.edges.empty() && res.status == RunStatus::Complete)
    res.status = RunStatus::Exhausted;
  return res;
}

GreedyResult spanning_edges(Graph g, int k, bool rescore) {
  if (k < 1) throw GraphError("spanning_edges: k >= 1");
  if (!is_connected(g)) throw GraphError("spanning_edges: disconnected graph");
  GreedyResult res;
  PseudoinverseState state = pseudoinverse(g);
  std::vector<double> score(g.m_total(), 0.0);
  auto rescore_all = [&]() {
    for (int e = 0; e < g.m_total(); ++e) {
      if (!g.alive(e)) continue;
      auto [x, y] = g.edges[e];
      score[e] = effective_resistance(state, x, y);
    }
  };
  rescore_all();
  for (int it = 1; it <= k; ++it) {
    double t0 = now_ms();
    int best = best_scored_edge(g, score, bridge_mask(g));
    if (best < 0) {
      res.status = RunStatus::Exhausted;
      break;
    }
    if (rescore) {
      rank1_update(state, g, best);
    }
    remove_edge(g, best);
    if (rescore) rescore_all();
    res.edges.push_back(best);
    res.picks.push_back({it, best, 0.0, false, now_ms() - t0});
  }
  if (res.edges.empty() && res.status == RunStatus::Complete)
    res.status = RunStatus::Exhausted;
  return res;
}

}  // namespace icm
