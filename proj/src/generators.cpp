#include "generators.hpp"

#include <vector>

#include "rng.hpp"

namespace icm {

Graph generate_ba(int n, int m0, std::uint64_t seed) {
  if (m0 < 1) throw GraphError("generate_ba: m0 >= 1");
  if (n <= m0 + 1) throw GraphError("generate_ba: need n > m0 + 1");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_node();
  std::vector<int> endpoints;  // one entry per edge endpoint
  for (int u = 0; u <= m0; ++u)
    for (int w = u + 1; w <= m0; ++w) {
      g.add_edge(u, w);
      endpoints.push_back(u);
      endpoints.push_back(w);
    }
  Rng rng(seed);
  std::vector<int> taken(n, -1);
  std::vector<int> targets;
  for (int t = m0 + 1; t < n; ++t) {
    targets.clear();
    while (static_cast<int>(targets.size()) < m0) {
      int pick = endpoints[rng.bounded(endpoints.size())];
      if (taken[pick] == t) continue;
      taken[pick] = t;
      targets.push_back(pick);
    }
    for (int w : targets) {
      g.add_edge(t, w);
      endpoints.push_back(t);
      endpoints.push_back(w);
    }
  }
  return g;
}

Graph generate_ws(int n, int k_ring, double p, std::uint64_t seed) {
  if (k_ring < 2 || k_ring % 2 != 0 || k_ring >= n)
    throw GraphError("generate_ws: k_ring must be even, 2 <= k_ring < n");
  if (p < 0.0 || p > 1.0) throw GraphError("generate_ws: p in [0,1]");
  Graph g;
  for (int i = 0; i < n; ++i) g.add_node();
  for (int j = 1; j <= k_ring / 2; ++j)
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + j) % n);

  Rng rng(seed);
  for (int j = 1; j <= k_ring / 2; ++j)
    for (int i = 0; i < n; ++i) {
      if (rng.uniform01() >= p) continue;
      int old_w = (i + j) % n;
      // rewire (i, old_w) to a fresh endpoint; keep the edge if the node is
      // saturated
      int w = -1;
      for (int attempt = 0; attempt < 8 * n; ++attempt) {
        int cand = static_cast<int>(rng.bounded(n));
        if (cand == i || g.has_edge(i, cand)) continue;
        w = cand;
        break;
      }
      if (w < 0) continue;
      // logical removal then fresh edge keeps the count constant
      for (const auto& [nbr, e] : g.adj[i])
        if (nbr == old_w && g.alive(e)) {
          remove_edge(g, e);
          break;
        }
      g.add_edge(i, w);
    }

  NodeLabelMap tmp_in = identity_labels(n), tmp_out;
  return largest_connected_component(g, tmp_in, tmp_out);
}

}  // namespace icm
