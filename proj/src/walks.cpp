#include "walks.hpp"

#include <algorithm>
#include <cmath>

#include "rng.hpp"

namespace icm {

int max_walk_length(int m, int n, double gamma, double lambda,
                    const std::vector<int>& degrees, int v, int cap) {
  if (gamma <= 0.0 || gamma >= 1.0) throw GraphError("max_walk_length: gamma");
  if (lambda <= 0.0 || lambda >= 1.0)
    throw GraphError("max_walk_length: lambda");
  double norm_sq = 0.0;
  for (int u = 0; u < static_cast<int>(degrees.size()); ++u)
    if (u != v) norm_sq += static_cast<double>(degrees[u]) * degrees[u];
  const double ratio =
      m * gamma / (std::sqrt(static_cast<double>(n - 1)) * std::sqrt(norm_sq));
  if (ratio >= 1.0) return 1;
  int l = static_cast<int>(std::ceil(std::log(ratio) / std::log(lambda)));
  return std::clamp(l, 1, cap);
}

int walk_count(int n, double epsilon, double c) {
  if (epsilon <= 0.0) throw GraphError("walk_count: epsilon");
  if (c <= 0.0) throw GraphError("walk_count: c");
  double rho = std::ceil(c * std::log(static_cast<double>(n)) /
                         (epsilon * epsilon));
  return std::max(1, static_cast<int>(rho));
}

WalkParams resolve_walk_params(const Graph& g, int v,
                               const TruncationParams& tp) {
  WalkParams p;
  p.rho = tp.rho_override > 0 ? tp.rho_override
                              : walk_count(g.n, tp.epsilon, tp.c);
  p.l = tp.l_override > 0
            ? tp.l_override
            : max_walk_length(g.m(), g.n, tp.gamma, tp.lambda, g.degrees, v,
                              tp.l_cap);
  return p;
}

namespace {

std::uint64_t side_seed(std::uint64_t seed, int walk_id, int side,
                        std::uint32_t gen) {
  return mix_key(seed, static_cast<std::uint64_t>(walk_id),
                 static_cast<std::uint64_t>(side),
                 static_cast<std::uint64_t>(gen));
}

// Uniform live neighbor of u; returns (node, edge id).
std::pair<int, int> random_step(const Graph& g, int u, Rng& rng) {
  int pick = static_cast<int>(rng.bounded(g.degrees[u]));
  for (const auto& [w, e] : g.adj[u]) {
    if (g.removed[e]) continue;
    if (pick-- == 0) return {w, e};
  }
  throw GraphError("random_step: degree bookkeeping broken");
}

// Extends nodes/edges from its last node toward target, up to a total of
// l steps on the side. Returns true if the target was reached.
bool extend_side(const Graph& g, int target, int l, Rng& rng,
                 std::vector<int>& nodes, std::vector<int>& edges) {
  int cur = nodes.back();
  while (cur != target && static_cast<int>(nodes.size()) - 1 < l) {
    auto [nxt, e] = random_step(g, cur, rng);
    nodes.push_back(nxt);
    edges.push_back(e);
    cur = nxt;
  }
  return cur == target;
}

}  // namespace

int WalkStore::count_valid() const {
  int c = 0;
  for (const Walk& w : walks) c += w.valid();
  return c;
}

int WalkStore::count_sampled() const {
  int c = 0;
  for (const Walk& w : walks) c += !w.side_nodes[0].empty();
  return c;
}

double WalkStore::invalid_fraction() const {
  int sampled = count_sampled();
  if (sampled == 0) return 0.0;
  return 1.0 - static_cast<double>(count_valid()) / sampled;
}

namespace {

void begin_stamp(WalkStore& s) {
  ++s.stamp_epoch;
  if (s.stamp_node.empty()) {
    s.stamp_node.assign(s.node_map.size(), 0);
    s.stamp_edge.assign(s.edge_map.size(), 0);
  }
}

// Appends first-occurrence node entries and first-traversal edge entries
// for one side of a walk.
void index_side(WalkStore& s, int walk_id, int side) {
  const Walk& w = s.walks[walk_id];
  begin_stamp(s);
  const auto& nodes = w.side_nodes[side];
  const auto& edges = w.side_edges[side];
  const std::uint32_t gen = w.gen[side];
  for (int i = 0; i < static_cast<int>(nodes.size()); ++i) {
    if (s.stamp_node[nodes[i]] != s.stamp_epoch) {
      s.stamp_node[nodes[i]] = s.stamp_epoch;
      s.node_map[nodes[i]].push_back(
          {walk_id, static_cast<std::int8_t>(side), i, gen});
    }
  }
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (s.stamp_edge[edges[i]] != s.stamp_epoch) {
      s.stamp_edge[edges[i]] = s.stamp_epoch;
      s.edge_map[edges[i]].push_back(
          {walk_id, static_cast<std::int8_t>(side), i, gen});
    }
  }
}

}  // namespace

WalkStore sample_walks(const Graph& g, int v, const WalkParams& p,
                       std::uint64_t seed) {
  if (v < 0 || v >= g.n) throw GraphError("sample_walks: bad target");
  WalkStore s;
  s.target = v;
  s.rho = p.rho;
  s.l = p.l;
  s.seed = seed;
  s.walks.resize(static_cast<size_t>(g.m_total()) * p.rho);
  s.node_map.resize(g.n);
  s.edge_map.resize(g.m_total());
  for (int e = 0; e < g.m_total(); ++e) {
    if (!g.alive(e)) {
      for (int r = 0; r < p.rho; ++r) s.walks[s.walk_slot(e, r)].dead = true;
      continue;
    }
    auto [x, y] = g.edges[e];
    for (int r = 0; r < p.rho; ++r) {
      int id = s.walk_slot(e, r);
      Walk& w = s.walks[id];
      for (int side = 0; side < 2; ++side) {
        Rng rng(side_seed(seed, id, side, 0));
        w.side_nodes[side].push_back(side == 0 ? x : y);
        w.reached[side] =
            extend_side(g, v, p.l, rng, w.side_nodes[side], w.side_edges[side]);
      }
      s.edge_map[e].push_back({id, 2, 0, 0});
      index_side(s, id, 0);
      index_side(s, id, 1);
    }
  }
  return s;
}

std::optional<double> shortcut_contribution(const Walk& w, int u, int target,
                                            int rho) {
  if (!w.valid() || u == target) return std::nullopt;
  int pos[2] = {-1, -1};
  for (int side = 0; side < 2; ++side) {
    const auto& nodes = w.side_nodes[side];
    for (int i = 0; i < static_cast<int>(nodes.size()); ++i)
      if (nodes[i] == u) {
        pos[side] = i;
        break;
      }
  }
  if ((pos[0] >= 0) == (pos[1] >= 0)) return std::nullopt;
  int side = pos[0] >= 0 ? 0 : 1;
  int ltilde = pos[side] + 1 + w.steps(1 - side);
  return 1.0 / (static_cast<double>(rho) * ltilde);
}

int repair_walks(WalkStore& store, const Graph& g, int removed_edge,
                 std::uint64_t seed, const RepairHooks* hooks) {
  if (removed_edge < 0 || removed_edge >= static_cast<int>(store.edge_map.size()))
    throw GraphError("repair_walks: bad edge id");
  if (!g.removed[removed_edge])
    throw GraphError("repair_walks: edge still present in graph");

  // Snapshot the live entries; repairs append to edge_map.
  std::vector<MapEntry> affected;
  for (const MapEntry& e : store.edge_map[removed_edge])
    if (store.entry_live(e)) affected.push_back(e);
  std::stable_sort(affected.begin(), affected.end(),
                   [](const MapEntry& a, const MapEntry& b) {
                     return a.walk < b.walk;
                   });

  int changed = 0;
  size_t i = 0;
  while (i < affected.size()) {
    int id = affected[i].walk;
    size_t j = i;
    while (j < affected.size() && affected[j].walk == id) ++j;
    Walk& w = store.walks[id];
    if (hooks && hooks->before_change) hooks->before_change(id);
    bool center_gone = false;
    for (size_t t = i; t < j; ++t)
      if (affected[t].side == 2) center_gone = true;
    if (center_gone) {
      w.dead = true;
    } else {
      for (size_t t = i; t < j; ++t) {
        const MapEntry& e = affected[t];
        if (e.gen != w.gen[e.side]) continue;  // superseded within this batch
        int side = e.side;
        w.side_nodes[side].resize(e.pos + 1);
        w.side_edges[side].resize(e.pos);
        w.gen[side] += 1;
        Rng rng(side_seed(seed, id, side, w.gen[side]));
        w.reached[side] = extend_side(g, store.target, store.l, rng,
                                      w.side_nodes[side], w.side_edges[side]);
        index_side(store, id, side);
      }
    }
    if (hooks && hooks->after_change) hooks->after_change(id);
    ++changed;
    i = j;
  }
  return changed;
}

}  // namespace icm
