#include "schur.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <limits>

#include "rng.hpp"

namespace icm {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kWeightTol = 1e-12;

// pair slot among nodes [0=u, 1=v, 2=x, 3=y]
inline int slot(int i, int j) {
  static constexpr int table[4][4] = {{-1, 0, 1, 2},
                                      {0, -1, 3, 4},
                                      {1, 3, -1, 5},
                                      {2, 4, 5, -1}};
  return table[i][j];
}

double now_ms() {
  using namespace std::chrono;
  return duration<double, std::milli>(steady_clock::now().time_since_epoch())
      .count();
}

}  // namespace

int SchurWeights::estimated_count() const {
  int c = 0;
  for (int u : q_nodes) c += estimated[u];
  return c;
}

double SchurWeights::base_sum() const {
  double s = 0.0;
  for (int u : q_nodes)
    if (estimated[u]) s += 1.0 / C[u];
  return s;
}

namespace {

void refresh_estimated(SchurWeights& w) {
  for (int u : w.q_nodes) w.estimated[u] = w.C[u] > kWeightTol;
}

}  // namespace

void add_walk_weights(SchurState& st, int walk_id) {
  const Walk& w = st.store.walks[walk_id];
  auto& wq = st.walk_q[walk_id];
  wq.clear();
  if (st.nstamp.empty()) {
    st.nstamp.assign(st.weights.in_q.size(), 0);
    st.npos.assign(st.weights.in_q.size(), 0);
  }
  ++st.nepoch;
  const auto& s0 = w.side_nodes[0];
  for (int i = 0; i < static_cast<int>(s0.size()); ++i) {
    int u = s0[i];
    if (!st.weights.in_q[u] || st.nstamp[u] == st.nepoch) continue;
    st.nstamp[u] = st.nepoch;
    st.npos[u] = static_cast<int>(wq.size());
    wq.push_back({u, i, -1});
  }
  const auto& s1 = w.side_nodes[1];
  for (int i = 0; i < static_cast<int>(s1.size()); ++i) {
    int u = s1[i];
    if (!st.weights.in_q[u]) continue;
    if (st.nstamp[u] == st.nepoch) {
      QOcc& q = wq[st.npos[u]];
      if (q.p1 < 0) q.p1 = i;
    } else {
      st.nstamp[u] = st.nepoch;
      st.npos[u] = static_cast<int>(wq.size());
      wq.push_back({u, -1, i});
    }
  }
  if (!w.valid()) return;
  const double inv_rho = 1.0 / st.store.rho;
  for (const QOcc& q : wq) {
    if ((q.p0 >= 0) == (q.p1 >= 0)) continue;
    int side = q.p0 >= 0 ? 0 : 1;
    int p = side == 0 ? q.p0 : q.p1;
    st.weights.C[q.u] += inv_rho / (p + 1 + w.steps(1 - side));
  }
}

void subtract_walk_weights(SchurState& st, int walk_id) {
  const Walk& w = st.store.walks[walk_id];
  if (!w.valid()) return;
  const double inv_rho = 1.0 / st.store.rho;
  for (const QOcc& q : st.walk_q[walk_id]) {
    if ((q.p0 >= 0) == (q.p1 >= 0)) continue;
    int side = q.p0 >= 0 ? 0 : 1;
    int p = side == 0 ? q.p0 : q.p1;
    st.weights.C[q.u] -= inv_rho / (p + 1 + w.steps(1 - side));
    if (st.weights.C[q.u] < 0.0) st.weights.C[q.u] = 0.0;
  }
}

SchurState initialization(const Graph& g, int v, const std::vector<int>& Q,
                          const WalkParams& p, std::uint64_t seed) {
  if (Q.empty()) throw GraphError("initialization: empty node set");
  SchurState st;
  st.store = sample_walks(g, v, p, seed);
  st.weights.target = v;
  st.weights.C.assign(g.n, 0.0);
  st.weights.in_q.assign(g.n, 0);
  st.weights.estimated.assign(g.n, 0);
  for (int u : Q) {
    if (u == v) continue;
    if (u < 0 || u >= g.n) throw GraphError("initialization: bad node in Q");
    if (!st.weights.in_q[u]) {
      st.weights.in_q[u] = 1;
      st.weights.q_nodes.push_back(u);
    }
  }
  std::sort(st.weights.q_nodes.begin(), st.weights.q_nodes.end());
  st.walk_q.resize(st.store.walks.size());
  for (int id = 0; id < static_cast<int>(st.store.walks.size()); ++id)
    if (!st.store.walks[id].side_nodes[0].empty()) add_walk_weights(st, id);
  refresh_estimated(st.weights);
  return st;
}

double small_graph_resistance(double w[4][4], int nn, int a, int b) {
  for (int z = 0; z < nn; ++z) {
    if (z == a || z == b) continue;
    double s = 0.0;
    for (int i = 0; i < nn; ++i) s += w[z][i];
    if (s <= kWeightTol) {
      for (int i = 0; i < nn; ++i) w[z][i] = w[i][z] = 0.0;
      continue;
    }
    for (int i = 0; i < nn; ++i) {
      if (i == z || w[z][i] <= 0.0) continue;
      for (int j = i + 1; j < nn; ++j) {
        if (j == z || w[z][j] <= 0.0) continue;
        double add = w[z][i] * w[z][j] / s;
        w[i][j] += add;
        w[j][i] += add;
      }
    }
    for (int i = 0; i < nn; ++i) w[z][i] = w[i][z] = 0.0;
  }
  if (w[a][b] <= kWeightTol) return kInf;
  return 1.0 / w[a][b];
}

namespace {

struct EvalScratch {
  SchurState& st;
  explicit EvalScratch(SchurState& s, int nwalks, int n) : st(s) {
    if (static_cast<int>(st.wstamp.size()) != nwalks) {
      st.wstamp.assign(nwalks, 0);
      for (int s2 = 0; s2 < 2; ++s2) {
        st.px[s2].assign(nwalks, 0);
        st.py[s2].assign(nwalks, 0);
        st.h3pos[s2].assign(nwalks, 0);
        st.h3lab[s2].assign(nwalks, 0);
      }
    }
    if (static_cast<int>(st.ustamp.size()) != n) {
      st.ustamp.assign(n, 0);
      st.uacc.assign(n, {});
    }
  }
};

}  // namespace

CandidateEval evaluate_candidates(const Graph& g, SchurState& st) {
  const int v = st.weights.target;
  const int nwalks = static_cast<int>(st.store.walks.size());
  const double inv_rho = 1.0 / st.store.rho;
  refresh_estimated(st.weights);
  EvalScratch scratch(st, nwalks, g.n);

  CandidateEval ev;
  ev.rbar.assign(g.m_total(), -1.0);
  ev.is_sentinel.assign(g.m_total(), 0);
  std::vector<char> is_bridge(g.m_total(), 0);
  for (int b : bridges(g)) is_bridge[b] = 1;

  const double s_base = st.weights.base_sum();
  const int est_total = st.weights.estimated_count();

  for (int e = 0; e < g.m_total(); ++e) {
    if (!g.alive(e)) continue;
    if (is_bridge[e]) {
      ev.rbar[e] = 0.0;
      ev.is_sentinel[e] = 1;
      continue;
    }
    auto [ex, ey] = g.edges[e];
    const int ix = ex == v ? 1 : 2;
    const int iy = ey == v ? 1 : 3;

    ++st.wepoch;
    st.wlist.clear();
    auto touch_walk = [&](int wid) {
      if (st.wstamp[wid] != st.wepoch) {
        st.wstamp[wid] = st.wepoch;
        st.wlist.push_back(wid);
        st.px[0][wid] = st.px[1][wid] = INT32_MAX;
        st.py[0][wid] = st.py[1][wid] = INT32_MAX;
      }
    };
    if (ix == 2)
      for (const MapEntry& en : st.store.node_map[ex]) {
        if (!st.store.entry_live(en)) continue;
        touch_walk(en.walk);
        st.px[en.side][en.walk] = en.pos;
      }
    if (iy == 3)
      for (const MapEntry& en : st.store.node_map[ey]) {
        if (!st.store.entry_live(en)) continue;
        touch_walk(en.walk);
        st.py[en.side][en.walk] = en.pos;
      }

    // three-terminal graph on {v, x, y}
    std::array<double, 6> w3{};
    for (int wid : st.wlist) {
      const Walk& w = st.store.walks[wid];
      if (!w.valid()) continue;
      for (int side = 0; side < 2; ++side) {
        int h = w.steps(side);
        std::int8_t lab = 1;
        if (ix == 2 && st.px[side][wid] < h) {
          h = st.px[side][wid];
          lab = 2;
        }
        if (iy == 3 && st.py[side][wid] < h) {
          h = st.py[side][wid];
          lab = 3;
        }
        st.h3pos[side][wid] = h;
        st.h3lab[side][wid] = lab;
      }
      if (st.h3lab[0][wid] != st.h3lab[1][wid])
        w3[slot(st.h3lab[0][wid], st.h3lab[1][wid])] +=
            inv_rho / (st.h3pos[0][wid] + 1 + st.h3pos[1][wid]);
    }

    // four-terminal refinements per co-occurring tracked node
    ++st.uepoch;
    st.ulist.clear();
    for (int wid : st.wlist) {
      const Walk& w = st.store.walks[wid];
      if (!w.valid()) continue;
      const int h30 = st.h3pos[0][wid], h31 = st.h3pos[1][wid];
      const std::int8_t l30 = st.h3lab[0][wid], l31 = st.h3lab[1][wid];
      const double t3 = l30 != l31 ? inv_rho / (h30 + 1 + h31) : 0.0;
      for (const QOcc& q : st.walk_q[wid]) {
        if (q.u == ex || q.u == ey) continue;
        if (!st.weights.estimated[q.u]) continue;
        if (st.ustamp[q.u] != st.uepoch) {
          st.ustamp[q.u] = st.uepoch;
          st.uacc[q.u] = {};
          st.ulist.push_back(q.u);
        }
        auto& acc = st.uacc[q.u];
        int h0 = h30, h1 = h31;
        std::int8_t l0 = l30, l1 = l31;
        if (q.p0 >= 0 && q.p0 < h0) {
          h0 = q.p0;
          l0 = 0;
        }
        if (q.p1 >= 0 && q.p1 < h1) {
          h1 = q.p1;
          l1 = 0;
        }
        if (l0 != l1) acc[slot(l0, l1)] += inv_rho / (h0 + 1 + h1);
        if (t3 != 0.0) acc[slot(l30, l31)] -= t3;
        if ((q.p0 >= 0) != (q.p1 >= 0)) {
          int side = q.p0 >= 0 ? 0 : 1;
          int p = side == 0 ? q.p0 : q.p1;
          acc[0] -= inv_rho / (p + 1 + w.steps(1 - side));
        }
      }
    }

    const int decslot = slot(std::min(ix, iy), std::max(ix, iy));
    std::array<double, 6> w3dec = w3;
    w3dec[decslot] -= 1.0;
    if (w3dec[decslot] < -1e-6) ++ev.diag.negative_decrements;
    if (w3dec[decslot] < 0.0) w3dec[decslot] = 0.0;

    auto triple_res = [&](const std::array<double, 6>& wt, int terminal) {
      double W[4][4] = {};
      W[1][2] = W[2][1] = wt[3];
      W[1][3] = W[3][1] = wt[4];
      W[2][3] = W[3][2] = wt[5];
      return small_graph_resistance(W, 4, terminal, 1);
    };
    double dx = 0.0, dy = 0.0;
    if (ix == 2) {
      double before = triple_res(w3, 2), after = triple_res(w3dec, 2);
      if (std::isfinite(before) && std::isfinite(after))
        dx = std::max(0.0, after - before);
    }
    if (iy == 3) {
      double before = triple_res(w3, 3), after = triple_res(w3dec, 3);
      if (std::isfinite(before) && std::isfinite(after))
        dy = std::max(0.0, after - before);
    }
    const double d_shared = std::min(dx, dy);

    double rbar = s_base;
    int covered = 0;
    for (int u : st.ulist) {
      const auto& acc = st.uacc[u];
      double W[4][4] = {};
      auto put = [&](int i, int j, double val) {
        if (val < 0.0) val = 0.0;
        W[i][j] = W[j][i] = val;
      };
      double pair01 = acc[0] + st.weights.C[u];
      double pair12 = acc[3] + w3[3];
      double pair13 = acc[4] + w3[4];
      double pair23 = acc[5] + w3[5];
      double pairs[6] = {pair01, acc[1], acc[2], pair12, pair13, pair23};
      pairs[decslot] -= 1.0;
      put(0, 1, pairs[0]);
      put(0, 2, pairs[1]);
      put(0, 3, pairs[2]);
      put(1, 2, pairs[3]);
      put(1, 3, pairs[4]);
      put(2, 3, pairs[5]);
      double r = small_graph_resistance(W, 4, 0, 1);
      if (!std::isfinite(r)) {
        ++ev.diag.fallback_quads;
        r = 1.0 / st.weights.C[u];
      }
      rbar += r - 1.0 / st.weights.C[u];
      ++covered;
    }
    if (ix == 2 && st.weights.in_q[ex] && st.weights.estimated[ex]) {
      rbar += dx;
      ++covered;
    }
    if (iy == 3 && st.weights.in_q[ey] && st.weights.estimated[ey]) {
      rbar += dy;
      ++covered;
    }
    rbar += (est_total - covered) * d_shared;
    ev.rbar[e] = rbar;
  }
  return ev;
}

GreedyResult approxi_sc(Graph g, int v, int k, const TruncationParams& tp,
                        std::uint64_t seed) {
  if (v < 0 || v >= g.n) throw GraphError("approxi_sc: bad target");
  if (k < 1 || k >= g.m()) throw GraphError("approxi_sc: need 1 <= k < m");
  if (!is_connected(g)) throw GraphError("approxi_sc: disconnected graph");

  std::vector<int> q;
  for (int u = 0; u < g.n; ++u)
    if (u != v) q.push_back(u);

  GreedyResult res;
  for (int it = 1; it <= k; ++it) {
    double t0 = now_ms();
    WalkParams wp = resolve_walk_params(g, v, tp);
    SchurState st = initialization(g, v, q, wp, mix_key(seed, it));
    CandidateEval ev = evaluate_candidates(g, st);
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
    res.edges.push_back(best);
    res.picks.push_back(
        {it, best, g.n / ev.rbar[best], false, now_ms() - t0});
  }
  if (res.edges.empty() && res.status == RunStatus::Complete)
    res.status = RunStatus::Exhausted;
  return res;
}

}  // namespace icm
