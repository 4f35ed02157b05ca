#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "graph.hpp"

namespace icm {

struct TruncationParams {
  double gamma = 1e-3;    // invalid-walk ratio target
  double lambda = 0.95;   // spectral-radius estimate
  double epsilon = 0.1;   // approximation parameter
  double c = 0.25;        // replicate-count constant in rho = c ln(n)/eps^2
  int l_cap = 10000;      // hard cap on the side-length budget
  int rho_override = 0;   // > 0 forces the replicate count
  int l_override = 0;     // > 0 forces the side-length budget
  int resample_every = 0; // > 0: rebuild walks from scratch every r removals
};

// Side-length budget so the expected invalid-walk ratio stays below gamma:
// ceil(log(m*gamma / (sqrt(n-1) * ||d_{-v}||)) / log(lambda)), clamped to
// [1, cap].
int max_walk_length(int m, int n, double gamma, double lambda,
                    const std::vector<int>& degrees, int v, int cap = 10000);

// Replicates per edge: max(1, ceil(c * ln(n) / eps^2)).
int walk_count(int n, double epsilon, double c);

struct WalkParams {
  int rho = 1;
  int l = 1;
};

WalkParams resolve_walk_params(const Graph& g, int v,
                               const TruncationParams& tp);

// One sampled walk: two truncated sides rooted at the endpoints of the
// center edge, each walking toward the target. side_nodes[s] starts at the
// endpoint itself and ends at the target when reached[s].
struct Walk {
  std::array<std::vector<int>, 2> side_nodes;
  std::array<std::vector<int>, 2> side_edges;  // edge ids between consecutive nodes
  std::array<char, 2> reached = {0, 0};
  std::array<std::uint32_t, 2> gen = {0, 0};   // bumped on each side repair
  bool dead = false;                           // center edge removed
  bool valid() const { return !dead && reached[0] && reached[1]; }
  int steps(int side) const {
    return static_cast<int>(side_nodes[side].size()) - 1;
  }
};

// Index entry into a walk. side 0/1 are walk sides; side 2 marks the center
// edge (edge map only, pos 0). Entries whose gen no longer matches the
// walk's side gen are stale and must be skipped.
struct MapEntry {
  int walk;
  std::int8_t side;
  int pos;  // node map: first occurrence index; edge map: index before traversal
  std::uint32_t gen;
};

struct WalkStore {
  int target = -1;
  int rho = 0;
  int l = 0;
  std::uint64_t seed = 0;
  std::vector<Walk> walks;  // slot edge_id * rho + replicate
  std::vector<std::vector<MapEntry>> node_map;  // per node
  std::vector<std::vector<MapEntry>> edge_map;  // per edge

  int walk_slot(int edge_id, int replicate) const {
    return edge_id * rho + replicate;
  }
  bool entry_live(const MapEntry& e) const {
    const Walk& w = walks[e.walk];
    if (w.dead) return false;
    if (e.side == 2) return true;
    return e.gen == w.gen[e.side];
  }
  int count_valid() const;
  int count_sampled() const;  // slots whose center edge existed at sampling
  double invalid_fraction() const;

  // scratch for first-occurrence stamping
  std::vector<int> stamp_node, stamp_edge;
  int stamp_epoch = 0;
};

// Samples rho walk pairs per live edge. Walk randomness is a pure function
// of (seed, edge id, replicate, side, generation); resampling with the same
// arguments reproduces the store bit for bit.
WalkStore sample_walks(const Graph& g, int v, const WalkParams& p,
                       std::uint64_t seed);

// Weight a single walk contributes to the two-terminal estimate between u
// and the target: 1/(rho * ltilde) when u lies on exactly one side, where
// ltilde = first position of u on its side + 1 + steps of the other side.
std::optional<double> shortcut_contribution(const Walk& w, int u, int target,
                                            int rho);

struct RepairHooks {
  // before_change(walk id): walk still in pre-repair state.
  std::function<void(int)> before_change;
  // after_change(walk id): walk in post-repair state.
  std::function<void(int)> after_change;
};

// Repairs the store after edge removal: walks whose center edge was removed
// die; every side that traversed the edge is cut right before its first
// traversal and re-extended on the updated graph within the original length
// budget. Untouched walks are bit-identical. Returns the number of walks
// changed.
int repair_walks(WalkStore& store, const Graph& g, int removed_edge,
                 std::uint64_t seed, const RepairHooks* hooks = nullptr);

}  // namespace icm
