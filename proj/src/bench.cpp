#include "bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>
#include <utility>

#include "baselines.hpp"
#include "exact.hpp"
#include "fasticm.hpp"
#include "generators.hpp"
#include "rng.hpp"
#include "schur.hpp"

namespace icm {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

std::string fmt_g(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

Graph prepare_graph(const ExperimentConfig& cfg, NodeLabelMap& labels) {
  Graph raw;
  NodeLabelMap raw_labels;
  if (!cfg.input.empty()) {
    raw = load_edge_list_file(cfg.input, raw_labels);
  } else if (cfg.gen == "ba") {
    raw = generate_ba(cfg.gen_n, cfg.gen_m0, cfg.seed);
    raw_labels = identity_labels(raw.n);
  } else {
    raw = generate_ws(cfg.gen_n, cfg.gen_k_ring, cfg.gen_p, cfg.seed);
    raw_labels = identity_labels(raw.n);
  }
  return largest_connected_component(raw, raw_labels, labels);
}

std::vector<int> resolve_targets(const Graph& g, const NodeLabelMap& labels,
                                 const std::string& spec, std::uint64_t seed) {
  std::vector<int> out;
  if (spec.rfind("random:", 0) == 0) {
    int want = 0;
    try {
      size_t pos = 0;
      want = std::stoi(spec.substr(7), &pos);
      if (pos != spec.size() - 7) throw std::invalid_argument(spec);
    } catch (const std::exception&) {
      throw GraphError("targets: bad count in '" + spec + "'");
    }
    if (want < 1) throw GraphError("targets: count >= 1");
    // Degree-1 nodes sit behind a bridge that no algorithm may remove, so
    // the random pool prefers nodes with at least two live edges.
    std::vector<int> pool;
    for (int u = 0; u < g.n; ++u)
      if (g.degrees[u] >= 2) pool.push_back(u);
    if (pool.empty())
      for (int u = 0; u < g.n; ++u) pool.push_back(u);
    Rng rng(mix_key(seed, fnv1a("targets")));
    int take = std::min<int>(want, static_cast<int>(pool.size()));
    for (int i = 0; i < take; ++i) {
      std::uint64_t j = i + rng.bounded(pool.size() - i);
      std::swap(pool[static_cast<size_t>(i)], pool[static_cast<size_t>(j)]);
    }
    out.assign(pool.begin(), pool.begin() + take);
    std::sort(out.begin(), out.end());
  } else {
    std::istringstream in(spec);
    std::string tok;
    while (std::getline(in, tok, ',')) {
      size_t a = tok.find_first_not_of(" \t");
      if (a == std::string::npos) continue;
      size_t b = tok.find_last_not_of(" \t");
      tok = tok.substr(a, b - a + 1);
      int id = labels.id_of(tok);
      if (id < 0)
        throw GraphError("targets: node '" + tok +
                         "' not in the largest component");
      out.push_back(id);
    }
    if (out.empty()) throw GraphError("targets: empty list");
  }
  return out;
}

double resolve_phi(const Graph& g, double cfg_phi) {
  if (cfg_phi > 0.0) return cfg_phi;
  if (g.n <= 500) return resistance_diameter(g);
  return static_cast<double>(bfs_diameter(g));
}

TruncationParams truncation_from(const ExperimentConfig& cfg, double eps_use) {
  TruncationParams tp;
  tp.gamma = cfg.gamma;
  tp.lambda = cfg.lambda;
  tp.epsilon = eps_use;
  tp.c = cfg.c;
  tp.l_cap = cfg.l_cap;
  tp.resample_every = cfg.resample_every;
  return tp;
}

GreedyResult run_algorithm(const std::string& alg, const Graph& g, int v,
                           const ExperimentConfig& cfg, double eps_use,
                           double alpha_use, std::uint64_t run_seed,
                           std::string& extras) {
  if (alg == "exact") return exact_sm(g, v, cfg.k);
  if (alg == "approx") {
    TruncationParams tp = truncation_from(cfg, eps_use);
    WalkParams wp = resolve_walk_params(g, v, tp);
    extras += " eps=" + fmt_g(eps_use) + " rho=" + std::to_string(wp.rho) +
              " l=" + std::to_string(wp.l);
    return approxi_sc(g, v, cfg.k, tp, run_seed);
  }
  if (alg == "fast") {
    TruncationParams tp = truncation_from(cfg, cfg.eps);
    double phi = resolve_phi(g, cfg.phi);
    FastIcmInfo info;
    GreedyResult res =
        fast_icm(g, v, cfg.k, alpha_use, phi, tp, run_seed, &info);
    extras += " alpha=" + fmt_g(alpha_use) + " phi=" + fmt_g(phi) +
              " eps=" + fmt_g(info.epsilon) + " p=" + fmt_g(info.p) +
              (info.p_clamped ? " p_clamped=1" : "") +
              " subset=" + std::to_string(info.subset_size) +
              " estimated=" + std::to_string(info.estimated) +
              " rho=" + std::to_string(info.rho) +
              " l=" + std::to_string(info.l);
    return res;
  }
  if (alg == "random") return random_edges(g, cfg.k, run_seed);
  if (alg == "betweenness")
    return betweenness_edges(g, v, cfg.k, !cfg.static_scoring);
  if (alg == "spanning") return spanning_edges(g, cfg.k, !cfg.static_scoring);
  throw GraphError("unknown algorithm '" + alg + "'");
}

void emit_run(RunOutput& out, const Graph& g0, const NodeLabelMap& labels,
              const std::string& column, std::uint64_t run_seed, int v,
              const GreedyResult& res, double wall_ms,
              const std::string& extras, bool force_recompute) {
  const ExperimentConfig& cfg = out.cfg;
  const bool zero = cfg.zero_elapsed;
  const std::string tlabel = labels.label_of(v);

  const bool recompute = force_recompute || g0.n <= cfg.recompute_cap;
  double initial = 0.0;
  std::vector<double> chain;
  if (recompute) {
    Graph g = g0;
    PseudoinverseState s = pseudoinverse(g);
    initial = information_centrality(s, v);
    chain.reserve(res.edges.size());
    for (int e : res.edges) {
      rank1_update(s, g, e);
      remove_edge(g, e);
      chain.push_back(information_centrality(s, v));
    }
  }

  std::string comment = "# run algorithm=" + column + " target=" +
                        tlabel + " seed=" + std::to_string(run_seed) + extras;
  if (recompute) comment += " initial=" + fmt_g(initial);
  if (res.status != RunStatus::Complete)
    comment += std::string(" status=") + (res.status == RunStatus::Exhausted
                                              ? "exhausted"
                                              : "infeasible");
  out.run_comments.push_back(comment);

  double final_value = recompute ? initial : 0.0;
  bool final_exact = recompute;
  for (size_t i = 0; i < res.picks.size(); ++i) {
    const IterationPick& p = res.picks[i];
    RunRecord r;
    r.algorithm = column;
    r.seed = run_seed;
    r.target = tlabel;
    r.iteration = p.iteration;
    r.edge_u = labels.label_of(g0.edges[p.edge_id].first);
    r.edge_v = labels.label_of(g0.edges[p.edge_id].second);
    r.info_centrality = recompute ? chain[i] : p.value;
    r.exact_flag = recompute ? true : p.value_exact;
    r.elapsed_ms = zero ? 0.0 : p.elapsed_ms;
    final_value = r.info_centrality;
    final_exact = r.exact_flag;
    out.records.push_back(std::move(r));
  }
  RunRecord s;
  s.algorithm = column;
  s.seed = run_seed;
  s.target = tlabel;
  s.iteration = 0;
  s.info_centrality = final_value;
  s.exact_flag = final_exact;
  s.elapsed_ms = zero ? 0.0 : wall_ms;
  out.records.push_back(std::move(s));

  std::ostringstream line;
  line << column << " target=" << tlabel << ": " << res.edges.size() << "/"
       << cfg.k << " edges";
  if (recompute)
    line << ", centrality " << fmt_g(initial) << " -> " << fmt_g(final_value);
  else if (!res.picks.empty() && !final_exact)
    line << ", centrality estimate " << fmt_g(final_value);
  else if (!res.picks.empty())
    line << ", centrality " << fmt_g(final_value);
  if (res.status == RunStatus::Exhausted) line << " (exhausted: bridges only)";
  line << ", " << fmt_g(zero ? 0.0 : wall_ms) << " ms";
  if (!out.summary.empty()) out.summary += '\n';
  out.summary += line.str();
  if (res.status != RunStatus::Complete) out.exit_code = 1;
}

void run_brute(RunOutput& out, const Graph& g0, const NodeLabelMap& labels,
               int v) {
  const ExperimentConfig& cfg = out.cfg;
  std::uint64_t run_seed =
      mix_key(cfg.seed, fnv1a("brute"), static_cast<std::uint64_t>(v));
  auto t0 = Clock::now();
  BruteResult br = brute_force(g0, v, cfg.k, cfg.budget);
  double wall = ms_since(t0);
  GreedyResult res;
  res.status = br.status;
  if (br.status == RunStatus::Complete) {
    res.edges = br.edges;
    for (size_t i = 0; i < br.edges.size(); ++i) {
      IterationPick p;
      p.iteration = static_cast<int>(i) + 1;
      p.edge_id = br.edges[i];
      res.picks.push_back(p);
    }
  }
  emit_run(out, g0, labels, "brute", run_seed, v, res, wall, "", true);
}

}  // namespace

int bfs_diameter(const Graph& g) {
  int best = 0;
  std::vector<int> dist(g.n);
  std::vector<int> queue(g.n);
  for (int s = 0; s < g.n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    queue[tail++] = s;
    dist[s] = 0;
    while (head < tail) {
      int u = queue[head++];
      best = std::max(best, dist[u]);
      g.for_neighbors(u, [&](int w, int) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          queue[tail++] = w;
        }
      });
    }
  }
  return best;
}

RunOutput run_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  RunOutput out;
  out.cfg = cfg;
  NodeLabelMap labels;
  Graph g = prepare_graph(cfg, labels);
  if (g.n < 2) throw GraphError("graph too small after component reduction");
  if (cfg.k >= g.m())
    throw GraphError("k must be below the live edge count " +
                     std::to_string(g.m()));
  std::vector<int> targets = resolve_targets(g, labels, cfg.targets, cfg.seed);

  auto one = [&](const std::string& alg, const std::string& column, int v,
                 double eps_use, double alpha_use) {
    std::uint64_t run_seed =
        mix_key(cfg.seed, fnv1a(alg), static_cast<std::uint64_t>(v));
    std::string extras;
    auto t0 = Clock::now();
    GreedyResult res =
        run_algorithm(alg, g, v, cfg, eps_use, alpha_use, run_seed, extras);
    emit_run(out, g, labels, column, run_seed, v, res, ms_since(t0), extras,
             false);
  };

  if (cfg.mode == "minimize" || cfg.mode == "baseline") {
    for (int v : targets) one(cfg.algorithm, cfg.algorithm, v, cfg.eps, cfg.alpha);
  } else if (cfg.mode == "compare") {
    static const char* kOrder[] = {"exact",  "approx",      "fast",
                                   "random", "betweenness", "spanning"};
    for (int v : targets)
      for (const char* alg : kOrder) one(alg, alg, v, cfg.eps, cfg.alpha);
  } else if (cfg.mode == "sweep") {
    const bool eps_sweep = cfg.sweep_param == "eps";
    const std::string alg = eps_sweep ? "approx" : "fast";
    for (double val : parse_double_list(cfg.sweep_values)) {
      std::string column = alg + ":" + cfg.sweep_param + "=" + fmt_g(val);
      for (int v : targets)
        one(alg, column, v, eps_sweep ? val : cfg.eps,
            eps_sweep ? cfg.alpha : val);
    }
  } else {  // brute
    for (int v : targets) run_brute(out, g, labels, v);
  }
  return out;
}

std::string to_csv(const RunOutput& out) {
  std::ostringstream os;
  std::istringstream kv(out.cfg.to_kv());
  std::string line;
  while (std::getline(kv, line)) {
    if (line.rfind("output=", 0) == 0) continue;  // destination-independent bytes
    os << "# " << line << '\n';
  }
  for (const std::string& c : out.run_comments) os << c << '\n';
  os << "algorithm,seed,target,iteration,edge_u,edge_v,info_centrality,"
        "exact_flag,elapsed_ms\n";
  for (const RunRecord& r : out.records) {
    os << csv_field(r.algorithm) << ',' << r.seed << ',' << csv_field(r.target)
       << ',' << r.iteration << ',' << csv_field(r.edge_u) << ','
       << csv_field(r.edge_v) << ',' << fmt_g(r.info_centrality) << ','
       << (r.exact_flag ? 1 : 0) << ',' << fmt_g(r.elapsed_ms) << '\n';
  }
  return os.str();
}

}  // namespace icm
