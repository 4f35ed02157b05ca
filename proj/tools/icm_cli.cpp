// Command-line front end. Talks to the library exclusively through the C
// interface; every flag becomes a key=value line so a --config file and
// command-line overrides share one code path.
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "icm.h"

namespace {

int fail(int rc) {
  std::fprintf(stderr, "error: %s\n", icm_last_error());
  return rc;
}

// Key=value lines accumulated in parse order, so flags override an earlier
// --config file (later assignments win).
struct KvSpec {
  std::string mode;
  std::string config_path;
  std::vector<std::pair<std::string, std::string>> pairs;
};

void kv_opt(CLI::App* sub, KvSpec& spec, const std::string& flag,
            const std::string& key, const std::string& help,
            bool required = false) {
  auto* opt = sub->add_option_function<std::string>(
      flag,
      [&spec, key](const std::string& val) {
        spec.pairs.emplace_back(key, val);
      },
      help);
  if (required) opt->required();
}

void kv_flag(CLI::App* sub, KvSpec& spec, const std::string& flag,
             const std::string& key, const std::string& help) {
  sub->add_flag_function(
      flag,
      [&spec, key](std::int64_t) { spec.pairs.emplace_back(key, "1"); }, help);
}

void graph_opts(CLI::App* sub, KvSpec& spec) {
  kv_opt(sub, spec, "--input,-i", "input", "edge-list file");
  kv_opt(sub, spec, "--gen", "gen", "generate instead of loading: ba | ws");
  kv_opt(sub, spec, "--gen-n", "gen_n", "generated node count");
  kv_opt(sub, spec, "--gen-m0", "gen_m0", "attachment edges per added node");
  kv_opt(sub, spec, "--gen-k-ring", "gen_k_ring", "ring degree (even)");
  kv_opt(sub, spec, "--gen-p", "gen_p", "rewiring probability");
}

void run_opts(CLI::App* sub, KvSpec& spec, bool seed_required) {
  kv_opt(sub, spec, "--k,-k", "k", "number of edges to remove");
  kv_opt(sub, spec, "--targets,-t", "targets",
         "comma-separated labels or random:count");
  kv_opt(sub, spec, "--seed,-s", "seed", "master seed", seed_required);
  kv_opt(sub, spec, "--output,-o", "output", "CSV path (default stdout)");
  kv_opt(sub, spec, "--recompute-cap", "recompute_cap",
         "largest n for which rows are re-evaluated exactly");
  kv_flag(sub, spec, "--zero-elapsed", "zero_elapsed",
          "write 0 in elapsed columns for reproducible bytes");
  sub->add_option("--config", spec.config_path,
                  "key=value file applied before the flags");
}

void accuracy_opts(CLI::App* sub, KvSpec& spec) {
  kv_opt(sub, spec, "--eps", "eps", "resistance-estimate accuracy");
  kv_opt(sub, spec, "--alpha", "alpha", "final-centrality accuracy target");
  kv_opt(sub, spec, "--gamma", "gamma", "invalid-walk ratio target");
  kv_opt(sub, spec, "--lambda", "lambda", "spectral-radius estimate");
  kv_opt(sub, spec, "--c", "c", "replicate-count constant");
  kv_opt(sub, spec, "--phi", "phi",
         "resistance-diameter bound (0 = measure it)");
  kv_opt(sub, spec, "--l-cap", "l_cap", "walk-length cap");
  kv_opt(sub, spec, "--resample-every", "resample_every",
         "rebuild walks every r removals (0 = incremental repair)");
}

int run_kv_mode(const KvSpec& spec) {
  std::string kv;
  if (!spec.config_path.empty()) {
    std::ifstream in(spec.config_path);
    if (!in) {
      std::fprintf(stderr, "error: cannot open '%s'\n",
                   spec.config_path.c_str());
      return ICM_ERR_IO;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    kv += buf.str();
    kv += '\n';
  }
  kv += "mode=" + spec.mode + "\n";
  for (const auto& [key, val] : spec.pairs) kv += key + "=" + val + "\n";

  icm_result* res = nullptr;
  int rc = icm_run_kv(kv.c_str(), &res);
  if (rc != ICM_OK) return fail(rc);
  rc = icm_result_write_csv(res, icm_result_output_path(res));
  if (rc != ICM_OK) {
    icm_result_free(res);
    return fail(rc);
  }
  std::fprintf(stderr, "%s\n", icm_result_summary(res));
  int code = icm_result_exit_code(res);
  icm_result_free(res);
  return code;
}

int emit_graph(icm_graph* g, const std::string& out_path) {
  int rc = icm_graph_save_file(g, out_path.empty() ? nullptr : out_path.c_str());
  if (rc == ICM_OK)
    std::fprintf(stderr, "n=%d m=%d\n", icm_graph_node_count(g),
                 icm_graph_edge_count(g));
  icm_graph_free(g);
  return rc == ICM_OK ? 0 : fail(rc);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"remove edges to lower a node's information centrality"};
  app.require_subcommand(1);

  std::vector<std::unique_ptr<KvSpec>> specs;
  std::vector<std::pair<CLI::App*, KvSpec*>> kv_subs;
  auto kv_sub = [&](const std::string& name, const std::string& help,
                    const std::string& mode) {
    CLI::App* sub = app.add_subcommand(name, help);
    specs.push_back(std::make_unique<KvSpec>());
    specs.back()->mode = mode;
    kv_subs.emplace_back(sub, specs.back().get());
    return std::pair<CLI::App*, KvSpec*>(sub, specs.back().get());
  };

  auto [s_min, k_min] =
      kv_sub("minimize", "greedy k-edge removal against one or more targets",
             "minimize");
  graph_opts(s_min, *k_min);
  run_opts(s_min, *k_min, false);
  accuracy_opts(s_min, *k_min);
  kv_opt(s_min, *k_min, "--algorithm,-a", "algorithm", "exact | approx | fast");

  auto [s_brute, k_brute] =
      kv_sub("brute", "exhaustive optimum over k-subsets (small graphs)",
             "brute");
  graph_opts(s_brute, *k_brute);
  run_opts(s_brute, *k_brute, false);
  kv_opt(s_brute, *k_brute, "--budget", "budget", "subset evaluation limit");

  auto [s_base, k_base] =
      kv_sub("baseline", "reference edge-selection strategies", "baseline");
  graph_opts(s_base, *k_base);
  run_opts(s_base, *k_base, false);
  kv_opt(s_base, *k_base, "--algorithm,-a", "algorithm",
         "random | betweenness | spanning");
  kv_flag(s_base, *k_base, "--static-scoring", "static_scoring",
          "score edges once instead of after every removal");

  auto [s_cmp, k_cmp] = kv_sub(
      "compare", "all algorithms and baselines on the same targets", "compare");
  graph_opts(s_cmp, *k_cmp);
  run_opts(s_cmp, *k_cmp, true);
  accuracy_opts(s_cmp, *k_cmp);
  kv_flag(s_cmp, *k_cmp, "--static-scoring", "static_scoring",
          "score baseline edges once instead of after every removal");

  auto [s_sweep, k_sweep] =
      kv_sub("sweep", "one algorithm across a list of accuracy settings",
             "sweep");
  graph_opts(s_sweep, *k_sweep);
  run_opts(s_sweep, *k_sweep, true);
  accuracy_opts(s_sweep, *k_sweep);
  kv_opt(s_sweep, *k_sweep, "--param", "sweep_param", "eps | alpha", true);
  kv_opt(s_sweep, *k_sweep, "--values", "sweep_values",
         "comma-separated parameter values", true);

  int ba_n = 0, ba_m0 = 0;
  std::uint64_t ba_seed = 1;
  std::string ba_out;
  CLI::App* s_gba =
      app.add_subcommand("gen-ba", "write a preferential-attachment graph");
  s_gba->add_option("--n", ba_n, "node count")->required();
  s_gba->add_option("--m0", ba_m0, "attachment edges per added node")
      ->required();
  s_gba->add_option("--seed,-s", ba_seed, "generator seed");
  s_gba->add_option("--output,-o", ba_out, "edge-list path (default stdout)");

  int ws_n = 0, ws_k = 0;
  double ws_p = 0.0;
  std::uint64_t ws_seed = 1;
  std::string ws_out;
  CLI::App* s_gws =
      app.add_subcommand("gen-ws", "write a rewired-ring graph");
  s_gws->add_option("--n", ws_n, "node count")->required();
  s_gws->add_option("--k-ring", ws_k, "ring degree (even)")->required();
  s_gws->add_option("--p", ws_p, "rewiring probability")->required();
  s_gws->add_option("--seed,-s", ws_seed, "generator seed");
  s_gws->add_option("--output,-o", ws_out, "edge-list path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  if (s_gba->parsed()) {
    icm_graph* g = nullptr;
    int rc = icm_graph_generate_ba(ba_n, ba_m0, ba_seed, &g);
    if (rc != ICM_OK) return fail(rc);
    return emit_graph(g, ba_out);
  }
  if (s_gws->parsed()) {
    icm_graph* g = nullptr;
    int rc = icm_graph_generate_ws(ws_n, ws_k, ws_p, ws_seed, &g);
    if (rc != ICM_OK) return fail(rc);
    return emit_graph(g, ws_out);
  }
  for (const auto& [sub, spec] : kv_subs)
    if (sub->parsed()) return run_kv_mode(*spec);
  return 1;
}
