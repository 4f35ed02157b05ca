#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "config.hpp"
#include "graph.hpp"

namespace icm {

// One CSV row. iteration >= 1 is a removal; iteration 0 is the per-run
// summary row (final centrality, total elapsed time, edge fields empty).
struct RunRecord {
  std::string algorithm;
  std::uint64_t seed = 0;
  std::string target;
  int iteration = 0;
  std::string edge_u;
  std::string edge_v;
  double info_centrality = 0.0;
  bool exact_flag = false;
  double elapsed_ms = 0.0;
};

struct RunOutput {
  ExperimentConfig cfg;
  std::vector<std::string> run_comments;  // resolved per-run parameters
  std::vector<RunRecord> records;
  std::string summary;  // one human-readable line per run
  int exit_code = 0;    // 1 when any run ended short of k removals
};

int bfs_diameter(const Graph& g);

// Loads or generates the input graph, restricts it to the largest connected
// component and executes the configured runs. Per-run seeds are derived from
// the master seed, the algorithm name and the target id, so adding targets
// or algorithms never shifts existing streams.
RunOutput run_experiment(const ExperimentConfig& cfg);

// CSV with the configuration echoed as # comments (minus the output path)
// followed by the per-run parameter lines and the data rows. With
// zero_elapsed set the bytes depend only on the configuration.
std::string to_csv(const RunOutput& out);

}  // namespace icm
