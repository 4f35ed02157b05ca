#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "graph.hpp"

namespace icm {

// Experiment description. Serializes to key=value lines and parses back
// losslessly; unknown keys are rejected.
struct ExperimentConfig {
  std::string mode = "minimize";  // minimize | brute | baseline | compare | sweep
  std::string input;              // edge-list path (exclusive with gen)
  std::string gen;                // "" | ba | ws
  int gen_n = 0;
  int gen_m0 = 0;
  int gen_k_ring = 0;
  double gen_p = 0.0;

  // exact | approx | fast (minimize); random | betweenness | spanning (baseline)
  std::string algorithm = "exact";
  int k = 1;
  std::string targets = "random:10";  // comma-separated labels or random:count

  double eps = 0.005;
  double alpha = 0.05;
  double gamma = 1e-3;
  double lambda = 0.95;
  double c = 0.25;
  double phi = 0.0;  // 0 = auto (exact resistance diameter when n <= 500,
                     // else graph diameter)
  int l_cap = 10000;
  int resample_every = 0;
  std::uint64_t seed = 1;
  std::string output;  // CSV path; empty = stdout
  int recompute_cap = 2000;
  bool zero_elapsed = false;
  bool static_scoring = false;
  std::uint64_t budget = 1000000;

  std::string sweep_param = "eps";  // eps | alpha
  std::string sweep_values;         // comma-separated

  std::string to_kv() const;

  void validate() const;
};

ExperimentConfig config_from_kv(const std::string& text);
ExperimentConfig config_from_file(const std::string& path);

std::vector<double> parse_double_list(const std::string& csv);

}  // namespace icm
