#include "icm.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>

#include "bench.hpp"
#include "config.hpp"
#include "exact.hpp"
#include "generators.hpp"
#include "graph.hpp"

struct icm_graph {
  icm::Graph g;
  icm::NodeLabelMap labels;
};

struct icm_result {
  icm::RunOutput out;
  std::string csv;
};

namespace {

thread_local std::string g_last_error;

template <class F>
int guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return ICM_OK;
  } catch (const icm::ParseError& e) {
    g_last_error = e.what();
    return ICM_ERR_PARSE;
  } catch (const icm::IoError& e) {
    g_last_error = e.what();
    return ICM_ERR_IO;
  } catch (const icm::BudgetError& e) {
    g_last_error = e.what();
    return ICM_ERR_BUDGET;
  } catch (const icm::GraphError& e) {
    g_last_error = e.what();
    return ICM_ERR_INVALID;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return ICM_ERR_INTERNAL;
  }
}

int null_arg() {
  g_last_error = "null argument";
  return ICM_ERR_INVALID;
}

char* dup_text(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

void write_text(const std::string& text, const char* path) {
  if (!path || !*path) {
    std::fwrite(text.data(), 1, text.size(), stdout);
    std::fflush(stdout);
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw icm::IoError(std::string("cannot write '") + path + "'");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw icm::IoError(std::string("short write to '") + path + "'");
}

}  // namespace

extern "C" {

const char* icm_last_error(void) { return g_last_error.c_str(); }

int icm_graph_load_file(const char* path, icm_graph** out) {
  if (!path || !out) return null_arg();
  return guarded([&] {
    auto h = std::make_unique<icm_graph>();
    h->g = icm::load_edge_list_file(path, h->labels);
    *out = h.release();
  });
}

int icm_graph_load_text(const char* text, icm_graph** out) {
  if (!text || !out) return null_arg();
  return guarded([&] {
    auto h = std::make_unique<icm_graph>();
    std::istringstream in{std::string(text)};
    h->g = icm::load_edge_list(in, h->labels);
    *out = h.release();
  });
}

int icm_graph_generate_ba(int n, int m0, uint64_t seed, icm_graph** out) {
  if (!out) return null_arg();
  return guarded([&] {
    auto h = std::make_unique<icm_graph>();
    h->g = icm::generate_ba(n, m0, seed);
    h->labels = icm::identity_labels(h->g.n);
    *out = h.release();
  });
}

int icm_graph_generate_ws(int n, int k_ring, double p, uint64_t seed,
                          icm_graph** out) {
  if (!out) return null_arg();
  return guarded([&] {
    auto h = std::make_unique<icm_graph>();
    h->g = icm::generate_ws(n, k_ring, p, seed);
    h->labels = icm::identity_labels(h->g.n);
    *out = h.release();
  });
}

int icm_graph_largest_component(const icm_graph* g, icm_graph** out) {
  if (!g || !out) return null_arg();
  return guarded([&] {
    auto h = std::make_unique<icm_graph>();
    h->g = icm::largest_connected_component(g->g, g->labels, h->labels);
    *out = h.release();
  });
}

int icm_graph_save_file(const icm_graph* g, const char* path) {
  if (!g) return null_arg();
  return guarded([&] {
    std::ostringstream os;
    icm::serialize_edge_list(g->g, g->labels, os);
    write_text(os.str(), path);
  });
}

int icm_graph_node_count(const icm_graph* g) { return g ? g->g.n : -1; }

int icm_graph_edge_count(const icm_graph* g) { return g ? g->g.m() : -1; }

int icm_graph_is_connected(const icm_graph* g) {
  if (!g) return -1;
  return icm::is_connected(g->g) ? 1 : 0;
}

void icm_graph_free(icm_graph* g) { delete g; }

int icm_run_kv(const char* kv_text, icm_result** out) {
  if (!kv_text || !out) return null_arg();
  return guarded([&] {
    icm::ExperimentConfig cfg = icm::config_from_kv(kv_text);
    auto r = std::make_unique<icm_result>();
    r->out = icm::run_experiment(cfg);
    r->csv = icm::to_csv(r->out);
    *out = r.release();
  });
}

int icm_config_defaults(char** out_text) {
  if (!out_text) return null_arg();
  return guarded([&] { *out_text = dup_text(icm::ExperimentConfig{}.to_kv()); });
}

void icm_text_free(char* text) { std::free(text); }

int icm_result_write_csv(const icm_result* r, const char* path) {
  if (!r) return null_arg();
  return guarded([&] { write_text(r->csv, path); });
}

int icm_result_csv(const icm_result* r, char** out_text) {
  if (!r || !out_text) return null_arg();
  return guarded([&] { *out_text = dup_text(r->csv); });
}

const char* icm_result_summary(const icm_result* r) {
  return r ? r->out.summary.c_str() : "";
}

const char* icm_result_output_path(const icm_result* r) {
  return r ? r->out.cfg.output.c_str() : "";
}

int icm_result_exit_code(const icm_result* r) {
  return r ? r->out.exit_code : ICM_ERR_INVALID;
}

void icm_result_free(icm_result* r) { delete r; }

}  // extern "C"
