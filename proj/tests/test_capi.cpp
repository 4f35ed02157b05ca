#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "icm.h"
#include "oracles.hpp"

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("c api: load text, counts, connectivity") {
  icm_graph* g = nullptr;
  REQUIRE(icm_graph_load_text("0 1\n0 2\n1 2\n", &g) == ICM_OK);
  CHECK(icm_graph_node_count(g) == 3);
  CHECK(icm_graph_edge_count(g) == 3);
  CHECK(icm_graph_is_connected(g) == 1);
  icm_graph_free(g);

  icm_graph* d = nullptr;
  REQUIRE(icm_graph_load_text("0 1\n2 3\n", &d) == ICM_OK);
  CHECK(icm_graph_is_connected(d) == 0);
  icm_graph_free(d);
}

TEST_CASE("c api: save and reload round-trips") {
  icm_graph* g = nullptr;
  REQUIRE(icm_graph_load_file(oracle::data_path("karate.txt").c_str(), &g) ==
          ICM_OK);
  const char* path = "/tmp/capi_karate_roundtrip.txt";
  REQUIRE(icm_graph_save_file(g, path) == ICM_OK);
  icm_graph* back = nullptr;
  REQUIRE(icm_graph_load_file(path, &back) == ICM_OK);
  CHECK(icm_graph_node_count(back) == 34);
  CHECK(icm_graph_edge_count(back) == 78);
  icm_graph_free(back);
  icm_graph_free(g);
  std::remove(path);
}

TEST_CASE("c api: error codes and messages") {
  icm_graph* g = nullptr;
  CHECK(icm_graph_load_file("/nonexistent/xyz.txt", &g) == ICM_ERR_IO);
  CHECK(g == nullptr);
  CHECK(std::strstr(icm_last_error(), "/nonexistent/xyz.txt") != nullptr);

  CHECK(icm_graph_load_text("0 0\n", &g) == ICM_ERR_PARSE);
  CHECK(std::strstr(icm_last_error(), "self-loop") != nullptr);

  CHECK(icm_graph_load_text(nullptr, &g) == ICM_ERR_INVALID);
  CHECK(icm_graph_load_text("0 1\n", nullptr) == ICM_ERR_INVALID);
  CHECK(icm_graph_is_connected(nullptr) == -1);
  CHECK(icm_graph_node_count(nullptr) == -1);
  icm_graph_free(nullptr);  // must be a no-op
}

TEST_CASE("c api: generators and component reduction") {
  icm_graph* g = nullptr;
  REQUIRE(icm_graph_generate_ba(40, 2, 7, &g) == ICM_OK);
  CHECK(icm_graph_node_count(g) == 40);
  CHECK(icm_graph_edge_count(g) == 3 + 37 * 2);  // C(3,2) + (40-3)*2
  icm_graph_free(g);

  CHECK(icm_graph_generate_ba(3, 3, 7, &g) == ICM_ERR_INVALID);
  REQUIRE(icm_graph_generate_ws(30, 4, 0.1, 3, &g) == ICM_OK);
  CHECK(icm_graph_is_connected(g) == 1);
  icm_graph_free(g);

  icm_graph* two = nullptr;
  REQUIRE(icm_graph_load_text("0 1\n0 2\n1 2\n8 9\n", &two) == ICM_OK);
  icm_graph* comp = nullptr;
  REQUIRE(icm_graph_largest_component(two, &comp) == ICM_OK);
  CHECK(icm_graph_node_count(comp) == 3);
  CHECK(icm_graph_edge_count(comp) == 3);
  icm_graph_free(comp);
  icm_graph_free(two);
}

TEST_CASE("c api: configured run end to end") {
  std::string kv = "mode=minimize\nalgorithm=exact\ninput=" +
                   oracle::data_path("karate.txt") +
                   "\ntargets=33\nk=2\nzero_elapsed=1\n";
  icm_result* res = nullptr;
  REQUIRE(icm_run_kv(kv.c_str(), &res) == ICM_OK);
  CHECK(icm_result_exit_code(res) == 0);
  CHECK(icm_result_summary(res) != nullptr);
  CHECK(std::strstr(icm_result_summary(res), "2/2 edges") != nullptr);
  CHECK(icm_result_output_path(res)[0] == '\0');

  char* csv = nullptr;
  REQUIRE(icm_result_csv(res, &csv) == ICM_OK);
  REQUIRE(csv != nullptr);
  CHECK(std::strstr(csv, "algorithm,seed,target,") != nullptr);
  std::string csv_text = csv;
  icm_text_free(csv);

  const char* path = "/tmp/capi_run.csv";
  REQUIRE(icm_result_write_csv(res, path) == ICM_OK);
  CHECK(slurp(path) == csv_text);
  icm_result_free(res);
  std::remove(path);
}

TEST_CASE("c api: run failures map to typed codes") {
  icm_result* res = nullptr;
  CHECK(icm_run_kv("nonsense\n", &res) == ICM_ERR_PARSE);
  CHECK(res == nullptr);
  CHECK(icm_run_kv("mode=minimize\ninput=/nonexistent/g.txt\ntargets=0\n",
                   &res) == ICM_ERR_IO);
  CHECK(icm_run_kv(nullptr, &res) == ICM_ERR_INVALID);

  // Exhaustive search over C(78,5) subsets blows the default budget.
  std::string kv = "mode=brute\ninput=" + oracle::data_path("karate.txt") +
                   "\ntargets=33\nk=5\n";
  CHECK(icm_run_kv(kv.c_str(), &res) == ICM_ERR_BUDGET);
  CHECK(std::strstr(icm_last_error(), "budget") != nullptr);
}

TEST_CASE("c api: defaults text parses back") {
  char* text = nullptr;
  REQUIRE(icm_config_defaults(&text) == ICM_OK);
  REQUIRE(text != nullptr);
  std::string t = text;
  icm_text_free(text);
  CHECK(t.find("mode=minimize\n") != std::string::npos);
  CHECK(t.find("eps=0.005\n") != std::string::npos);
  CHECK(t.find("seed=1\n") != std::string::npos);

  // Feeding the defaults back with a graph makes a valid run.
  std::string kv = t + "input=" + oracle::data_path("karate.txt") +
                   "\ntargets=33\nzero_elapsed=1\n";
  icm_result* res = nullptr;
  REQUIRE(icm_run_kv(kv.c_str(), &res) == ICM_OK);
  CHECK(icm_result_exit_code(res) == 0);
  icm_result_free(res);
}
