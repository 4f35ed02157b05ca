#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace icm {

// All recoverable failures surface as GraphError with a message; the C API
// maps them to error codes. The subclasses exist only for that mapping.
class GraphError : public std::runtime_error {
 public:
  explicit GraphError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed input text (edge lists, configuration).
class ParseError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Unreadable or unwritable files.
class IoError : public GraphError {
 public:
  using GraphError::GraphError;
};

// Original label <-> dense id bijection.
struct NodeLabelMap {
  std::vector<std::string> labels;                 // dense id -> label
  std::unordered_map<std::string, int> ids;        // label -> dense id

  int add(const std::string& label);
  int id_of(const std::string& label) const;       // -1 if absent
  const std::string& label_of(int id) const;
};

// Undirected simple graph with dense node ids and stable edge ids.
// Edge removal is logical: removed edges keep their id and stay addressable
// so walk indexes built against them remain valid.
struct Graph {
  int n = 0;
  std::vector<std::pair<int, int>> edges;          // edge id -> (u, v), u < v
  std::vector<char> removed;                       // edge id -> tombstone
  std::vector<std::vector<std::pair<int, int>>> adj;  // node -> (neighbor, edge id)
  std::vector<int> degrees;                        // live degree
  int m_alive = 0;

  int m_total() const { return static_cast<int>(edges.size()); }
  int m() const { return m_alive; }
  bool alive(int e) const { return !removed[e]; }

  int add_node();
  // Returns the edge id, or -1 if the edge already exists. Self-loops throw.
  int add_edge(int u, int v);
  bool has_edge(int u, int v) const;

  // Iterate live neighbors of u, calling f(neighbor, edge id).
  template <class F>
  void for_neighbors(int u, F&& f) const {
    for (const auto& [w, e] : adj[u])
      if (!removed[e]) f(w, e);
  }
};

struct LoadStats {
  int duplicate_lines = 0;  // collapsed duplicates (warned, not rejected)
};

Graph load_edge_list(std::istream& in, NodeLabelMap& labels,
                     LoadStats* stats = nullptr);
Graph load_edge_list_file(const std::string& path, NodeLabelMap& labels,
                          LoadStats* stats = nullptr);

// Writes "u v" per line in original labels, ordered numerically when every
// label parses as an integer, lexicographically otherwise.
void serialize_edge_list(const Graph& g, const NodeLabelMap& labels,
                         std::ostream& out);

// Induced subgraph on the largest component, densely relabeled. Ties are
// broken by the smallest contained original id. out_labels maps the new
// dense ids to the original labels.
Graph largest_connected_component(const Graph& g, const NodeLabelMap& labels,
                                  NodeLabelMap& out_labels);

bool is_connected(const Graph& g);

// Edge ids whose removal disconnects the graph (lowpoint traversal).
// Throws on disconnected input.
std::vector<int> bridges(const Graph& g);

// Logical removal; throws on double removal or bad id.
void remove_edge(Graph& g, int edge_id);

// Identity label map 0..n-1 for generated graphs.
NodeLabelMap identity_labels(int n);

}  // namespace icm
