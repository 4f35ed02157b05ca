#include "graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace icm {

int NodeLabelMap::add(const std::string& label) {
  auto it = ids.find(label);
  if (it != ids.end()) return it->second;
  int id = static_cast<int>(labels.size());
  labels.push_back(label);
  ids.emplace(label, id);
  return id;
}

int NodeLabelMap::id_of(const std::string& label) const {
  auto it = ids.find(label);
  return it == ids.end() ? -1 : it->second;
}

const std::string& NodeLabelMap::label_of(int id) const {
  if (id < 0 || id >= static_cast<int>(labels.size()))
    throw GraphError("label_of: id out of range");
  return labels[id];
}

int Graph::add_node() {
  adj.emplace_back();
  degrees.push_back(0);
  return n++;
}

int Graph::add_edge(int u, int v) {
  if (u == v) throw GraphError("self-loop rejected");
  if (u < 0 || v < 0 || u >= n || v >= n)
    throw GraphError("add_edge: node id out of range");
  if (has_edge(u, v)) return -1;
  if (u > v) std::swap(u, v);
  int e = static_cast<int>(edges.size());
  edges.emplace_back(u, v);
  removed.push_back(0);
  adj[u].emplace_back(v, e);
  adj[v].emplace_back(u, e);
  ++degrees[u];
  ++degrees[v];
  ++m_alive;
  return e;
}

bool Graph::has_edge(int u, int v) const {
  const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
  int other = adj[u].size() <= adj[v].size() ? v : u;
  for (const auto& [w, e] : a)
    if (w == other && !removed[e]) return true;
  return false;
}

Graph load_edge_list(std::istream& in, NodeLabelMap& labels, LoadStats* stats) {
  Graph g;
  std::string line;
  int lineno = 0;
  int edge_lines = 0;
  while (std::getline(in, line)) {
    ++lineno;
    size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos) continue;
    if (line[start] == '#' || line[start] == '%') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a >> b))
      throw ParseError("line " + std::to_string(lineno) + ": expected two tokens");
    if (ls >> extra)
      throw ParseError("line " + std::to_string(lineno) + ": trailing token '" + extra + "'");
    if (a == b)
      throw ParseError("line " + std::to_string(lineno) + ": self-loop on '" + a + "'");
    int u = labels.add(a);
    int v = labels.add(b);
    while (g.n < static_cast<int>(labels.labels.size())) g.add_node();
    if (g.add_edge(u, v) < 0 && stats) ++stats->duplicate_lines;
    ++edge_lines;
  }
  if (edge_lines == 0) throw ParseError("empty edge list");
  return g;
}

Graph load_edge_list_file(const std::string& path, NodeLabelMap& labels,
                          LoadStats* stats) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return load_edge_list(in, labels, stats);
}

namespace {

bool parse_int_label(const std::string& s, long long& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

void serialize_edge_list(const Graph& g, const NodeLabelMap& labels,
                         std::ostream& out) {
  bool all_numeric = true;
  std::vector<long long> numeric(g.n);
  for (int i = 0; i < g.n && all_numeric; ++i)
    all_numeric = parse_int_label(labels.labels[i], numeric[i]);

  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::pair<long long, long long>> nrows;
  for (int e = 0; e < g.m_total(); ++e) {
    if (!g.alive(e)) continue;
    auto [u, v] = g.edges[e];
    if (all_numeric) {
      long long a = numeric[u], b = numeric[v];
      if (a > b) std::swap(a, b);
      nrows.emplace_back(a, b);
    } else {
      std::string a = labels.labels[u], b = labels.labels[v];
      if (a > b) std::swap(a, b);
      rows.emplace_back(std::move(a), std::move(b));
    }
  }
  if (all_numeric) {
    std::sort(nrows.begin(), nrows.end());
    for (const auto& [a, b] : nrows) out << a << ' ' << b << '\n';
  } else {
    std::sort(rows.begin(), rows.end());
    for (const auto& [a, b] : rows) out << a << ' ' << b << '\n';
  }
}

namespace {

// Component label per node over live edges; returns component count.
int components(const Graph& g, std::vector<int>& comp) {
  comp.assign(g.n, -1);
  int count = 0;
  std::vector<int> stack;
  for (int s = 0; s < g.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = count;
    stack.push_back(s);
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      g.for_neighbors(u, [&](int w, int) {
        if (comp[w] < 0) {
          comp[w] = count;
          stack.push_back(w);
        }
      });
    }
    ++count;
  }
  return count;
}

}  // namespace

Graph largest_connected_component(const Graph& g, const NodeLabelMap& labels,
                                  NodeLabelMap& out_labels) {
  if (g.n == 0) throw GraphError("largest_connected_component: empty graph");
  std::vector<int> comp;
  int count = components(g, comp);
  std::vector<int> size(count, 0), smallest(count, g.n);
  for (int u = 0; u < g.n; ++u) {
    ++size[comp[u]];
    smallest[comp[u]] = std::min(smallest[comp[u]], u);
  }
  int best = 0;
  for (int c = 1; c < count; ++c) {
    if (size[c] > size[best] ||
        (size[c] == size[best] && smallest[c] < smallest[best]))
      best = c;
  }
  out_labels = NodeLabelMap{};
  std::vector<int> newid(g.n, -1);
  Graph sub;
  for (int u = 0; u < g.n; ++u) {
    if (comp[u] != best) continue;
    newid[u] = sub.add_node();
    out_labels.add(labels.labels[u]);
  }
  for (int e = 0; e < g.m_total(); ++e) {
    if (!g.alive(e)) continue;
    auto [u, v] = g.edges[e];
    if (comp[u] == best) sub.add_edge(newid[u], newid[v]);
  }
  return sub;
}

bool is_connected(const Graph& g) {
  if (g.n == 0) return false;
  std::vector<int> comp;
  return components(g, comp) == 1;
}

std::vector<int> bridges(const Graph& g) {
  if (!is_connected(g)) throw GraphError("bridges: disconnected graph");
  // Iterative lowpoint DFS over live edges.
  std::vector<int> disc(g.n, -1), low(g.n, 0), parent_edge(g.n, -1);
  std::vector<int> out;
  int timer = 0;
  struct Frame {
    int u;
    size_t next;
  };
  std::vector<Frame> stack;
  disc[0] = low[0] = timer++;
  stack.push_back({0, 0});
  while (!stack.empty()) {
    Frame& f = stack.back();
    int u = f.u;
    if (f.next < g.adj[u].size()) {
      auto [w, e] = g.adj[u][f.next++];
      if (g.removed[e] || e == parent_edge[u]) continue;
      if (disc[w] < 0) {
        disc[w] = low[w] = timer++;
        parent_edge[w] = e;
        stack.push_back({w, 0});
      } else {
        low[u] = std::min(low[u], disc[w]);
      }
    } else {
      stack.pop_back();
      if (!stack.empty()) {
        int p = stack.back().u;
        low[p] = std::min(low[p], low[u]);
        if (low[u] > disc[p]) out.push_back(parent_edge[u]);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

void remove_edge(Graph& g, int edge_id) {
  if (edge_id < 0 || edge_id >= g.m_total())
    throw GraphError("remove_edge: bad edge id");
  if (g.removed[edge_id]) throw GraphError("remove_edge: already removed");
  g.removed[edge_id] = 1;
  auto [u, v] = g.edges[edge_id];
  --g.degrees[u];
  --g.degrees[v];
  --g.m_alive;
}

NodeLabelMap identity_labels(int n) {
  NodeLabelMap m;
  for (int i = 0; i < n; ++i) m.add(std::to_string(i));
  return m;
}

}  // namespace icm
