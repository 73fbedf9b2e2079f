#include "drg/graph.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace drg {

Graph::Graph(int n) {
  if (n <= 0) throw std::invalid_argument("graph needs at least one vertex");
  adj_.resize(n);
}

bool Graph::adjacent(int u, int v) const {
  const auto& a = adj_[u];
  return std::binary_search(a.begin(), a.end(), v);
}

void Graph::add_edge(int u, int v) {
  const int n = vertex_count();
  if (u < 0 || v < 0 || u >= n || v >= n) throw std::invalid_argument("vertex index out of range");
  if (u == v) throw std::invalid_argument("self-loop");
  if (adjacent(u, v)) throw std::invalid_argument("duplicate edge");
  adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  ++edges_;
}

int Graph::common_neighbors(int u, int v) const {
  const auto& a = adj_[u];
  const auto& b = adj_[v];
  int count = 0;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (a[i] > b[j]) {
      ++j;
    } else {
      ++count;
      ++i;
      ++j;
    }
  }
  return count;
}

DistanceData distances(const Graph& g) {
  const int n = g.vertex_count();
  DistanceData dd;
  dd.dist.assign(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    auto& d = dd.dist[s];
    d[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      for (int w : g.neighbors(v)) {
        if (d[w] < 0) {
          d[w] = d[v] + 1;
          q.push_back(w);
        }
      }
    }
    for (int v = 0; v < n; ++v) {
      if (d[v] < 0) {
        dd.connected = false;
      } else {
        dd.diameter = std::max(dd.diameter, d[v]);
      }
    }
  }
  return dd;
}

Graph distance_graph(const Graph& g, const DistanceData& dd, int i) {
  if (i < 1 || i > dd.diameter)
    throw std::invalid_argument("distance index " + std::to_string(i) +
                                " outside [1, " + std::to_string(dd.diameter) + "]");
  const int n = g.vertex_count();
  Graph h(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (dd.dist[u][v] == i) h.add_edge(u, v);
  return h;
}

Graph distance_graph(const Graph& g, int i) { return distance_graph(g, distances(g), i); }

BipartiteResult is_bipartite(const Graph& g) {
  const int n = g.vertex_count();
  BipartiteResult r;
  std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
  for (int s = 0; s < n; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      for (int w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = color[v] ^ 1;
          parent[w] = v;
          depth[w] = depth[v] + 1;
          q.push_back(w);
        } else if (color[w] == color[v]) {
          // Walk both endpoints up the BFS tree to their meeting point.
          std::vector<int> left{v}, right{w};
          int a = v, b = w;
          while (depth[a] > depth[b]) left.push_back(a = parent[a]);
          while (depth[b] > depth[a]) right.push_back(b = parent[b]);
          while (a != b) {
            left.push_back(a = parent[a]);
            right.push_back(b = parent[b]);
          }
          r.odd_cycle = left;
          for (auto it = right.rbegin(); it != right.rend(); ++it)
            if (*it != a) r.odd_cycle.push_back(*it);
          return r;
        }
      }
    }
  }
  r.bipartite = true;
  r.coloring = std::move(color);
  return r;
}

namespace {

bool comment_or_blank(const std::string& line) {
  for (char ch : line) {
    if (ch == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Graph read_graph(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  while (std::getline(in, line)) {
    ++lineno;
    if (comment_or_blank(line)) continue;
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n >> m) || (ss >> extra))
      throw ParseError(lineno, "expected header 'n m'");
    break;
  }
  if (n < 0) throw ParseError(lineno, "missing header");
  if (n == 0 || n > 5000000) throw ParseError(lineno, "vertex count out of range");
  if (m < 0) throw ParseError(lineno, "negative edge count");
  Graph g(static_cast<int>(n));
  long long seen = 0;
  while (seen < m) {
    if (!std::getline(in, line)) throw ParseError(lineno, "unexpected end of file: expected " +
                                                              std::to_string(m - seen) + " more edges");
    ++lineno;
    if (comment_or_blank(line)) continue;
    std::istringstream ss(line);
    long long u, v;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra)) throw ParseError(lineno, "expected edge 'u v'");
    if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex index out of range");
    if (u >= v) throw ParseError(lineno, "edges must satisfy u < v");
    try {
      g.add_edge(static_cast<int>(u), static_cast<int>(v));
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    ++seen;
  }
  while (std::getline(in, line)) {
    ++lineno;
    if (!comment_or_blank(line)) throw ParseError(lineno, "trailing content after edge list");
  }
  return g;
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(in);
}

void write_graph(const Graph& g, std::ostream& out) {
  out << g.vertex_count() << " " << g.edge_count() << "\n";
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v : g.neighbors(u))
      if (u < v) out << u << " " << v << "\n";
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(g, out);
  return out.str();
}

}  // namespace drg
