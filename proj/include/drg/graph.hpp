#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace drg {

// Simple undirected graph, 0-based vertex indices, sorted adjacency lists.
class Graph {
 public:
  explicit Graph(int n);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  long long edge_count() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  bool adjacent(int u, int v) const;

  // Throws std::invalid_argument on self-loops, out-of-range indices, or
  // duplicate edges.
  void add_edge(int u, int v);

  // Number of common neighbors of u and v.
  int common_neighbors(int u, int v) const;

 private:
  std::vector<std::vector<int>> adj_;
  long long edges_ = 0;
};

// All-pairs hop distances; -1 marks unreachable pairs.
struct DistanceData {
  std::vector<std::vector<int>> dist;
  int diameter = 0;     // max finite distance
  bool connected = true;
};

DistanceData distances(const Graph& g);

// Graph on the same vertices with u ~ v iff dist(u, v) == i.
// Requires 1 <= i <= dd.diameter.
Graph distance_graph(const Graph& g, const DistanceData& dd, int i);
Graph distance_graph(const Graph& g, int i);

struct BipartiteResult {
  bool bipartite = false;
  std::vector<int> coloring;   // 0/1 per vertex when bipartite
  std::vector<int> odd_cycle;  // closed odd walk witness otherwise
};

BipartiteResult is_bipartite(const Graph& g);

// --- graph file format ---------------------------------------------------
// First non-comment line: "n m". Then m lines "u v" with 0 <= u < v < n,
// no duplicates. Lines starting with '#' are comments.

struct ParseError : std::runtime_error {
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
  int line;
};

Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(const Graph& g, std::ostream& out);
std::string graph_to_string(const Graph& g);

}  // namespace drg
