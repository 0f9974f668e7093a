#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamsym/vertex_set.hpp"

namespace hamsym {

// Unordered vertex pair, normalized so that u < v.
struct Edge {
  int u = 0;
  int v = 0;

  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1 with bit-row adjacency.
// Values are immutable once built through the factory functions.
class Graph {
 public:
  Graph() = default;

  // Builds a graph; duplicate edges collapse, self-loops throw SelfLoop.
  static Graph from_edge_list(int n, std::span<const Edge> edges);
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }
  // Builds from symmetric adjacency rows (diagonal must be clear).
  static Graph from_rows(int n, std::vector<VertexSet> rows);

  int order() const { return n_; }
  int size() const { return edge_count_; }

  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].count(); }
  VertexSet all_vertices() const { return VertexSet::prefix(n_); }

  // Edges sorted lexicographically.
  std::vector<Edge> edges() const;

  const std::vector<std::string>& labels() const { return labels_; }
  Graph with_labels(std::vector<std::string> labels) const;

  // Subgraph induced by `verts`, relabeled in the given order.
  Graph induced(std::span<const int> verts) const;
  // Same vertex set, only the edges in `keep`.
  Graph spanning(std::span<const Edge> keep) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  int edge_count_ = 0;
  std::vector<VertexSet> adj_;
  std::vector<std::string> labels_;
};

bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
std::vector<int> degree_sequence(const Graph& g);
bool is_regular(const Graph& g, int d);

// BFS distances from `source`; -1 for unreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

// Length of the shortest cycle through e, or nullopt when e is a bridge.
std::optional<int> shortest_cycle_through_edge(const Graph& g, Edge e);

// Length of the shortest cycle, or nullopt for forests.
std::optional<int> girth(const Graph& g);

// Minimum number of vertices whose removal disconnects g (n-1 for complete graphs).
int vertex_connectivity(const Graph& g);

Graph complement(const Graph& g);

}  // namespace hamsym
