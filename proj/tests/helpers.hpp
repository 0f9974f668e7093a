#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "hamsym/graph.hpp"

namespace testing_util {

inline hamsym::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<hamsym::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return hamsym::Graph::from_edge_list(n, edges);
}

inline hamsym::Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
  while (true) {
    auto g = random_graph(n, p, rng);
    if (hamsym::is_connected(g)) return g;
  }
}

// Same graph with vertex v renamed perm[v].
inline hamsym::Graph permuted(const hamsym::Graph& g, const std::vector<int>& perm) {
  std::vector<hamsym::Edge> edges;
  for (const auto& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return hamsym::Graph::from_edge_list(g.order(), edges);
}

inline std::vector<int> random_perm(int n, std::mt19937_64& rng) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace testing_util
