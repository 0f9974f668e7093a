#pragma once

// Brute-force reference implementations. Exponential; only for small graphs.

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

#include "hamsym/graph.hpp"
#include "hamsym/perm_group.hpp"

namespace oracle {

using hamsym::Edge;
using hamsym::Graph;

inline bool preserves(const Graph& g, const std::vector<int>& p) {
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v)
      if (g.adjacent(u, v) != g.adjacent(p[u], p[v])) return false;
  return true;
}

// Every automorphism, by trying all n! permutations.
inline std::vector<std::vector<int>> all_automorphisms(const Graph& g) {
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    if (preserves(g, p)) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline long aut_order(const Graph& g) { return static_cast<long>(all_automorphisms(g).size()); }

inline bool isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> p(g.order());
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int u = 0; u < g.order() && ok; ++u)
      for (int v = u + 1; v < g.order() && ok; ++v)
        ok = g.adjacent(u, v) == h.adjacent(p[u], p[v]);
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

// Hamiltonian cycles as sorted edge sets, by trying every vertex order that
// starts at 0.
inline std::set<std::vector<Edge>> ham_cycles(const Graph& g) {
  std::set<std::vector<Edge>> out;
  int n = g.order();
  if (n < 3) return out;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    if (p[1] > p[n - 1]) continue;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = g.adjacent(p[i], p[(i + 1) % n]);
    if (!ok) continue;
    std::vector<Edge> es;
    for (int i = 0; i < n; ++i) es.emplace_back(p[i], p[(i + 1) % n]);
    std::sort(es.begin(), es.end());
    out.insert(es);
  } while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

inline std::vector<Edge> image(const std::vector<int>& p, const std::vector<Edge>& es) {
  std::vector<Edge> out;
  for (const Edge& e : es) out.emplace_back(p[e.u], p[e.v]);
  std::sort(out.begin(), out.end());
  return out;
}

// Number of Aut(g)-orbits on Hamiltonian cycles, from the full automorphism list.
inline long cycle_classes(const Graph& g) {
  auto cycles = ham_cycles(g);
  auto auts = all_automorphisms(g);
  std::set<std::vector<Edge>> seen;
  long classes = 0;
  for (const auto& c : cycles) {
    if (seen.count(c)) continue;
    ++classes;
    for (const auto& p : auts) seen.insert(image(p, c));
  }
  return classes;
}

inline long stabilizer_order(const Graph& g, std::vector<Edge> es) {
  std::sort(es.begin(), es.end());
  long cnt = 0;
  for (const auto& p : all_automorphisms(g))
    if (image(p, es) == es) ++cnt;
  return cnt;
}

// Largest k | n such that shifting the sequence by n/k is an automorphism.
inline int kappa(const Graph& g, const std::vector<int>& seq) {
  int n = static_cast<int>(seq.size());
  for (int k = n; k >= 1; --k) {
    if (n % k) continue;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[seq[i]] = seq[(i + n / k) % n];
    if (preserves(g, p)) return k;
  }
  return 1;
}

}  // namespace oracle
