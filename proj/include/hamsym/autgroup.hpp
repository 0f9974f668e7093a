#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "hamsym/graph.hpp"
#include "hamsym/perm_group.hpp"

namespace hamsym {

// Graph with dense vertex colors and per-edge colors (both default 0).
struct ColoredGraph {
  Graph graph;
  std::vector<int> vcolor;            // size n
  std::map<Edge, int> ecolor;         // absent edges have color 0

  static ColoredGraph plain(Graph g);
  // Edges in `marked` get color 1, all others 0.
  static ColoredGraph marking(Graph g, std::span<const Edge> marked);

  int edge_color(Edge e) const {
    auto it = ecolor.find(e);
    return it == ecolor.end() ? 0 : it->second;
  }
};

struct CanonicalForm {
  // relabeling(v) = canonical position of vertex v.
  Perm relabeling;
  // u16 n, u16 edge-color count, u16 color per canonical position, then one
  // row-major n×n bit matrix per edge color (MSB first, byte padded).
  std::string cert;
};

struct SearchStats {
  long nodes = 0;
  long leaves = 0;
};

// Generators of the color-preserving automorphism group, found by equitable
// refinement with individualization backtracking.
PermGroup automorphisms(const ColoredGraph& cg, SearchStats* stats = nullptr);
PermGroup automorphisms(const Graph& g);

CanonicalForm canonical_form(const ColoredGraph& cg);
CanonicalForm canonical_form(const Graph& g);

// Both results from a single search.
struct CanonicalSearchResult {
  PermGroup group;
  CanonicalForm form;
};
CanonicalSearchResult canonical_search(const ColoredGraph& cg, SearchStats* stats = nullptr);

bool is_isomorphic(const Graph& g, const Graph& h);
// An isomorphism g -> h (iso(v) is the image of v), if any.
std::optional<Perm> find_isomorphism(const Graph& g, const Graph& h);

// Automorphisms of g mapping `edges` onto itself; throws EdgeNotPresent.
PermGroup stabilizer_of_edge_set(const Graph& g, std::span<const Edge> edges);

// Partition of E(g) into Aut(g)-orbits, each orbit sorted, orbits ordered by first edge.
std::vector<std::vector<Edge>> edge_orbits(const Graph& g);
std::vector<std::vector<Edge>> edge_orbits(const Graph& g, const PermGroup& aut);

// The graph relabeled by the canonical labeling.
Graph relabel(const Graph& g, const Perm& relabeling);

}  // namespace hamsym
