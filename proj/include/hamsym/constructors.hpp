#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hamsym/abelian.hpp"
#include "hamsym/graph.hpp"
#include "hamsym/perm_group.hpp"

namespace hamsym {

Graph cycle_graph(int n);                  // n >= 3
Graph complete_graph(int n);               // n >= 1
Graph complete_bipartite(int m, int mp);   // m, mp >= 1; part A = 0..m-1
Graph path_graph(int n);                   // n >= 1

// Cartesian product with its direction classes. Vertex (c_1, ..., c_r) sits at
// the row-major index over the factor orders.
struct ProductView {
  Graph graph;
  std::vector<Graph> factors;
  std::map<Edge, int> direction;   // edge -> index of the factor whose coordinate changes

  int factor_count() const { return static_cast<int>(factors.size()); }
  std::vector<int> coords(int v) const;
  int vertex(const std::vector<int>& coords) const;
  std::vector<Edge> direction_class(int i) const;
};

// Throws CapExceeded when the product would exceed the vertex cap.
ProductView cartesian_product(const Graph& g, const Graph& h);
ProductView cartesian_product(const std::vector<Graph>& factors);
ProductView cartesian_power(const Graph& g, int r);

// C_k □ K_2; outer vertex v_i = (i, 0) -> index 2i, inner u_i = (i, 1) -> 2i+1.
ProductView prism(int k);

// Vertices are group elements in lexicographic residue order, labeled by their residues.
Graph cayley_graph(const AbelianGroup& gamma, const GeneratingSet& s);
// Cayley graph of a subgroup given by its sorted element indices; vertex i is members[i].
Graph cayley_graph_on_subgroup(const AbelianGroup& gamma, const std::vector<int>& members,
                               const std::vector<int>& gens);

struct OrderSplit {
  std::vector<GroupElem> p_part;       // S_p: elements whose order is divisible by p
  std::vector<GroupElem> coprime_part; // S'_p
  std::vector<int> p_subgroup;         // <S_p> as element indices
  std::vector<int> coprime_subgroup;   // <S'_p>
  ProductView product;                 // Cay(<S_p>, S_p) □ Cay(<S'_p>, S'_p)
  Perm isomorphism;                    // product vertex -> Cayley vertex, verified
};

// Splits S by element orders w.r.t. prime p. Throws NotApplicable when some
// generator's order is neither a power of p nor coprime to p, or p ∤ |Γ|.
OrderSplit split_by_orders(const AbelianGroup& gamma, const GeneratingSet& s, int p);

// Replaces every vertex of a connected cubic graph with a triangle. For vertex
// v with neighbors x < y < z, the copies v_x, v_y, v_z get indices 3v, 3v+1, 3v+2.
Graph truncation(const Graph& g);
// Index of v_x in truncation(g).
int truncation_vertex(const Graph& g, int v, int x);

// C_n with every vertex replaced by K_{d+1} minus an edge; n(d+1) vertices.
Graph regular_gadget(int d, int n);

// K_n \ C_n, n >= 5.
Graph complement_of_cycle(int n);

// Layer partition V_0..V_{l-1}; layers[j][i] is the i-th vertex of layer j and
// layers[j+1][i] is its partner under the j-th matching.
struct LayeredView {
  Graph graph;
  std::vector<std::vector<int>> layers;
  Graph layer_graph;                 // K, the graph induced by layers[0] in that order
  std::vector<int> layer_cycle;      // Hamiltonian cycle of K as positions 0..k-1

  int layer_count() const { return static_cast<int>(layers.size()); }
  int layer_size() const { return layers.empty() ? 0 : static_cast<int>(layers[0].size()); }
  // Vertex at position i of the C_K ordering in layer j.
  int at(int j, int i) const { return layers[j][layer_cycle[i]]; }
};

// Checks the layer-structure axioms (perfect isomorphism-inducing matchings,
// Hamiltonian K with the stored cycle).
bool verify_layered_view(const LayeredView& lv);

// Cosets of <S'> ordered along a Hamiltonian path of the quotient Cayley graph.
// Throws NotApplicable unless <S'> ∩ S = S' and |<S'>| >= 3.
LayeredView group_induced_layers(const AbelianGroup& gamma, const GeneratingSet& s,
                                 const std::vector<GroupElem>& s_sub);

// K □ P_l laid out as a layered view, used for exercising zigzag cycles on
// arbitrary Hamiltonian layer graphs.
LayeredView grid_layers(const Graph& k, int l);

}  // namespace hamsym
