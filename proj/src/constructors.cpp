#include "hamsym/constructors.hpp"

#include <algorithm>
#include <numeric>

#include "hamsym/autgroup.hpp"
#include "hamsym/error.hpp"
#include "hamsym/hamilton.hpp"

namespace hamsym {

namespace {

void require(bool ok, ErrorCode code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

void require_cap(long n) {
  require(n <= kMaxVertices, ErrorCode::CapExceeded,
          std::to_string(n) + " vertices exceeds cap " + std::to_string(kMaxVertices));
}

}  // namespace

Graph cycle_graph(int n) {
  require(n >= 3, ErrorCode::TooSmall, "cycle needs at least 3 vertices");
  require_cap(n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 1, ErrorCode::TooSmall, "complete graph needs at least 1 vertex");
  require_cap(n);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

Graph complete_bipartite(int m, int mp) {
  require(m >= 1 && mp >= 1, ErrorCode::TooSmall, "both sides need at least 1 vertex");
  require_cap(static_cast<long>(m) + mp);
  std::vector<Edge> edges;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < mp; ++j) edges.emplace_back(i, m + j);
  return Graph::from_edge_list(m + mp, edges);
}

Graph path_graph(int n) {
  require(n >= 1, ErrorCode::TooSmall, "path needs at least 1 vertex");
  require_cap(n);
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, edges);
}

std::vector<int> ProductView::coords(int v) const {
  std::vector<int> c(factors.size());
  for (int i = static_cast<int>(factors.size()) - 1; i >= 0; --i) {
    c[i] = v % factors[i].order();
    v /= factors[i].order();
  }
  return c;
}

int ProductView::vertex(const std::vector<int>& c) const {
  int v = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) v = v * factors[i].order() + c[i];
  return v;
}

std::vector<Edge> ProductView::direction_class(int i) const {
  std::vector<Edge> out;
  for (const auto& [e, d] : direction)
    if (d == i) out.push_back(e);
  return out;
}

ProductView cartesian_product(const std::vector<Graph>& factors) {
  require(!factors.empty(), ErrorCode::TooSmall, "product needs at least one factor");
  long total = 1;
  for (const Graph& f : factors) {
    require(f.order() >= 1, ErrorCode::TooSmall, "empty factor");
    total *= f.order();
    require_cap(total);
  }
  ProductView pv;
  pv.factors = factors;
  int n = static_cast<int>(total);
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    auto c = pv.coords(v);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      int here = c[i];
      factors[i].neighbors(here).for_each([&](int w) {
        if (w < here) return;
        c[i] = w;
        Edge e(v, pv.vertex(c));
        edges.push_back(e);
        pv.direction[e] = static_cast<int>(i);
        c[i] = here;
      });
    }
  }
  pv.graph = Graph::from_edge_list(n, edges);
  return pv;
}

ProductView cartesian_product(const Graph& g, const Graph& h) { return cartesian_product({g, h}); }

ProductView cartesian_power(const Graph& g, int r) {
  require(r >= 1, ErrorCode::TooSmall, "power exponent must be at least 1");
  return cartesian_product(std::vector<Graph>(r, g));
}

ProductView prism(int k) {
  require(k >= 3, ErrorCode::TooSmall, "prism needs k >= 3");
  ProductView pv = cartesian_product(cycle_graph(k), complete_graph(2));
  std::vector<std::string> labels(2 * k);
  for (int i = 0; i < k; ++i) {
    labels[2 * i] = "v" + std::to_string(i);
    labels[2 * i + 1] = "u" + std::to_string(i);
  }
  pv.graph = pv.graph.with_labels(std::move(labels));
  return pv;
}

Graph cayley_graph_on_subgroup(const AbelianGroup& gamma, const std::vector<int>& members,
                               const std::vector<int>& gens) {
  require_cap(static_cast<long>(members.size()));
  std::vector<int> pos(gamma.order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) pos[members[i]] = static_cast<int>(i);
  std::vector<Edge> edges;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < members.size(); ++i) {
    GroupElem x = gamma.element(members[i]);
    labels.push_back(gamma.format(x));
    for (int s : gens) {
      int y = gamma.index_of(gamma.add(x, gamma.element(s)));
      require(pos[y] >= 0, ErrorCode::NotApplicable, "generator leaves the subgroup");
      if (pos[y] != static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), pos[y]);
    }
  }
  return Graph::from_edge_list(static_cast<int>(members.size()), edges).with_labels(std::move(labels));
}

Graph cayley_graph(const AbelianGroup& gamma, const GeneratingSet& s) {
  std::vector<int> all(gamma.order());
  std::iota(all.begin(), all.end(), 0);
  return cayley_graph_on_subgroup(gamma, all, s.indices());
}

OrderSplit split_by_orders(const AbelianGroup& gamma, const GeneratingSet& s, int p) {
  require(p >= 2 && gamma.order() % p == 0, ErrorCode::NotApplicable,
          std::to_string(p) + " does not divide |Γ|");
  for (int d = 2; d * d <= p; ++d)
    require(p % d != 0, ErrorCode::NotApplicable, std::to_string(p) + " is not prime");
  OrderSplit out;
  std::vector<int> p_idx, q_idx;
  for (int i = 0; i < s.size(); ++i) {
    const GroupElem& x = s.elems()[i];
    int ord = gamma.order_of(x);
    int rest = ord;
    while (rest % p == 0) rest /= p;
    if (rest == ord) {
      out.coprime_part.push_back(x);
      q_idx.push_back(s.indices()[i]);
    } else if (rest == 1) {
      out.p_part.push_back(x);
      p_idx.push_back(s.indices()[i]);
    } else {
      throw Error(ErrorCode::NotApplicable,
                  "generator " + gamma.format(x) + " has mixed order " + std::to_string(ord));
    }
  }
  out.p_subgroup = gamma.subgroup(p_idx);
  out.coprime_subgroup = gamma.subgroup(q_idx);
  Graph a = cayley_graph_on_subgroup(gamma, out.p_subgroup, p_idx);
  Graph b = cayley_graph_on_subgroup(gamma, out.coprime_subgroup, q_idx);
  out.product = cartesian_product(a, b);
  require(out.product.graph.order() == gamma.order(), ErrorCode::NotApplicable,
          "subgroups do not form a direct product");

  // (x, y) -> x + y
  std::vector<int> img(gamma.order(), -1);
  std::vector<char> hit(gamma.order(), 0);
  for (int v = 0; v < out.product.graph.order(); ++v) {
    auto c = out.product.coords(v);
    int sum = gamma.add_index(out.p_subgroup[c[0]], out.coprime_subgroup[c[1]]);
    require(!hit[sum], ErrorCode::NotApplicable, "subgroups intersect nontrivially");
    hit[sum] = 1;
    img[v] = sum;
  }
  out.isomorphism = Perm(img);
  Graph cay = cayley_graph(gamma, s);
  for (int u = 0; u < cay.order(); ++u)
    for (int v = u + 1; v < cay.order(); ++v)
      require(out.product.graph.adjacent(u, v) == cay.adjacent(img[u], img[v]),
              ErrorCode::NotApplicable, "order split is not a Cartesian decomposition");
  require(is_isomorphic(out.product.graph, cay), ErrorCode::NotApplicable,
          "canonical forms disagree");
  return out;
}

int truncation_vertex(const Graph& g, int v, int x) {
  int rank = 0;
  bool found = false;
  g.neighbors(v).for_each([&](int w) {
    if (w < x) ++rank;
    if (w == x) found = true;
  });
  require(found, ErrorCode::EdgeNotPresent, "not a neighbor");
  return 3 * v + rank;
}

Graph truncation(const Graph& g) {
  require(is_regular(g, 3), ErrorCode::NotCubic, "truncation needs a cubic graph");
  require(is_connected(g), ErrorCode::NotCubic, "truncation needs a connected graph");
  require_cap(3L * g.order());
  std::vector<Edge> edges;
  for (int v = 0; v < g.order(); ++v) {
    edges.emplace_back(3 * v, 3 * v + 1);
    edges.emplace_back(3 * v, 3 * v + 2);
    edges.emplace_back(3 * v + 1, 3 * v + 2);
  }
  for (const Edge& e : g.edges())
    edges.emplace_back(truncation_vertex(g, e.u, e.v), truncation_vertex(g, e.v, e.u));
  return Graph::from_edge_list(3 * g.order(), edges);
}

Graph regular_gadget(int d, int n) {
  require(d >= 2 && n >= 3, ErrorCode::TooSmall, "gadget needs d >= 2 and n >= 3");
  require_cap(static_cast<long>(n) * (d + 1));
  int m = d + 1;
  std::vector<Edge> edges;
  for (int c = 0; c < n; ++c) {
    int base = c * m;
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j)
        if (!(i == 0 && j == 1)) edges.emplace_back(base + i, base + j);
    // Local vertex 1 of this copy links to local vertex 0 of the next one.
    edges.emplace_back(base + 1, ((c + 1) % n) * m);
  }
  return Graph::from_edge_list(n * m, edges);
}

Graph complement_of_cycle(int n) {
  require(n >= 5, ErrorCode::TooSmall, "K_n minus C_n needs n >= 5");
  return complement(cycle_graph(n));
}

bool verify_layered_view(const LayeredView& lv) {
  int l = lv.layer_count();
  if (l == 0) return false;
  int k = lv.layer_size();
  std::vector<char> seen(lv.graph.order(), 0);
  for (const auto& layer : lv.layers) {
    if (static_cast<int>(layer.size()) != k) return false;
    for (int v : layer) {
      if (v < 0 || v >= lv.graph.order() || seen[v]) return false;
      seen[v] = 1;
    }
  }
  if (k * l != lv.graph.order()) return false;
  for (int j = 0; j + 1 < l; ++j) {
    for (int i = 0; i < k; ++i)
      if (!lv.graph.adjacent(lv.layers[j][i], lv.layers[j + 1][i])) return false;
    for (int i = 0; i < k; ++i)
      for (int i2 = i + 1; i2 < k; ++i2)
        if (lv.graph.adjacent(lv.layers[j][i], lv.layers[j][i2]) !=
            lv.graph.adjacent(lv.layers[j + 1][i], lv.layers[j + 1][i2]))
          return false;
  }
  if (!(lv.graph.induced(lv.layers[0]) == lv.layer_graph)) return false;
  if (static_cast<int>(lv.layer_cycle.size()) != k || k < 3) return false;
  std::vector<char> used(k, 0);
  for (int i = 0; i < k; ++i) {
    int a = lv.layer_cycle[i];
    if (a < 0 || a >= k || used[a]) return false;
    used[a] = 1;
    if (!lv.layer_graph.adjacent(a, lv.layer_cycle[(i + 1) % k])) return false;
  }
  return true;
}

LayeredView group_induced_layers(const AbelianGroup& gamma, const GeneratingSet& s,
                                 const std::vector<GroupElem>& s_sub) {
  std::vector<int> sub_idx;
  for (const auto& x : s_sub) {
    int i = gamma.index_of(x);
    require(std::binary_search(s.indices().begin(), s.indices().end(), i), ErrorCode::NotApplicable,
            gamma.format(x) + " is not in S");
    sub_idx.push_back(i);
  }
  std::sort(sub_idx.begin(), sub_idx.end());
  sub_idx.erase(std::unique(sub_idx.begin(), sub_idx.end()), sub_idx.end());
  std::vector<int> delta = gamma.subgroup(sub_idx);
  require(delta.size() >= 3, ErrorCode::NotApplicable, "<S'> has fewer than 3 elements");
  std::vector<int> meet;
  std::set_intersection(delta.begin(), delta.end(), s.indices().begin(), s.indices().end(),
                        std::back_inserter(meet));
  require(meet == sub_idx, ErrorCode::NotApplicable, "<S'> ∩ S differs from S'");

  int n = gamma.order();
  int k = static_cast<int>(delta.size());
  int l = n / k;
  // Coset ids, numbered by smallest member.
  std::vector<int> coset(n, -1);
  std::vector<int> coset_rep;
  for (int x = 0; x < n; ++x) {
    if (coset[x] >= 0) continue;
    int id = static_cast<int>(coset_rep.size());
    coset_rep.push_back(x);
    for (int d : delta) coset[gamma.add_index(x, d)] = id;
  }
  std::vector<int> rest;
  std::set_difference(s.indices().begin(), s.indices().end(), sub_idx.begin(), sub_idx.end(),
                      std::back_inserter(rest));
  std::vector<Edge> qedges;
  for (int c = 0; c < l; ++c)
    for (int t : rest) {
      int d = coset[gamma.add_index(coset_rep[c], t)];
      if (d != c) qedges.emplace_back(c, d);
    }
  Graph quotient = Graph::from_edge_list(l, qedges);
  auto path = find_hamiltonian_path(quotient, 0);
  require(path.has_value(), ErrorCode::NotApplicable, "quotient Cayley graph has no Hamiltonian path");

  LayeredView lv;
  lv.graph = cayley_graph(gamma, s);
  lv.layers.assign(l, {});
  for (int d : delta) lv.layers[0].push_back(gamma.add_index(coset_rep[(*path)[0]], d));
  for (int j = 0; j + 1 < l; ++j) {
    int step = -1;
    for (int t : rest)
      if (coset[gamma.add_index(coset_rep[(*path)[j]], t)] == (*path)[j + 1]) {
        step = t;
        break;
      }
    for (int v : lv.layers[j]) lv.layers[j + 1].push_back(gamma.add_index(v, step));
  }
  lv.layer_graph = lv.graph.induced(lv.layers[0]);
  auto cyc = find_hamiltonian_cycle(lv.layer_graph);
  require(cyc.has_value(), ErrorCode::NotApplicable, "layer graph is not Hamiltonian");
  lv.layer_cycle = *cyc;
  require(verify_layered_view(lv), ErrorCode::NotApplicable, "layer axioms failed");
  return lv;
}

LayeredView grid_layers(const Graph& k, int l) {
  require(l >= 1, ErrorCode::TooSmall, "need at least one layer");
  auto cyc = find_hamiltonian_cycle(k);
  require(cyc.has_value(), ErrorCode::NotHamiltonian, "layer graph is not Hamiltonian");
  ProductView pv = cartesian_product(k, path_graph(l));
  LayeredView lv;
  lv.graph = pv.graph;
  lv.layers.assign(l, {});
  for (int j = 0; j < l; ++j)
    for (int i = 0; i < k.order(); ++i) lv.layers[j].push_back(pv.vertex({i, j}));
  lv.layer_graph = lv.graph.induced(lv.layers[0]);
  lv.layer_cycle = *cyc;
  require(verify_layered_view(lv), ErrorCode::NotApplicable, "layer axioms failed");
  return lv;
}

}  // namespace hamsym
