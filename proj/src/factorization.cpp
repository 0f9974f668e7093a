#include "hamsym/factorization.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "hamsym/autgroup.hpp"
#include "hamsym/constructors.hpp"
#include "hamsym/error.hpp"
#include "hamsym/hamilton.hpp"

namespace hamsym {

namespace {

constexpr int kMaxEdgeClasses = 22;

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool is_prime_number(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Edge classes from the square property. Every merge is forced in any
// factorization, so the classes refine the direction classes of the prime one.
std::vector<int> edge_classes(const Graph& g, const std::vector<Edge>& edges, int& count) {
  int n = g.order();
  std::vector<int> id(n * n, -1);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    id[edges[i].u * n + edges[i].v] = static_cast<int>(i);
    id[edges[i].v * n + edges[i].u] = static_cast<int>(i);
  }
  auto eid = [&](int a, int b) { return id[a * n + b]; };
  UnionFind uf(static_cast<int>(edges.size()));
  for (int v = 0; v < n; ++v) {
    const VertexSet& nv = g.neighbors(v);
    nv.for_each([&](int u) {
      nv.for_each([&](int w) {
        if (w <= u) return;
        int squares = 0;
        if (!g.adjacent(u, w)) {
          VertexSet common = g.neighbors(u) & g.neighbors(w);
          common.for_each([&](int x) {
            if (x == v || g.adjacent(x, v)) return;
            ++squares;
            uf.unite(eid(u, v), eid(w, x));
            uf.unite(eid(v, w), eid(x, u));
          });
        }
        if (squares != 1) uf.unite(eid(u, v), eid(v, w));
      });
    });
  }
  std::vector<int> cls(edges.size());
  std::vector<int> remap(edges.size(), -1);
  count = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (remap[r] < 0) remap[r] = count++;
    cls[i] = remap[r];
  }
  return cls;
}

// Component index per vertex using only edges whose class is (or is not) in `mask`.
std::vector<int> components(const Graph& g, const std::vector<Edge>& edges, const std::vector<int>& cls,
                            std::uint32_t mask, bool inside, int& count) {
  int n = g.order();
  UnionFind uf(n);
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (((mask >> cls[i]) & 1u) == static_cast<std::uint32_t>(inside)) uf.unite(edges[i].u, edges[i].v);
  std::vector<int> comp(n), remap(n, -1);
  count = 0;
  for (int v = 0; v < n; ++v) {
    int r = uf.find(v);
    if (remap[r] < 0) remap[r] = count++;
    comp[v] = remap[r];
  }
  return comp;
}

struct Split {
  Graph a;
  Graph b;
  Perm iso;  // product(a, b) vertex -> g vertex
};

std::optional<Split> try_split(const Graph& g, const std::vector<Edge>& edges, const std::vector<int>& cls,
                               std::uint32_t mask) {
  int n = g.order();
  int na = 0, nb = 0;
  auto ca = components(g, edges, cls, mask, true, na);
  auto cb = components(g, edges, cls, mask, false, nb);
  // Every A-layer must meet every B-layer exactly once.
  if (na <= 1 || nb <= 1 || static_cast<long>(na) * nb != n) return std::nullopt;
  std::vector<int> at(static_cast<std::size_t>(na) * nb, -1);
  for (int v = 0; v < n; ++v) {
    int& slot = at[static_cast<std::size_t>(ca[v]) * nb + cb[v]];
    if (slot >= 0) return std::nullopt;
    slot = v;
  }
  std::vector<int> l0, m0;
  for (int v = 0; v < n; ++v) {
    if (ca[v] == ca[0]) l0.push_back(v);
    if (cb[v] == cb[0]) m0.push_back(v);
  }
  Graph a = g.induced(l0);
  Graph b = g.induced(m0);
  if (static_cast<long>(a.order()) * b.order() != n) return std::nullopt;
  if (static_cast<long>(a.size()) * b.order() + static_cast<long>(b.size()) * a.order() != g.size())
    return std::nullopt;
  // Product vertex (x, y) sits at x * |b| + y.
  std::vector<int> img(n);
  // (x, y) lies in the A-layer of m0[y] and the B-layer of l0[x].
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < b.order(); ++y) img[x * b.order() + y] = at[static_cast<std::size_t>(ca[m0[y]]) * nb + cb[l0[x]]];
  auto prod = cartesian_product(a, b).graph;
  for (const Edge& e : prod.edges())
    if (!g.adjacent(img[e.u], img[e.v])) return std::nullopt;
  return Split{std::move(a), std::move(b), Perm(img)};
}

void factor_into(const Graph& g, std::vector<Graph>& out) {
  int n = g.order();
  if (n <= 1) return;
  if (is_prime_number(n)) {
    out.push_back(g);
    return;
  }
  auto edges = g.edges();
  int count = 0;
  auto cls = edge_classes(g, edges, count);
  if (count > kMaxEdgeClasses)
    throw Error(ErrorCode::CapExceeded, std::to_string(count) + " edge classes exceed the split search limit");
  // Class 0 always goes with the first factor; every other subset is tried.
  for (std::uint32_t rest = 0; rest + 1 < (1u << (count - 1)); ++rest) {
    std::uint32_t mask = 1u | (rest << 1);
    if (auto s = try_split(g, edges, cls, mask)) {
      factor_into(s->a, out);
      factor_into(s->b, out);
      return;
    }
  }
  out.push_back(g);
}

}  // namespace

int Factorization::factor_count() const {
  int c = 0;
  for (const auto& f : prime_factors) c += f.multiplicity;
  return c;
}

std::vector<Graph> Factorization::expanded() const {
  std::vector<Graph> out;
  for (const auto& f : prime_factors)
    for (int i = 0; i < f.multiplicity; ++i) out.push_back(f.graph);
  return out;
}

Factorization prime_factorization(const Graph& g) {
  if (!is_connected(g)) throw Error(ErrorCode::Disconnected, "factorization needs a connected graph");
  std::vector<Graph> leaves;
  factor_into(g, leaves);

  Factorization f;
  for (const Graph& h : leaves) {
    auto cf = canonical_form(h);
    auto it = std::find_if(f.prime_factors.begin(), f.prime_factors.end(),
                           [&](const PrimeFactor& p) { return p.cert == cf.cert; });
    if (it != f.prime_factors.end()) {
      ++it->multiplicity;
    } else {
      f.prime_factors.push_back({relabel(h, cf.relabeling), 1, cf.cert});
    }
  }
  std::sort(f.prime_factors.begin(), f.prime_factors.end(), [](const PrimeFactor& x, const PrimeFactor& y) {
    if (x.graph.order() != y.graph.order()) return x.graph.order() < y.graph.order();
    return x.cert < y.cert;
  });

  if (f.prime_factors.empty()) {
    f.product = g;
    f.certificate = Perm::identity(g.order());
    return f;
  }
  f.product = cartesian_product(f.expanded()).graph;
  auto iso = find_isomorphism(f.product, g);
  if (!iso) throw Error(ErrorCode::NotApplicable, "reassembled product is not isomorphic to the input");
  for (const Edge& e : f.product.edges())
    if (!g.adjacent((*iso)(e.u), (*iso)(e.v)))
      throw Error(ErrorCode::NotApplicable, "factorization certificate failed verification");
  f.certificate = *iso;
  return f;
}

bool relatively_prime(const Graph& g, const Graph& h) {
  auto fg = prime_factorization(g);
  auto fh = prime_factorization(h);
  for (const auto& a : fg.prime_factors)
    for (const auto& b : fh.prime_factors)
      if (a.cert == b.cert) return false;
  return true;
}

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::InH: return "InH";
    case Verdict::NotInH: return "NotInH";
    case Verdict::Unknown: return "Unknown";
  }
  return "?";
}

namespace {

bool same_graph(const Graph& g, const Graph& h) {
  return g.order() == h.order() && g.size() == h.size() && is_isomorphic(g, h);
}

bool is_complete_graph(const Graph& g) {
  return 2L * g.size() == static_cast<long>(g.order()) * (g.order() - 1);
}

bool is_cycle_graph(const Graph& g) { return g.order() >= 3 && is_regular(g, 2) && is_connected(g); }

bool is_odd_cycle_or_c4(const Graph& g) {
  return is_cycle_graph(g) && (g.order() % 2 == 1 || g.order() == 4);
}

bool hamiltonian(const Graph& g) { return g.order() >= 3 && find_hamiltonian_cycle(g).has_value(); }

std::string describe(const std::vector<Graph>& parts) {
  std::string s;
  for (const Graph& p : parts) {
    if (!s.empty()) s += " x ";
    auto name = catalogue_name(p);
    if (name.empty()) name = p.order() == 2 ? "K2" : "G" + std::to_string(p.order());
    s += name;
  }
  return s;
}

Prediction verdict(Verdict v, std::string theorem, std::string detail) {
  return Prediction{v, std::move(theorem), std::move(detail)};
}

}  // namespace

std::string catalogue_name(const Graph& g) {
  int n = g.order();
  if (n >= 3 && is_complete_graph(g)) return "K" + std::to_string(n);
  if (is_cycle_graph(g)) return "C" + std::to_string(n);
  if (!is_connected(g)) return "";
  int m = n / 2;
  if (n % 2 == 0 && m >= 2 && g.size() == m * m && is_regular(g, m) && is_bipartite(g))
    return "K" + std::to_string(m) + "," + std::to_string(m);
  if (n == 8 && is_regular(g, 3) && same_graph(g, prism(4).graph)) return "Q3";
  if (n % 4 == 2 && n >= 6 && is_regular(g, 3) && same_graph(g, prism(m).graph))
    return "C" + std::to_string(m) + "xK2";
  return "";
}

Prediction classify_by_theorems(const Graph& g, const std::optional<CayleyHint>& hint) {
  int n = g.order();
  if (n < 3 || !is_connected(g)) return verdict(Verdict::NotInH, "not-hamiltonian", "fewer than 3 vertices or disconnected");

  if (auto name = catalogue_name(g); !name.empty()) return verdict(Verdict::InH, "catalogue", name);

  std::optional<Factorization> fac;
  try {
    fac = prime_factorization(g);
  } catch (const Error&) {
  }
  if (fac && fac->factor_count() >= 2) {
    const auto& pf = fac->prime_factors;
    auto power = [&](std::size_t i, int r) { return std::vector<Graph>(r, pf[i].graph); };
    auto product_of = [&](const std::vector<Graph>& parts) {
      return parts.size() == 1 ? parts[0] : cartesian_product(parts).graph;
    };
    int k = static_cast<int>(pf.size());

    // Two relatively prime Hamiltonian factors.
    if (k >= 2 && k <= 8) {
      for (std::uint32_t mask = 1; mask + 1 < (1u << k); ++mask) {
        if (!(mask & 1u)) continue;  // each unordered split once
        std::vector<Graph> xs, ys;
        for (int i = 0; i < k; ++i) {
          auto p = power(i, pf[i].multiplicity);
          auto& dst = (mask >> i) & 1u ? xs : ys;
          dst.insert(dst.end(), p.begin(), p.end());
        }
        Graph x = product_of(xs), y = product_of(ys);
        if (hamiltonian(x) && hamiltonian(y))
          return verdict(Verdict::NotInH, "relatively-prime-product", describe(xs) + " | " + describe(ys));
      }
    }
    // Power of a Hamiltonian prime.
    if (k == 1 && hamiltonian(pf[0].graph))
      return verdict(Verdict::NotInH, "prime-power",
                     describe({pf[0].graph}) + "^" + std::to_string(pf[0].multiplicity));
    // X □ K2 with X Hamiltonian.
    for (int i = 0; i < k; ++i) {
      if (pf[i].graph.order() != 2) continue;
      std::vector<Graph> xs;
      for (int j = 0; j < k; ++j) {
        auto p = power(j, pf[j].multiplicity - (j == i ? 1 : 0));
        xs.insert(xs.end(), p.begin(), p.end());
      }
      Graph x = product_of(xs);
      if (!hamiltonian(x)) break;
      if (is_odd_cycle_or_c4(x))
        return verdict(Verdict::InH, "product-with-K2", catalogue_name(x) + " x K2");
      return verdict(Verdict::NotInH, "product-with-K2", describe(xs) + " x K2");
    }
  }

  if (hint && hint->group.order() == n) {
    const auto& gamma = hint->group;
    auto cay = cayley_graph(gamma, hint->gens);
    if (!same_graph(cay, g)) return verdict(Verdict::Unknown, "", "Cayley hint does not match the graph");
    if (n % 2 == 1)
      return verdict(Verdict::NotInH, "odd-order-cayley", gamma.name() + ", not complete and not a cycle");
    if (n >= 4) {
      const auto& idx = hint->gens.indices();
      for (int s : idx) {
        int ms = gamma.neg_index(s);
        std::vector<int> rest;
        for (int t : idx)
          if (t != s && t != ms) rest.push_back(t);
        if (static_cast<int>(gamma.subgroup(rest).size()) < n)
          return verdict(Verdict::NotInH, "even-order-cayley",
                         gamma.name() + ", removing +-" + gamma.format(gamma.element(s)) + " leaves a proper subgroup");
      }
      return verdict(Verdict::Unknown, "", "every generator pair is redundant");
    }
  }
  return verdict(Verdict::Unknown, "", "no theorem applies");
}

}  // namespace hamsym
