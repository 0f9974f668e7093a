#include "hamsym/graph.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "hamsym/error.hpp"

namespace hamsym {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::MalformedHeader: return "MalformedHeader";
    case ErrorCode::TrailingGarbage: return "TrailingGarbage";
    case ErrorCode::EdgeNotPresent: return "EdgeNotPresent";
    case ErrorCode::DegreeMismatch: return "DegreeMismatch";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotGenerating: return "NotGenerating";
    case ErrorCode::ContainsIdentity: return "ContainsIdentity";
    case ErrorCode::NotInverseClosed: return "NotInverseClosed";
    case ErrorCode::NotApplicable: return "NotApplicable";
    case ErrorCode::NotCubic: return "NotCubic";
    case ErrorCode::NotHamiltonian: return "NotHamiltonian";
    case ErrorCode::NotACycleOfG: return "NotACycleOfG";
    case ErrorCode::SpecOutOfRange: return "SpecOutOfRange";
    case ErrorCode::LayersNotOdd: return "LayersNotOdd";
    case ErrorCode::FactorNotHamiltonian: return "FactorNotHamiltonian";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::Inconclusive: return "Inconclusive";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxVertices)
    throw Error(ErrorCode::CapExceeded,
                "vertex count " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxVertices));
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const Edge> edges) {
  check_order(n);
  Graph g;
  g.n_ = n;
  g.adj_.assign(n, VertexSet{});
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) + ") with n=" +
                      std::to_string(n));
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(e.u));
    if (!g.adj_[e.u].test(e.v)) ++g.edge_count_;
    g.adj_[e.u].set(e.v);
    g.adj_[e.v].set(e.u);
  }
  return g;
}

Graph Graph::from_rows(int n, std::vector<VertexSet> rows) {
  check_order(n);
  if (static_cast<int>(rows.size()) != n)
    throw Error(ErrorCode::VertexOutOfRange, "row count does not match vertex count");
  VertexSet all = VertexSet::prefix(n);
  int twice = 0;
  for (int v = 0; v < n; ++v) {
    if (rows[v].test(v)) throw Error(ErrorCode::SelfLoop, "self-loop at " + std::to_string(v));
    if (!minus(rows[v], all).empty())
      throw Error(ErrorCode::VertexOutOfRange, "row " + std::to_string(v) + " out of range");
    twice += rows[v].count();
  }
  for (int v = 0; v < n; ++v)
    rows[v].for_each([&](int u) {
      if (!rows[u].test(v)) throw Error(ErrorCode::VertexOutOfRange, "asymmetric adjacency");
    });
  Graph g;
  g.n_ = n;
  g.edge_count_ = twice / 2;
  g.adj_ = std::move(rows);
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (int u = 0; u < n_; ++u)
    for (int v = adj_[u].next(u); v >= 0; v = adj_[u].next(v)) out.emplace_back(u, v);
  return out;
}

Graph Graph::with_labels(std::vector<std::string> labels) const {
  if (static_cast<int>(labels.size()) != n_)
    throw Error(ErrorCode::VertexOutOfRange, "label count does not match vertex count");
  Graph g = *this;
  g.labels_ = std::move(labels);
  return g;
}

Graph Graph::induced(std::span<const int> verts) const {
  int m = static_cast<int>(verts.size());
  std::vector<VertexSet> rows(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (adj_[verts[i]].test(verts[j])) rows[i].set(j);
  Graph g = from_rows(m, std::move(rows));
  if (!labels_.empty()) {
    std::vector<std::string> l;
    for (int v : verts) l.push_back(labels_[v]);
    g.labels_ = std::move(l);
  }
  return g;
}

Graph Graph::spanning(std::span<const Edge> keep) const {
  for (const Edge& e : keep)
    if (e.u < 0 || e.v >= n_ || !adj_[e.u].test(e.v))
      throw Error(ErrorCode::EdgeNotPresent, "edge not in graph");
  Graph g = from_edge_list(n_, keep);
  g.labels_ = labels_;
  return g;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(g.order(), -1);
  if (g.order() == 0) return dist;
  std::deque<int> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    g.neighbors(u).for_each([&](int w) {
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    });
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() <= 1) return true;
  VertexSet seen = VertexSet::single(0);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next |= g.neighbors(v); });
    next.subtract(seen);
    seen |= next;
    frontier = next;
  }
  return seen.count() == g.order();
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      int u = queue.front();
      queue.pop_front();
      bool ok = true;
      g.neighbors(u).for_each([&](int w) {
        if (side[w] < 0) {
          side[w] = 1 - side[u];
          queue.push_back(w);
        } else if (side[w] == side[u]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> d(g.order());
  for (int v = 0; v < g.order(); ++v) d[v] = g.degree(v);
  std::sort(d.begin(), d.end());
  return d;
}

bool is_regular(const Graph& g, int d) {
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) != d) return false;
  return true;
}

std::optional<int> shortest_cycle_through_edge(const Graph& g, Edge e) {
  if (e.u < 0 || e.v >= g.order() || e.u == e.v || !g.adjacent(e.u, e.v))
    throw Error(ErrorCode::EdgeNotPresent,
                "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
  // BFS from u in g - e.
  std::vector<int> dist(g.order(), -1);
  std::deque<int> queue{e.u};
  dist[e.u] = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    if (x == e.v) return dist[x] + 1;
    g.neighbors(x).for_each([&](int w) {
      if (dist[w] >= 0) return;
      if (x == e.u && w == e.v) return;
      dist[w] = dist[x] + 1;
      queue.push_back(w);
    });
  }
  return std::nullopt;
}

std::optional<int> girth(const Graph& g) {
  std::optional<int> best;
  for (const Edge& e : g.edges()) {
    auto l = shortest_cycle_through_edge(g, e);
    if (l && (!best || *l < *best)) best = l;
  }
  return best;
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths (s,t non-adjacent),
// via unit-capacity augmenting paths on the vertex-split network.
int local_connectivity(const Graph& g, int s, int t, int limit) {
  int n = g.order();
  // Node 2v = v_in, 2v+1 = v_out.
  int nodes = 2 * n;
  std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
  for (int v = 0; v < n; ++v) {
    cap[2 * v][2 * v + 1] = (v == s || v == t) ? n : 1;
    g.neighbors(v).for_each([&](int w) { cap[2 * v + 1][2 * w] = n; });
  }
  int source = 2 * s + 1;
  int sink = 2 * t;
  int flow = 0;
  while (flow < limit) {
    std::vector<int> parent(nodes, -1);
    parent[source] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && parent[sink] < 0) {
      int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < nodes; ++y)
        if (parent[y] < 0 && cap[x][y] > 0) {
          parent[y] = x;
          queue.push_back(y);
        }
    }
    if (parent[sink] < 0) break;
    for (int y = sink; y != source; y = parent[y]) {
      --cap[parent[y]][y];
      ++cap[y][parent[y]];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  int n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  // Some vertex among the first best+1 lies outside a minimum separator.
  for (int s = 0; s < n && s <= best; ++s)
    for (int t = s + 1; t < n; ++t)
      if (!g.adjacent(s, t)) best = std::min(best, local_connectivity(g, s, t, best));
  return best;
}

Graph complement(const Graph& g) {
  int n = g.order();
  std::vector<VertexSet> rows(n);
  VertexSet all = VertexSet::prefix(n);
  for (int v = 0; v < n; ++v) {
    rows[v] = minus(all, g.neighbors(v));
    rows[v].reset(v);
  }
  return Graph::from_rows(n, std::move(rows));
}

}  // namespace hamsym
