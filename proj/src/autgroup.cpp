#include "hamsym/autgroup.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>

#include "hamsym/error.hpp"

namespace hamsym {

ColoredGraph ColoredGraph::plain(Graph g) {
  ColoredGraph cg;
  cg.vcolor.assign(g.order(), 0);
  cg.graph = std::move(g);
  return cg;
}

ColoredGraph ColoredGraph::marking(Graph g, std::span<const Edge> marked) {
  ColoredGraph cg = plain(std::move(g));
  for (const Edge& e : marked) {
    if (e.u < 0 || e.v >= cg.graph.order() || e.u == e.v || !cg.graph.adjacent(e.u, e.v))
      throw Error(ErrorCode::EdgeNotPresent,
                  "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")");
    cg.ecolor[e] = 1;
  }
  return cg;
}

Graph relabel(const Graph& g, const Perm& relabeling) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) edges.emplace_back(relabeling(e.u), relabeling(e.v));
  return Graph::from_edge_list(g.order(), edges);
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return h ^ x;
}

struct Partition {
  std::vector<int> lab;         // vertex at each position
  std::vector<int> start_of;    // start position of the cell containing each position
  std::vector<int> len_at;      // cell length, valid at cell starts
  int cells = 0;

  int n() const { return static_cast<int>(lab.size()); }
  bool discrete() const { return cells == n(); }
  int position_of(int v) const {
    for (int i = 0; i < n(); ++i)
      if (lab[i] == v) return i;
    return -1;
  }
};

class Searcher {
 public:
  explicit Searcher(const ColoredGraph& cg) : cg_(cg), n_(cg.graph.order()) {
    for (const auto& [e, c] : cg.ecolor)
      if (c < 0) throw Error(ErrorCode::VertexOutOfRange, "negative edge color");
    int m = 1;
    for (const auto& [e, c] : cg.ecolor) m = std::max(m, c + 1);
    layers_.assign(m, std::vector<VertexSet>(n_));
    for (const Edge& e : cg.graph.edges()) {
      int c = cg.edge_color(e);
      layers_[c][e.u].set(e.v);
      layers_[c][e.v].set(e.u);
    }
    if (static_cast<int>(cg.vcolor.size()) != n_)
      throw Error(ErrorCode::VertexOutOfRange, "vertex color vector has wrong length");
  }

  void run() {
    Partition root;
    root.lab.resize(n_);
    std::iota(root.lab.begin(), root.lab.end(), 0);
    std::stable_sort(root.lab.begin(), root.lab.end(),
                     [&](int a, int b) { return cg_.vcolor[a] < cg_.vcolor[b]; });
    root.start_of.assign(n_, 0);
    root.len_at.assign(n_, 0);
    std::vector<int> starts;
    for (int i = 0; i < n_;) {
      int j = i;
      while (j < n_ && cg_.vcolor[root.lab[j]] == cg_.vcolor[root.lab[i]]) ++j;
      for (int k = i; k < j; ++k) root.start_of[k] = i;
      root.len_at[i] = j - i;
      starts.push_back(i);
      ++root.cells;
      i = j;
    }
    std::uint64_t t = refine(root, starts, mix(0, static_cast<std::uint64_t>(n_)));
    cur_trace_.assign(1, t);
    prefix_.clear();
    if (n_ == 0) {
      best_lab_ = {};
      best_cert_ = certificate(root);
      have_first_ = true;
      return;
    }
    search(root, 0);
  }

  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<int>& best_lab() const { return best_lab_; }
  const std::vector<std::uint64_t>& best_cert() const { return best_cert_; }
  int edge_colors() const { return static_cast<int>(layers_.size()); }
  SearchStats stats;

 private:
  // Splits cells by neighbor counts until equitable. Returns the trace hash.
  std::uint64_t refine(Partition& p, const std::vector<int>& initial, std::uint64_t h) {
    std::vector<char> queued(n_, 0);
    std::vector<int> queue;
    queue.reserve(2 * n_);
    for (int s : initial) {
      queue.push_back(s);
      queued[s] = 1;
    }
    std::vector<int> count(n_);
    std::vector<std::pair<int, int>> scratch;
    for (std::size_t head = 0; head < queue.size() && !p.discrete(); ++head) {
      int w = queue[head];
      queued[w] = 0;
      VertexSet splitter;
      for (int i = w; i < w + p.len_at[w]; ++i) splitter.set(p.lab[i]);
      for (std::size_t c = 0; c < layers_.size() && !p.discrete(); ++c) {
        const auto& layer = layers_[c];
        for (int v = 0; v < n_; ++v) count[v] = layer[v].count_and(splitter);
        for (int s = 0; s < n_;) {
          int len = p.len_at[s];
          if (len > 1) {
            int c0 = count[p.lab[s]];
            bool uniform = true;
            for (int i = s + 1; i < s + len; ++i)
              if (count[p.lab[i]] != c0) {
                uniform = false;
                break;
              }
            if (!uniform) {
              scratch.clear();
              for (int i = s; i < s + len; ++i) scratch.emplace_back(count[p.lab[i]], p.lab[i]);
              std::sort(scratch.begin(), scratch.end());
              h = mix(h, (static_cast<std::uint64_t>(s) << 32) | (c << 16) | static_cast<std::uint64_t>(w));
              int frag = s;
              for (int i = 0; i < len; ++i) {
                p.lab[s + i] = scratch[i].second;
                if (i > 0 && scratch[i].first != scratch[i - 1].first) {
                  p.len_at[frag] = s + i - frag;
                  h = mix(h, (static_cast<std::uint64_t>(scratch[i - 1].first) << 32) |
                                 static_cast<std::uint64_t>(p.len_at[frag]));
                  frag = s + i;
                  ++p.cells;
                }
                p.start_of[s + i] = frag;
              }
              p.len_at[frag] = s + len - frag;
              h = mix(h, (static_cast<std::uint64_t>(scratch[len - 1].first) << 32) |
                             static_cast<std::uint64_t>(p.len_at[frag]));
              for (int f = s; f < s + len; f += p.len_at[f])
                if (!queued[f]) {
                  queued[f] = 1;
                  queue.push_back(f);
                }
            }
          }
          s += len;
        }
      }
    }
    return mix(h, static_cast<std::uint64_t>(p.cells));
  }

  void individualize(Partition& p, int v) {
    int pos = p.position_of(v);
    int s = p.start_of[pos];
    int len = p.len_at[s];
    std::swap(p.lab[pos], p.lab[s]);
    p.len_at[s] = 1;
    p.len_at[s + 1] = len - 1;
    for (int i = s + 1; i < s + len; ++i) p.start_of[i] = s + 1;
    ++p.cells;
  }

  int target_cell(const Partition& p) const {
    int best = -1;
    for (int s = 0; s < n_; s += p.len_at[s])
      if (p.len_at[s] > 1 && (best < 0 || p.len_at[s] < p.len_at[best])) best = s;
    return best;
  }

  std::vector<std::uint64_t> certificate(const Partition& p) const {
    std::vector<std::uint64_t> cert;
    cert.push_back(static_cast<std::uint64_t>(n_));
    for (int i = 0; i < n_; ++i) cert.push_back(static_cast<std::uint64_t>(cg_.vcolor[p.lab[i]]));
    std::vector<int> pos(n_);
    for (int i = 0; i < n_; ++i) pos[p.lab[i]] = i;
    for (const auto& layer : layers_) {
      for (int i = 0; i < n_; ++i) {
        std::array<std::uint64_t, VertexSet::kWords> row{};
        layer[p.lab[i]].for_each([&](int w) {
          int j = pos[w];
          row[j >> 6] |= std::uint64_t{1} << (63 - (j & 63));
        });
        for (auto word : row) cert.push_back(word);
      }
    }
    return cert;
  }

  // Lexicographic comparison of the current trace prefix against `other`.
  static int compare_prefix(const std::vector<std::uint64_t>& cur,
                            const std::vector<std::uint64_t>& other) {
    std::size_t len = std::min(cur.size(), other.size());
    for (std::size_t i = 0; i < len; ++i) {
      if (cur[i] < other[i]) return -1;
      if (cur[i] > other[i]) return 1;
    }
    if (cur.size() > other.size()) return 1;
    return 0;
  }

  std::size_t common_prefix(const std::vector<int>& a, const std::vector<int>& b) const {
    std::size_t k = 0;
    while (k < a.size() && k < b.size() && a[k] == b[k]) ++k;
    return k;
  }

  void add_generator(const std::vector<int>& from_lab, const std::vector<int>& to_lab) {
    std::vector<int> img(n_);
    for (int i = 0; i < n_; ++i) img[from_lab[i]] = to_lab[i];
    Perm g(std::move(img));
    if (g.is_identity()) return;
    if (!preserves_colors(g))
      throw Error(ErrorCode::Inconclusive, "internal: search produced a non-automorphism");
    gens_.push_back(std::move(g));
  }

  bool preserves_colors(const Perm& g) const {
    for (int v = 0; v < n_; ++v)
      if (cg_.vcolor[v] != cg_.vcolor[g(v)]) return false;
    for (const auto& layer : layers_)
      for (int v = 0; v < n_; ++v) {
        VertexSet image;
        layer[v].for_each([&](int w) { image.set(g(w)); });
        if (image != layer[g(v)]) return false;
      }
    return true;
  }

  // Orbit representatives under generators fixing the current prefix pointwise.
  std::vector<int> stabilizer_orbit_min() const {
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& g : gens_) {
      bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](int v) { return g(v) == v; });
      if (!fixes) continue;
      for (int x = 0; x < n_; ++x) {
        int a = find(x), b = find(g(x));
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<int> rep(n_);
    for (int x = 0; x < n_; ++x) rep[x] = find(x);
    return rep;
  }

  void leaf(const Partition& p) {
    ++stats.leaves;
    std::vector<std::uint64_t> cert = certificate(p);
    if (!have_first_) {
      have_first_ = true;
      first_lab_ = best_lab_ = p.lab;
      first_cert_ = best_cert_ = cert;
      first_trace_ = best_trace_ = cur_trace_;
      first_prefix_ = best_prefix_ = prefix_;
      return;
    }
    if (cur_trace_ == first_trace_ && cert == first_cert_) {
      add_generator(first_lab_, p.lab);
      jump_ = static_cast<int>(common_prefix(prefix_, first_prefix_));
      return;
    }
    int cmp = compare_prefix(cur_trace_, best_trace_);
    if (cmp == 0 && cert == best_cert_) {
      add_generator(best_lab_, p.lab);
      jump_ = static_cast<int>(common_prefix(prefix_, best_prefix_));
      return;
    }
    if (cmp > 0 || (cmp == 0 && cert > best_cert_)) {
      best_lab_ = p.lab;
      best_cert_ = std::move(cert);
      best_trace_ = cur_trace_;
      best_prefix_ = prefix_;
    }
  }

  void search(const Partition& p, int depth) {
    ++stats.nodes;
    if (p.discrete()) {
      leaf(p);
      return;
    }
    int s = target_cell(p);
    std::vector<int> cands(p.lab.begin() + s, p.lab.begin() + s + p.len_at[s]);
    std::sort(cands.begin(), cands.end());
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    std::vector<int> rep;
    for (int v : cands) {
      if (gens_seen != gens_.size()) {
        rep = stabilizer_orbit_min();
        gens_seen = gens_.size();
      }
      // Skip v when a smaller candidate in its orbit was already handled.
      bool pruned = false;
      for (int u : cands) {
        if (u >= v) break;
        if (rep[u] == rep[v]) {
          pruned = true;
          break;
        }
      }
      if (pruned) continue;

      Partition child = p;
      individualize(child, v);
      std::uint64_t t = refine(child, {child.start_of[child.position_of(v)]},
                               mix(cur_trace_.back(), static_cast<std::uint64_t>(s)));
      prefix_.push_back(v);
      cur_trace_.push_back(t);
      bool prune = false;
      if (have_first_) {
        bool eq_first = compare_prefix(cur_trace_, first_trace_) == 0 &&
                        cur_trace_.size() <= first_trace_.size();
        int cmp = compare_prefix(cur_trace_, best_trace_);
        if (!eq_first && cmp < 0) prune = true;
      }
      if (!prune) search(child, depth + 1);
      prefix_.pop_back();
      cur_trace_.pop_back();
      if (jump_ >= 0) {
        if (jump_ < depth) return;
        jump_ = -1;
      }
    }
  }

  const ColoredGraph& cg_;
  int n_;
  std::vector<std::vector<VertexSet>> layers_;

  std::vector<Perm> gens_;
  std::vector<int> prefix_;
  std::vector<std::uint64_t> cur_trace_;

  bool have_first_ = false;
  std::vector<int> first_lab_, best_lab_;
  std::vector<std::uint64_t> first_cert_, best_cert_;
  std::vector<std::uint64_t> first_trace_, best_trace_;
  std::vector<int> first_prefix_, best_prefix_;
  int jump_ = -1;
};

std::string encode_cert(const ColoredGraph& cg, const std::vector<int>& lab, int edge_colors) {
  int n = cg.graph.order();
  std::string out;
  auto put16 = [&](int x) {
    out.push_back(static_cast<char>(x & 0xff));
    out.push_back(static_cast<char>((x >> 8) & 0xff));
  };
  put16(n);
  put16(edge_colors);
  for (int i = 0; i < n; ++i) put16(cg.vcolor[lab[i]]);
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[lab[i]] = i;
  for (int c = 0; c < edge_colors; ++c) {
    int bit = 0;
    unsigned char acc = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int a = lab[i], b = lab[j];
        bool on = a != b && cg.graph.adjacent(a, b) && cg.edge_color(Edge(a, b)) == c;
        acc = static_cast<unsigned char>((acc << 1) | (on ? 1 : 0));
        if (++bit == 8) {
          out.push_back(static_cast<char>(acc));
          acc = 0;
          bit = 0;
        }
      }
    if (bit > 0) out.push_back(static_cast<char>(acc << (8 - bit)));
  }
  return out;
}

}  // namespace

CanonicalSearchResult canonical_search(const ColoredGraph& cg, SearchStats* stats) {
  Searcher searcher(cg);
  searcher.run();
  if (stats) *stats = searcher.stats;
  int n = cg.graph.order();
  const auto& lab = searcher.best_lab();
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[lab[i]] = i;
  CanonicalSearchResult result{
      PermGroup(n, searcher.generators()),
      CanonicalForm{n == 0 ? Perm() : Perm(pos), encode_cert(cg, lab, searcher.edge_colors())}};
  return result;
}

PermGroup automorphisms(const ColoredGraph& cg, SearchStats* stats) {
  return canonical_search(cg, stats).group;
}

PermGroup automorphisms(const Graph& g) { return automorphisms(ColoredGraph::plain(g)); }

CanonicalForm canonical_form(const ColoredGraph& cg) { return canonical_search(cg).form; }

CanonicalForm canonical_form(const Graph& g) { return canonical_form(ColoredGraph::plain(g)); }

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (degree_sequence(g) != degree_sequence(h)) return false;
  return canonical_form(g).cert == canonical_form(h).cert;
}

std::optional<Perm> find_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  auto cg = canonical_form(g);
  auto ch = canonical_form(h);
  if (cg.cert != ch.cert) return std::nullopt;
  if (g.order() == 0) return Perm();
  // g --cg--> canonical <--ch-- h
  return compose(inverse(ch.relabeling), cg.relabeling);
}

PermGroup stabilizer_of_edge_set(const Graph& g, std::span<const Edge> edges) {
  return automorphisms(ColoredGraph::marking(g, edges));
}

std::vector<std::vector<Edge>> edge_orbits(const Graph& g, const PermGroup& aut) {
  auto edges = g.edges();
  std::map<Edge, int> index;
  for (std::size_t i = 0; i < edges.size(); ++i) index[edges[i]] = static_cast<int>(i);
  std::vector<int> orbit(edges.size(), -1);
  std::vector<std::vector<Edge>> out;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (orbit[i] >= 0) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> queue{static_cast<int>(i)};
    orbit[i] = id;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Edge& e = edges[queue[head]];
      for (const Perm& p : aut.generators()) {
        int j = index.at(Edge(p(e.u), p(e.v)));
        if (orbit[j] < 0) {
          orbit[j] = id;
          queue.push_back(j);
        }
      }
    }
    for (int j : queue) out.back().push_back(edges[j]);
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::vector<std::vector<Edge>> edge_orbits(const Graph& g) { return edge_orbits(g, automorphisms(g)); }

}  // namespace hamsym
