#include "hamsym/hamilton.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "hamsym/autgroup.hpp"
#include "hamsym/error.hpp"

namespace hamsym {

namespace {

class Deadline {
 public:
  explicit Deadline(double seconds)
      : active_(seconds > 0),
        end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}
  bool expired() const { return active_ && std::chrono::steady_clock::now() >= end_; }

 private:
  bool active_;
  std::chrono::steady_clock::time_point end_;
};

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

bool is_complete(const Graph& g) {
  long n = g.order();
  return g.size() == n * (n - 1) / 2;
}

std::string edge_key(const std::vector<Edge>& edges) {
  std::string key;
  key.reserve(edges.size() * 2);
  for (const Edge& e : edges) {
    key.push_back(static_cast<char>(e.u));
    key.push_back(static_cast<char>(e.v));
  }
  return key;
}

// Every unvisited vertex still needs two usable neighbors, where usable means
// unvisited or one of the two path ends.
bool degrees_feasible(const Graph& g, const VertexSet& unvisited, int cur, int origin) {
  VertexSet avail = unvisited;
  avail.set(cur);
  avail.set(origin);
  for (int v = unvisited.first(); v >= 0; v = unvisited.next(v))
    if (g.neighbors(v).count_and(avail) < 2) return false;
  return unvisited.empty() || g.neighbors(origin).intersects(unvisited);
}

class Enumerator {
 public:
  Enumerator(const Graph& g, std::size_t cap, const std::function<bool(const std::vector<int>&)>& visit)
      : g_(g), cap_(cap), visit_(visit) {}

  bool run() {
    int n = g_.order();
    if (n < 3) return true;
    unvisited_ = minus(g_.all_vertices(), VertexSet::single(0));
    path_ = {0};
    dfs(0);
    return !stopped_;
  }

 private:
  void dfs(int cur) {
    if (unvisited_.empty()) {
      if (g_.adjacent(cur, 0) && path_[1] < cur) {
        if (emitted_ >= cap_ || !visit_(path_)) {
          stopped_ = true;
          return;
        }
        ++emitted_;
      }
      return;
    }
    VertexSet cand = g_.neighbors(cur) & unvisited_;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      path_.push_back(v);
      unvisited_.reset(v);
      if (degrees_feasible(g_, unvisited_, v, 0)) dfs(v);
      unvisited_.set(v);
      path_.pop_back();
      if (stopped_) return;
    }
  }

  const Graph& g_;
  std::size_t cap_;
  const std::function<bool(const std::vector<int>&)>& visit_;
  std::vector<int> path_;
  VertexSet unvisited_;
  std::size_t emitted_ = 0;
  bool stopped_ = false;
};

enum class SearchStatus { Found, Exhausted, LimitHit };

// Depth-first search preferring vertices with few free neighbors. With an rng
// the preference is perturbed so repeated calls explore different cycles.
class PathSearch {
 public:
  PathSearch(const Graph& g, bool closed, std::mt19937_64* rng, long node_limit)
      : g_(g), closed_(closed), rng_(rng), limit_(node_limit) {}

  SearchStatus run(int start) {
    unvisited_ = minus(g_.all_vertices(), VertexSet::single(start));
    path_ = {start};
    start_ = start;
    return dfs(start);
  }
  const std::vector<int>& path() const { return path_; }

 private:
  SearchStatus dfs(int cur) {
    if (limit_ > 0 && ++nodes_ > limit_) return SearchStatus::LimitHit;
    if (unvisited_.empty())
      return (!closed_ || g_.adjacent(cur, start_)) ? SearchStatus::Found : SearchStatus::Exhausted;
    VertexSet cand = g_.neighbors(cur) & unvisited_;
    std::vector<std::pair<double, int>> order;
    for (int v = cand.first(); v >= 0; v = cand.next(v)) {
      double key = g_.neighbors(v).count_and(unvisited_);
      if (rng_) key += std::uniform_real_distribution<double>(0.0, 2.5)(*rng_);
      order.emplace_back(key, v);
    }
    std::sort(order.begin(), order.end());
    bool limited = false;
    for (auto [key, v] : order) {
      path_.push_back(v);
      unvisited_.reset(v);
      bool ok = closed_ ? degrees_feasible(g_, unvisited_, v, start_) : true;
      SearchStatus st = ok ? dfs(v) : SearchStatus::Exhausted;
      if (st == SearchStatus::Found) return st;
      unvisited_.set(v);
      path_.pop_back();
      if (st == SearchStatus::LimitHit) {
        limited = true;
        break;
      }
    }
    return limited ? SearchStatus::LimitHit : SearchStatus::Exhausted;
  }

  const Graph& g_;
  bool closed_;
  std::mt19937_64* rng_;
  long limit_;
  long nodes_ = 0;
  int start_ = 0;
  std::vector<int> path_;
  VertexSet unvisited_;
};

std::optional<std::vector<int>> random_cycle(const Graph& g, std::mt19937_64& rng, long limit) {
  PathSearch s(g, true, &rng, limit);
  int start = std::uniform_int_distribution<int>(0, g.order() - 1)(rng);
  if (s.run(start) == SearchStatus::Found) return s.path();
  return std::nullopt;
}

struct Fingerprint {
  int kappa = 0;
  std::vector<int> orbit_ids;   // sorted edge-orbit ids along the cycle
  std::vector<int> chords;      // chords[d-2]: positions i with seq[i] ~ seq[i+d]

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

class FingerprintContext {
 public:
  FingerprintContext(const Graph& g, const PermGroup& aut) : g_(g), id_(g.order() * g.order(), -1) {
    auto orbits = edge_orbits(g, aut);
    for (std::size_t i = 0; i < orbits.size(); ++i)
      for (const Edge& e : orbits[i]) id_[e.u * g.order() + e.v] = static_cast<int>(i);
  }

  Fingerprint operator()(const HamCycle& c) const {
    Fingerprint f;
    f.kappa = kappa_of_cycle(g_, c);
    for (const Edge& e : c.edges()) f.orbit_ids.push_back(id_[e.u * g_.order() + e.v]);
    std::sort(f.orbit_ids.begin(), f.orbit_ids.end());
    int n = c.length();
    for (int d = 2; d <= n / 2; ++d) {
      int cnt = 0;
      for (int i = 0; i < n; ++i)
        if (g_.adjacent(c.seq[i], c.seq[(i + d) % n])) ++cnt;
      f.chords.push_back(cnt);
    }
    return f;
  }

 private:
  const Graph& g_;
  std::vector<int> id_;
};

BigInt ceil_div(const BigInt& a, const BigInt& b) { return (a + b - 1) / b; }

long clamp_long(const BigInt& x) {
  if (x > BigInt(std::numeric_limits<long>::max())) return std::numeric_limits<long>::max();
  return static_cast<long>(x);
}

}  // namespace

HamCycle HamCycle::normalized(std::vector<int> seq) {
  HamCycle c;
  if (seq.empty()) return c;
  auto it = std::min_element(seq.begin(), seq.end());
  std::rotate(seq.begin(), it, seq.end());
  if (seq.size() > 2 && seq.back() < seq[1]) std::reverse(seq.begin() + 1, seq.end());
  c.seq = std::move(seq);
  return c;
}

std::vector<Edge> HamCycle::edges() const {
  std::vector<Edge> out;
  int n = length();
  for (int i = 0; i < n; ++i) out.emplace_back(seq[i], seq[(i + 1) % n]);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_ham_cycle(const Graph& g, const std::vector<int>& seq) {
  int n = g.order();
  if (n < 3 || static_cast<int>(seq.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : seq) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  for (int i = 0; i < n; ++i)
    if (!g.adjacent(seq[i], seq[(i + 1) % n])) return false;
  return true;
}

HamCycle make_ham_cycle(const Graph& g, std::vector<int> seq) {
  if (!is_ham_cycle(g, seq)) throw Error(ErrorCode::NotACycleOfG, "sequence is not a Hamiltonian cycle");
  return HamCycle::normalized(std::move(seq));
}

bool for_each_ham_cycle(const Graph& g, std::size_t cap,
                        const std::function<bool(const std::vector<int>&)>& visit) {
  Enumerator e(g, cap, visit);
  return e.run();
}

CycleEnumeration enumerate_ham_cycles(const Graph& g, std::size_t cap) {
  CycleEnumeration out;
  bool done = for_each_ham_cycle(g, cap, [&](const std::vector<int>& seq) {
    out.cycles.push_back(HamCycle{seq});
    return true;
  });
  out.truncated = !done;
  return out;
}

BigInt count_ham_cycles(const Graph& g) {
  int n = g.order();
  if (n > kCountDpMaxOrder)
    throw Error(ErrorCode::TooLarge, "counting is limited to " + std::to_string(kCountDpMaxOrder) + " vertices");
  if (n < 3) return 0;
  // Paths start at vertex 0; bit j of a mask stands for vertex j+1.
  int m = n - 1;
  std::vector<std::uint32_t> nb(m, 0);
  for (int j = 0; j < m; ++j)
    for (int k = 0; k < m; ++k)
      if (g.adjacent(j + 1, k + 1)) nb[j] |= 1U << k;
  std::size_t full = std::size_t{1} << m;
  std::vector<std::uint64_t> dp(full * m, 0);
  for (int j = 0; j < m; ++j)
    if (g.adjacent(0, j + 1)) dp[(std::size_t{1} << j) * m + j] = 1;
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::uint64_t* row = &dp[mask * m];
    for (int j = 0; j < m; ++j) {
      std::uint64_t val = row[j];
      if (val == 0) continue;
      std::uint32_t ext = nb[j] & ~static_cast<std::uint32_t>(mask);
      while (ext != 0) {
        int k = std::countr_zero(ext);
        ext &= ext - 1;
        dp[(mask | (std::size_t{1} << k)) * m + k] += val;
      }
    }
  }
  BigInt total = 0;
  for (int j = 0; j < m; ++j)
    if (g.adjacent(0, j + 1)) total += dp[(full - 1) * m + j];
  return total / 2;
}

std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g) {
  int n = g.order();
  if (n < 3 || !is_connected(g)) return std::nullopt;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) < 2) return std::nullopt;
  {
    PathSearch s(g, true, nullptr, 200'000);
    SearchStatus st = s.run(0);
    if (st == SearchStatus::Found) return s.path();
    if (st == SearchStatus::Exhausted) return std::nullopt;
  }
  std::mt19937_64 rng(n);
  for (int attempt = 0; attempt < 16; ++attempt)
    if (auto c = random_cycle(g, rng, 100'000)) return c;
  PathSearch s(g, true, nullptr, 0);
  if (s.run(0) == SearchStatus::Found) return s.path();
  return std::nullopt;
}

std::optional<std::vector<int>> find_hamiltonian_path(const Graph& g, int start) {
  if (start < 0 || start >= g.order()) throw Error(ErrorCode::VertexOutOfRange, "bad start vertex");
  PathSearch s(g, false, nullptr, 0);
  if (s.run(start) == SearchStatus::Found) return s.path();
  return std::nullopt;
}

std::string cycle_certificate(const Graph& g, const HamCycle& c) {
  auto edges = c.edges();
  return canonical_form(ColoredGraph::marking(g, edges)).cert;
}

const char* class_method_name(ClassMethod m) {
  switch (m) {
    case ClassMethod::CountVsOrbitStabilizer: return "CountVsOrbitStabilizer";
    case ClassMethod::FullOrbitPartition: return "FullOrbitPartition";
    case ClassMethod::EarlyWitness: return "EarlyWitness";
    case ClassMethod::FullSymmetricGroup: return "FullSymmetricGroup";
  }
  return "?";
}

ClassReport is_ham_transitive(const Graph& g, const HamOptions& opts) {
  Deadline deadline(opts.budget_seconds);
  auto first = find_hamiltonian_cycle(g);
  if (!first) throw Error(ErrorCode::NotHamiltonian, "graph has no Hamiltonian cycle");
  HamCycle c0 = HamCycle::normalized(*first);
  int n = g.order();
  ClassReport r;
  r.representatives = {c0};

  if (is_complete(g)) {
    r.method = ClassMethod::FullSymmetricGroup;
    r.aut_order = factorial(n);
    r.total_cycles = factorial(n - 1) / 2;
    r.class_count = 1;
    return r;
  }

  PermGroup aut = automorphisms(g);
  r.aut_order = aut.order();
  auto c0_edges = c0.edges();
  BigInt orbit = r.aut_order / stabilizer_of_edge_set(g, c0_edges).order();
  FingerprintContext fingerprint(g, aut);
  Fingerprint f0 = fingerprint(c0);
  std::string cert0;
  auto inequivalent = [&](const HamCycle& c, bool use_cert) {
    if (fingerprint(c) != f0) return true;
    if (!use_cert) return false;
    if (cert0.empty()) cert0 = cycle_certificate(g, c0);
    return cycle_certificate(g, c) != cert0;
  };
  auto witness_report = [&](const HamCycle& other, ClassMethod method) {
    r.method = method;
    r.representatives.push_back(other);
    r.class_count = 2;
    r.lower_bound = true;
    return r;
  };

  if (orbit == 1) {
    // A cycle fixed by all of Aut: any second cycle is a witness.
    std::optional<HamCycle> other;
    for_each_ham_cycle(g, 2, [&](const std::vector<int>& seq) {
      if (HamCycle{seq} != c0) other = HamCycle{seq};
      return !other;
    });
    if (!other) {
      r.method = ClassMethod::FullOrbitPartition;
      r.total_cycles = 1;
      r.class_count = 1;
      return r;
    }
    r.total_cycles = 2;
    r.total_exact = false;
    return witness_report(*other, ClassMethod::EarlyWitness);
  }

  std::mt19937_64 rng(opts.seed);
  for (int attempt = 0; attempt < opts.witness_attempts && !deadline.expired(); ++attempt) {
    auto c = random_cycle(g, rng, 50'000);
    if (!c) continue;
    HamCycle hc = HamCycle::normalized(*c);
    if (inequivalent(hc, true)) {
      r.total_cycles = 2;
      r.total_exact = false;
      return witness_report(hc, ClassMethod::EarlyWitness);
    }
  }

  auto find_other = [&](std::size_t limit) -> std::optional<HamCycle> {
    std::optional<HamCycle> other;
    for_each_ham_cycle(g, limit, [&](const std::vector<int>& seq) {
      HamCycle hc{seq};
      if (inequivalent(hc, true)) other = hc;
      return !other && !deadline.expired();
    });
    return other;
  };

  if (n <= kCountDpMaxOrder) {
    r.total_cycles = count_ham_cycles(g);
    r.method = ClassMethod::CountVsOrbitStabilizer;
    if (r.total_cycles == orbit) {
      r.class_count = 1;
      return r;
    }
    if (auto other = find_other(opts.cap)) r.representatives.push_back(*other);
    r.class_count = std::max(2L, clamp_long(ceil_div(r.total_cycles, r.aut_order)));
    r.lower_bound = true;
    return r;
  }

  // Beyond the counting range: enumerate, watching fingerprints on the way.
  std::size_t seen = 0;
  std::optional<HamCycle> other;
  bool complete = for_each_ham_cycle(g, opts.cap, [&](const std::vector<int>& seq) {
    ++seen;
    if (!other && seen <= 4096) {
      HamCycle hc{seq};
      if (inequivalent(hc, false)) other = hc;
    }
    return (seen & 1023) != 0 || !deadline.expired();
  });
  r.total_cycles = seen;
  r.total_exact = complete;
  r.method = ClassMethod::CountVsOrbitStabilizer;
  if (complete && r.total_cycles == orbit) {
    r.class_count = 1;
    return r;
  }
  if (other) {
    r.representatives.push_back(*other);
    r.class_count = 2;
    r.lower_bound = true;
    return r;
  }
  if (r.total_cycles > orbit) {
    if (orbit < 4096)
      if (auto o = find_other(static_cast<std::size_t>(orbit) + 1)) r.representatives.push_back(*o);
    r.class_count = std::max(2L, clamp_long(ceil_div(r.total_cycles, r.aut_order)));
    r.lower_bound = true;
    return r;
  }
  throw Error(ErrorCode::Inconclusive,
              "enumeration stopped after " + std::to_string(seen) + " cycles without a decision");
}

ClassReport orbit_classes(const Graph& g, std::size_t cap) {
  CycleEnumeration en = enumerate_ham_cycles(g, cap);
  if (en.cycles.empty()) throw Error(ErrorCode::NotHamiltonian, "graph has no Hamiltonian cycle");
  ClassReport r;
  r.method = ClassMethod::FullOrbitPartition;
  r.total_cycles = en.cycles.size();
  r.total_exact = !en.truncated;
  PermGroup aut = automorphisms(g);
  r.aut_order = aut.order();
  std::size_t count = en.cycles.size();

  if (en.truncated) {
    // Orbits may close through cycles that were never enumerated; distinct
    // certificates still give a valid lower bound.
    std::unordered_set<std::string> certs;
    for (const HamCycle& c : en.cycles)
      if (certs.insert(cycle_certificate(g, c)).second) r.representatives.push_back(c);
    r.class_count = static_cast<long>(certs.size());
    r.lower_bound = true;
    return r;
  }

  std::unordered_map<std::string, std::size_t> index;
  std::vector<std::vector<Edge>> edge_sets(count);
  for (std::size_t i = 0; i < count; ++i) {
    edge_sets[i] = en.cycles[i].edges();
    index.emplace(edge_key(edge_sets[i]), i);
  }
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < count; ++i)
    for (const Perm& p : aut.generators()) {
      std::size_t j = index.at(edge_key(apply_to_edge_set(p, edge_sets[i])));
      std::size_t a = find(i), b = find(j);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  for (std::size_t i = 0; i < count; ++i)
    if (find(i) == i) r.representatives.push_back(en.cycles[i]);
  r.class_count = static_cast<long>(r.representatives.size());
  return r;
}

int kappa_of_cycle(const Graph& g, const HamCycle& c) {
  if (!is_ham_cycle(g, c.seq)) throw Error(ErrorCode::NotACycleOfG, "sequence is not a Hamiltonian cycle");
  int n = c.length();
  std::vector<int> img(n);
  for (int k = n; k >= 1; --k) {
    if (n % k != 0) continue;
    int shift = n / k;
    for (int i = 0; i < n; ++i) img[c.seq[i]] = c.seq[(i + shift) % n];
    if (is_automorphism(g, Perm(img))) return k;
  }
  return 1;
}

KappaResult kappa_of_graph(const Graph& g, std::size_t cap) {
  KappaResult r;
  int n = g.order();
  bool complete = for_each_ham_cycle(g, cap, [&](const std::vector<int>& seq) {
    r.value = std::max(r.value, kappa_of_cycle(g, HamCycle{seq}));
    return r.value < n;
  });
  if (r.value == 0) {
    if (complete) throw Error(ErrorCode::NotHamiltonian, "graph has no Hamiltonian cycle");
    throw Error(ErrorCode::Inconclusive, "no cycle found within the cap");
  }
  r.lower_bound = !complete && r.value < n;
  return r;
}

ZigzagResult zigzag_cycle(const LayeredView& lv, const ZigzagSpec& spec) {
  int l = lv.layer_count();
  int k = lv.layer_size();
  if (l < 5 || l % 2 == 0)
    throw Error(ErrorCode::LayersNotOdd, "zigzag cycles need an odd number l >= 5 of layers");
  const std::vector<int>& ck = spec.layer_cycle.empty() ? lv.layer_cycle : spec.layer_cycle;
  if (k < 3 || !is_ham_cycle(lv.layer_graph, ck))
    throw Error(ErrorCode::SpecOutOfRange, "C_K is not a Hamiltonian cycle of the layer graph");
  int pairs = (l - 3) / 2;
  if (static_cast<int>(spec.a.size()) != pairs)
    throw Error(ErrorCode::SpecOutOfRange, "expected " + std::to_string(pairs) + " zigzag parameters");
  for (int x : spec.a)
    if (x < 0 || x > k - 2) throw Error(ErrorCode::SpecOutOfRange, "zigzag parameter outside 0..k-2");

  auto at = [&](int j, int i) { return lv.layers[j][ck[i]]; };
  std::vector<int> w;
  w.push_back(at(0, k - 2));
  for (int i = k - 2; i >= 0; --i) w.push_back(at(1, i));
  w.push_back(at(2, 0));
  for (int p = 1; p <= pairs; ++p) {
    int a = spec.a[p - 1];
    for (int i = 1; i <= a; ++i) w.push_back(at(2 * p, i));
    for (int i = a; i >= 0; --i) w.push_back(at(2 * p + 1, i));
    w.push_back(at(2 * p + 2, 0));
  }
  for (int i = 1; i < k; ++i) w.push_back(at(l - 1, i));
  int mu = static_cast<int>(w.size()) - 1;
  w.push_back(at(l - 2, k - 1));
  for (int p = pairs; p >= 1; --p) {
    int a = spec.a[p - 1];
    for (int i = k - 2; i >= a + 1; --i) w.push_back(at(2 * p + 1, i));
    for (int i = a + 1; i <= k - 1; ++i) w.push_back(at(2 * p, i));
    w.push_back(at(2 * p - 1, k - 1));
  }
  w.push_back(at(0, k - 1));
  for (int i = 0; i < k - 2; ++i) w.push_back(at(0, i));

  if (!is_ham_cycle(lv.graph, w))
    throw Error(ErrorCode::NotApplicable, "layered view lacks edges needed by the zigzag cycle");
  ZigzagResult r;
  r.walk = w;
  r.cycle = HamCycle::normalized(std::move(w));
  r.mu = mu;
  r.mu_formula = zigzag_mu_formula(k, spec.a);
  return r;
}

BoustrophedonResult boustrophedon_cycles(const ProductView& pv) {
  if (pv.factor_count() != 2) throw Error(ErrorCode::NotApplicable, "expected a product of two factors");
  int k = pv.factors[0].order();
  int l = pv.factors[1].order();
  if (k < 3 || l < 3) throw Error(ErrorCode::TooSmall, "both factors need at least 3 vertices");
  auto cg = find_hamiltonian_cycle(pv.factors[0]);
  auto ch = find_hamiltonian_cycle(pv.factors[1]);
  if (!cg || !ch) throw Error(ErrorCode::FactorNotHamiltonian, "factor is not Hamiltonian");

  // Snake over columns 0..kx-2 from the top row down, then climb column kx-1.
  auto snake = [](int kx, int ly) {
    std::vector<std::pair<int, int>> s;
    for (int y = ly - 1; y >= 0; --y) {
      bool rightward = (ly - 1 - y) % 2 == 0;
      for (int t = 0; t <= kx - 2; ++t) s.emplace_back(rightward ? t : kx - 2 - t, y);
    }
    for (int y = 0; y < ly; ++y) s.emplace_back(kx - 1, y);
    return s;
  };
  auto realize = [&](const std::vector<std::pair<int, int>>& s, bool swapped) {
    std::vector<int> seq;
    for (auto [x, y] : s) {
      int gi = swapped ? y : x;
      int hi = swapped ? x : y;
      seq.push_back(pv.vertex({(*cg)[gi], (*ch)[hi]}));
    }
    return seq;
  };
  auto eh = [&](const std::vector<int>& seq) {
    int cnt = 0;
    for (std::size_t i = 0; i < seq.size(); ++i)
      if (pv.direction.at(Edge(seq[i], seq[(i + 1) % seq.size()])) == 1) ++cnt;
    return cnt;
  };
  std::vector<int> c = realize(snake(k, l), false);
  std::vector<int> c_hat = realize(snake(l, k), true);
  BoustrophedonResult r;
  r.c = make_ham_cycle(pv.graph, c);
  r.c_hat = make_ham_cycle(pv.graph, c_hat);
  r.eh_c = eh(c);
  r.eh_c_hat = eh(c_hat);
  return r;
}

}  // namespace hamsym
