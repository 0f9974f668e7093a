#include "hamsym/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_set>

#include "hamsym/error.hpp"

namespace hamsym {

Perm::Perm(std::vector<int> img) : img_(std::move(img)) {
  std::vector<char> seen(img_.size(), 0);
  for (int x : img_) {
    if (x < 0 || x >= static_cast<int>(img_.size()) || seen[x])
      throw Error(ErrorCode::VertexOutOfRange, "image array is not a bijection");
    seen[x] = 1;
  }
}

Perm Perm::identity(int n) {
  std::vector<int> img(n);
  std::iota(img.begin(), img.end(), 0);
  Perm p;
  p.img_ = std::move(img);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img_[i] != i) return false;
  return true;
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw Error(ErrorCode::DegreeMismatch,
                std::to_string(a.degree()) + " vs " + std::to_string(b.degree()));
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a(b(i));
  return Perm(std::move(img));
}

Perm inverse(const Perm& a) {
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[a(i)] = i;
  return Perm(std::move(img));
}

std::vector<Edge> apply_to_edge_set(const Perm& p, std::span<const Edge> edges) {
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.v >= p.degree()) throw Error(ErrorCode::DegreeMismatch, "edge endpoint beyond degree");
    out.emplace_back(p(e.u), p(e.v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_automorphism(const Graph& g, const Perm& p) {
  if (p.degree() != g.order()) return false;
  for (int u = 0; u < g.order(); ++u) {
    VertexSet image;
    g.neighbors(u).for_each([&](int w) { image.set(p(w)); });
    if (image != g.neighbors(p(u))) return false;
  }
  return true;
}

namespace {

// Composition without the bijection re-check, for inner loops.
Perm fast_compose(const Perm& a, const Perm& b) {
  std::vector<int> img(a.degree());
  for (int i = 0; i < a.degree(); ++i) img[i] = a(b(i));
  return Perm(std::move(img));
}

int first_moved(const Perm& p) {
  for (int i = 0; i < p.degree(); ++i)
    if (p(i) != i) return i;
  return -1;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> generators) : degree_(degree) {
  for (auto& g : generators) {
    if (g.degree() != degree)
      throw Error(ErrorCode::DegreeMismatch, "generator degree differs from group degree");
    if (!g.is_identity() && std::find(gens_.begin(), gens_.end(), g) == gens_.end())
      gens_.push_back(std::move(g));
  }
  build();
}

void PermGroup::rebuild_level(int i) {
  Level& level = levels_[i];
  level.orbit.assign(1, level.point);
  level.transversal.assign(degree_, -1);
  level.reps.assign(1, Perm::identity(degree_));
  level.transversal[level.point] = 0;
  for (std::size_t head = 0; head < level.orbit.size(); ++head) {
    int x = level.orbit[head];
    for (int gid : level.gen_ids) {
      const Perm& s = strong_[gid];
      int y = s(x);
      if (level.transversal[y] >= 0) continue;
      level.transversal[y] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(y);
      level.reps.push_back(fast_compose(s, level.reps[head]));
    }
  }
}

std::pair<Perm, int> PermGroup::sift(Perm g, int from_level) const {
  for (int i = from_level; i < static_cast<int>(levels_.size()); ++i) {
    const Level& level = levels_[i];
    int beta = g(level.point);
    int t = level.transversal[beta];
    if (t < 0) return {std::move(g), i};
    g = fast_compose(inverse(level.reps[t]), g);
  }
  return {std::move(g), static_cast<int>(levels_.size())};
}

void PermGroup::build() {
  strong_ = gens_;
  base_.clear();
  levels_.clear();
  for (const Perm& s : strong_) {
    bool fixes_base = std::all_of(base_.begin(), base_.end(), [&](int b) { return s(b) == b; });
    if (fixes_base) base_.push_back(first_moved(s));
  }
  levels_.resize(base_.size());
  for (std::size_t i = 0; i < base_.size(); ++i) {
    levels_[i].point = base_[i];
    for (std::size_t gid = 0; gid < strong_.size(); ++gid) {
      bool fixes = true;
      for (std::size_t j = 0; j < i; ++j)
        if (strong_[gid](base_[j]) != base_[j]) fixes = false;
      if (fixes) levels_[i].gen_ids.push_back(static_cast<int>(gid));
    }
    rebuild_level(static_cast<int>(i));
  }

  int i = static_cast<int>(levels_.size()) - 1;
  while (i >= 0) {
    bool extended = false;
    for (std::size_t t = 0; t < levels_[i].orbit.size() && !extended; ++t) {
      for (std::size_t gi = 0; gi < levels_[i].gen_ids.size() && !extended; ++gi) {
        const Level& level = levels_[i];
        const Perm& s = strong_[level.gen_ids[gi]];
        int gamma = s(level.orbit[t]);
        Perm h = fast_compose(inverse(level.reps[level.transversal[gamma]]),
                              fast_compose(s, level.reps[t]));
        if (h.is_identity()) continue;
        auto [residue, j] = sift(std::move(h), i + 1);
        if (residue.is_identity()) continue;
        strong_.push_back(residue);
        int id = static_cast<int>(strong_.size()) - 1;
        if (j == static_cast<int>(levels_.size())) {
          base_.push_back(first_moved(residue));
          levels_.push_back(Level{});
          levels_.back().point = base_.back();
        }
        for (int l = i + 1; l <= j; ++l) {
          levels_[l].gen_ids.push_back(id);
          rebuild_level(l);
        }
        i = j;
        extended = true;
      }
    }
    if (!extended) --i;
  }
}

BigInt PermGroup::order() const {
  BigInt result = 1;
  for (const Level& level : levels_) result *= static_cast<unsigned>(level.orbit.size());
  return result;
}

std::vector<int> PermGroup::fundamental_orbit_lengths() const {
  std::vector<int> out;
  for (const Level& level : levels_) out.push_back(static_cast<int>(level.orbit.size()));
  return out;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.degree() != degree_) return false;
  auto [residue, j] = sift(p, 0);
  return residue.is_identity();
}

std::vector<int> PermGroup::orbit_ids() const {
  std::vector<int> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Perm& g : gens_)
    for (int x = 0; x < degree_; ++x) {
      int a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<int> ids(degree_, -1);
  int next = 0;
  std::vector<int> root_id(degree_, -1);
  for (int x = 0; x < degree_; ++x) {
    int r = find(x);
    if (root_id[r] < 0) root_id[r] = next++;
    ids[x] = root_id[r];
  }
  return ids;
}

std::vector<std::vector<int>> PermGroup::point_orbits() const {
  auto ids = orbit_ids();
  int count = degree_ == 0 ? 0 : *std::max_element(ids.begin(), ids.end()) + 1;
  std::vector<std::vector<int>> orbits(count);
  for (int x = 0; x < degree_; ++x) orbits[ids[x]].push_back(x);
  return orbits;
}

Perm PermGroup::random_element(std::mt19937_64& rng) const {
  Perm g = Perm::identity(degree_);
  for (const Level& level : levels_) {
    std::uniform_int_distribution<std::size_t> pick(0, level.reps.size() - 1);
    g = fast_compose(g, level.reps[pick(rng)]);
  }
  return g;
}

namespace {

using EdgeKey = std::vector<std::uint16_t>;

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& k) const {
    std::size_t h = 1469598103934665603ULL;
    for (auto x : k) h = (h ^ x) * 1099511628211ULL;
    return h;
  }
};

EdgeKey key_of(std::span<const Edge> edges) {
  EdgeKey k;
  k.reserve(edges.size());
  for (const Edge& e : edges) k.push_back(static_cast<std::uint16_t>(e.u * 256 + e.v));
  std::sort(k.begin(), k.end());
  return k;
}

}  // namespace

EdgeSetOrbit orbit_of_edge_set(const PermGroup& group, std::span<const Edge> seed, std::size_t cap) {
  EdgeSetOrbit result;
  std::vector<Edge> start(seed.begin(), seed.end());
  for (const Edge& e : start)
    if (e.v >= group.degree()) throw Error(ErrorCode::DegreeMismatch, "seed edge beyond degree");
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());

  std::unordered_set<EdgeKey, EdgeKeyHash> seen;
  seen.insert(key_of(start));
  result.elements.push_back(std::move(start));
  for (std::size_t head = 0; head < result.elements.size(); ++head) {
    for (const Perm& g : group.generators()) {
      auto image = apply_to_edge_set(g, result.elements[head]);
      if (!seen.insert(key_of(image)).second) continue;
      if (result.elements.size() >= cap) {
        result.cap_exceeded = true;
        return result;
      }
      result.elements.push_back(std::move(image));
    }
  }
  return result;
}

}  // namespace hamsym
