#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hamsym/graph.hpp"

namespace hamsym {

using BigInt = boost::multiprecision::cpp_int;

// Vertex permutation: img[i] is the image of i.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> img);  // throws unless img is a bijection on 0..n-1
  static Perm identity(int n);

  int degree() const { return static_cast<int>(img_.size()); }
  int operator()(int x) const { return img_[x]; }
  int operator[](int x) const { return img_[x]; }
  const std::vector<int>& images() const { return img_; }
  bool is_identity() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;

 private:
  std::vector<int> img_;
};

// (a ∘ b)(x) = a(b(x)); throws DegreeMismatch.
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);

// Image of an edge set, endpoints renormalized, result sorted.
std::vector<Edge> apply_to_edge_set(const Perm& p, std::span<const Edge> edges);

// True when p maps edges onto edges (and non-edges onto non-edges).
bool is_automorphism(const Graph& g, const Perm& p);

// Permutation group given by generators, with a stabilizer chain built
// eagerly by deterministic Schreier–Sims.
class PermGroup {
 public:
  PermGroup() = default;
  PermGroup(int degree, std::vector<Perm> generators);

  int degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<int>& base() const { return base_; }
  const std::vector<Perm>& strong_generators() const { return strong_; }

  BigInt order() const;
  bool contains(const Perm& p) const;

  // Orbit partition of points, each orbit sorted, orbits ordered by minimum.
  std::vector<std::vector<int>> point_orbits() const;
  // orbit_id[x] = index of x's orbit in point_orbits().
  std::vector<int> orbit_ids() const;

  // Uniform random element (product of random coset representatives).
  Perm random_element(std::mt19937_64& rng) const;

  // Lengths of the fundamental orbits along the base.
  std::vector<int> fundamental_orbit_lengths() const;

 private:
  struct Level {
    int point = 0;
    std::vector<int> gen_ids;                 // indices into strong_
    std::vector<int> orbit;                   // orbit of point, BFS order
    std::vector<int> transversal;             // point -> index into reps, -1 if not in orbit
    std::vector<Perm> reps;                   // reps[t] maps point to orbit[t]
  };

  void build();
  void rebuild_level(int i);
  // Returns (residue, first level where sifting failed; levels_.size() on full pass).
  std::pair<Perm, int> sift(Perm g, int from_level) const;

  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<Perm> strong_;
  std::vector<int> base_;
  std::vector<Level> levels_;
};

struct EdgeSetOrbit {
  std::vector<std::vector<Edge>> elements;  // discovery (BFS) order, seed first
  bool cap_exceeded = false;
};

// Closure of {seed} under the generators, breadth-first. Stops once the orbit
// would grow past `cap` elements and flags the result.
EdgeSetOrbit orbit_of_edge_set(const PermGroup& group, std::span<const Edge> seed,
                               std::size_t cap = 10'000'000);

}  // namespace hamsym
