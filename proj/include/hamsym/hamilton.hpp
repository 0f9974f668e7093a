#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "hamsym/constructors.hpp"
#include "hamsym/graph.hpp"
#include "hamsym/perm_group.hpp"

namespace hamsym {

inline constexpr std::size_t kDefaultCycleCap = 1'000'000;
inline constexpr int kCountDpMaxOrder = 20;

// Hamiltonian cycle as a vertex sequence starting at the smallest vertex, with
// the smaller of its two cycle neighbors in second position.
struct HamCycle {
  std::vector<int> seq;

  static HamCycle normalized(std::vector<int> seq);
  // Cycle edges, sorted.
  std::vector<Edge> edges() const;
  int length() const { return static_cast<int>(seq.size()); }

  friend bool operator==(const HamCycle&, const HamCycle&) = default;
  friend auto operator<=>(const HamCycle&, const HamCycle&) = default;
};

bool is_ham_cycle(const Graph& g, const std::vector<int>& seq);
// Validates and normalizes; throws NotACycleOfG.
HamCycle make_ham_cycle(const Graph& g, std::vector<int> seq);

// Calls visit(seq) for every Hamiltonian cycle exactly once (normalized
// sequences). Stops early when visit returns false or after `cap` cycles.
// Returns true when the enumeration ran to completion.
bool for_each_ham_cycle(const Graph& g, std::size_t cap,
                        const std::function<bool(const std::vector<int>&)>& visit);

struct CycleEnumeration {
  std::vector<HamCycle> cycles;
  bool truncated = false;
};
CycleEnumeration enumerate_ham_cycles(const Graph& g, std::size_t cap = kDefaultCycleCap);

// Subset dynamic program; throws TooLarge above kCountDpMaxOrder vertices.
BigInt count_ham_cycles(const Graph& g);

std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g);
std::optional<std::vector<int>> find_hamiltonian_path(const Graph& g, int start);

// Canonical certificate of g with the cycle's edges colored; equal iff some
// automorphism of g maps one cycle onto the other.
std::string cycle_certificate(const Graph& g, const HamCycle& c);

enum class ClassMethod { CountVsOrbitStabilizer, FullOrbitPartition, EarlyWitness, FullSymmetricGroup };
const char* class_method_name(ClassMethod m);

struct ClassReport {
  BigInt total_cycles;
  bool total_exact = true;          // false: total_cycles is a lower bound
  long class_count = 0;
  bool lower_bound = false;         // class_count is a lower bound
  std::vector<HamCycle> representatives;
  ClassMethod method = ClassMethod::CountVsOrbitStabilizer;
  BigInt aut_order;

  bool transitive() const { return class_count == 1 && !lower_bound; }
};

struct HamOptions {
  std::size_t cap = kDefaultCycleCap;
  double budget_seconds = 0;        // 0: no time limit
  int witness_attempts = 24;
  std::uint64_t seed = 0x5eed;
};

// Decides whether all Hamiltonian cycles form one Aut(g)-orbit. Throws
// NotHamiltonian, or Inconclusive when caps and budget run out undecided.
ClassReport is_ham_transitive(const Graph& g, const HamOptions& opts = {});

// Full orbit partition of the enumerated cycles.
ClassReport orbit_classes(const Graph& g, std::size_t cap = kDefaultCycleCap);

// Largest k | n such that shifting the sequence by n/k is an automorphism.
int kappa_of_cycle(const Graph& g, const HamCycle& c);

struct KappaResult {
  int value = 0;
  bool lower_bound = false;
};
KappaResult kappa_of_graph(const Graph& g, std::size_t cap = kDefaultCycleCap);

struct ZigzagSpec {
  std::vector<int> a;               // (l-3)/2 entries in 0..k-2
  std::vector<int> layer_cycle;     // C_K as positions; empty means the view's cycle
};

struct ZigzagResult {
  HamCycle cycle;
  std::vector<int> walk;            // unnormalized, starting at v_{0,k-2}
  int mu = 0;                       // measured segment length
  int mu_formula = 0;
};

// Throws LayersNotOdd or SpecOutOfRange.
ZigzagResult zigzag_cycle(const LayeredView& lv, const ZigzagSpec& spec);
inline int zigzag_mu_formula(int k, const std::vector<int>& a) {
  int s = 0;
  for (int x : a) s += x + 1;
  return 2 * k - 1 + 2 * s;
}

struct BoustrophedonResult {
  HamCycle c;
  HamCycle c_hat;
  int eh_c = 0;                     // measured E_H edges of c
  int eh_c_hat = 0;
};

// The two snake cycles of G □ H. Throws FactorNotHamiltonian.
BoustrophedonResult boustrophedon_cycles(const ProductView& pv);

}  // namespace hamsym
