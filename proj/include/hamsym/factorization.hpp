#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hamsym/abelian.hpp"
#include "hamsym/graph.hpp"
#include "hamsym/perm_group.hpp"

namespace hamsym {

struct PrimeFactor {
  Graph graph;          // canonically relabeled
  int multiplicity = 0;
  std::string cert;
};

// G = H_1^{r_1} □ ... □ H_k^{r_k}. Factors are sorted by (order, cert) and the
// product vertex order is row-major over the expanded factor list.
struct Factorization {
  std::vector<PrimeFactor> prime_factors;
  Graph product;          // the reassembled product
  Perm certificate;       // product vertex -> input vertex, verified

  int factor_count() const;  // sum of multiplicities
  bool is_prime() const { return factor_count() == 1; }
  // Factor graphs with repeats, in product order.
  std::vector<Graph> expanded() const;
};

// Throws Disconnected, or CapExceeded when there are too many edge classes
// for the split search.
Factorization prime_factorization(const Graph& g);

bool relatively_prime(const Graph& g, const Graph& h);

enum class Verdict { InH, NotInH, Unknown };
const char* verdict_name(Verdict v);

struct Prediction {
  Verdict verdict = Verdict::Unknown;
  std::string theorem;   // empty for Unknown
  std::string detail;
};

struct CayleyHint {
  AbelianGroup group;
  GeneratingSet gens;
};

// Catalogue name ("K5", "C7", "K3,3", "C3xK2", "Q3") or empty.
std::string catalogue_name(const Graph& g);

Prediction classify_by_theorems(const Graph& g, const std::optional<CayleyHint>& hint = std::nullopt);

}  // namespace hamsym
