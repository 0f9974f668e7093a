#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "hamsym/abelian.hpp"
#include "hamsym/factorization.hpp"
#include "hamsym/graph.hpp"

namespace hamsym {

// Invariant-factor chains d1 | d2 | ... with product n, ordered by rank and
// then lexicographically. n = 1 gives the empty chain.
std::vector<std::vector<int>> enumerate_abelian_groups(int n);

// Every inverse-closed generating set without the identity, as unions of
// {x, -x} classes in subset-bitmask order. The callback returns false to stop.
void for_each_generating_set(const AbelianGroup& gamma, const std::function<bool(const GeneratingSet&)>& fn);
std::vector<GeneratingSet> enumerate_generating_sets(const AbelianGroup& gamma);

// "K5", "C7", "K3,3", "Q3", "C5xK2", "C6xK2" or "other".
std::string family_tag(const Graph& g);

struct CensusRecord {
  int order = 0;
  std::vector<int> group;                  // invariant factors of the first presentation
  std::vector<std::vector<int>> gens;      // its generating set as residue tuples
  std::string cert;                        // hex of the canonical certificate
  std::string graph6;
  std::string verdict;                     // InH | NotInH | Inconclusive
  long class_count = 0;
  bool class_count_lower_bound = false;
  std::string method;
  std::string total_cycles;                // decimal
  bool total_exact = true;
  std::string aut_order;
  int kappa = 0;
  bool kappa_lower_bound = false;
  std::string family;
  int presentations = 0;                   // (group, genset) pairs with this cert
  Prediction prediction;
  std::string note;                        // error text for Inconclusive records
};

nlohmann::json record_to_json(const CensusRecord& r);
CensusRecord record_from_json(const nlohmann::json& j);

struct OrderStats {
  int groups = 0;
  long generating_sets = 0;
  int graphs = 0;                          // after cert dedup
  int members = 0;
  int inconclusive = 0;
};

struct CensusOptions {
  int max_order = 16;
  bool order_27 = false;                   // add Z3^3 and Z3xZ9
  int jobs = 0;                            // 0: hardware concurrency
  std::string out_dir;                     // empty: no persistence
  double graph_budget_seconds = 0;         // per graph; 0: none (27 defaults to 60)
  double total_budget_seconds = 0;         // 0: none
  std::size_t cap = 1'000'000;
  std::size_t kappa_cap = 20'000;          // for non-members; members use `cap`
};

struct CensusReport {
  int max_order = 0;
  bool order_27 = false;
  std::vector<CensusRecord> records;       // sorted by (order, cert)
  std::map<int, OrderStats> per_order;
  bool partial = false;                    // total budget ran out
  double seconds = 0;

  std::vector<const CensusRecord*> members() const;
  std::vector<const CensusRecord*> inconclusive() const;
};

// Throws TooSmall for max_order < 3 and TooLarge beyond the vertex cap.
CensusReport run_census(const CensusOptions& opts);

// Timing is left out so that equal inputs give equal bytes.
nlohmann::json report_to_json(const CensusReport& r);
// One line per order: counts and the members' family tags.
std::string summary_table(const CensusReport& r);

}  // namespace hamsym
