#include <doctest.h>

#include <random>

#include "hamsym/autgroup.hpp"
#include "hamsym/constructors.hpp"
#include "hamsym/error.hpp"
#include "hamsym/factorization.hpp"
#include "hamsym/hamilton.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace hamsym;

namespace {

std::vector<Graph> connected_graphs(int n) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
  std::vector<Graph> out;
  for (unsigned m = 0; m < (1u << all.size()); ++m) {
    std::vector<Edge> es;
    for (std::size_t i = 0; i < all.size(); ++i)
      if ((m >> i) & 1u) es.push_back(all[i]);
    auto g = Graph::from_edge_list(n, es);
    if (is_connected(g)) out.push_back(g);
  }
  return out;
}

// Whether g is A □ B for some connected A, B of orders >= 2, by trying all of them.
bool brute_is_product(const Graph& g) {
  int n = g.order();
  for (int a = 2; a * 2 <= n; ++a) {
    if (n % a) continue;
    for (const auto& x : connected_graphs(a))
      for (const auto& y : connected_graphs(n / a)) {
        auto p = cartesian_product(x, y).graph;
        if (p.size() == g.size() && oracle::isomorphic(p, g)) return true;
      }
  }
  return false;
}

void check_certificate(const Graph& g, const Factorization& f) {
  REQUIRE(f.product.order() == g.order());
  CHECK(f.product.size() == g.size());
  for (const auto& e : f.product.edges()) CHECK(g.adjacent(f.certificate(e.u), f.certificate(e.v)));
  long prod = 1;
  for (const auto& pf : f.prime_factors)
    for (int i = 0; i < pf.multiplicity; ++i) prod *= pf.graph.order();
  CHECK(prod == g.order());
  for (const auto& pf : f.prime_factors) CHECK(prime_factorization(pf.graph).is_prime());
}

std::vector<std::pair<std::string, int>> signature(const Factorization& f) {
  std::vector<std::pair<std::string, int>> s;
  for (const auto& pf : f.prime_factors) s.emplace_back(pf.cert, pf.multiplicity);
  return s;
}

Graph petersen() {
  std::vector<Edge> pe;
  for (int i = 0; i < 5; ++i) {
    pe.emplace_back(i, (i + 1) % 5);
    pe.emplace_back(i, i + 5);
    pe.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edge_list(10, pe);
}

}  // namespace

TEST_CASE("prime factorization examples") {
  auto c4 = prime_factorization(cycle_graph(4));
  REQUIRE(c4.prime_factors.size() == 1);
  CHECK(c4.prime_factors[0].multiplicity == 2);
  CHECK(c4.prime_factors[0].graph.order() == 2);
  check_certificate(cycle_graph(4), c4);

  CHECK(prime_factorization(cycle_graph(6)).is_prime());
  CHECK_FALSE(brute_is_product(cycle_graph(6)));

  auto k33 = cartesian_product(complete_graph(3), complete_graph(3)).graph;
  auto f = prime_factorization(k33);
  REQUIRE(f.prime_factors.size() == 1);
  CHECK(f.prime_factors[0].multiplicity == 2);
  CHECK(is_isomorphic(f.prime_factors[0].graph, complete_graph(3)));
  check_certificate(k33, f);

  auto cube = prime_factorization(prism(4).graph);
  CHECK(cube.factor_count() == 3);
  CHECK(prime_factorization(petersen()).is_prime());
  CHECK(prime_factorization(complete_bipartite(3, 3)).is_prime());
  CHECK(prime_factorization(Graph::from_edge_list(1, {})).factor_count() == 0);
  CHECK_THROWS_AS(prime_factorization(Graph::from_edge_list(4, {{0, 1}, {2, 3}})), Error);
}

TEST_CASE("primality agrees with brute force up to 8 vertices") {
  for (int n : {4, 6, 8}) {
    // Every connected graph on 4 or 6 vertices, a random sample on 8.
    std::vector<Graph> gs;
    if (n <= 6) {
      gs = connected_graphs(n);
    } else {
      std::mt19937_64 rng(41);
      for (int t = 0; t < 60; ++t) gs.push_back(testing_util::random_connected_graph(8, 0.35, rng));
      gs.push_back(prism(4).graph);
      gs.push_back(cartesian_product(path_graph(4), complete_graph(2)).graph);
      gs.push_back(cartesian_product(complete_graph(4), complete_graph(2)).graph);
    }
    for (const auto& g : gs) {
      auto f = prime_factorization(g);
      check_certificate(g, f);
      CHECK(f.is_prime() != brute_is_product(g));
    }
  }
}

TEST_CASE("factorization of products is the union of factorizations") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 40; ++t) {
    int a = 2 + static_cast<int>(rng() % 4);
    int b = 2 + static_cast<int>(rng() % 4);
    auto x = testing_util::random_connected_graph(a, 0.5, rng);
    auto y = testing_util::random_connected_graph(b, 0.5, rng);
    auto p = cartesian_product(x, y).graph;
    auto g = testing_util::permuted(p, testing_util::random_perm(p.order(), rng));
    auto f = prime_factorization(g);
    check_certificate(g, f);

    auto fx = prime_factorization(x);
    auto fy = prime_factorization(y);
    std::map<std::string, int> expected;
    for (const auto& pf : fx.prime_factors) expected[pf.cert] += pf.multiplicity;
    for (const auto& pf : fy.prime_factors) expected[pf.cert] += pf.multiplicity;
    std::map<std::string, int> got;
    for (const auto& [c, m] : signature(f)) got[c] = m;
    CHECK(got == expected);
  }
}

TEST_CASE("relatively prime") {
  CHECK(relatively_prime(cycle_graph(3), cycle_graph(5)));
  CHECK_FALSE(relatively_prime(cycle_graph(4), complete_graph(2)));
  auto k3k2 = cartesian_product(complete_graph(3), complete_graph(2)).graph;
  auto k3k3 = cartesian_product(complete_graph(3), complete_graph(3)).graph;
  CHECK_FALSE(relatively_prime(k3k2, k3k3));
  CHECK(relatively_prime(complete_graph(4), cycle_graph(5)));
}

TEST_CASE("catalogue names") {
  CHECK(catalogue_name(complete_graph(7)) == "K7");
  CHECK(catalogue_name(cycle_graph(9)) == "C9");
  CHECK(catalogue_name(complete_bipartite(4, 4)) == "K4,4");
  CHECK(catalogue_name(prism(4).graph) == "Q3");
  CHECK(catalogue_name(prism(5).graph) == "C5xK2");
  CHECK(catalogue_name(prism(6).graph).empty());
  CHECK(catalogue_name(petersen()).empty());
}

TEST_CASE("classify by theorems") {
  auto k7 = classify_by_theorems(complete_graph(7));
  CHECK(k7.verdict == Verdict::InH);
  CHECK(k7.theorem == "catalogue");

  auto c55 = classify_by_theorems(cartesian_power(cycle_graph(5), 2).graph);
  CHECK(c55.verdict == Verdict::NotInH);
  CHECK(c55.theorem == "prime-power");

  auto c35 = classify_by_theorems(cartesian_product(cycle_graph(3), cycle_graph(5)).graph);
  CHECK(c35.verdict == Verdict::NotInH);
  CHECK(c35.theorem == "relatively-prime-product");

  CHECK(classify_by_theorems(petersen()).verdict == Verdict::Unknown);
  auto p6 = classify_by_theorems(prism(6).graph);
  CHECK(p6.verdict == Verdict::NotInH);
  CHECK(p6.theorem == "product-with-K2");

  // Z9 with {±1, ±3}: odd order, not complete, not a cycle.
  AbelianGroup z9({9});
  auto s = GeneratingSet::closed_under_inverses(z9, {GroupElem{{1}}, GroupElem{{3}}});
  auto g = cayley_graph(z9, s);
  CHECK(classify_by_theorems(g).verdict == Verdict::Unknown);
  auto odd = classify_by_theorems(g, CayleyHint{z9, s});
  CHECK(odd.verdict == Verdict::NotInH);
  CHECK(odd.theorem == "odd-order-cayley");

  // Z8 with {±1, 4}: dropping ±1 leaves <4>.
  AbelianGroup z8({8});
  auto s8 = GeneratingSet::closed_under_inverses(z8, {GroupElem{{1}}, GroupElem{{4}}});
  auto even = classify_by_theorems(cayley_graph(z8, s8), CayleyHint{z8, s8});
  CHECK(even.verdict == Verdict::NotInH);
  CHECK(even.theorem == "even-order-cayley");

  // Z10 with {±1, ±2, ±3}: every pair is redundant.
  AbelianGroup z10({10});
  auto s10 = GeneratingSet::closed_under_inverses(z10, {GroupElem{{1}}, GroupElem{{2}}, GroupElem{{3}}});
  CHECK(classify_by_theorems(cayley_graph(z10, s10), CayleyHint{z10, s10}).verdict == Verdict::Unknown);

  // K4 meets the non-redundancy hypothesis as Cay(Z4, {1, 2, 3}); the catalogue decides it.
  AbelianGroup z4({4});
  auto s4 = GeneratingSet::closed_under_inverses(z4, {GroupElem{{1}}, GroupElem{{2}}});
  CHECK(classify_by_theorems(cayley_graph(z4, s4), CayleyHint{z4, s4}).verdict == Verdict::InH);

  // A hint for a different graph is ignored.
  CHECK(classify_by_theorems(petersen(), CayleyHint{z10, s10}).verdict == Verdict::Unknown);
}

TEST_CASE("predictions agree with transitivity up to 14 vertices") {
  std::vector<Graph> corpus;
  for (int n = 3; n <= 14; ++n) corpus.push_back(cycle_graph(n));
  for (int n = 3; n <= 9; ++n) corpus.push_back(complete_graph(n));
  for (int m = 2; m <= 5; ++m) corpus.push_back(complete_bipartite(m, m));
  for (int k = 3; k <= 7; ++k) corpus.push_back(prism(k).graph);
  for (int a = 3; a <= 4; ++a)
    for (int b = a; a * b <= 14; ++b) {
      corpus.push_back(cartesian_product(cycle_graph(a), cycle_graph(b)).graph);
      corpus.push_back(cartesian_product(complete_graph(a), cycle_graph(b)).graph);
    }
  corpus.push_back(cartesian_product(complete_graph(3), complete_graph(3)).graph);
  corpus.push_back(cartesian_product(complete_graph(4), complete_graph(2)).graph);
  corpus.push_back(cartesian_product(complete_graph(5), complete_graph(2)).graph);
  corpus.push_back(cartesian_product(complete_graph(6), complete_graph(2)).graph);
  corpus.push_back(cartesian_product(complete_graph(3), complete_graph(4)).graph);
  corpus.push_back(complement_of_cycle(7));
  corpus.push_back(complement_of_cycle(8));
  corpus.push_back(truncation(complete_graph(4)));
  corpus.push_back(regular_gadget(3, 3));
  corpus.push_back(petersen());

  // Every abelian Cayley graph of order up to 10, with its hint.
  std::vector<std::pair<Graph, CayleyHint>> cayley;
  for (auto factors : std::vector<std::vector<int>>{{3}, {4}, {2, 2}, {5}, {6}, {7}, {8}, {2, 4}, {9}, {3, 3}, {10}}) {
    AbelianGroup gamma(factors);
    std::vector<int> reps;
    for (int x = 1; x < gamma.order(); ++x)
      if (gamma.neg_index(x) >= x) reps.push_back(x);
    for (unsigned m = 1; m < (1u << reps.size()); ++m) {
      std::vector<GroupElem> es;
      for (std::size_t i = 0; i < reps.size(); ++i)
        if ((m >> i) & 1u) es.push_back(gamma.element(reps[i]));
      GeneratingSet s;
      try {
        s = GeneratingSet::closed_under_inverses(gamma, es);
      } catch (const Error&) {
        continue;
      }
      cayley.emplace_back(cayley_graph(gamma, s), CayleyHint{gamma, s});
    }
  }

  int decided = 0;
  auto check = [&](const Graph& g, const std::optional<CayleyHint>& hint) {
    auto p = classify_by_theorems(g, hint);
    if (p.verdict == Verdict::Unknown) return;
    ++decided;
    CHECK(!p.theorem.empty());
    bool in_h = false;
    try {
      in_h = is_ham_transitive(g).transitive();
    } catch (const Error& e) {
      REQUIRE(e.code() == ErrorCode::NotHamiltonian);
    }
    INFO(p.theorem << " " << p.detail);
    CHECK(in_h == (p.verdict == Verdict::InH));
  };
  for (const auto& g : corpus) check(g, std::nullopt);
  for (const auto& [g, hint] : cayley) check(g, hint);
  CHECK(decided > 100);
}
