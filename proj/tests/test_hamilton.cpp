#include <doctest.h>

#include <random>

#include "hamsym/abelian.hpp"
#include "hamsym/autgroup.hpp"
#include "hamsym/constructors.hpp"
#include "hamsym/error.hpp"
#include "hamsym/hamilton.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace hamsym;

namespace {

std::vector<Graph> fixtures() {
  return {complete_graph(4),  complete_graph(6),          cycle_graph(7),
          prism(5).graph,     prism(4).graph,             complete_bipartite(4, 4),
          complement_of_cycle(7), complement_of_cycle(8), truncation(complete_graph(4)),
          regular_gadget(2, 3), cartesian_product(cycle_graph(3), cycle_graph(3)).graph};
}

}  // namespace

TEST_CASE("cycle normalization") {
  auto c = HamCycle::normalized({3, 1, 0, 2});
  CHECK(c.seq == std::vector<int>{0, 1, 3, 2});
  CHECK(HamCycle::normalized(c.seq) == c);
  CHECK_THROWS_AS(make_ham_cycle(cycle_graph(4), {0, 2, 1, 3}), Error);
}

TEST_CASE("enumeration") {
  CHECK(enumerate_ham_cycles(complete_graph(4)).cycles.size() == 3);
  CHECK(enumerate_ham_cycles(prism(5).graph).cycles.size() == 5);
  CHECK(enumerate_ham_cycles(cycle_graph(7)).cycles.size() == 1);
  auto capped = enumerate_ham_cycles(complete_graph(7), 10);
  CHECK(capped.truncated);
  CHECK(capped.cycles.size() == 10);
  for (const auto& g : fixtures()) {
    auto en = enumerate_ham_cycles(g);
    std::set<std::vector<Edge>> got;
    for (const auto& c : en.cycles) {
      CHECK(is_ham_cycle(g, c.seq));
      CHECK(HamCycle::normalized(c.seq) == c);
      got.insert(c.edges());
    }
    CHECK(got.size() == en.cycles.size());
    if (g.order() <= 10) CHECK(got == oracle::ham_cycles(g));
  }
}

TEST_CASE("counting") {
  CHECK(count_ham_cycles(complete_graph(6)) == 60);
  CHECK(count_ham_cycles(complete_bipartite(4, 4)) == 72);
  CHECK(count_ham_cycles(prism(4).graph) == 6);
  CHECK(oracle::ham_cycles(complete_bipartite(4, 4)).size() == 72);
  CHECK(oracle::ham_cycles(prism(4).graph).size() == 6);
  CHECK(count_ham_cycles(path_graph(5)) == 0);
  CHECK(count_ham_cycles(complete_graph(12)) == BigInt("19958400"));
  if (kMaxVertices >= 21) CHECK_THROWS_AS(count_ham_cycles(cycle_graph(21)), Error);

  std::mt19937_64 rng(41);
  for (int t = 0; t < 120; ++t) {
    int n = 3 + static_cast<int>(rng() % 8);
    auto g = testing_util::random_connected_graph(n, 0.3 + 0.5 * (rng() % 10) / 10.0, rng);
    auto en = enumerate_ham_cycles(g);
    CHECK(count_ham_cycles(g) == en.cycles.size());
  }
}

TEST_CASE("finding cycles and paths") {
  CHECK(find_hamiltonian_cycle(prism(9).graph).has_value());
  CHECK_FALSE(find_hamiltonian_cycle(complete_bipartite(3, 4)).has_value());
  CHECK_FALSE(find_hamiltonian_cycle(path_graph(4)).has_value());
  std::vector<Edge> pe;
  for (int i = 0; i < 5; ++i) {
    pe.emplace_back(i, (i + 1) % 5);
    pe.emplace_back(i, i + 5);
    pe.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  CHECK_FALSE(find_hamiltonian_cycle(Graph::from_edge_list(10, pe)).has_value());
  auto p = find_hamiltonian_path(path_graph(5), 0);
  REQUIRE(p.has_value());
  CHECK(*p == std::vector<int>{0, 1, 2, 3, 4});
  CHECK_FALSE(find_hamiltonian_path(path_graph(5), 2).has_value());
}

TEST_CASE("transitivity") {
  auto k5 = is_ham_transitive(complete_graph(5));
  CHECK(k5.transitive());
  CHECK(k5.total_cycles == 12);
  CHECK_FALSE(is_ham_transitive(prism(6).graph).transitive());
  CHECK_FALSE(is_ham_transitive(cartesian_product(cycle_graph(3), cycle_graph(5)).graph).transitive());
  CHECK(is_ham_transitive(prism(7).graph).transitive());
  CHECK(is_ham_transitive(complete_bipartite(4, 4)).transitive());
  CHECK(is_ham_transitive(cycle_graph(11)).transitive());
  CHECK_THROWS_AS(is_ham_transitive(path_graph(4)), Error);

  // Representatives of a non-transitive report really are inequivalent.
  auto r = is_ham_transitive(prism(6).graph);
  REQUIRE(r.representatives.size() >= 2);
  CHECK(cycle_certificate(prism(6).graph, r.representatives[0]) !=
        cycle_certificate(prism(6).graph, r.representatives[1]));
}

TEST_CASE("transitivity agrees with the brute-force orbit count") {
  std::mt19937_64 rng(43);
  int checked = 0;
  for (int t = 0; t < 200 && checked < 60; ++t) {
    int n = 4 + static_cast<int>(rng() % 4);
    auto g = testing_util::random_connected_graph(n, 0.55, rng);
    if (!find_hamiltonian_cycle(g)) continue;
    ++checked;
    long classes = oracle::cycle_classes(g);
    CHECK(is_ham_transitive(g).transitive() == (classes == 1));
    auto oc = orbit_classes(g);
    CHECK(oc.class_count == classes);
    CHECK_FALSE(oc.lower_bound);
  }
  CHECK(checked >= 30);
}

TEST_CASE("orbit classes") {
  CHECK(orbit_classes(prism(7).graph).class_count == 1);
  CHECK(orbit_classes(complete_graph(4)).class_count == 1);
  auto g8 = complement_of_cycle(8);
  auto r = orbit_classes(g8);
  CHECK_FALSE(r.lower_bound);
  CHECK(r.class_count == oracle::cycle_classes(g8));
  CHECK(r.class_count >= 1);
  CHECK(r.total_cycles == oracle::ham_cycles(g8).size());

  auto capped = orbit_classes(complete_graph(7), 20);
  CHECK(capped.lower_bound);
  CHECK(capped.class_count == 1);
}

TEST_CASE("orbit-stabilizer consistency") {
  for (const auto& g : fixtures()) {
    auto c0 = HamCycle::normalized(*find_hamiltonian_cycle(g));
    auto aut = automorphisms(g).order();
    auto stab = stabilizer_of_edge_set(g, c0.edges()).order();
    BigInt total = enumerate_ham_cycles(g).cycles.size();
    CHECK(aut / stab <= total);
    CHECK((aut / stab == total) == (orbit_classes(g).class_count == 1));
  }
}

TEST_CASE("hamilton compression of cycles") {
  for (int n = 3; n <= 12; ++n) {
    auto c = cycle_graph(n);
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    CHECK(kappa_of_cycle(c, HamCycle::normalized(seq)) == n);
  }
  AbelianGroup z10({10});
  auto s = GeneratingSet::closed_under_inverses(z10, {GroupElem{{1}}, GroupElem{{3}}});
  auto cay = cayley_graph(z10, s);
  std::vector<int> seq(10);
  for (int i = 0; i < 10; ++i) seq[i] = i;
  CHECK(kappa_of_cycle(cay, HamCycle::normalized(seq)) == 10);

  // Fig. 3 style cycle on the 7-prism: around the outer rim, across, back on the inner rim.
  std::vector<int> fig;
  for (int i = 0; i < 7; ++i) fig.push_back(2 * i);
  for (int i = 6; i >= 0; --i) fig.push_back(2 * i + 1);
  auto p7 = prism(7).graph;
  CHECK(kappa_of_cycle(p7, make_ham_cycle(p7, fig)) == 2);
  CHECK(oracle::kappa(p7, fig) == 2);

  CHECK_THROWS_AS(kappa_of_cycle(cycle_graph(5), HamCycle{{0, 2, 4, 1, 3}}), Error);
}

TEST_CASE("kappa is invariant under automorphisms") {
  std::mt19937_64 rng(47);
  for (const auto& g : fixtures()) {
    auto aut = automorphisms(g);
    for (const auto& c : enumerate_ham_cycles(g, 50).cycles) {
      CHECK(kappa_of_cycle(g, c) == oracle::kappa(g, c.seq));
      auto phi = aut.random_element(rng);
      std::vector<int> img;
      for (int v : c.seq) img.push_back(phi(v));
      CHECK(kappa_of_cycle(g, make_ham_cycle(g, img)) == kappa_of_cycle(g, c));
    }
  }
}

TEST_CASE("hamilton compression of graphs") {
  CHECK(kappa_of_graph(cycle_graph(9)).value == 9);
  CHECK(kappa_of_graph(complete_graph(4)).value == 4);
  for (const auto& c : enumerate_ham_cycles(complete_graph(4)).cycles)
    CHECK(kappa_of_cycle(complete_graph(4), c) == 4);
  auto cube = cartesian_power(complete_graph(2), 3).graph;
  CHECK(kappa_of_graph(cube).value % 2 == 0);
  for (const auto& g : fixtures()) {
    auto k = kappa_of_graph(g);
    CHECK(g.order() % k.value == 0);
    if (is_ham_transitive(g).transitive()) {
      std::set<int> ks;
      for (const auto& c : enumerate_ham_cycles(g).cycles) ks.insert(kappa_of_cycle(g, c));
      CHECK(ks.size() == 1);
    }
  }
}

TEST_CASE("zigzag cycles") {
  auto lv = grid_layers(cycle_graph(6), 7);
  auto z = zigzag_cycle(lv, {{3, 2}, {}});
  CHECK(z.mu == 25);
  CHECK(z.mu_formula == 25);
  CHECK(is_ham_cycle(lv.graph, z.cycle.seq));

  auto lo = zigzag_cycle(lv, {{0, 0}, {}});
  CHECK(lo.mu == 2 * 6 - 1 + (7 - 3));
  auto hi = zigzag_cycle(lv, {{4, 4}, {}});
  CHECK(hi.mu == 2 * 6 - 1 + (7 - 3) * 5);

  CHECK_THROWS_AS(zigzag_cycle(lv, {{5, 0}, {}}), Error);
  CHECK_THROWS_AS(zigzag_cycle(lv, {{1}, {}}), Error);
  CHECK_THROWS_AS(zigzag_cycle(grid_layers(cycle_graph(6), 6), {{0}, {}}), Error);

  // Group-induced layers work as well.
  AbelianGroup z55({5, 5});
  auto s = GeneratingSet::closed_under_inverses(z55, {GroupElem{{1, 0}}, GroupElem{{0, 1}}});
  auto glv = group_induced_layers(z55, s, {GroupElem{{1, 0}}, GroupElem{{4, 0}}});
  auto gz = zigzag_cycle(glv, {{2}, {}});
  CHECK(gz.mu == gz.mu_formula);
}

TEST_CASE("zigzag sweep") {
  for (int k = 4; k <= 9; ++k)
    for (int l = 5; l <= 9; l += 2) {
      if (k * l > kMaxVertices) continue;
      auto lv = grid_layers(cycle_graph(k), l);
      int pairs = (l - 3) / 2;
      std::vector<int> a(pairs, 0);
      while (true) {
        auto z = zigzag_cycle(lv, {a, {}});
        CHECK(z.mu == z.mu_formula);
        int i = 0;
        while (i < pairs && a[i] == k - 2) a[i++] = 0;
        if (i == pairs) break;
        ++a[i];
      }
    }
}

TEST_CASE("boustrophedon cycles") {
  auto r = boustrophedon_cycles(cartesian_product(cycle_graph(5), cycle_graph(4)));
  CHECK(r.eh_c == 6);
  CHECK(r.eh_c_hat == 12);
  auto r3 = boustrophedon_cycles(cartesian_product(cycle_graph(3), cycle_graph(3)));
  CHECK(r3.eh_c == 4);
  CHECK(r3.eh_c_hat == 5);
  for (int k = 3; k <= 8; ++k)
    for (int l = 3; l <= 8; ++l) {
      if (k * l > kMaxVertices) continue;
      auto b = boustrophedon_cycles(cartesian_product(complete_graph(k), cycle_graph(l)));
      CHECK(b.eh_c == 2 * (l - 1));
      CHECK(b.eh_c_hat == 2 * (l - 1) + (k - 2) * (l - 2));
      CHECK(b.eh_c < b.eh_c_hat);
    }
  CHECK_THROWS_AS(boustrophedon_cycles(cartesian_product(path_graph(3), cycle_graph(3))), Error);
}
