#include <doctest.h>

#include <random>

#include "hamsym/abelian.hpp"
#include "hamsym/autgroup.hpp"
#include "hamsym/constructors.hpp"
#include "hamsym/error.hpp"
#include "oracles.hpp"

using namespace hamsym;

namespace {

GroupElem el(std::vector<int> r) { return GroupElem{std::move(r)}; }

GeneratingSet gens(const AbelianGroup& g, std::vector<std::vector<int>> xs) {
  std::vector<GroupElem> v;
  for (auto& x : xs) v.push_back(el(x));
  return GeneratingSet::closed_under_inverses(g, v);
}

}  // namespace

TEST_CASE("basic families") {
  auto c5 = cycle_graph(5);
  CHECK(c5.order() == 5);
  CHECK(c5.size() == 5);
  CHECK(is_regular(c5, 2));
  CHECK(complete_graph(6).size() == 15);
  auto k44 = complete_bipartite(4, 4);
  CHECK(k44.size() == 16);
  CHECK(is_bipartite(k44));
  CHECK_THROWS_AS(cycle_graph(2), Error);
  CHECK_THROWS_AS(complete_bipartite(0, 3), Error);
}

TEST_CASE("cartesian products") {
  auto k2 = complete_graph(2);
  CHECK(is_isomorphic(cartesian_product(k2, k2).graph, cycle_graph(4)));
  auto cube = cartesian_product(cycle_graph(4), k2);
  CHECK(cube.graph.order() == 8);
  CHECK(cube.graph.size() == 12);

  auto p = cartesian_product(cycle_graph(3), cycle_graph(5));
  CHECK(p.graph.order() == 15);
  CHECK(is_regular(p.graph, 4));
  CHECK(p.direction_class(0).size() == 15);
  CHECK(p.direction_class(1).size() == 15);

  // Removing one direction class leaves |other| disjoint copies of the factor.
  auto g = complete_graph(4);
  auto h = path_graph(3);
  auto q = cartesian_product(g, h);
  CHECK(q.graph.size() == g.order() * h.size() + h.order() * g.size());
  auto only_g = q.graph.spanning(q.direction_class(0));
  for (int j = 0; j < h.order(); ++j) {
    std::vector<int> layer;
    for (int i = 0; i < g.order(); ++i) layer.push_back(q.vertex({i, j}));
    CHECK(only_g.induced(layer) == g);
  }
  CHECK(only_g.size() == h.order() * g.size());

  CHECK_THROWS_AS(cartesian_power(cycle_graph(5), 4), Error);
  CHECK(cartesian_power(complete_graph(2), 3).graph.size() == 12);
}

TEST_CASE("prisms") {
  CHECK(prism(3).graph.size() == 9);
  CHECK(is_isomorphic(prism(4).graph, cartesian_product(cycle_graph(4), complete_graph(2)).graph));
  auto p7 = prism(7);
  CHECK(p7.graph.order() == 14);
  CHECK(p7.graph.labels()[0] == "v0");
  CHECK(p7.graph.labels()[1] == "u0");
  CHECK(p7.graph.adjacent(0, 1));
  CHECK(p7.graph.adjacent(0, 2));
  CHECK_THROWS_AS(prism(2), Error);
}

TEST_CASE("cayley graphs") {
  AbelianGroup z6({6});
  CHECK(is_isomorphic(cayley_graph(z6, gens(z6, {{1}})), cycle_graph(6)));
  AbelianGroup z5({5});
  CHECK(cayley_graph(z5, gens(z5, {{1}, {2}})) == complete_graph(5));
  for (int k = 3; k <= 7; ++k) {
    auto g = AbelianGroup::from_moduli({k, 2});
    auto s = GeneratingSet::closed_under_inverses(g, {el({1, 0}), el({0, 1})});
    CHECK(is_isomorphic(cayley_graph(g, s), prism(k).graph));
  }
  CHECK_THROWS_AS(GeneratingSet(z6, {el({2}), el({4})}), Error);
  CHECK_THROWS_AS(GeneratingSet(z6, {el({0}), el({1}), el({5})}), Error);
  CHECK_THROWS_AS(GeneratingSet(z6, {el({1})}), Error);

  // Translations are automorphisms.
  AbelianGroup g({2, 4});
  auto s = gens(g, {{1, 0}, {0, 1}, {1, 2}});
  auto cay = cayley_graph(g, s);
  CHECK(cay.labels()[5] == "(1,1)");
  for (int t = 0; t < g.order(); ++t) {
    std::vector<int> img(g.order());
    for (int x = 0; x < g.order(); ++x) img[x] = g.add_index(x, t);
    CHECK(is_automorphism(cay, Perm(img)));
  }
}

TEST_CASE("order split") {
  AbelianGroup z15({15});
  auto split = split_by_orders(z15, gens(z15, {{3}, {5}}), 3);
  CHECK(split.p_part.size() == 2);
  CHECK(split.p_part[0] == el({5}));
  CHECK(split.coprime_part[0] == el({3}));
  CHECK(is_isomorphic(split.product.graph, cartesian_product(cycle_graph(3), cycle_graph(5)).graph));

  AbelianGroup z6({6});
  CHECK_THROWS_AS(split_by_orders(z6, gens(z6, {{1}}), 3), Error);

  auto g = AbelianGroup::from_moduli({9, 2});
  auto s = GeneratingSet::closed_under_inverses(g, {el({1, 0}), el({0, 1})});
  auto sp = split_by_orders(g, s, 3);
  CHECK(is_isomorphic(sp.product.factors[0], cycle_graph(9)));
  CHECK(is_isomorphic(sp.product.factors[1], complete_graph(2)));
  auto cay = cayley_graph(g, s);
  for (const auto& e : sp.product.graph.edges())
    CHECK(cay.adjacent(sp.isomorphism(e.u), sp.isomorphism(e.v)));
}

TEST_CASE("splitting lemma") {
  // Z_4 x Z_3 with S_1 in the first factor and S_2 in the second.
  auto g = AbelianGroup::from_moduli({4, 3});
  auto s = GeneratingSet::closed_under_inverses(g, {el({1, 0}), el({2, 0}), el({0, 1})});
  auto prod = cartesian_product(complete_graph(4), cycle_graph(3)).graph;
  CHECK(is_isomorphic(cayley_graph(g, s), prod));
}

TEST_CASE("truncation") {
  auto k4 = complete_graph(4);
  auto t = truncation(k4);
  CHECK(t.order() == 12);
  CHECK(t.size() == 18);
  CHECK(is_regular(t, 3));
  auto tk33 = truncation(complete_bipartite(3, 3));
  CHECK(tk33.order() == 18);
  CHECK(is_regular(tk33, 3));
  auto tp3 = truncation(prism(3).graph);
  CHECK(tp3.order() == 18);
  CHECK(vertex_connectivity(tp3) == 3);
  CHECK(vertex_connectivity(t) == 3);
  CHECK(truncation_vertex(k4, 2, 3) == 8);
  CHECK_THROWS_AS(truncation(cycle_graph(5)), Error);
}

TEST_CASE("regular gadget") {
  auto g = regular_gadget(3, 5);
  CHECK(g.order() == 20);
  CHECK(is_regular(g, 3));
  CHECK(is_isomorphic(regular_gadget(2, 3), cycle_graph(9)));
  auto g43 = regular_gadget(4, 3);
  CHECK(g43.order() == 15);
  CHECK(is_regular(g43, 4));
  CHECK_THROWS_AS(regular_gadget(1, 3), Error);
}

TEST_CASE("complement of a cycle") {
  CHECK(is_isomorphic(complement_of_cycle(5), cycle_graph(5)));
  auto c8 = complement_of_cycle(8);
  CHECK(is_regular(c8, 5));
  CHECK(automorphisms(c8).order() == 16);
  auto c7 = complement_of_cycle(7);
  CHECK(is_regular(c7, 4));
  CHECK(c7.size() == 14);
  CHECK_THROWS_AS(complement_of_cycle(4), Error);
}

TEST_CASE("group induced layers") {
  AbelianGroup z15({15});
  auto s15 = gens(z15, {{1}});
  CHECK_THROWS_AS(group_induced_layers(z15, s15, {}), Error);

  AbelianGroup z55({5, 5});
  auto s = gens(z55, {{1, 0}, {0, 1}});
  auto lv = group_induced_layers(z55, s, {el({1, 0}), el({4, 0})});
  CHECK(lv.layer_count() == 5);
  CHECK(lv.layer_size() == 5);
  CHECK(is_isomorphic(lv.layer_graph, cycle_graph(5)));
  CHECK(verify_layered_view(lv));
  for (int j = 0; j + 1 < lv.layer_count(); ++j) {
    auto a = lv.graph.induced(lv.layers[j]);
    auto b = lv.graph.induced(lv.layers[j + 1]);
    CHECK(is_isomorphic(a, b));
    CHECK(a == b);  // identity on positions is the matching
  }
  // Extra generators outside <S'> are fine; (2,0) inside <S'> is not.
  auto s2 = gens(z55, {{1, 0}, {0, 1}, {1, 1}});
  CHECK_NOTHROW(group_induced_layers(z55, s2, {el({1, 0}), el({4, 0})}));
  auto s3 = gens(z55, {{1, 0}, {2, 0}, {0, 1}});
  CHECK_THROWS_AS(group_induced_layers(z55, s3, {el({1, 0}), el({4, 0})}), Error);
}

TEST_CASE("group induced layers on Z3^4") {
  if (kMaxVertices < 81) return;
  AbelianGroup z3({3, 3, 3, 3});
  auto s = gens(z3, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  auto lv = group_induced_layers(z3, s, {el({1, 0, 0, 0}), el({2, 0, 0, 0}), el({0, 1, 0, 0}), el({0, 2, 0, 0})});
  CHECK(lv.layer_count() == 9);
  CHECK(lv.layer_size() == 9);
  CHECK(is_regular(lv.layer_graph, 4));
  CHECK(is_isomorphic(lv.layer_graph, cartesian_product(complete_graph(3), complete_graph(3)).graph));
}

TEST_CASE("grid layers") {
  auto lv = grid_layers(cycle_graph(6), 7);
  CHECK(lv.layer_count() == 7);
  CHECK(verify_layered_view(lv));
  CHECK_THROWS_AS(grid_layers(path_graph(4), 3), Error);
}
