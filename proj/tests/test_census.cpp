#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "hamsym/census.hpp"
#include "hamsym/constructors.hpp"
#include "hamsym/error.hpp"
#include "hamsym/graph_io.hpp"
#include "hamsym/perm_group.hpp"

using namespace hamsym;

TEST_CASE("abelian groups by order") {
  CHECK(enumerate_abelian_groups(8) == std::vector<std::vector<int>>{{8}, {2, 4}, {2, 2, 2}});
  CHECK(enumerate_abelian_groups(12) == std::vector<std::vector<int>>{{12}, {2, 6}});
  CHECK(enumerate_abelian_groups(7) == std::vector<std::vector<int>>{{7}});
  CHECK(enumerate_abelian_groups(16).size() == 5);
  CHECK(enumerate_abelian_groups(27) == std::vector<std::vector<int>>{{27}, {3, 9}, {3, 3, 3}});
  CHECK(enumerate_abelian_groups(36).size() == 4);
  for (int n = 2; n <= 40; ++n)
    for (const auto& f : enumerate_abelian_groups(n)) CHECK_NOTHROW(AbelianGroup{f});
}

TEST_CASE("generating sets") {
  CHECK(enumerate_generating_sets(AbelianGroup({4})).size() == 2);
  CHECK(enumerate_generating_sets(AbelianGroup({2, 2})).size() == 4);
  auto z3 = enumerate_generating_sets(AbelianGroup({3}));
  REQUIRE(z3.size() == 1);
  CHECK(z3[0].indices() == std::vector<int>{1, 2});

  // Brute force over all subsets of Z6 \ {0}.
  AbelianGroup z6({6});
  int expected = 0;
  for (unsigned m = 0; m < 32; ++m) {
    std::vector<int> idx;
    for (int i = 0; i < 5; ++i)
      if ((m >> i) & 1u) idx.push_back(i + 1);
    bool closed = true;
    for (int x : idx) closed = closed && std::find(idx.begin(), idx.end(), z6.neg_index(x)) != idx.end();
    if (closed && !idx.empty() && static_cast<int>(z6.subgroup(idx).size()) == 6) ++expected;
  }
  CHECK(enumerate_generating_sets(z6).size() == static_cast<std::size_t>(expected));
}

TEST_CASE("census up to order 6") {
  CensusOptions opts;
  opts.max_order = 6;
  opts.jobs = 2;
  auto report = run_census(opts);
  std::multiset<std::string> members;
  for (const auto* m : report.members()) members.insert(m->family);
  CHECK(members == std::multiset<std::string>{"K3", "C4", "K4", "C5", "K5", "C6", "K6", "K3,3", "C3xK2"});
  CHECK(report.inconclusive().empty());
  CHECK_FALSE(report.partial);

  std::set<std::string> certs;
  for (const auto& r : report.records) {
    CHECK(certs.insert(r.cert).second);
    CHECK(r.presentations >= 1);
    if (r.prediction.verdict != Verdict::Unknown)
      CHECK(r.verdict == std::string(verdict_name(r.prediction.verdict)));
    // Vertex transitivity: translations are automorphisms.
    auto g = graph6_decode(r.graph6);
    if (r.verdict == "InH" && r.order % 2 == 0) CHECK(r.kappa % 2 == 0);
    CHECK(g.order() == r.order);
  }
  // Cay(Z6, {±1}) and Cay(Z6, {±2, 3}) are C6 and the 3-prism.
  long z6 = 0;
  for (const auto& r : report.records) z6 += r.order == 6 ? r.presentations : 0;
  CHECK(z6 == report.per_order.at(6).generating_sets);
  CHECK(report.per_order.at(6).graphs == 5);
}

TEST_CASE("census graphs are vertex transitive") {
  for (int n = 3; n <= 9; ++n)
    for (const auto& f : enumerate_abelian_groups(n)) {
      AbelianGroup gamma(f);
      for (const auto& s : enumerate_generating_sets(gamma)) {
        auto g = cayley_graph(gamma, s);
        for (int t = 0; t < n; ++t) {
          std::vector<int> img(n);
          for (int x = 0; x < n; ++x) img[x] = gamma.add_index(x, t);
          CHECK(is_automorphism(g, Perm(img)));
        }
      }
    }
}

TEST_CASE("census resumes and is deterministic") {
  auto dir = std::filesystem::temp_directory_path() / "hamsym_census_test";
  std::filesystem::remove_all(dir);
  CensusOptions opts;
  opts.max_order = 7;
  opts.jobs = 3;
  opts.out_dir = dir.string();
  auto first = run_census(opts);
  CHECK(std::filesystem::exists(dir / "order-07.jsonl"));
  auto second = run_census(opts);
  CHECK(report_to_json(first).dump() == report_to_json(second).dump());
  opts.out_dir.clear();
  opts.jobs = 1;
  CHECK(report_to_json(run_census(opts)).dump() == report_to_json(first).dump());
  CHECK(summary_table(first).find("K3,3") != std::string::npos);
  std::filesystem::remove_all(dir);
  CHECK_THROWS_AS(run_census(CensusOptions{.max_order = 2}), Error);
}
