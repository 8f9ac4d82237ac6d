// Copyright 2026 The RML Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "rml/error.hpp"
#include "rml/kernel3.hpp"
#include "rml/linearize.hpp"

using rml::IndexSet;

namespace {

rml::MlpInstance cubic(int n, const std::vector<std::vector<int>>& supports) {
  std::vector<rml::Monomial> monos;
  for (auto s : supports) {
    for (int& j : s) --j;
    monos.push_back({1.0, IndexSet::from_unsorted(s)});
  }
  return rml::MlpInstance(n, rml::Domain::kUnitBox, monos);
}

rml::MlpInstance two_sharing() { return cubic(4, {{1, 2, 3}, {1, 2, 4}}); }

rml::MlpInstance ten_variable_chain() {
  return cubic(10, {{1, 2, 3}, {4, 5, 6}, {4, 6, 7}, {7, 8, 9}, {8, 9, 10}, {7, 9, 10}});
}

std::set<IndexSet> names(const rml::CoverGraph& g, const std::vector<int>& ids) {
  std::set<IndexSet> out;
  for (int i : ids) out.insert(g.u[i]);
  return out;
}

// Degree-2 and degree-3 monomials whose cover graph has at most 20 pairs.
std::vector<rml::MlpInstance> random_cubics(int count, std::uint64_t first_seed) {
  std::vector<rml::MlpInstance> out;
  for (std::uint64_t seed = first_seed; static_cast<int>(out.size()) < count; ++seed) {
    const int n = 6 + static_cast<int>(seed % 4);
    const int m = 3 + static_cast<int>(seed % 6);
    auto mlp = oracle::random_mlp(n, m, 2, 3, seed);
    if (rml::build_cover_graph(mlp).u.size() <= 20) out.push_back(mlp);
  }
  return out;
}

}  // namespace

TEST_CASE("cover graph of two monomials sharing a pair") {
  auto g = rml::build_cover_graph(two_sharing());
  CHECK(g.u.size() == 5);
  CHECK(g.v.size() == 2);
  CHECK(g.edges() == 6);
  CHECK(g.u[0] == IndexSet{0, 1});
  CHECK(g.u_degree(0) == 2);
}

TEST_CASE("cover graph preprocessing") {
  auto single = rml::build_cover_graph(cubic(3, {{1, 2, 3}}));
  CHECK(single.u.size() == 3);
  CHECK(single.v.size() == 1);

  auto forced = rml::build_cover_graph(cubic(3, {{1, 2}, {1, 2, 3}}));
  CHECK(forced.v.empty());
  CHECK(forced.forced == std::vector<IndexSet>{IndexSet{0, 1}});

  try {
    rml::build_cover_graph(cubic(4, {{1, 2, 3, 4}}));
    FAIL("expected an error");
  } catch (const rml::Error& e) {
    CHECK(e.code() == rml::ErrorCode::kDomain);
  }
  CHECK_THROWS_AS(rml::build_cover_graph(cubic(5, {{1, 2, 3}, {3, 4, 5}}), 0), rml::Error);
}

TEST_CASE("reduction walkthrough on the ten-variable chain") {
  auto g = rml::build_cover_graph(ten_variable_chain());
  auto [reduced, trace] = rml::apply_rules(g);
  REQUIRE(trace.steps.size() == 4);

  CHECK(trace.steps[0].rule == rml::ReductionRule::kIsolatedMonomial);
  CHECK(g.u[trace.steps[0].selected] == IndexSet{0, 1});
  CHECK(names(g, trace.steps[0].removed_u) ==
        std::set<IndexSet>{{0, 1}, {0, 2}, {1, 2}});

  CHECK(trace.steps[1].rule == rml::ReductionRule::kDegreeOnePair);
  CHECK(names(g, trace.steps[1].removed_u) ==
        std::set<IndexSet>{{3, 4}, {4, 5}, {3, 6}, {5, 6}, {6, 7}, {7, 9}, {6, 9}});

  CHECK(trace.steps[2].rule == rml::ReductionRule::kSingleNeighbour);
  CHECK(g.u[trace.steps[2].selected] == IndexSet{3, 5});
  CHECK(trace.steps[3].rule == rml::ReductionRule::kComponents);

  // A triangle is left: three pairs of degree 2 over three monomials.
  CHECK(reduced.alive_v() == 3);
  CHECK(reduced.alive_u() == 3);
  CHECK(reduced.edges() == 6);
  CHECK(names(reduced, reduced.selected) == std::set<IndexSet>{{0, 1}, {3, 5}});
  CHECK(rml::min_cover_bruteforce(g).size() == 4);
  CHECK(rml::min_cover_bruteforce(reduced).size() == 2);
}

TEST_CASE("replaying a trace reproduces the reduced graph") {
  for (const auto& mlp : random_cubics(30, 100)) {
    auto g = rml::build_cover_graph(mlp);
    auto [reduced, trace] = rml::apply_rules(g);
    auto again = rml::replay(g, trace);
    CHECK(again.u_alive == reduced.u_alive);
    CHECK(again.v_alive == reduced.v_alive);
    CHECK(again.selected == reduced.selected);
    CHECK(again.v_component == reduced.v_component);
  }
}

TEST_CASE("isolated monomial is resolved by the first rule") {
  auto g = rml::build_cover_graph(cubic(3, {{1, 2, 3}}));
  auto [reduced, trace] = rml::apply_rules(g);
  CHECK(reduced.alive_u() == 0);
  CHECK(reduced.alive_v() == 0);
  CHECK(names(reduced, reduced.selected) == std::set<IndexSet>{{0, 1}});
}

TEST_CASE("a reduced graph is a fixpoint") {
  auto g = rml::build_cover_graph(ten_variable_chain());
  auto once = rml::apply_rules(g).first;
  auto [twice, trace] = rml::apply_rules(once);
  CHECK(trace.steps.size() == 1);
  CHECK(twice.u_alive == once.u_alive);
  CHECK(twice.v_alive == once.v_alive);
}

TEST_CASE("monomials sharing one variable keep a cover") {
  // Every pair has degree 1 here; removing all of them would strand both.
  auto g = rml::build_cover_graph(cubic(5, {{1, 2, 3}, {1, 4, 5}}));
  auto [reduced, trace] = rml::apply_rules(g);
  CHECK(reduced.alive_v() == 0);
  CHECK(reduced.selected.size() == 2);
}

TEST_CASE("components are labelled") {
  auto g = rml::build_cover_graph(cubic(9, {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {5, 6, 7},
                                            {5, 6, 8}, {5, 7, 8}, {6, 7, 8}}));
  auto reduced = rml::apply_rules(g).first;
  std::set<int> labels;
  for (std::size_t j = 0; j < reduced.v.size(); ++j)
    if (reduced.v_alive[j]) labels.insert(reduced.v_component[j]);
  CHECK(labels.size() == 2);
  CHECK(reduced.v_component[0] != reduced.v_component[3]);
}

TEST_CASE("rules keep the minimum cover size") {
  for (const auto& mlp : random_cubics(60, 1)) {
    auto g = rml::build_cover_graph(mlp);
    auto reduced = rml::apply_rules(g).first;
    const int before = static_cast<int>(rml::min_cover_bruteforce(g).size());
    CHECK(before == oracle::min_pair_cover(mlp));
    CHECK(before == static_cast<int>(reduced.selected.size() +
                                     rml::min_cover_bruteforce(reduced).size()));
  }
}

TEST_CASE("reduced graph structure") {
  for (const auto& mlp : random_cubics(60, 500)) {
    auto reduced = rml::apply_rules(rml::build_cover_graph(mlp)).first;
    for (std::size_t j = 0; j < reduced.v.size(); ++j) {
      if (!reduced.v_alive[j]) continue;
      const int d = reduced.v_degree(static_cast<int>(j));
      CHECK(d >= 2);
      CHECK(d <= 3);
    }
    std::vector<int> alive;
    for (std::size_t i = 0; i < reduced.u.size(); ++i) {
      if (!reduced.u_alive[i]) continue;
      CHECK(reduced.u_degree(static_cast<int>(i)) >= 2);
      alive.push_back(static_cast<int>(i));
    }
    for (std::size_t a = 0; a < alive.size(); ++a) {
      for (std::size_t b = a + 1; b < alive.size(); ++b) {
        int common = 0;
        for (int w : reduced.u_adj[alive[a]])
          for (int x : reduced.u_adj[alive[b]])
            common += w == x && reduced.v_alive[w];
        CHECK(common <= 1);
      }
    }
  }
}

TEST_CASE("high-degree rule") {
  // One pair shared by three monomials.
  auto star = rml::build_cover_graph(cubic(5, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}}));
  auto r = rml::buss_rule(star, 1);
  CHECK_FALSE(r.no);
  CHECK(r.k == 0);
  CHECK(r.graph.alive_v() == 0);
  CHECK(names(r.graph, r.graph.selected) == std::set<IndexSet>{{0, 1}});

  auto same = rml::buss_rule(star, 5);
  CHECK(same.k == 5);
  CHECK(same.trace.steps.empty());

  auto two = rml::build_cover_graph(
      cubic(10, {{1, 2, 3}, {1, 2, 4}, {1, 2, 5}, {6, 7, 8}, {6, 7, 9}, {6, 7, 10}}));
  CHECK(rml::buss_rule(two, 1).no);
}

TEST_CASE("kernel") {
  rml::CoverGraph empty = rml::build_cover_graph(cubic(2, {{1, 2}}));
  auto k0 = rml::kernelize(empty, 0);
  CHECK_FALSE(k0.no);
  CHECK(k0.graph.alive_v() == 0);

  auto chain = rml::build_cover_graph(ten_variable_chain());
  CHECK(rml::kernelize(chain, 3).no);
  auto yes = rml::kernelize(chain, 4);
  CHECK_FALSE(yes.no);
  CHECK(yes.k == 2);

  for (const auto& mlp : random_cubics(60, 900)) {
    auto g = rml::build_cover_graph(mlp);
    const int min = static_cast<int>(rml::min_cover_bruteforce(g).size());
    auto ker = rml::kernelize(g, min);
    REQUIRE_FALSE(ker.no);
    const long long kk = static_cast<long long>(ker.k) * ker.k;
    CHECK(ker.graph.alive_v() <= kk);
    CHECK(ker.graph.edges() <= 3 * kk);
    CHECK(2 * ker.graph.alive_u() <= ker.graph.edges());
  }
}

TEST_CASE("bounded search decisions") {
  auto g = rml::build_cover_graph(two_sharing());
  auto yes = rml::fpt_decide(g, 1);
  CHECK(yes.yes);
  CHECK(yes.selection == std::vector<IndexSet>{IndexSet{0, 1}});
  CHECK_FALSE(rml::fpt_decide(g, 0).yes);
  CHECK_FALSE(rml::fpt_decide(g, -1).yes);

  for (const auto& mlp : random_cubics(60, 2000)) {
    auto graph = rml::build_cover_graph(mlp);
    const int min = oracle::min_pair_cover(mlp);
    auto at = rml::fpt_decide(graph, min);
    REQUIRE(at.yes);
    CHECK(static_cast<int>(at.selection.size()) <= min);
    CHECK(rml::is_proper(rml::selection_to_triples(mlp, at.selection), mlp));
    if (min > 0) CHECK_FALSE(rml::fpt_decide(graph, min - 1).yes);
  }
}

TEST_CASE("brute-force cover") {
  CHECK(rml::min_cover_bruteforce(rml::build_cover_graph(two_sharing())).size() == 1);
  CHECK(rml::min_cover_bruteforce(rml::build_cover_graph(cubic(6, {{1, 2, 3}, {4, 5, 6}})))
            .size() == 2);
  auto big = rml::build_cover_graph(rml::gen_greedy_adversarial(4));
  try {
    rml::min_cover_bruteforce(big);
    FAIL("expected an error");
  } catch (const rml::Error& e) {
    CHECK(e.code() == rml::ErrorCode::kSizeGuard);
  }
  CHECK(rml::min_cover_bruteforce(big, 30).size() == 4);
}

TEST_CASE("selections become proper triple sets") {
  auto fig = two_sharing();
  auto T = rml::selection_to_triples(fig, {IndexSet{0, 1}});
  CHECK(T.size() == 3);
  CHECK(rml::is_proper(T, fig));

  auto mlp = rml::example_instance();
  auto g = rml::build_cover_graph(mlp);
  auto pick = rml::min_cover_bruteforce(g);
  std::vector<IndexSet> pairs;
  for (int id : pick) pairs.push_back(g.u[id]);
  auto T1 = rml::selection_to_triples(mlp, pairs);
  CHECK(T1.size() == 5);
  CHECK(rml::is_proper(T1, mlp));

  auto pair_only = cubic(2, {{1, 2}});
  CHECK(rml::selection_to_triples(pair_only, {}).size() == 1);
  CHECK_THROWS_AS(rml::selection_to_triples(fig, {IndexSet{2, 3}}), rml::Error);
}

TEST_CASE("selection size formula") {
  for (const auto& mlp : random_cubics(30, 3000)) {
    auto g = rml::build_cover_graph(mlp);
    auto pick = rml::min_cover_bruteforce(g);
    std::vector<IndexSet> pairs;
    for (int id : pick) pairs.push_back(g.u[id]);
    std::set<IndexSet> all_pairs(pairs.begin(), pairs.end());
    all_pairs.insert(g.forced.begin(), g.forced.end());
    int cubes = 0;
    for (const auto& mono : mlp.monomials()) cubes += mono.vars.size() == 3;
    auto T = rml::selection_to_triples(mlp, pairs);
    CHECK(T.size() == all_pairs.size() + cubes);
    CHECK(rml::is_proper(T, mlp));
  }
}

TEST_CASE("vertex cover encoding") {
  const std::vector<std::pair<int, int>> six{{0, 1}, {0, 2}, {1, 2}, {1, 3},
                                             {2, 4}, {3, 4}, {3, 5}};
  auto mlp = rml::gen_vertex_cover_instance(6, six);
  CHECK(mlp.n() == 7);
  CHECK(mlp.size() == 7);
  CHECK(mlp.monomial(0).vars == IndexSet{0, 1, 6});
  const int cover = oracle::vertex_cover(6, six);
  CHECK(cover == 3);
  auto hub = rml::build_cover_graph(mlp, 6);
  CHECK(hub.u.size() == 6);
  CHECK(rml::min_cover_bruteforce(hub).size() == 3);
  CHECK(rml::min_cover_bruteforce(rml::build_cover_graph(mlp)).size() == 3);

  auto tri = rml::gen_vertex_cover_instance(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK(rml::min_cover_bruteforce(rml::build_cover_graph(tri, 3)).size() == 2);
  auto edge = rml::gen_vertex_cover_instance(2, {{0, 1}});
  CHECK(rml::min_cover_bruteforce(rml::build_cover_graph(edge, 2)).size() == 1);

  CHECK_THROWS_AS(rml::gen_vertex_cover_instance(3, {{0, 1}}), rml::Error);
  CHECK_THROWS_AS(rml::gen_vertex_cover_instance(2, {{0, 1}, {1, 0}}), rml::Error);
  CHECK_THROWS_AS(rml::gen_vertex_cover_instance(2, {{0, 0}}), rml::Error);
}

TEST_CASE("adversarial layout") {
  for (int k : {2, 3, 4, 8, 16}) {
    auto layout = rml::greedy_adversarial_layout(k);
    CHECK(layout.n_u == k);
    int expected_v = 0;
    for (int i = 1; i <= k; ++i) expected_v += k / i;
    CHECK(layout.n_v == expected_v);
    std::vector<int> degree(layout.n_v, 0);
    std::set<std::pair<int, int>> distinct(layout.edges.begin(), layout.edges.end());
    CHECK(distinct.size() == layout.edges.size());
    for (auto [v, u] : layout.edges) ++degree[v];
    // Groups are laid out V_1, V_2, ...; within V_i each U vertex is used once.
    int v = 0;
    for (int i = 1; i <= k; ++i) {
      std::set<int> used;
      for (int c = 0; c < k / i; ++c, ++v) {
        CHECK(degree[v] == i);
        for (auto [a, u] : layout.edges)
          if (a == v) CHECK(used.insert(u).second);
      }
    }
  }
  CHECK_THROWS_AS(rml::greedy_adversarial_layout(1), rml::Error);
}

TEST_CASE("greedy against the adversarial instances") {
  const std::vector<std::pair<int, int>> expected{{2, 3}, {4, 8}, {8, 20}};
  for (auto [k, greedy_pairs] : expected) {
    auto mlp = rml::gen_greedy_adversarial(k);
    auto T = rml::greedy_linearize(mlp);
    int pairs = 0;
    for (const auto& t : T) pairs += t.head.size() == 2;
    CHECK(pairs == greedy_pairs);
    auto layout = rml::greedy_adversarial_layout(k);
    CHECK(oracle::bipartite_vertex_cover(layout.n_v, layout.n_u, layout.edges) == k);
    auto hub = rml::build_cover_graph(mlp, mlp.n() - 1);
    CHECK(rml::fpt_decide(hub, k).yes);
    CHECK_FALSE(rml::fpt_decide(hub, k - 1).yes);
  }
}
