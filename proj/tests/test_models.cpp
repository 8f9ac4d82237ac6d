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

#include "oracles.hpp"
#include "rml/error.hpp"
#include "rml/linearize.hpp"
#include "rml/models.hpp"
#include "rml/relax.hpp"

using rml::IndexSet;

TEST_CASE("minimum linearization of the reference instance") {
  auto mlp = rml::example_instance();
  auto cold = rml::solve_minlin(mlp);
  CHECK(cold.status == rml::solver::Status::kOptimal);
  CHECK(cold.objective == doctest::Approx(5));
  CHECK(cold.triples.size() == 5);
  CHECK(rml::is_proper(cold.triples, mlp));
  CHECK(oracle::min_proper_size(mlp) == 5);
  auto warm = rml::solve_minlin(mlp, {}, rml::seq_linearize(mlp));
  CHECK(warm.triples.size() == 5);
}

TEST_CASE("minimum linearization matches subset enumeration") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 40 && checked < 12; ++seed) {
    auto mlp = oracle::random_mlp(6, 3, 2, 4, seed);
    if (oracle::universe(mlp).size() > 16) continue;
    auto r = rml::solve_minlin(mlp);
    REQUIRE(r.status == rml::solver::Status::kOptimal);
    CHECK(static_cast<int>(r.triples.size()) == oracle::min_proper_size(mlp));
    CHECK(rml::is_proper(r.triples, mlp));
    ++checked;
  }
  CHECK(checked >= 8);
}

TEST_CASE("minlin model shape") {
  auto mlp = rml::example_instance();
  rml::TripleUniverse u(mlp);
  auto m = rml::build_minlin_mip(mlp, u);
  CHECK(m.vars.v.size() == u.size());
  CHECK(m.vars.u.size() == mlp.size());
  for (int v : m.vars.v) CHECK(m.model.var(v).integer);
}

TEST_CASE("dual bounds") {
  auto mlp = rml::example_instance();
  rml::TripleUniverse u(mlp);
  auto b = rml::dual_bounds(mlp, u);
  CHECK_FALSE(b.clamped);
  for (int t = 0; t < static_cast<int>(u.size()); ++t) {
    CHECK(b.m_t[t][2] == rml::eta(mlp));
    if (u.triple(t).head.size() == 2)
      CHECK(b.m_t[t] == std::array<double, 3>{2.0, 2.0, 2.0});
    for (double v : b.m_t[t]) CHECK(v >= 0);
  }
  for (double v : b.m_j) CHECK(v == rml::eta(mlp));
  CHECK(b.max_m >= 2.0);
}

TEST_CASE("best bound on the reference instance") {
  auto mlp = rml::example_instance();
  for (int k : {5, 6}) {
    auto r = rml::solve_bestbound(mlp, k);
    CHECK(r.exact.status == rml::solver::Status::kOptimal);
    CHECK(r.bound == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(r.exact.objective == doctest::Approx(-1.0).epsilon(1e-7));
    CHECK(static_cast<int>(r.exact.triples.size()) <= k);
  }
  CHECK(oracle::best_bound(mlp, 5) == doctest::Approx(-1.0).epsilon(1e-9));
  auto too_small = rml::solve_bestbound(mlp, 4);
  CHECK_FALSE(too_small.exact.has_solution);
}

TEST_CASE("best bound matches enumeration on small instances") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 40 && checked < 6; ++seed) {
    auto mlp = oracle::random_mlp(5, 3, 2, 3, seed);
    if (oracle::universe(mlp).size() > 12) continue;
    const int k = rml::solve_minlin(mlp).triples.size() + 1;
    auto r = rml::solve_bestbound(mlp, k);
    REQUIRE(r.exact.status == rml::solver::Status::kOptimal);
    CHECK(r.bound == doctest::Approx(oracle::best_bound(mlp, k)).epsilon(1e-7));
    ++checked;
  }
  CHECK(checked >= 4);
}

TEST_CASE("fixed activation reproduces the LP bound") {
  auto mlp = rml::example_instance();
  rml::TripleUniverse u(mlp);
  auto bounds = rml::dual_bounds(mlp, u);
  for (const auto& T : {rml::seq_linearize(mlp), rml::greedy_linearize(mlp), u.all(),
                        rml::seq_linearize(mlp, rml::SeqPolicy::variable_order({2, 3, 0, 1}))}) {
    CHECK(rml::bestbound_fixed(mlp, u, bounds, T) ==
          doctest::Approx(rml::lp_bound_value(mlp, T)).epsilon(1e-7));
  }
}

TEST_CASE("routing trees derive each monomial") {
  auto mlp = oracle::random_mlp(7, 6, 2, 4, 9);
  rml::TripleUniverse u(mlp);
  auto T = rml::greedy_linearize(mlp);
  auto trees = rml::routing_trees(mlp, u, T);
  REQUIRE(trees.size() == mlp.size());
  for (std::size_t i = 0; i < mlp.size(); ++i) {
    rml::MlpInstance single(mlp.n(), rml::Domain::kUnitBox, {mlp.monomial(i)});
    rml::TripleSet tree;
    for (int t : trees[i]) tree.insert(u.triple(t));
    if (mlp.monomial(i).vars.size() > 1) {
      CHECK(rml::is_proper(tree, single));
      CHECK(tree.size() == mlp.monomial(i).vars.size() - 1);
    }
    for (const auto& t : tree) CHECK(T.count(t));
  }
}

TEST_CASE("binary exact model") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto mlp = oracle::random_mlp(8, 10, 1, 4, seed, rml::Domain::kBinary);
    const double truth = oracle::binary_minimum(mlp);
    for (const auto& T : {rml::greedy_linearize(mlp), rml::full_linearize(mlp)}) {
      auto r = rml::solve_binary_exact(mlp, T);
      REQUIRE(r.status == rml::solver::Status::kOptimal);
      CHECK(r.objective == doctest::Approx(truth));
      std::vector<double> x(r.x.begin(), r.x.end());
      CHECK(mlp.evaluate(x) == doctest::Approx(truth));
    }
  }
  try {
    rml::build_binary_exact_mip(rml::example_instance(), rml::TripleSet{});
    FAIL("expected an error");
  } catch (const rml::Error& e) {
    CHECK(e.code() == rml::ErrorCode::kDomain);
  }
}

TEST_CASE("QCP export") {
  auto mlp = rml::example_instance();
  auto T = rml::greedy_linearize(mlp);
  auto qcp = rml::build_qcp(mlp, T);
  CHECK(qcp.num_rows() == static_cast<int>(T.size()));
  const std::string text = rml::export_qcp(mlp, T);
  CHECK(text.find("bil0:") != std::string::npos);
  CHECK(text.find("[ y_1 * y_3 ]") != std::string::npos);
  CHECK(text.rfind("End\n") == text.size() - 4);
}
