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
#include "rml/instances.hpp"
#include "rml/relax.hpp"
#include "rml/linearize.hpp"

using rml::IndexSet;

namespace {

std::array<int, 5> degree_counts(const rml::MlpInstance& mlp) {
  std::array<int, 5> c{};
  for (const auto& mono : mlp.monomials()) ++c[mono.vars.size()];
  return c;
}

}  // namespace

TEST_CASE("mult instances") {
  auto mlp = rml::gen_mult(20, 50, 3, 7);
  CHECK(mlp.n() == 20);
  CHECK(mlp.size() == 50);
  std::set<IndexSet> supports;
  for (const auto& mono : mlp.monomials()) {
    CHECK(mono.vars.size() == 3);
    CHECK(mono.coeff == std::round(mono.coeff));
    CHECK(mono.coeff != 0);
    CHECK(std::abs(mono.coeff) <= 100);
    supports.insert(mono.vars);
  }
  CHECK(supports.size() == 50);
  CHECK(rml::gen_mult(20, 50, 3, 7) == mlp);
  CHECK_FALSE(rml::gen_mult(20, 50, 3, 8) == mlp);

  auto all4 = rml::gen_mult(4, 1, 4, 3);
  CHECK(all4.monomial(0).vars == IndexSet{0, 1, 2, 3});
  CHECK(rml::gen_mult(5, 10, 3, 1).size() == 10);
  CHECK_THROWS_AS(rml::gen_mult(5, 11, 3, 1), rml::Error);
  CHECK_THROWS_AS(rml::gen_mult(3, 1, 4, 1), rml::Error);
}

TEST_CASE("mult coefficients cover both signs") {
  auto mlp = rml::gen_mult(30, 300, 4, 1);
  int neg = 0, pos = 0;
  for (const auto& mono : mlp.monomials()) (mono.coeff < 0 ? neg : pos)++;
  CHECK(neg > 100);
  CHECK(pos > 100);
}

TEST_CASE("vision term counts") {
  for (int g = 2; g <= 16; ++g) {
    auto c = degree_counts(rml::gen_vision(g, 1));
    const int b = (g - 1) * (g - 1);
    CHECK(c[1] == g * g);
    CHECK(c[2] == 2 * b);
    CHECK(c[3] == 4 * b);
    CHECK(c[4] == b);
  }
}

TEST_CASE("vision block patterns on a 3 x 3 grid") {
  auto mlp = rml::gen_vision(3, 5);
  // Cells 1..9 row-major; the top-left block is 1 2 / 4 5.
  for (auto s : {IndexSet{0, 4}, IndexSet{1, 3}, IndexSet{0, 1, 3}, IndexSet{0, 1, 4},
                 IndexSet{0, 3, 4}, IndexSet{1, 3, 4}, IndexSet{0, 1, 3, 4},
                 IndexSet{4, 5, 7, 8}, IndexSet{4, 8}})
    CHECK(mlp.find(s) >= 0);
  CHECK(mlp.find(IndexSet{0, 1}) < 0);
  CHECK(mlp.find(IndexSet{0, 8}) < 0);
}

TEST_CASE("vision affine seed only changes the linear part") {
  auto a = rml::gen_vision(4, 3);
  auto b = rml::gen_vision(4, 3, 99);
  REQUIRE(a.size() == b.size());
  int differ = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a.monomial(i).vars == b.monomial(i).vars);
    if (a.monomial(i).vars.size() > 1) {
      CHECK(a.monomial(i).coeff == b.monomial(i).coeff);
    } else {
      differ += a.monomial(i).coeff != b.monomial(i).coeff;
    }
  }
  CHECK(differ > 0);
  CHECK(rml::gen_vision(4, 3, 3) == a);
}

TEST_CASE("autocorrelation expansion") {
  auto three = rml::gen_autocorr(3, 1);
  CHECK(three.domain() == rml::Domain::kBinary);
  CHECK(three.size() == 3);
  CHECK(three.beta(IndexSet{0, 1}) == 1);
  CHECK(three.beta(IndexSet{1, 2}) == 1);
  CHECK(three.beta(IndexSet{0, 1, 2}) == 2);
  auto two = rml::gen_autocorr(2, 1);
  CHECK(two.size() == 1);
  CHECK(two.beta(IndexSet{0, 1}) == 1);
  CHECK_THROWS_AS(rml::gen_autocorr(3, 3), rml::Error);
  CHECK_THROWS_AS(rml::gen_autocorr(3, 0), rml::Error);

  // Sum over lags of the number of ordered term pairs.
  auto five = rml::gen_autocorr(5, 2);
  double total = 0;
  for (const auto& mono : five.monomials()) total += mono.coeff;
  CHECK(total == 4 * 4 + 3 * 3);
  for (const auto& T : {rml::seq_linearize(five), rml::greedy_linearize(five)})
    CHECK(rml::lp_bound_value(five, T) == doctest::Approx(0.0));
}

TEST_CASE("generator round trips") {
  for (const auto& mlp : {rml::example_instance(), rml::gen_vision(3, 2), rml::gen_autocorr(5, 3),
                          rml::gen_mult(12, 20, 4, 5)})
    CHECK(rml::parse_instance(rml::write_instance(mlp)) == mlp);
}

TEST_CASE("generate by spec") {
  rml::GenSpec spec{rml::Family::kMult3, 10, 15, 4};
  CHECK(rml::generate(spec) == rml::gen_mult(10, 15, 3, 4));
  CHECK(rml::instance_id(spec) == "mult3_n10_m15_s4");
  CHECK(rml::instance_id({rml::Family::kVision, 3, 0, 1}) == "vision_g3_s1");
  CHECK(rml::instance_id({rml::Family::kAutocorr, 5, 2, 0}) == "autocorr_L5_k2");
  CHECK(rml::parse_family("mult4") == rml::Family::kMult4);
  CHECK_THROWS_AS(rml::parse_family("mult5"), rml::Error);
}
