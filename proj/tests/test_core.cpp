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

#include <filesystem>
#include <sstream>

#include "oracles.hpp"
#include "rml/error.hpp"
#include "rml/index_set.hpp"
#include "rml/mlp.hpp"
#include "rml/triples.hpp"

using rml::IndexSet;
using rml::Triple;

TEST_CASE("index sets order by size, then lexicographically") {
  CHECK(IndexSet{4} < IndexSet{0, 1});
  CHECK(IndexSet{0, 3} < IndexSet{1, 2});
  CHECK(IndexSet{0, 1, 2} > IndexSet{2, 3});
  CHECK(IndexSet::from_unsorted({3, 1, 2}) == IndexSet{1, 2, 3});
  CHECK(IndexSet{1, 2}.to_string() == "{2,3}");
  CHECK(IndexSet{1, 2}.to_csv() == "2,3");
}

TEST_CASE("index set validation and algebra") {
  CHECK_THROWS_AS(IndexSet(std::vector<int>{}), rml::Error);
  CHECK_THROWS_AS(IndexSet({2, 1}), rml::Error);
  CHECK_THROWS_AS(IndexSet({-1}), rml::Error);
  CHECK_THROWS_AS(IndexSet::from_unsorted({1, 1}), rml::Error);
  IndexSet a{0, 2}, b{1, 2, 3};
  CHECK(rml::set_union(a, b) == IndexSet{0, 1, 2, 3});
  CHECK(rml::set_difference(b, a) == IndexSet{1, 3});
  CHECK_THROWS_AS(rml::set_difference(a, IndexSet{0, 2}), rml::Error);
  CHECK(IndexSet{2}.is_subset_of(b));
  CHECK_FALSE(a.is_disjoint(b));
  CHECK(IndexSet{0}.is_disjoint(b));
}

TEST_CASE("instances merge duplicate supports and drop zeros") {
  rml::MlpInstance mlp(3, rml::Domain::kUnitBox,
                       {{2.0, {0, 1}}, {1.0, {2}}, {-2.0, {0, 1}}, {3.0, {1, 2}},
                        {1.5, {1, 2}}});
  REQUIRE(mlp.size() == 2);
  CHECK(mlp.monomial(0).vars == IndexSet{2});
  CHECK(mlp.beta(IndexSet{1, 2}) == 4.5);
  CHECK(mlp.beta(IndexSet{0, 1}) == 0.0);
  CHECK(mlp.find(IndexSet{0, 1}) == -1);
  CHECK_THROWS_AS(rml::MlpInstance(2, rml::Domain::kUnitBox, {{1.0, {0, 2}}}),
                  rml::Error);
}

TEST_CASE("reference instance") {
  auto mlp = rml::example_instance();
  CHECK(mlp.n() == 4);
  CHECK(mlp.size() == 3);
  CHECK(rml::eta(mlp) == 2.0);
  CHECK(mlp.max_degree() == 3);
  CHECK(mlp.evaluate({1, 1, 1, 1}) == -1.0);
  CHECK(mlp.evaluate({1, 0, 1, 1}) == -1.0);
}

TEST_CASE("native format round trip and comments") {
  auto mlp = rml::example_instance();
  std::string text = rml::write_instance(mlp);
  CHECK(text == "4 3 unitbox\n1 1 2 3\n-1 2 3 4\n-1 1 3 4\n");
  CHECK(rml::parse_instance(text) == mlp);

  auto with_comments = rml::parse_instance(
      "# header follows\n3 2 binary # trailing\n\n0.25 1 3\n-7 2\n");
  CHECK(with_comments.domain() == rml::Domain::kBinary);
  CHECK(with_comments.beta(IndexSet{0, 2}) == 0.25);
  CHECK(rml::parse_instance(rml::write_instance(with_comments)) == with_comments);

  rml::MlpInstance odd(2, rml::Domain::kUnitBox, {{0.1 + 0.2, {0, 1}}, {-1e-300, {0}}});
  CHECK(rml::parse_instance(rml::write_instance(odd)) == odd);
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      rml::parse_instance(text);
    } catch (const rml::ParseError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("2 1 unitbox\n1 1 3\n") == 2);
  CHECK(line_of("2 1 cube\n1 1 2\n") == 1);
  CHECK(line_of("2 2 unitbox\n1 1 2\n1 2 x\n") == 3);
  CHECK(line_of("2 1 unitbox\n1 2 2\n") == 2);
  CHECK(line_of("2 2 unitbox\n1 1 2\n") >= 0);
  CHECK(line_of("") >= 0);
}

TEST_CASE("instance files") {
  auto path = std::filesystem::temp_directory_path() / "rml_core_test.mlp";
  rml::write_instance_file(path.string(), rml::example_instance());
  CHECK(rml::read_instance_file(path.string()) == rml::example_instance());
  std::filesystem::remove(path);
  try {
    rml::read_instance_file("/nonexistent/x.mlp");
    FAIL("expected an error");
  } catch (const rml::Error& e) {
    CHECK(e.code() == rml::ErrorCode::kIo);
  }
}

TEST_CASE("canonical triples put the smaller tail first") {
  Triple t = rml::canonical_triple(IndexSet{1, 2}, IndexSet{0});
  CHECK(t.tail1 == IndexSet{0});
  CHECK(t.tail2 == IndexSet{1, 2});
  CHECK(t.head == IndexSet{0, 1, 2});
  CHECK(t.to_string() == "{1}x{2,3}->{1,2,3}");
  CHECK_THROWS_AS(rml::canonical_triple(IndexSet{0, 1}, IndexSet{1}), rml::Error);
}

TEST_CASE("universe matches the subset oracle") {
  auto mlp = rml::example_instance();
  rml::TripleUniverse u(mlp);
  CHECK(u.size() == 15);
  auto expected = oracle::universe(mlp);
  CHECK(std::vector<Triple>(u.triples()) == expected);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto r = oracle::random_mlp(7, 5, 1, 4, seed);
    CHECK(rml::TripleUniverse(r).triples() == oracle::universe(r));
  }
}

TEST_CASE("universe lookups") {
  auto mlp = rml::example_instance();
  rml::TripleUniverse u(mlp);
  for (int t = 0; t < static_cast<int>(u.size()); ++t) {
    CHECK(u.id(u.triple(t)) == t);
    CHECK(u.index_set(u.head_id(t)) == u.triple(t).head);
    CHECK(u.index_set(u.tail1_id(t)) == u.triple(t).tail1);
  }
  CHECK(u.id(rml::canonical_triple(IndexSet{0}, IndexSet{1, 3})) == -1);
  // Each degree-3 monomial has 3 pair triples and 3 head triples.
  for (std::size_t i = 0; i < mlp.size(); ++i) CHECK(u.per_monomial(i).size() == 6);
  CHECK(u.to_set(u.indicator(u.all())) == u.all());
}

TEST_CASE("degree cap") {
  rml::MlpInstance big(5, rml::Domain::kUnitBox, {{1.0, {0, 1, 2, 3, 4}}});
  try {
    rml::TripleUniverse(big, 4);
    FAIL("expected an error");
  } catch (const rml::Error& e) {
    CHECK(e.code() == rml::ErrorCode::kDegreeCap);
  }
  CHECK(rml::TripleUniverse(big, 5).size() == oracle::universe(big).size());
}

TEST_CASE("properness agrees with the closure oracle") {
  for (std::uint64_t seed = 1; seed <= 15; ++seed) {
    auto mlp = oracle::random_mlp(5, 3, 2, 3, seed);
    auto all = oracle::universe(mlp);
    if (all.size() > 14) continue;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << all.size()); bits += 3) {
      auto T = oracle::subset(all, bits);
      CHECK(rml::is_proper(T, mlp) ==
            oracle::is_proper(std::vector<Triple>(T.begin(), T.end()), mlp));
    }
  }
}

TEST_CASE("check_proper reports what is missing") {
  auto mlp = rml::example_instance();
  rml::TripleSet T{rml::canonical_triple(IndexSet{0}, IndexSet{1}),
                   rml::canonical_triple(IndexSet{2}, IndexSet{0, 1}),
                   rml::canonical_triple(IndexSet{3}, IndexSet{1, 2})};
  auto check = rml::check_proper(T, mlp);
  CHECK_FALSE(check.proper);
  CHECK(check.missing.size() == 2);
  CHECK(rml::is_proper(rml::TripleUniverse(mlp).all(), mlp));
}

TEST_CASE("minimal support keeps a proper subset") {
  auto mlp = rml::example_instance();
  auto full = rml::TripleUniverse(mlp).all();
  auto small = rml::minimal_support(full, mlp);
  CHECK(rml::is_proper(small, mlp));
  CHECK(small.size() == 5);
  for (const Triple& t : small) {
    auto without = small;
    without.erase(t);
    CHECK_FALSE(rml::is_proper(without, mlp));
  }
  CHECK_THROWS_AS(rml::minimal_support(rml::TripleSet{}, mlp), rml::Error);
}

TEST_CASE("variable count covers originals and heads") {
  auto mlp = rml::example_instance();
  auto full = rml::TripleUniverse(mlp).all();
  // 4 originals plus 6 pairs and 3 triples.
  CHECK(rml::count_variables(full, mlp) == 13);
}

TEST_CASE("triple set text format") {
  auto mlp = rml::example_instance();
  auto full = rml::TripleUniverse(mlp).all();
  std::string text = rml::write_triple_set(full);
  CHECK(text.find("1|2,3|1,2,3\n") != std::string::npos);
  CHECK(rml::parse_triple_set(text) == full);
  CHECK(rml::parse_triple_set("# none\n2,3 | 1 | 1,2,3\n").size() == 1);
  CHECK_THROWS_AS(rml::parse_triple_set("1|2\n"), rml::ParseError);
  CHECK_THROWS_AS(rml::parse_triple_set("1|2|1,3\n"), rml::ParseError);
  CHECK_THROWS_AS(rml::parse_triple_set("1,2|2|1,2\n"), rml::ParseError);
}
