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

#ifndef RML_TRIPLES_HPP_
#define RML_TRIPLES_HPP_

#include <compare>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "rml/index_set.hpp"
#include "rml/mlp.hpp"

namespace rml {

inline constexpr int kDefaultDegreeCap = 10;

// A product step y_head = y_tail1 * y_tail2. The tails partition the head and
// tail1 < tail2 in the IndexSet order. Triples order by head, then tail1.
struct Triple {
  IndexSet tail1;
  IndexSet tail2;
  IndexSet head;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend std::strong_ordering operator<=>(const Triple& a, const Triple& b) {
    if (auto c = a.head <=> b.head; c != 0) return c;
    return a.tail1 <=> b.tail1;
  }

  // "{1}x{2,3}->{1,2,3}" style, 1-based.
  std::string to_string() const;
};

using TripleSet = std::set<Triple>;

// Orders {a, b} canonically. Throws Error(kInvalidArgument) if they overlap.
Triple canonical_triple(const IndexSet& a, const IndexSet& b);

// Every triple whose head is a subset of `vars` with at least two elements,
// sorted. Throws Error(kDegreeCap) when |vars| > degree_cap.
std::vector<Triple> enumerate_monomial_triples(const IndexSet& vars,
                                               int degree_cap = kDefaultDegreeCap);

// All candidate triples of an instance with integer ids, plus the family of
// index sets that can carry a variable y_J (every non-empty subset of some
// monomial support).
class TripleUniverse {
 public:
  TripleUniverse() = default;
  explicit TripleUniverse(const MlpInstance& mlp,
                          int degree_cap = kDefaultDegreeCap);

  std::size_t size() const { return triples_.size(); }
  const std::vector<Triple>& triples() const { return triples_; }
  const Triple& triple(int id) const { return triples_[id]; }
  // -1 when `t` is not in the universe.
  int id(const Triple& t) const;

  const std::vector<IndexSet>& index_sets() const { return sets_; }
  const IndexSet& index_set(int id) const { return sets_[id]; }
  int set_id(const IndexSet& s) const;

  int tail1_id(int t) const { return tail1_[t]; }
  int tail2_id(int t) const { return tail2_[t]; }
  int head_id(int t) const { return head_[t]; }

  // Triple ids of T_i, sorted; empty for degree-1 monomials.
  const std::vector<int>& per_monomial(std::size_t i) const {
    return per_monomial_[i];
  }
  const std::vector<int>& with_head(int set) const { return by_head_[set]; }

  std::vector<char> indicator(const TripleSet& T) const;
  TripleSet to_set(const std::vector<char>& indicator) const;
  TripleSet all() const;

 private:
  std::vector<Triple> triples_;
  std::map<Triple, int> triple_ids_;
  std::vector<IndexSet> sets_;
  std::map<IndexSet, int> set_ids_;
  std::vector<int> tail1_, tail2_, head_;
  std::vector<std::vector<int>> per_monomial_;
  std::vector<std::vector<int>> by_head_;
};

struct ProperCheck {
  bool proper = false;
  // Triples of T whose tails are both derivable; proper whenever `proper`.
  TripleSet witness;
  // Monomial supports that could not be derived.
  std::vector<IndexSet> missing;
};

// Derivability closure: singletons are derivable, and a head is derivable once
// both tails of some triple in T are. T is proper iff every monomial support
// with more than one variable is derivable.
ProperCheck check_proper(const TripleSet& T, const MlpInstance& mlp);
bool is_proper(const TripleSet& T, const MlpInstance& mlp);

// An inclusion-minimal proper subset of T with exactly one triple per derived
// head. Throws Error(kImproper) when T is not proper.
TripleSet minimal_support(const TripleSet& T, const MlpInstance& mlp);

// Number of y variables of the linearization: used singletons plus distinct
// heads of T.
int count_variables(const TripleSet& T, const MlpInstance& mlp);

// Line format "<tail1>|<tail2>|<head>", comma separated 1-based indices.
std::string write_triple_set(const TripleSet& T);
TripleSet parse_triple_set(std::string_view text);
TripleSet read_triple_set_file(const std::string& path);
void write_triple_set_file(const std::string& path, const TripleSet& T);

}  // namespace rml

#endif  // RML_TRIPLES_HPP_
