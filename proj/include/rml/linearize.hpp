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

#ifndef RML_LINEARIZE_HPP_
#define RML_LINEARIZE_HPP_

#include <cstdint>
#include <vector>

#include "rml/mlp.hpp"
#include "rml/triples.hpp"

namespace rml {

// How the sequential linearization picks the next product.
//
// kVariableOrder ranks every active set by the position of its first variable
// in `order`, reduces the unfinished monomial whose sorted variable ranks are
// lexicographically smallest, and multiplies its two lowest-ranked active
// sets. An empty `order` means the identity.
// kFirstPair reduces the first unfinished monomial in input order and
// multiplies its two smallest active sets in the IndexSet order.
struct SeqPolicy {
  enum class Mode { kVariableOrder, kFirstPair };
  Mode mode = Mode::kVariableOrder;
  std::vector<int> order;  // 0-based permutation of [0, n)

  static SeqPolicy variable_order(std::vector<int> order) {
    return SeqPolicy{Mode::kVariableOrder, std::move(order)};
  }
  static SeqPolicy first_pair() { return SeqPolicy{Mode::kFirstPair, {}}; }
};

struct GreedyTieBreak {
  enum class Rule { kCanonicalOrder, kSeededRandom };
  Rule rule = Rule::kCanonicalOrder;
  std::uint64_t seed = 0;

  static GreedyTieBreak canonical() { return {}; }
  static GreedyTieBreak seeded(std::uint64_t seed) {
    return GreedyTieBreak{Rule::kSeededRandom, seed};
  }
};

TripleSet seq_linearize(const MlpInstance& mlp, const SeqPolicy& policy = {});

struct GreedyStep {
  Triple triple;
  // Number of unfinished monomials holding both tails as active sets.
  int count = 0;
};

// Repeatedly multiplies the pair of active sets shared by the most monomials.
std::vector<GreedyStep> greedy_steps(const MlpInstance& mlp,
                                     const GreedyTieBreak& tie = {});
TripleSet greedy_linearize(const MlpInstance& mlp,
                           const GreedyTieBreak& tie = {});

// Every triple of the universe.
TripleSet full_linearize(const MlpInstance& mlp,
                         int degree_cap = kDefaultDegreeCap);

}  // namespace rml

#endif  // RML_LINEARIZE_HPP_
