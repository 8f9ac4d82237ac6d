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

#include "rml/linearize.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "rml/error.hpp"
#include "rml/rng.hpp"

namespace rml {

namespace {

// Active sets per monomial: the factors the monomial is currently a product
// of. Degree-1 monomials start (and stay) finished.
class ActiveSets {
 public:
  explicit ActiveSets(const MlpInstance& mlp) : sets_(mlp.size()) {
    for (std::size_t i = 0; i < mlp.size(); ++i) {
      for (int j : mlp.monomial(i).vars) sets_[i].push_back(IndexSet::singleton(j));
    }
  }

  bool finished(std::size_t i) const { return sets_[i].size() <= 1; }
  const std::vector<IndexSet>& sets(std::size_t i) const { return sets_[i]; }
  std::size_t size() const { return sets_.size(); }

  // Multiplies a and b in every monomial holding both, records the triple.
  void merge(const IndexSet& a, const IndexSet& b, TripleSet& out) {
    Triple t = canonical_triple(a, b);
    for (auto& active : sets_) {
      auto ia = std::find(active.begin(), active.end(), a);
      auto ib = std::find(active.begin(), active.end(), b);
      if (ia == active.end() || ib == active.end()) continue;
      active.erase(std::max(ia, ib));
      active.erase(std::min(ia, ib));
      active.insert(std::lower_bound(active.begin(), active.end(), t.head),
                    t.head);
    }
    out.insert(std::move(t));
  }

 private:
  std::vector<std::vector<IndexSet>> sets_;
};

std::vector<int> ranks_from_order(const MlpInstance& mlp,
                                  const std::vector<int>& order) {
  const int n = mlp.n();
  std::vector<int> rank(n, -1);
  if (order.empty()) {
    for (int j = 0; j < n; ++j) rank[j] = j;
    return rank;
  }
  if (static_cast<int>(order.size()) != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "variable order must list all " + std::to_string(n) +
                    " variables");
  }
  for (int pos = 0; pos < n; ++pos) {
    int j = order[pos];
    if (j < 0 || j >= n || rank[j] >= 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable order is not a permutation");
    }
    rank[j] = pos;
  }
  return rank;
}

}  // namespace

TripleSet seq_linearize(const MlpInstance& mlp, const SeqPolicy& policy) {
  ActiveSets active(mlp);
  TripleSet out;
  if (policy.mode == SeqPolicy::Mode::kFirstPair) {
    for (std::size_t i = 0; i < active.size(); ++i) {
      while (!active.finished(i)) {
        IndexSet a = active.sets(i)[0];
        IndexSet b = active.sets(i)[1];
        active.merge(a, b, out);
      }
    }
    return out;
  }

  const auto rank = ranks_from_order(mlp, policy.order);
  auto set_rank = [&rank](const IndexSet& s) {
    int r = rank[s.front()];
    for (int j : s) r = std::min(r, rank[j]);
    return r;
  };
  std::vector<std::pair<std::vector<int>, std::size_t>> keyed;
  for (std::size_t i = 0; i < mlp.size(); ++i) {
    std::vector<int> key;
    for (int j : mlp.monomial(i).vars) key.push_back(rank[j]);
    std::sort(key.begin(), key.end());
    keyed.emplace_back(std::move(key), i);
  }
  std::sort(keyed.begin(), keyed.end());
  for (const auto& [key, i] : keyed) {
    while (!active.finished(i)) {
      std::vector<IndexSet> sets = active.sets(i);
      std::sort(sets.begin(), sets.end(),
                [&](const IndexSet& x, const IndexSet& y) {
                  return set_rank(x) < set_rank(y);
                });
      active.merge(sets[0], sets[1], out);
    }
  }
  return out;
}

std::vector<GreedyStep> greedy_steps(const MlpInstance& mlp,
                                     const GreedyTieBreak& tie) {
  ActiveSets active(mlp);
  Rng rng(tie.seed);
  std::vector<GreedyStep> steps;
  TripleSet out;
  while (true) {
    std::map<std::pair<IndexSet, IndexSet>, int> counts;
    for (std::size_t i = 0; i < active.size(); ++i) {
      const auto& sets = active.sets(i);
      for (std::size_t a = 0; a < sets.size(); ++a) {
        for (std::size_t b = a + 1; b < sets.size(); ++b) {
          ++counts[std::minmax(sets[a], sets[b])];
        }
      }
    }
    if (counts.empty()) break;
    int best = 0;
    for (const auto& [pair, count] : counts) best = std::max(best, count);
    std::vector<const std::pair<IndexSet, IndexSet>*> ties;
    for (const auto& [pair, count] : counts) {
      if (count == best) ties.push_back(&pair);
    }
    std::size_t pick = 0;
    if (tie.rule == GreedyTieBreak::Rule::kSeededRandom && ties.size() > 1) {
      pick = static_cast<std::size_t>(
          rng.uniform_int(0, static_cast<std::int64_t>(ties.size()) - 1));
    }
    const auto [a, b] = *ties[pick];
    active.merge(a, b, out);
    steps.push_back({canonical_triple(a, b), best});
  }
  return steps;
}

TripleSet greedy_linearize(const MlpInstance& mlp, const GreedyTieBreak& tie) {
  TripleSet out;
  for (auto& step : greedy_steps(mlp, tie)) out.insert(std::move(step.triple));
  return out;
}

TripleSet full_linearize(const MlpInstance& mlp, int degree_cap) {
  return TripleUniverse(mlp, degree_cap).all();
}

}  // namespace rml
