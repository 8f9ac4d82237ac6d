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


#ifndef RML_KERNEL3_HPP_
#define RML_KERNEL3_HPP_

#include <utility>
#include <vector>

#include "rml/index_set.hpp"
#include "rml/mlp.hpp"
#include "rml/triples.hpp"

namespace rml {

// Bipartite cover graph of an MLP whose monomials have degree at most 3.
//
// `u` holds the candidate pairs and `v` the degree-3 supports; u -- v is an
// edge iff u is a subset of v. Degree-2 monomials have a single linearization,
// so their pairs are kept in `forced` and every degree-3 support they already
// cover is dropped. Nodes are never erased, only marked dead, so ids stay
// stable across reductions.
struct CoverGraph {
  std::vector<IndexSet> u;
  std::vector<IndexSet> v;
  std::vector<std::vector<int>> u_adj;  // v ids, ascending
  std::vector<std::vector<int>> v_adj;  // u ids, ascending
  std::vector<char> u_alive;
  std::vector<char> v_alive;
  std::vector<IndexSet> forced;
  std::vector<int> selected;  // u ids picked by rules or branching
  // Connected component per node after Rule 5; -1 for dead nodes.
  std::vector<int> u_component;
  std::vector<int> v_component;

  int u_degree(int id) const;
  int v_degree(int id) const;
  int alive_u() const;
  int alive_v() const;
  int edges() const;

  // Marks `id` selected and removes it together with the v nodes it covers.
  void select(int id);
  void remove_u(int id) { u_alive[id] = 0; }
  void remove_v(int id) { v_alive[id] = 0; }

  std::vector<IndexSet> selected_pairs() const;
};

// `hub` >= 0 keeps only pairs containing that variable (the vertex cover
// encoding); a degree-3 support without the hub is then rejected.
CoverGraph build_cover_graph(const MlpInstance& mlp, int hub = -1);

enum class ReductionRule {
  kIsolatedMonomial = 1,
  kDegreeOnePair = 2,
  kSingleNeighbour = 3,
  kNoNeighbour = 4,
  kComponents = 5,
  kHighDegree = 6,
};

struct TraceStep {
  ReductionRule rule;
  int selected = -1;
  std::vector<int> removed_u;
  std::vector<int> removed_v;
};

struct ReductionTrace {
  std::vector<TraceStep> steps;
};

// Rules 1-5 to a fixpoint, with two adjustments. Rule 1 fires for any v whose
// remaining neighbours all have degree 1, which includes the v disjoint from
// every other v. Rule 2 only drops a degree-1 pair when its v keeps a
// neighbour of degree at least 2, so no v is ever left without a neighbour.
std::pair<CoverGraph, ReductionTrace> apply_rules(const CoverGraph& graph);

// Re-applies the steps of `trace` to `original`.
CoverGraph replay(const CoverGraph& original, const ReductionTrace& trace);

struct BussResult {
  CoverGraph graph;
  int k = 0;
  // The budget ran out while v nodes were still uncovered.
  bool no = false;
  ReductionTrace trace;
};

// Rule 6: selects pairs of degree >= k + 1 while any exist.
BussResult buss_rule(const CoverGraph& graph, int k);

struct Kernel {
  bool no = false;
  CoverGraph graph;
  int k = 0;  // remaining budget
  ReductionTrace trace;
};

// Alternates apply_rules and buss_rule. A yes-instance kernel satisfies
// |V| <= k^2, |E| <= 3k^2 and 2|U| <= |E|; anything larger is a no.
Kernel kernelize(const CoverGraph& graph, int k);

struct FptResult {
  bool yes = false;
  // Chosen pairs, excluding the forced ones (which do not use budget).
  std::vector<IndexSet> selection;
  int branch_nodes = 0;
};

FptResult fpt_decide(const CoverGraph& graph, int k);

// Exact minimum set of live pairs covering all live v nodes, by enumerating
// subsets in increasing size. Throws Error(kSizeGuard) above `max_u` pairs.
std::vector<int> min_cover_bruteforce(const CoverGraph& graph, int max_u = 25);

// One pair triple per selected or forced pair and one head triple per
// degree-3 monomial, built on the smallest pair covering it.
TripleSet selection_to_triples(const MlpInstance& mlp,
                               const std::vector<IndexSet>& selection);

// x_a * x_b * y for each edge (a, b); y is variable `n_vertices`.
MlpInstance gen_vertex_cover_instance(
    int n_vertices, const std::vector<std::pair<int, int>>& edges);

struct AdversarialLayout {
  int n_v = 0;  // V vertices occupy variables [0, n_v)
  int n_u = 0;  // U vertices occupy [n_v, n_v + n_u); y is the last one
  std::vector<std::pair<int, int>> edges;  // (v vertex, u vertex)
};

// Bipartite graph with |U| = k and V split into V_1..V_k, |V_i| = floor(k/i),
// each V_i vertex joined to i distinct U vertices. Neighbours go to the least
// loaded U vertices first.
AdversarialLayout greedy_adversarial_layout(int k);
MlpInstance gen_greedy_adversarial(int k);

}  // namespace rml

#endif  // RML_KERNEL3_HPP_
