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


#include "rml/kernel3.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>

#include "rml/error.hpp"

namespace rml {

int CoverGraph::u_degree(int id) const {
  int d = 0;
  for (int w : u_adj[id]) d += v_alive[w];
  return d;
}

int CoverGraph::v_degree(int id) const {
  int d = 0;
  for (int w : v_adj[id]) d += u_alive[w];
  return d;
}

int CoverGraph::alive_u() const {
  return static_cast<int>(std::count(u_alive.begin(), u_alive.end(), 1));
}

int CoverGraph::alive_v() const {
  return static_cast<int>(std::count(v_alive.begin(), v_alive.end(), 1));
}

int CoverGraph::edges() const {
  int e = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (u_alive[i]) e += u_degree(static_cast<int>(i));
  return e;
}

void CoverGraph::select(int id) {
  selected.push_back(id);
  u_alive[id] = 0;
  for (int w : u_adj[id]) v_alive[w] = 0;
}

std::vector<IndexSet> CoverGraph::selected_pairs() const {
  std::vector<IndexSet> out;
  out.reserve(selected.size());
  for (int id : selected) out.push_back(u[id]);
  return out;
}

CoverGraph build_cover_graph(const MlpInstance& mlp, int hub) {
  std::set<IndexSet> forced;
  std::set<IndexSet> triples;
  for (const Monomial& mono : mlp.monomials()) {
    if (mono.vars.size() > 3) {
      throw Error(ErrorCode::kDomain,
                  "cover graph needs degree <= 3, got monomial " +
                      mono.vars.to_string());
    }
    if (mono.vars.size() == 2) forced.insert(mono.vars);
    if (mono.vars.size() == 3) triples.insert(mono.vars);
  }

  CoverGraph g;
  g.forced.assign(forced.begin(), forced.end());
  std::set<IndexSet> pairs;
  for (const IndexSet& J : triples) {
    bool covered = false;
    for (const IndexSet& p : forced) covered = covered || p.is_subset_of(J);
    if (covered) continue;
    g.v.push_back(J);
    for (int a = 0; a < 3; ++a) {
      for (int b = a + 1; b < 3; ++b) {
        if (hub >= 0 && J[a] != hub && J[b] != hub) continue;
        pairs.insert(IndexSet({J[a], J[b]}));
      }
    }
  }
  g.u.assign(pairs.begin(), pairs.end());
  g.u_adj.resize(g.u.size());
  g.v_adj.resize(g.v.size());
  for (std::size_t j = 0; j < g.v.size(); ++j) {
    for (std::size_t i = 0; i < g.u.size(); ++i) {
      if (g.u[i].is_subset_of(g.v[j])) {
        g.u_adj[i].push_back(static_cast<int>(j));
        g.v_adj[j].push_back(static_cast<int>(i));
      }
    }
    if (g.v_adj[j].empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "monomial " + g.v[j].to_string() + " has no pair through x" +
                      std::to_string(hub + 1));
    }
  }
  g.u_alive.assign(g.u.size(), 1);
  g.v_alive.assign(g.v.size(), 1);
  return g;
}

namespace {

void label_components(CoverGraph& g) {
  g.u_component.assign(g.u.size(), -1);
  g.v_component.assign(g.v.size(), -1);
  int label = 0;
  auto flood = [&](bool from_u, int start) {
    std::deque<std::pair<bool, int>> queue{{from_u, start}};
    (from_u ? g.u_component : g.v_component)[start] = label;
    while (!queue.empty()) {
      auto [is_u, id] = queue.front();
      queue.pop_front();
      if (is_u) {
        for (int w : g.u_adj[id]) {
          if (g.v_alive[w] && g.v_component[w] < 0) {
            g.v_component[w] = label;
            queue.emplace_back(false, w);
          }
        }
      } else {
        for (int w : g.v_adj[id]) {
          if (g.u_alive[w] && g.u_component[w] < 0) {
            g.u_component[w] = label;
            queue.emplace_back(true, w);
          }
        }
      }
    }
    ++label;
  };
  for (std::size_t j = 0; j < g.v.size(); ++j)
    if (g.v_alive[j] && g.v_component[j] < 0) flood(false, static_cast<int>(j));
  for (std::size_t i = 0; i < g.u.size(); ++i)
    if (g.u_alive[i] && g.u_component[i] < 0) flood(true, static_cast<int>(i));
}

// Selects `id` in `g` and records exactly what disappeared.
TraceStep select_step(CoverGraph& g, ReductionRule rule, int id) {
  TraceStep step{rule, id, {id}, {}};
  for (int w : g.u_adj[id])
    if (g.v_alive[w]) step.removed_v.push_back(w);
  g.select(id);
  return step;
}

bool rule_isolated_monomial(CoverGraph& g, ReductionTrace& trace) {
  bool changed = false;
  for (std::size_t j = 0; j < g.v.size(); ++j) {
    if (!g.v_alive[j]) continue;
    std::vector<int> nbrs;
    bool all_private = true;
    for (int w : g.v_adj[j]) {
      if (!g.u_alive[w]) continue;
      nbrs.push_back(w);
      all_private = all_private && g.u_degree(w) == 1;
    }
    if (nbrs.empty() || !all_private) continue;
    TraceStep step = select_step(g, ReductionRule::kIsolatedMonomial, nbrs[0]);
    for (std::size_t r = 1; r < nbrs.size(); ++r) {
      g.remove_u(nbrs[r]);
      step.removed_u.push_back(nbrs[r]);
    }
    trace.steps.push_back(std::move(step));
    changed = true;
  }
  return changed;
}

bool rule_degree_one_pair(CoverGraph& g, ReductionTrace& trace) {
  TraceStep step{ReductionRule::kDegreeOnePair, -1, {}, {}};
  for (std::size_t i = 0; i < g.u.size(); ++i) {
    if (!g.u_alive[i] || g.u_degree(static_cast<int>(i)) != 1) continue;
    int owner = -1;
    for (int w : g.u_adj[i])
      if (g.v_alive[w]) owner = w;
    bool replaceable = false;
    for (int w : g.v_adj[owner]) {
      if (w != static_cast<int>(i) && g.u_alive[w] && g.u_degree(w) >= 2)
        replaceable = true;
    }
    if (!replaceable) continue;
    g.remove_u(static_cast<int>(i));
    step.removed_u.push_back(static_cast<int>(i));
  }
  if (step.removed_u.empty()) return false;
  trace.steps.push_back(std::move(step));
  return true;
}

bool rule_single_neighbour(CoverGraph& g, ReductionTrace& trace) {
  bool changed = false;
  for (std::size_t j = 0; j < g.v.size(); ++j) {
    if (!g.v_alive[j] || g.v_degree(static_cast<int>(j)) != 1) continue;
    int only = -1;
    for (int w : g.v_adj[j])
      if (g.u_alive[w]) only = w;
    trace.steps.push_back(
        select_step(g, ReductionRule::kSingleNeighbour, only));
    changed = true;
  }
  return changed;
}

bool rule_no_neighbour(CoverGraph& g, ReductionTrace& trace) {
  TraceStep step{ReductionRule::kNoNeighbour, -1, {}, {}};
  for (std::size_t i = 0; i < g.u.size(); ++i) {
    if (g.u_alive[i] && g.u_degree(static_cast<int>(i)) == 0) {
      g.remove_u(static_cast<int>(i));
      step.removed_u.push_back(static_cast<int>(i));
    }
  }
  if (step.removed_u.empty()) return false;
  trace.steps.push_back(std::move(step));
  return true;
}

void append(ReductionTrace& into, const ReductionTrace& from) {
  into.steps.insert(into.steps.end(), from.steps.begin(), from.steps.end());
}

}  // namespace

std::pair<CoverGraph, ReductionTrace> apply_rules(const CoverGraph& graph) {
  CoverGraph g = graph;
  ReductionTrace trace;
  bool changed = true;
  while (changed) {
    changed = false;
    changed |= rule_isolated_monomial(g, trace);
    changed |= rule_degree_one_pair(g, trace);
    changed |= rule_single_neighbour(g, trace);
    changed |= rule_no_neighbour(g, trace);
  }
  label_components(g);
  trace.steps.push_back({ReductionRule::kComponents, -1, {}, {}});
  return {std::move(g), std::move(trace)};
}

CoverGraph replay(const CoverGraph& original, const ReductionTrace& trace) {
  CoverGraph g = original;
  for (const TraceStep& step : trace.steps) {
    if (step.rule == ReductionRule::kComponents) {
      label_components(g);
      continue;
    }
    if (step.selected >= 0) g.selected.push_back(step.selected);
    for (int i : step.removed_u) g.remove_u(i);
    for (int j : step.removed_v) g.remove_v(j);
  }
  return g;
}

BussResult buss_rule(const CoverGraph& graph, int k) {
  BussResult res{graph, k, false, {}};
  bool changed = true;
  while (changed && res.k >= 0) {
    changed = false;
    for (std::size_t i = 0; i < res.graph.u.size(); ++i) {
      int id = static_cast<int>(i);
      if (!res.graph.u_alive[i] || res.graph.u_degree(id) < res.k + 1) continue;
      res.trace.steps.push_back(
          select_step(res.graph, ReductionRule::kHighDegree, id));
      --res.k;
      changed = true;
      break;
    }
  }
  res.no = res.k < 0;
  return res;
}

Kernel kernelize(const CoverGraph& graph, int k) {
  Kernel ker{false, graph, k, {}};
  while (true) {
    std::size_t before = ker.graph.selected.size();
    auto [reduced, trace] = apply_rules(ker.graph);
    ker.k -= static_cast<int>(reduced.selected.size() - before);
    append(ker.trace, trace);
    ker.graph = std::move(reduced);
    if (ker.k < 0) {
      ker.no = true;
      return ker;
    }
    before = ker.graph.selected.size();
    BussResult buss = buss_rule(ker.graph, ker.k);
    append(ker.trace, buss.trace);
    ker.graph = std::move(buss.graph);
    ker.k = buss.k;
    if (buss.no) {
      ker.no = true;
      return ker;
    }
    if (ker.graph.selected.size() == before) break;
  }
  const long long kk = static_cast<long long>(ker.k) * ker.k;
  const long long nv = ker.graph.alive_v();
  const long long ne = ker.graph.edges();
  const long long nu = ker.graph.alive_u();
  ker.no = nv > kk || ne > 3 * kk || 2 * nu > ne;
  return ker;
}

namespace {

bool branch(const CoverGraph& g, int k, FptResult& out) {
  ++out.branch_nodes;
  int target = -1;
  for (std::size_t j = 0; j < g.v.size() && target < 0; ++j)
    if (g.v_alive[j]) target = static_cast<int>(j);
  if (target < 0) {
    out.selection = g.selected_pairs();
    return true;
  }
  if (k == 0) return false;
  for (int w : g.v_adj[target]) {
    if (!g.u_alive[w]) continue;
    CoverGraph next = g;
    next.select(w);
    if (branch(next, k - 1, out)) return true;
  }
  return false;
}

}  // namespace

FptResult fpt_decide(const CoverGraph& graph, int k) {
  FptResult res;
  if (k < 0) return res;
  Kernel ker = kernelize(graph, k);
  if (ker.no) return res;
  res.yes = branch(ker.graph, ker.k, res);
  return res;
}

std::vector<int> min_cover_bruteforce(const CoverGraph& graph, int max_u) {
  std::vector<int> us;
  std::vector<int> v_pos(graph.v.size(), -1);
  int nv = 0;
  for (std::size_t i = 0; i < graph.u.size(); ++i)
    if (graph.u_alive[i]) us.push_back(static_cast<int>(i));
  for (std::size_t j = 0; j < graph.v.size(); ++j)
    if (graph.v_alive[j]) v_pos[j] = nv++;
  const int n = static_cast<int>(us.size());
  if (n > max_u) {
    throw Error(ErrorCode::kSizeGuard,
                "brute-force cover limited to " + std::to_string(max_u) +
                    " pairs, graph has " + std::to_string(n));
  }

  const std::size_t words = (static_cast<std::size_t>(nv) + 63) / 64;
  std::vector<std::vector<std::uint64_t>> masks(
      n, std::vector<std::uint64_t>(words, 0));
  std::vector<std::uint64_t> all(words, 0);
  for (int a = 0; a < n; ++a) {
    for (int w : graph.u_adj[us[a]]) {
      if (v_pos[w] < 0) continue;
      masks[a][v_pos[w] / 64] |= std::uint64_t{1} << (v_pos[w] % 64);
    }
  }
  for (int p = 0; p < nv; ++p) all[p / 64] |= std::uint64_t{1} << (p % 64);

  std::vector<std::uint64_t> acc(words);
  for (int size = 0; size <= n; ++size) {
    std::vector<int> pick(size);
    for (int r = 0; r < size; ++r) pick[r] = r;
    while (true) {
      std::fill(acc.begin(), acc.end(), 0);
      for (int r : pick)
        for (std::size_t w = 0; w < words; ++w) acc[w] |= masks[r][w];
      if (acc == all) {
        std::vector<int> out;
        for (int r : pick) out.push_back(us[r]);
        return out;
      }
      int r = size - 1;
      while (r >= 0 && pick[r] == n - size + r) --r;
      if (r < 0) break;
      ++pick[r];
      for (int s = r + 1; s < size; ++s) pick[s] = pick[s - 1] + 1;
    }
  }
  throw Error(ErrorCode::kInfeasible, "some monomial has no covering pair");
}

TripleSet selection_to_triples(const MlpInstance& mlp,
                               const std::vector<IndexSet>& selection) {
  std::set<IndexSet> pairs;
  for (const IndexSet& p : selection) {
    if (p.size() != 2)
      throw Error(ErrorCode::kInvalidArgument,
                  "selection entry " + p.to_string() + " is not a pair");
    pairs.insert(p);
  }
  for (const Monomial& mono : mlp.monomials()) {
    if (mono.vars.size() > 3)
      throw Error(ErrorCode::kDomain,
                  "monomial " + mono.vars.to_string() + " has degree > 3");
    if (mono.vars.size() == 2) pairs.insert(mono.vars);
  }

  TripleSet T;
  for (const IndexSet& p : pairs)
    T.insert(canonical_triple(IndexSet::singleton(p[0]),
                              IndexSet::singleton(p[1])));
  for (const Monomial& mono : mlp.monomials()) {
    if (mono.vars.size() != 3) continue;
    auto it = std::find_if(pairs.begin(), pairs.end(), [&](const IndexSet& p) {
      return p.is_subset_of(mono.vars);
    });
    if (it == pairs.end())
      throw Error(ErrorCode::kInvalidArgument,
                  "selection does not cover " + mono.vars.to_string());
    T.insert(canonical_triple(set_difference(mono.vars, *it), *it));
  }
  return T;
}

MlpInstance gen_vertex_cover_instance(
    int n_vertices, const std::vector<std::pair<int, int>>& edges) {
  if (n_vertices <= 0)
    throw Error(ErrorCode::kInvalidArgument, "graph needs a vertex");
  std::set<std::pair<int, int>> seen;
  std::vector<int> degree(n_vertices, 0);
  std::vector<Monomial> monomials;
  for (auto [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n_vertices || b >= n_vertices || a == b)
      throw Error(ErrorCode::kInvalidArgument, "bad edge in vertex cover graph");
    if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
      throw Error(ErrorCode::kInvalidArgument, "duplicate edge");
    ++degree[a];
    ++degree[b];
    monomials.push_back({1.0, IndexSet::from_unsorted({a, b, n_vertices})});
  }
  for (int d : degree)
    if (d == 0)
      throw Error(ErrorCode::kInvalidArgument, "graph has an isolated vertex");
  return MlpInstance(n_vertices + 1, Domain::kUnitBox, std::move(monomials));
}

AdversarialLayout greedy_adversarial_layout(int k) {
  if (k < 2)
    throw Error(ErrorCode::kInvalidArgument,
                "adversarial construction needs k >= 2");
  AdversarialLayout layout;
  layout.n_u = k;
  std::vector<int> load(k, 0);
  for (int i = 1; i <= k; ++i) {
    std::vector<char> used(k, 0);
    for (int c = 0; c < k / i; ++c) {
      const int vertex = layout.n_v++;
      for (int r = 0; r < i; ++r) {
        int best = -1;
        for (int u = 0; u < k; ++u)
          if (!used[u] && (best < 0 || load[u] < load[best])) best = u;
        if (best < 0)
          throw Error(ErrorCode::kInvalidArgument,
                      "no free U vertex in group " + std::to_string(i));
        used[best] = 1;
        ++load[best];
        layout.edges.emplace_back(vertex, best);
      }
    }
  }
  return layout;
}

MlpInstance gen_greedy_adversarial(int k) {
  AdversarialLayout layout = greedy_adversarial_layout(k);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(layout.edges.size());
  for (auto [v, u] : layout.edges) edges.emplace_back(v, layout.n_v + u);
  return gen_vertex_cover_instance(layout.n_v + layout.n_u, edges);
}

}  // namespace rml
