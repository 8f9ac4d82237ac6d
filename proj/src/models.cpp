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

#include "rml/models.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <set>

#include "rml/error.hpp"
#include "rml/relax.hpp"
#include "rml/solver/lp_format.hpp"
#include "rml/solver/mip.hpp"

namespace rml {

using solver::MipModel;
using solver::RowSense;

DualBounds dual_bounds(const MlpInstance& mlp, const TripleUniverse& universe) {
  const double e = eta(mlp);
  DualBounds out;
  out.m_t.assign(universe.size(), {0.0, 0.0, e});
  out.m_j.assign(universe.index_sets().size(), e);
  out.max_m = e;
  // Index sets are ordered by cardinality, and every tail is smaller than its
  // head, so a single pass sees each R_J after all the M it depends on.
  std::vector<std::vector<int>> as_tail1(universe.index_sets().size());
  std::vector<std::vector<int>> as_tail2(universe.index_sets().size());
  for (std::size_t t = 0; t < universe.size(); ++t) {
    as_tail1[universe.tail1_id(t)].push_back(t);
    as_tail2[universe.tail2_id(t)].push_back(t);
  }
  for (std::size_t s = 0; s < universe.index_sets().size(); ++s) {
    double r = mlp.beta(universe.index_set(s)) + e;
    for (int t : universe.with_head(s)) r += out.m_t[t][0] + out.m_t[t][1];
    if (r < 0.0) {
      r = 0.0;
      out.clamped = true;
    }
    if (!std::isfinite(r)) {
      throw Error(ErrorCode::kSolver, "dual bound overflow");
    }
    for (int t : as_tail1[s]) out.m_t[t][0] = r;
    for (int t : as_tail2[s]) out.m_t[t][1] = r;
    out.max_m = std::max(out.max_m, r);
  }
  return out;
}

namespace {

RoutingVars add_routing(MipModel& model, const MlpInstance& mlp,
                        const TripleUniverse& universe, double v_obj) {
  RoutingVars vars;
  for (std::size_t t = 0; t < universe.size(); ++t) {
    vars.v.push_back(
        model.add_variable("v" + std::to_string(t), 0.0, 1.0, v_obj, true));
  }
  vars.u.resize(mlp.size());
  for (std::size_t i = 0; i < mlp.size(); ++i) {
    const IndexSet& vars_i = mlp.monomial(i).vars;
    if (vars_i.size() < 2) continue;
    const int root = universe.set_id(vars_i);
    std::map<int, std::vector<std::pair<int, double>>> flow;
    std::vector<std::pair<int, double>> root_row;
    for (int t : universe.per_monomial(i)) {
      const int u = model.add_variable(
          "u" + std::to_string(i) + "_" + std::to_string(t), 0.0, 1.0, 0.0, true);
      vars.u[i].emplace_back(t, u);
      const int head = universe.head_id(t);
      if (head == root) {
        root_row.emplace_back(u, 1.0);
      } else {
        flow[head].emplace_back(u, 1.0);
      }
      for (int tail : {universe.tail1_id(t), universe.tail2_id(t)}) {
        if (universe.index_set(tail).size() >= 2) flow[tail].emplace_back(u, -1.0);
      }
    }
    model.add_row("root" + std::to_string(i), std::move(root_row), RowSense::kEq,
                  1.0);
    for (auto& [set, coeffs] : flow) {
      model.add_row("flow" + std::to_string(i) + "_" + std::to_string(set),
                    std::move(coeffs), RowSense::kEq, 0.0);
    }
    for (const auto& [t, u] : vars.u[i]) {
      model.add_row("link" + std::to_string(i) + "_" + std::to_string(t),
                    {{u, 1.0}, {vars.v[t], -1.0}}, RowSense::kLe, 0.0);
    }
  }
  return vars;
}

// Assigns u and v from a proper set; v covers exactly the routed triples.
void fill_routing(const MlpInstance& mlp, const TripleUniverse& universe,
                  const RoutingVars& vars, const TripleSet& T,
                  std::vector<double>& x) {
  const auto trees = routing_trees(mlp, universe, T);
  for (std::size_t i = 0; i < mlp.size(); ++i) {
    for (int t : trees[i]) {
      x[vars.v[t]] = 1.0;
      for (const auto& [tt, u] : vars.u[i]) {
        if (tt == t) x[u] = 1.0;
      }
    }
  }
}

TripleSet active_triples(const TripleUniverse& universe, const RoutingVars& vars,
                         const std::vector<double>& x) {
  TripleSet out;
  for (std::size_t t = 0; t < universe.size(); ++t) {
    if (x[vars.v[t]] > 0.5) out.insert(universe.triple(t));
  }
  return out;
}

ExactResult to_exact(const solver::SolveResult& res,
                     const TripleUniverse& universe, const RoutingVars& vars) {
  ExactResult out;
  out.status = res.status;
  out.has_solution = res.has_solution;
  out.objective = res.objective;
  out.mip_bound = res.bound;
  out.nodes = res.nodes;
  out.runtime_ms = res.runtime_ms;
  if (res.has_solution) out.triples = active_triples(universe, vars, res.x);
  return out;
}

}  // namespace

std::vector<std::vector<int>> routing_trees(const MlpInstance& mlp,
                                            const TripleUniverse& universe,
                                            const TripleSet& T) {
  const auto check = check_proper(T, mlp);
  if (!check.proper) {
    throw Error(ErrorCode::kImproper,
                "triple set does not derive " + check.missing.front().to_string());
  }
  std::map<IndexSet, const Triple*> first;
  for (const Triple& t : check.witness) first.emplace(t.head, &t);
  std::vector<std::vector<int>> out(mlp.size());
  for (std::size_t i = 0; i < mlp.size(); ++i) {
    if (mlp.monomial(i).vars.size() < 2) continue;
    std::function<void(const IndexSet&)> walk = [&](const IndexSet& head) {
      if (head.size() < 2) return;
      const Triple* t = first.at(head);
      const int id = universe.id(*t);
      if (id < 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "triple " + t->to_string() + " is not in the universe");
      }
      out[i].push_back(id);
      walk(t->tail1);
      walk(t->tail2);
    };
    walk(mlp.monomial(i).vars);
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

MinlinModel build_minlin_mip(const MlpInstance& mlp,
                             const TripleUniverse& universe) {
  MinlinModel out;
  out.model.name = "minlin";
  out.vars = add_routing(out.model, mlp, universe, 1.0);
  return out;
}

ExactResult solve_minlin(const MlpInstance& mlp,
                         const solver::SolverConfig& config,
                         const std::optional<TripleSet>& warm, int degree_cap) {
  const TripleUniverse universe(mlp, degree_cap);
  const MinlinModel m = build_minlin_mip(mlp, universe);
  std::vector<double> x0;
  if (warm && is_proper(*warm, mlp)) {
    x0.assign(m.model.num_vars(), 0.0);
    fill_routing(mlp, universe, m.vars, *warm, x0);
  }
  return to_exact(solver::solve_mip(m.model, config, x0), universe, m.vars);
}

BestBoundModel build_bestbound_mip(const MlpInstance& mlp,
                                   const TripleUniverse& universe, int k,
                                   const DualBounds& bounds) {
  BestBoundModel out;
  MipModel& model = out.model;
  model.name = "bestbound";
  model.sense = solver::ObjSense::kMaximize;
  const int nt = static_cast<int>(universe.size());
  out.lambda_var.resize(nt);
  for (int t = 0; t < nt; ++t) {
    for (int c = 0; c < 3; ++c) {
      out.lambda_var[t][c] = model.add_variable(
          "l" + std::to_string(t) + "_" + std::to_string(c + 1), 0.0,
          bounds.m_t[t][c], c == 2 ? -1.0 : 0.0);
    }
  }
  const auto& sets = universe.index_sets();
  for (std::size_t s = 0; s < sets.size(); ++s) {
    out.mu_var.push_back(model.add_variable("mu" + var_name(sets[s]).substr(1),
                                            0.0, bounds.m_j[s], -1.0));
  }
  std::vector<std::vector<std::pair<int, double>>> rows(sets.size());
  for (int t = 0; t < nt; ++t) {
    const std::array<int, 3> owner = {universe.tail1_id(t), universe.tail2_id(t),
                                      universe.head_id(t)};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) {
        if (kEnvelopeMatrix[r][c] != 0.0) {
          rows[owner[c]].emplace_back(out.lambda_var[t][r], kEnvelopeMatrix[r][c]);
        }
      }
    }
  }
  for (std::size_t s = 0; s < sets.size(); ++s) {
    rows[s].emplace_back(out.mu_var[s], 1.0);
    model.add_row("dual" + var_name(sets[s]).substr(1), std::move(rows[s]),
                  RowSense::kGe, -mlp.beta(sets[s]));
  }
  out.vars = add_routing(model, mlp, universe, 0.0);
  for (int t = 0; t < nt; ++t) {
    for (int c = 0; c < 3; ++c) {
      model.add_row("gate" + std::to_string(t) + "_" + std::to_string(c + 1),
                    {{out.lambda_var[t][c], 1.0},
                     {out.vars.v[t], -bounds.m_t[t][c]}},
                    RowSense::kLe, 0.0);
    }
  }
  std::vector<std::pair<int, double>> card;
  for (int v : out.vars.v) card.emplace_back(v, 1.0);
  out.cardinality_row =
      model.add_row("cardinality", std::move(card), RowSense::kLe, k);
  return out;
}

namespace {

// Solves the best-bound model with v (and u) pinned to a proper set.
solver::SolveResult solve_pinned(const MlpInstance& mlp,
                                 const TripleUniverse& universe,
                                 BestBoundModel m, const TripleSet& T,
                                 const solver::SolverConfig& config) {
  std::vector<double> pin(m.model.num_vars(), 0.0);
  fill_routing(mlp, universe, m.vars, T, pin);
  const auto active = universe.indicator(T);
  for (std::size_t t = 0; t < universe.size(); ++t) {
    const double v = active[t] ? 1.0 : 0.0;
    m.model.var(m.vars.v[t]).lower = v;
    m.model.var(m.vars.v[t]).upper = v;
  }
  for (const auto& per : m.vars.u) {
    for (const auto& [t, u] : per) {
      m.model.var(u).lower = pin[u];
      m.model.var(u).upper = pin[u];
    }
  }
  m.model.row(m.cardinality_row).rhs =
      std::max(m.model.row(m.cardinality_row).rhs, static_cast<double>(T.size()));
  return solver::solve_mip(m.model, config);
}

}  // namespace

double bestbound_fixed(const MlpInstance& mlp, const TripleUniverse& universe,
                       const DualBounds& bounds, const TripleSet& T,
                       const solver::SolverConfig& config) {
  BestBoundModel m = build_bestbound_mip(
      mlp, universe, static_cast<int>(T.size()), bounds);
  const auto res = solve_pinned(mlp, universe, std::move(m), T, config);
  if (res.status != solver::Status::kOptimal) {
    throw Error(ErrorCode::kSolver, std::string("pinned best-bound model ended ") +
                                        solver::status_name(res.status));
  }
  return res.objective;
}

BestBoundResult solve_bestbound(const MlpInstance& mlp, int k,
                                const solver::SolverConfig& config,
                                const std::optional<TripleSet>& warm,
                                int degree_cap) {
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "k must be non-negative");
  const TripleUniverse universe(mlp, degree_cap);
  const DualBounds bounds = dual_bounds(mlp, universe);
  const BestBoundModel m = build_bestbound_mip(mlp, universe, k, bounds);
  std::vector<double> x0;
  if (warm && is_proper(*warm, mlp) && static_cast<int>(warm->size()) <= k) {
    const auto pinned = solve_pinned(mlp, universe, m, *warm, config);
    if (pinned.status == solver::Status::kOptimal) x0 = pinned.x;
  }
  const auto res = solver::solve_mip(m.model, config, x0);
  BestBoundResult out;
  out.exact = to_exact(res, universe, m.vars);
  if (out.exact.has_solution) out.bound = lp_bound(mlp, out.exact.triples).bound;
  return out;
}

BinaryExactModel build_binary_exact_mip(const MlpInstance& mlp,
                                        const TripleSet& T) {
  if (mlp.domain() != Domain::kBinary) {
    throw Error(ErrorCode::kDomain,
                "exact solve needs a binary-domain instance");
  }
  RmlLp lp = build_rml_lp(mlp, T);
  BinaryExactModel out;
  out.x_var.assign(mlp.n(), -1);
  for (int j = 0; j < mlp.n(); ++j) {
    auto it = lp.var_of.find(IndexSet::singleton(j));
    if (it == lp.var_of.end()) continue;
    out.x_var[j] = it->second;
    lp.model.var(it->second).integer = true;
  }
  out.model = std::move(lp.model);
  out.model.name = "binary_exact";
  return out;
}

BinaryExactResult solve_binary_exact(const MlpInstance& mlp, const TripleSet& T,
                                     const solver::SolverConfig& config) {
  const BinaryExactModel m = build_binary_exact_mip(mlp, T);
  const auto res = solver::solve_mip(m.model, config);
  BinaryExactResult out;
  out.status = res.status;
  out.nodes = res.nodes;
  out.runtime_ms = res.runtime_ms;
  if (res.has_solution) {
    out.objective = res.objective;
    out.x.assign(mlp.n(), 0);
    for (int j = 0; j < mlp.n(); ++j) {
      if (m.x_var[j] >= 0) out.x[j] = res.x[m.x_var[j]] > 0.5 ? 1 : 0;
    }
  }
  return out;
}

solver::LpModel build_qcp(const MlpInstance& mlp, const TripleSet& T) {
  RmlLp lp = build_rml_lp(mlp, T);
  solver::LpModel out;
  out.name = "qcp";
  for (const auto& v : lp.model.vars()) {
    out.add_variable(v.name, v.lower, v.upper, v.obj);
  }
  int k = 0;
  for (const Triple& t : T) {
    const int h = lp.var_of.at(t.head);
    const int r = out.add_row("bil" + std::to_string(k++), {{h, 1.0}},
                              RowSense::kEq, 0.0);
    out.row(r).quad.push_back({lp.var_of.at(t.tail1), lp.var_of.at(t.tail2), -1.0});
  }
  return out;
}

std::string export_qcp(const MlpInstance& mlp, const TripleSet& T) {
  return solver::write_lp_format(build_qcp(mlp, T));
}

}  // namespace rml
