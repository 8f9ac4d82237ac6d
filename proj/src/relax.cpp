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

#include "rml/relax.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "rml/error.hpp"
#include "rml/solver/lp.hpp"

namespace rml {

using solver::LpModel;
using solver::RowSense;

std::string var_name(const IndexSet& s) {
  std::string out = "y";
  for (int j : s) out += "_" + std::to_string(j + 1);
  return out;
}

namespace {

void add_envelope_rows(RmlLp& lp, const Triple& t, double v) {
  const int k = static_cast<int>(lp.row_triples.size());
  const std::array<int, 3> cols = {lp.var_of.at(t.tail1), lp.var_of.at(t.tail2),
                                   lp.var_of.at(t.head)};
  for (int r = 0; r < 3; ++r) {
    std::vector<std::pair<int, double>> coeffs;
    for (int c = 0; c < 3; ++c) {
      if (kEnvelopeMatrix[r][c] != 0.0) {
        coeffs.emplace_back(cols[c], kEnvelopeMatrix[r][c]);
      }
    }
    lp.model.add_row("env" + std::to_string(k) + "_" + std::to_string(r + 1),
                     std::move(coeffs), RowSense::kLe,
                     kEnvelopeRhs[r] + kEnvelopeShift[r] * v);
  }
  lp.row_triples.push_back(t);
}

}  // namespace

RmlLp build_rml_lp(const MlpInstance& mlp, const TripleSet& T, RowMode mode,
                   int degree_cap) {
  const auto check = check_proper(T, mlp);
  if (!check.proper) {
    throw Error(ErrorCode::kImproper,
                "triple set does not derive " + check.missing.front().to_string());
  }
  RmlLp lp;
  lp.model.name = "rml";
  std::set<IndexSet> sets;
  if (mode == RowMode::kGated) {
    TripleUniverse universe(mlp, degree_cap);
    for (const Triple& t : T) {
      if (universe.id(t) < 0) {
        throw Error(ErrorCode::kInvalidArgument,
                    "triple " + t.to_string() + " is not in the universe");
      }
    }
    sets.insert(universe.index_sets().begin(), universe.index_sets().end());
    for (const IndexSet& s : sets) {
      lp.var_of.emplace(s, lp.model.add_variable(var_name(s), 0.0, 1.0, mlp.beta(s)));
      lp.var_sets.push_back(s);
    }
    for (const Triple& t : universe.triples()) {
      add_envelope_rows(lp, t, T.count(t) ? 1.0 : 0.0);
    }
    return lp;
  }
  for (int j : mlp.used_variables()) sets.insert(IndexSet::singleton(j));
  for (const auto& mono : mlp.monomials()) sets.insert(mono.vars);
  for (const Triple& t : T) {
    sets.insert(t.tail1);
    sets.insert(t.tail2);
    sets.insert(t.head);
  }
  for (const IndexSet& s : sets) {
    lp.var_of.emplace(s, lp.model.add_variable(var_name(s), 0.0, 1.0, mlp.beta(s)));
    lp.var_sets.push_back(s);
  }
  for (const Triple& t : T) add_envelope_rows(lp, t, 1.0);
  return lp;
}

BoundResult lp_bound(const MlpInstance& mlp, const TripleSet& T,
                     const solver::SolverConfig& config) {
  const RmlLp lp = build_rml_lp(mlp, T);
  const auto res = solver::solve_lp(lp.model, config);
  BoundResult out;
  out.status = res.status;
  out.bound = res.objective;
  out.n_vars = lp.model.num_vars();
  out.n_rows = lp.model.num_rows();
  out.eta = eta(mlp);
  out.runtime_ms = res.runtime_ms;
  if (res.status != solver::Status::kOptimal) {
    throw Error(ErrorCode::kSolver, std::string("linearization LP ended ") +
                                        solver::status_name(res.status));
  }
  return out;
}

double lp_bound_value(const MlpInstance& mlp, const TripleSet& T) {
  return lp_bound(mlp, T).bound;
}

DualModel build_dual(const MlpInstance& mlp, const TripleUniverse& universe,
                     const std::vector<char>& active) {
  DualModel out;
  out.model.name = "rml_dual";
  out.model.sense = solver::ObjSense::kMaximize;
  const int nt = static_cast<int>(universe.size());
  out.lambda_var.resize(nt);
  for (int t = 0; t < nt; ++t) {
    const double v = active.at(t) ? 1.0 : 0.0;
    for (int k = 0; k < 3; ++k) {
      out.lambda_var[t][k] = out.model.add_variable(
          "l" + std::to_string(t) + "_" + std::to_string(k + 1), 0.0,
          solver::kInf, -(kEnvelopeRhs[k] + kEnvelopeShift[k] * v));
    }
  }
  const auto& sets = universe.index_sets();
  out.mu_var.resize(sets.size());
  for (std::size_t s = 0; s < sets.size(); ++s) {
    out.mu_var[s] = out.model.add_variable("mu" + var_name(sets[s]).substr(1),
                                           0.0, solver::kInf, -1.0);
  }
  // Column c of B maps (tail1, tail2, head) to the rows it touches.
  std::vector<std::vector<std::pair<int, double>>> rows(sets.size());
  for (int t = 0; t < nt; ++t) {
    const std::array<int, 3> owner = {universe.tail1_id(t), universe.tail2_id(t),
                                      universe.head_id(t)};
    for (int k = 0; k < 3; ++k) {
      for (int c = 0; c < 3; ++c) {
        if (kEnvelopeMatrix[k][c] != 0.0) {
          rows[owner[c]].emplace_back(out.lambda_var[t][k], kEnvelopeMatrix[k][c]);
        }
      }
    }
  }
  for (std::size_t s = 0; s < sets.size(); ++s) {
    rows[s].emplace_back(out.mu_var[s], 1.0);
    out.model.add_row("dual" + var_name(sets[s]).substr(1), std::move(rows[s]),
                      RowSense::kGe, -mlp.beta(sets[s]));
  }
  return out;
}

DualSolution extract_dual(const DualModel& dual, const TripleUniverse& universe,
                          const std::vector<double>& x) {
  DualSolution out;
  out.lambda.resize(universe.size());
  for (std::size_t t = 0; t < universe.size(); ++t) {
    for (int k = 0; k < 3; ++k) out.lambda[t][k] = x.at(dual.lambda_var[t][k]);
  }
  out.mu.resize(universe.index_sets().size());
  for (std::size_t s = 0; s < out.mu.size(); ++s) out.mu[s] = x.at(dual.mu_var[s]);
  out.objective = dual.model.objective_value(x);
  return out;
}

double dual_objective(const TripleUniverse& universe,
                      const std::vector<char>& active, const DualSolution& d) {
  double total = 0.0;
  for (std::size_t t = 0; t < universe.size(); ++t) {
    const double v = active.at(t) ? 1.0 : 0.0;
    for (int k = 0; k < 3; ++k) {
      total -= (kEnvelopeRhs[k] + kEnvelopeShift[k] * v) * d.lambda[t][k];
    }
  }
  for (double mu : d.mu) total -= mu;
  return total;
}

double dual_infeasibility(const MlpInstance& mlp, const TripleUniverse& universe,
                          const DualSolution& d) {
  const auto& sets = universe.index_sets();
  std::vector<double> lhs(sets.size(), 0.0);
  double worst = 0.0;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    lhs[s] = mlp.beta(sets[s]) + d.mu[s];
    worst = std::max(worst, -d.mu[s]);
  }
  for (std::size_t t = 0; t < universe.size(); ++t) {
    const std::array<int, 3> owner = {universe.tail1_id(t), universe.tail2_id(t),
                                      universe.head_id(t)};
    for (int k = 0; k < 3; ++k) {
      worst = std::max(worst, -d.lambda[t][k]);
      for (int c = 0; c < 3; ++c) {
        lhs[owner[c]] += kEnvelopeMatrix[k][c] * d.lambda[t][k];
      }
    }
  }
  for (double v : lhs) worst = std::max(worst, -v);
  return worst;
}

DualSolution shift_multipliers(const TripleUniverse& universe,
                               const std::vector<char>& active,
                               const DualSolution& d, int t) {
  if (active.at(t)) {
    throw Error(ErrorCode::kInvalidArgument,
                "multipliers can only be shifted off an inactive triple");
  }
  DualSolution out = d;
  const auto& lam = d.lambda[t];
  out.mu[universe.tail1_id(t)] += lam[2];
  out.mu[universe.tail2_id(t)] += lam[2];
  out.mu[universe.head_id(t)] += lam[0] + lam[1];
  out.lambda[t] = {0.0, 0.0, 0.0};
  return out;
}

DualSolution dual_from_primal(const TripleUniverse& universe, const RmlLp& lp,
                              const solver::SolveResult& res) {
  if (res.status != solver::Status::kOptimal) {
    throw Error(ErrorCode::kInvalidArgument, "LP was not solved to optimality");
  }
  DualSolution out;
  out.lambda.assign(universe.size(), {0.0, 0.0, 0.0});
  out.mu.assign(universe.index_sets().size(), 0.0);
  for (std::size_t k = 0; k < lp.row_triples.size(); ++k) {
    const int t = universe.id(lp.row_triples[k]);
    if (t < 0) throw Error(ErrorCode::kInvalidArgument, "triple outside universe");
    for (int r = 0; r < 3; ++r) {
      out.lambda[t][r] += std::max(0.0, -res.row_duals[3 * k + r]);
    }
  }
  for (std::size_t j = 0; j < lp.var_sets.size(); ++j) {
    const int s = universe.set_id(lp.var_sets[j]);
    if (s < 0) continue;
    out.mu[s] = std::max(0.0, -res.reduced_costs[j]);
  }
  out.objective = res.objective;
  return out;
}

double root_node_gap(double f_full, double f_alg) {
  return 100.0 * (f_full - f_alg) / std::max(std::abs(f_full), 1e-3);
}

double opt_gap(double f_ub, double f_lb) {
  return 100.0 * (f_ub - f_lb) / std::max(std::abs(f_ub), 1e-3);
}

}  // namespace rml
