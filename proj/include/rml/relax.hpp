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

#ifndef RML_RELAX_HPP_
#define RML_RELAX_HPP_

#include <array>
#include <map>
#include <vector>

#include "rml/mlp.hpp"
#include "rml/solver/model.hpp"
#include "rml/triples.hpp"

namespace rml {

// Which McCormick rows the linearization LP contains.
//
// kActiveOnly keeps the rows of the given triples and only the y_J that
// appear in them, in a monomial or as a used singleton. kGated writes rows for
// every universe triple with right-hand side b + c * v (v = 1 for triples in
// T, 0 otherwise) and a variable for every index set; the extra rows are
// satisfied by every y in [0, 1], so both modes share their optimum.
enum class RowMode { kActiveOnly, kGated };

// Per-triple row data: B * (y_tail1, y_tail2, y_head) <= b + c * v.
inline constexpr std::array<std::array<double, 3>, 3> kEnvelopeMatrix = {{
    {-1.0, 0.0, 1.0},
    {0.0, -1.0, 1.0},
    {1.0, 1.0, -1.0},
}};
inline constexpr std::array<double, 3> kEnvelopeRhs = {1.0, 1.0, 2.0};
inline constexpr std::array<double, 3> kEnvelopeShift = {-1.0, -1.0, -1.0};

struct RmlLp {
  solver::LpModel model;
  // Index set carried by each LP variable.
  std::vector<IndexSet> var_sets;
  std::map<IndexSet, int> var_of;
  // Triple behind rows 3k, 3k+1, 3k+2.
  std::vector<Triple> row_triples;
};

// Throws Error(kImproper) when T is not proper.
RmlLp build_rml_lp(const MlpInstance& mlp, const TripleSet& T,
                   RowMode mode = RowMode::kActiveOnly,
                   int degree_cap = kDefaultDegreeCap);

struct BoundResult {
  double bound = 0.0;
  solver::Status status = solver::Status::kOptimal;
  int n_vars = 0;
  int n_rows = 0;
  double eta = 0.0;
  double runtime_ms = 0.0;
};

// Optimal value of the linearization LP. Lies in [-eta, 0].
BoundResult lp_bound(const MlpInstance& mlp, const TripleSet& T,
                     const solver::SolverConfig& config = {});
double lp_bound_value(const MlpInstance& mlp, const TripleSet& T);

// Multipliers of the LP dual: lambda per universe triple and row, mu per
// index set of the universe.
struct DualSolution {
  std::vector<std::array<double, 3>> lambda;
  std::vector<double> mu;
  double objective = 0.0;
};

struct DualModel {
  solver::LpModel model;
  // lambda_var[t][k] and mu_var[J] are LP variable ids.
  std::vector<std::array<int, 3>> lambda_var;
  std::vector<int> mu_var;
};

// The maximization dual over the whole universe with v = indicator of T:
//   max -sum_t (b + c v_t)' lambda_t - sum_J mu_J
//   s.t. beta_J + (B' lambda)_J + mu_J >= 0 for every index set J.
DualModel build_dual(const MlpInstance& mlp, const TripleUniverse& universe,
                     const std::vector<char>& active);
DualSolution extract_dual(const DualModel& dual, const TripleUniverse& universe,
                          const std::vector<double>& x);

double dual_objective(const TripleUniverse& universe,
                      const std::vector<char>& active, const DualSolution& d);
// Largest violation of the dual constraints or sign conditions.
double dual_infeasibility(const MlpInstance& mlp, const TripleUniverse& universe,
                          const DualSolution& d);

// Moves the multipliers of the inactive triple `t` onto mu: lambda_t becomes
// zero, mu rises by lambda_t3 on both tails and by lambda_t1 + lambda_t2 on
// the head. Feasibility and the objective are preserved. Throws
// Error(kInvalidArgument) when `t` is active.
DualSolution shift_multipliers(const TripleUniverse& universe,
                               const std::vector<char>& active,
                               const DualSolution& d, int t);

// Dual point recovered from an optimal solve of build_rml_lp:
// lambda = -(row dual), mu_J = max(0, -reduced cost of y_J).
DualSolution dual_from_primal(const TripleUniverse& universe,
                              const RmlLp& lp, const solver::SolveResult& res);

// 100 * (f_full - f_alg) / max(|f_full|, 1e-3).
double root_node_gap(double f_full, double f_alg);
// 100 * (f_ub - f_lb) / max(|f_ub|, 1e-3).
double opt_gap(double f_ub, double f_lb);

// Variable name used in exported models, e.g. y_1_2_3.
std::string var_name(const IndexSet& s);

}  // namespace rml

#endif  // RML_RELAX_HPP_
