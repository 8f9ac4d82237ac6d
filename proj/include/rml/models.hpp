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

#ifndef RML_MODELS_HPP_
#define RML_MODELS_HPP_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "rml/mlp.hpp"
#include "rml/solver/model.hpp"
#include "rml/triples.hpp"

namespace rml {

// Finite bounds on some optimal dual solution of the linearization LP, for
// every choice of active triples.
struct DualBounds {
  std::vector<std::array<double, 3>> m_t;  // per universe triple
  std::vector<double> m_j;                 // per universe index set
  double max_m = 0.0;
  // Set when a tier value came out negative and was clamped to 0.
  bool clamped = false;
};

DualBounds dual_bounds(const MlpInstance& mlp, const TripleUniverse& universe);

// Routing variables shared by the minimum-size and best-bound models: for
// every monomial i with more than one variable, u[i] lists (triple id, LP
// variable) for the triples of T_i; v[t] is the activation of triple t.
struct RoutingVars {
  std::vector<int> v;
  std::vector<std::vector<std::pair<int, int>>> u;
};

struct MinlinModel {
  solver::MipModel model;
  RoutingVars vars;
};

// min sum_t v_t subject to, per monomial, one u-tree deriving it from
// singletons, and u <= v.
MinlinModel build_minlin_mip(const MlpInstance& mlp,
                             const TripleUniverse& universe);

struct ExactResult {
  TripleSet triples;
  solver::Status status = solver::Status::kInfeasible;
  bool has_solution = false;
  // Objective of the MIP incumbent and the best proven bound.
  double objective = 0.0;
  double mip_bound = 0.0;
  std::int64_t nodes = 0;
  double runtime_ms = 0.0;
};

// Minimum number of triples in a proper set. `warm`, if proper, seeds the
// incumbent with a per-monomial derivation inside it.
ExactResult solve_minlin(const MlpInstance& mlp,
                         const solver::SolverConfig& config = {},
                         const std::optional<TripleSet>& warm = std::nullopt,
                         int degree_cap = kDefaultDegreeCap);

struct BestBoundModel {
  solver::MipModel model;
  RoutingVars vars;
  std::vector<std::array<int, 3>> lambda_var;
  std::vector<int> mu_var;
  int cardinality_row = -1;
};

// max -sum_t lambda_t3 - sum_J mu_J over the dual constraints, with
// lambda_tj <= M_tj v_t, v deriving every monomial, and sum_t v_t <= k.
BestBoundModel build_bestbound_mip(const MlpInstance& mlp,
                                   const TripleUniverse& universe, int k,
                                   const DualBounds& bounds);

struct BestBoundResult {
  ExactResult exact;
  // lp_bound of exact.triples; equals exact.objective up to tolerance.
  double bound = 0.0;
};

// Best LP bound over proper sets of at most k triples. `warm` must be proper
// with at most k triples.
BestBoundResult solve_bestbound(const MlpInstance& mlp, int k,
                                const solver::SolverConfig& config = {},
                                const std::optional<TripleSet>& warm = std::nullopt,
                                int degree_cap = kDefaultDegreeCap);

// Optimal value of the best-bound model with the activation fixed to T.
double bestbound_fixed(const MlpInstance& mlp, const TripleUniverse& universe,
                       const DualBounds& bounds, const TripleSet& T,
                       const solver::SolverConfig& config = {});

// A per-monomial derivation inside T: for every monomial with more than one
// variable, the triple ids (in `universe`) of one binary tree deriving it.
std::vector<std::vector<int>> routing_trees(const MlpInstance& mlp,
                                            const TripleUniverse& universe,
                                            const TripleSet& T);

struct BinaryExactModel {
  solver::MipModel model;
  // LP variable of x_j, or -1 for variables that appear in no monomial.
  std::vector<int> x_var;
};

// The linearization LP with the original variables declared integer. On the
// binary cube the McCormick rows force every y to equal its product, so the
// optimum is the exact minimum of f. Throws Error(kDomain) on unit-box
// instances.
BinaryExactModel build_binary_exact_mip(const MlpInstance& mlp,
                                        const TripleSet& T);

struct BinaryExactResult {
  solver::Status status = solver::Status::kInfeasible;
  double objective = 0.0;
  std::vector<int> x;  // 0/1 per original variable
  std::int64_t nodes = 0;
  double runtime_ms = 0.0;
};

BinaryExactResult solve_binary_exact(const MlpInstance& mlp, const TripleSet& T,
                                     const solver::SolverConfig& config = {});

// y_head = y_tail1 * y_tail2 for every triple of T, objective sum beta_J y_J,
// all y in [0, 1], as LP-format text with bracketed quadratic terms.
solver::LpModel build_qcp(const MlpInstance& mlp, const TripleSet& T);
std::string export_qcp(const MlpInstance& mlp, const TripleSet& T);

}  // namespace rml

#endif  // RML_MODELS_HPP_
