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

#ifndef RML_SOLVER_SIMPLEX_ENGINE_HPP_
#define RML_SOLVER_SIMPLEX_ENGINE_HPP_

#include <chrono>
#include <cstdint>
#include <vector>

#include "rml/solver/model.hpp"

namespace rml::solver::internal {

enum class VarStatus : std::int8_t { kBasic, kAtLower, kAtUpper, kFree };

using Clock = std::chrono::steady_clock;

// Bounded-variable simplex over the form A x - s = 0 with one logical s_i per
// row, bounded according to the row sense. The basis inverse is held in
// product form: B^-1 = E_k ... E_1 (-I), one sparse eta column per pivot.
// Refactoring rebuilds the eta file from the slack basis.
class SimplexEngine {
 public:
  enum class Outcome {
    kOptimal,
    kInfeasible,
    kUnbounded,
    kCutoff,
    kIterationLimit,
    kTimeLimit,
    // The dual simplex lost dual feasibility; the caller should run primal().
    kFallback,
  };

  SimplexEngine(const LpModel& model, const SolverConfig& config);

  void set_deadline(Clock::time_point deadline) { deadline_ = deadline; }

  int num_structural() const { return n_; }
  int num_rows() const { return m_; }
  double lower(int j) const { return lo_[j]; }
  double upper(int j) const { return up_[j]; }
  void set_structural_bounds(int j, double lo, double hi);

  // Dual simplex when the current basis is dual feasible, primal otherwise.
  // Returns kCutoff as soon as a dual feasible basis proves the optimum
  // exceeds `cutoff` (internal minimization sense).
  Outcome solve(double cutoff = kInf);
  Outcome primal();
  // Perturbs nonbasic costs after a run of degenerate steps; the true costs
  // are restored before returning, with kFallback if that breaks optimality.
  Outcome dual(double cutoff);

  const std::vector<VarStatus>& basis() const { return status_; }
  // Installs a basis; a no-op when it equals the current one.
  void load_basis(const std::vector<VarStatus>& status);

  // Internal (minimization) objective of the current point.
  double objective() const;
  std::vector<double> structural_values() const;
  // y = c_B B^-1 for the internal minimization.
  std::vector<double> row_duals() const;
  std::vector<double> structural_reduced_costs() const;
  std::int64_t iterations() const { return iterations_; }

 private:
  double value_at(int j, VarStatus s) const;
  VarStatus default_status(int j) const;
  double column_dot(const std::vector<double>& v, int j) const;
  void ftran(int j, std::vector<double>& alpha) const;
  void btran(const std::vector<double>& cb, std::vector<double>& y) const;
  // v := B^-1 v, mapping a row-indexed vector to basis positions.
  void apply_inverse(std::vector<double>& v) const;
  // v := B^-T v, mapping a position-indexed vector to rows.
  void apply_inverse_transpose(std::vector<double>& v) const;
  void append_eta(int r, const std::vector<double>& alpha);
  void refactor();
  void compute_primal();
  void pivot(int r, int q, const std::vector<double>& alpha);
  bool out_of_time();
  Outcome dual_loop(double cutoff, bool allow_perturb, bool& perturbed);
  void perturb_costs();
  bool dual_feasible(const std::vector<double>& d) const;
  void reduced_costs(const std::vector<double>& y, std::vector<double>& d) const;

  int n_ = 0;
  int m_ = 0;
  SolverConfig config_;
  std::int64_t iteration_limit_ = 0;
  Clock::time_point deadline_ = Clock::time_point::max();

  std::vector<double> lo_, up_, cost_, x_;
  std::vector<VarStatus> status_;
  std::vector<int> head_;  // basis position -> variable
  std::vector<int> pos_;   // variable -> basis position or -1

  std::vector<int> cstart_, cind_;
  std::vector<double> cval_;
  std::vector<int> rstart_, rcol_;
  std::vector<double> rval_;

  std::vector<int> eta_pos_;
  std::vector<double> eta_pivot_;
  std::vector<int> eta_start_{0};
  std::vector<int> eta_ind_;
  std::vector<double> eta_val_;
  // Dual steepest-edge weights, kept per variable so they survive refactors.
  std::vector<double> dse_weight_;
  int since_refactor_ = 0;
  std::int64_t iterations_ = 0;
  std::int64_t call_iterations_ = 0;
};

}  // namespace rml::solver::internal

#endif  // RML_SOLVER_SIMPLEX_ENGINE_HPP_
