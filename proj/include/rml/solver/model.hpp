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

#ifndef RML_SOLVER_MODEL_HPP_
#define RML_SOLVER_MODEL_HPP_

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

namespace rml::solver {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class ObjSense { kMinimize, kMaximize };
enum class RowSense { kLe, kGe, kEq };

struct Variable {
  std::string name;
  double lower = 0.0;
  double upper = 1.0;
  double obj = 0.0;
  bool integer = false;
};

// Coefficient `coeff` on the product x_i * x_j. Only the LP writer reads
// these; the solvers reject rows that carry them.
struct QuadTerm {
  int i = 0;
  int j = 0;
  double coeff = 0.0;
};

struct Row {
  std::string name;
  std::vector<int> index;
  std::vector<double> value;
  RowSense sense = RowSense::kLe;
  double rhs = 0.0;
  std::vector<QuadTerm> quad;
};

// Row-oriented linear model; integrality marks make it a MIP.
class LpModel {
 public:
  ObjSense sense = ObjSense::kMinimize;
  std::string name = "model";

  int add_variable(std::string name, double lower, double upper, double obj,
                   bool integer = false);
  int add_row(std::string name, std::vector<std::pair<int, double>> coeffs,
              RowSense sense, double rhs);

  int num_vars() const { return static_cast<int>(vars_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const std::vector<Variable>& vars() const { return vars_; }
  const std::vector<Row>& rows() const { return rows_; }
  Variable& var(int j) { return vars_[j]; }
  const Variable& var(int j) const { return vars_[j]; }
  Row& row(int i) { return rows_[i]; }
  const Row& row(int i) const { return rows_[i]; }

  bool has_integers() const;
  // Objective value of x in the model's own sense.
  double objective_value(const std::vector<double>& x) const;
  // Largest violation of a row or bound by x.
  double max_violation(const std::vector<double>& x) const;

 private:
  std::vector<Variable> vars_;
  std::vector<Row> rows_;
};

using MipModel = LpModel;

struct SolverConfig {
  double feas_tol = 1e-7;
  double opt_tol = 1e-9;
  double int_tol = 1e-6;
  double gap_tol = 1e-6;
  double time_limit = kInf;  // seconds
  std::int64_t node_limit = -1;
  std::int64_t iteration_limit = -1;  // -1: derived from model size
  int refactor_interval = 64;
};

enum class Status { kOptimal, kInfeasible, kUnbounded, kTimeLimit };

const char* status_name(Status status);

struct SolveResult {
  Status status = Status::kInfeasible;
  bool has_solution = false;
  double objective = 0.0;
  // MIP: best proven bound in the model's sense. LP: equals objective.
  double bound = 0.0;
  std::vector<double> x;
  // Derivative of the optimal objective with respect to each row's rhs.
  std::vector<double> row_duals;
  // Objective coefficient minus the priced-out row duals, per variable.
  std::vector<double> reduced_costs;
  std::int64_t nodes = 0;
  std::int64_t iterations = 0;
  double runtime_ms = 0.0;
  // True when a MIP stopped on node_limit rather than the clock.
  bool node_limit_hit = false;
};

}  // namespace rml::solver

#endif  // RML_SOLVER_MODEL_HPP_
