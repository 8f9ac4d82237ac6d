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

#include "rml/solver/model.hpp"

#include <algorithm>
#include <cmath>

#include "rml/error.hpp"

namespace rml::solver {

const char* status_name(Status status) {
  switch (status) {
    case Status::kOptimal: return "optimal";
    case Status::kInfeasible: return "infeasible";
    case Status::kUnbounded: return "unbounded";
    case Status::kTimeLimit: return "time_limit";
  }
  return "unknown";
}

int LpModel::add_variable(std::string name, double lower, double upper,
                          double obj, bool integer) {
  if (lower > upper || std::isnan(lower) || std::isnan(upper)) {
    throw Error(ErrorCode::kInvalidArgument, "bad bounds for " + name);
  }
  if (integer && (lower != std::floor(lower) ||
                  (std::isfinite(upper) && upper != std::floor(upper)))) {
    throw Error(ErrorCode::kInvalidArgument,
                "integer variable " + name + " needs integer bounds");
  }
  vars_.push_back({std::move(name), lower, upper, obj, integer});
  return num_vars() - 1;
}

int LpModel::add_row(std::string name,
                     std::vector<std::pair<int, double>> coeffs,
                     RowSense sense, double rhs) {
  std::sort(coeffs.begin(), coeffs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  Row row;
  row.name = std::move(name);
  row.sense = sense;
  row.rhs = rhs;
  for (const auto& [j, a] : coeffs) {
    if (j < 0 || j >= num_vars()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "row " + row.name + " references an unknown variable");
    }
    if (!row.index.empty() && row.index.back() == j) {
      row.value.back() += a;
      continue;
    }
    row.index.push_back(j);
    row.value.push_back(a);
  }
  rows_.push_back(std::move(row));
  return num_rows() - 1;
}

bool LpModel::has_integers() const {
  return std::any_of(vars_.begin(), vars_.end(),
                     [](const Variable& v) { return v.integer; });
}

double LpModel::objective_value(const std::vector<double>& x) const {
  double total = 0.0;
  for (int j = 0; j < num_vars(); ++j) total += vars_[j].obj * x[j];
  return total;
}

double LpModel::max_violation(const std::vector<double>& x) const {
  double worst = 0.0;
  for (int j = 0; j < num_vars(); ++j) {
    worst = std::max(worst, vars_[j].lower - x[j]);
    worst = std::max(worst, x[j] - vars_[j].upper);
  }
  for (const Row& row : rows_) {
    double lhs = 0.0;
    for (std::size_t k = 0; k < row.index.size(); ++k) {
      lhs += row.value[k] * x[row.index[k]];
    }
    if (row.sense != RowSense::kGe) worst = std::max(worst, lhs - row.rhs);
    if (row.sense != RowSense::kLe) worst = std::max(worst, row.rhs - lhs);
  }
  return worst;
}

}  // namespace rml::solver
