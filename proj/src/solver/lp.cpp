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

#include "rml/solver/lp.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include "rml/error.hpp"
#include "rml/solver/lp_format.hpp"
#include "simplex_engine.hpp"

namespace rml::solver {

SolveResult solve_lp(const LpModel& model, const SolverConfig& config) {
  using internal::SimplexEngine;
  const auto start = internal::Clock::now();
  SimplexEngine engine(model, config);
  if (std::isfinite(config.time_limit)) {
    engine.set_deadline(start + std::chrono::duration_cast<internal::Clock::duration>(
                                    std::chrono::duration<double>(config.time_limit)));
  }
  const auto outcome = engine.solve();
  SolveResult result;
  result.iterations = engine.iterations();
  const double sign = model.sense == ObjSense::kMaximize ? -1.0 : 1.0;
  switch (outcome) {
    case SimplexEngine::Outcome::kOptimal: {
      result.status = Status::kOptimal;
      result.has_solution = true;
      result.x = engine.structural_values();
      for (int j = 0; j < model.num_vars(); ++j) {
        result.x[j] = std::clamp(result.x[j], model.var(j).lower,
                                 model.var(j).upper);
      }
      result.objective = model.objective_value(result.x);
      result.bound = result.objective;
      result.row_duals = engine.row_duals();
      result.reduced_costs = engine.structural_reduced_costs();
      for (double& y : result.row_duals) y *= sign;
      for (double& d : result.reduced_costs) d *= sign;
      break;
    }
    case SimplexEngine::Outcome::kInfeasible:
      result.status = Status::kInfeasible;
      break;
    case SimplexEngine::Outcome::kUnbounded:
      result.status = Status::kUnbounded;
      break;
    case SimplexEngine::Outcome::kTimeLimit:
      result.status = Status::kTimeLimit;
      break;
    case SimplexEngine::Outcome::kCutoff:
    case SimplexEngine::Outcome::kFallback:
    case SimplexEngine::Outcome::kIterationLimit: {
      const std::string path = dump_model(model, "rml-lp-failure");
      throw Error(ErrorCode::kSolver,
                  "simplex iteration limit reached; model written to " + path);
    }
  }
  result.runtime_ms = std::chrono::duration<double, std::milli>(
                          internal::Clock::now() - start)
                          .count();
  return result;
}

}  // namespace rml::solver
