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

#ifndef RML_SOLVER_LP_HPP_
#define RML_SOLVER_LP_HPP_

#include "rml/solver/model.hpp"

namespace rml::solver {

// Solves the continuous relaxation of `model` (integrality marks are
// ignored). Throws Error(kSolver) naming a dump of the model in LP format if
// the iteration cap is reached.
SolveResult solve_lp(const LpModel& model, const SolverConfig& config = {});

}  // namespace rml::solver

#endif  // RML_SOLVER_LP_HPP_
