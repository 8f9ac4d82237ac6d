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

#ifndef RML_SOLVER_MIP_HPP_
#define RML_SOLVER_MIP_HPP_

#include <vector>

#include "rml/solver/model.hpp"

namespace rml::solver {

// Best-first branch and bound on the most fractional variable. `warm`, when
// non-empty and feasible, seeds the incumbent. On the time or node limit the
// result has status kTimeLimit and carries the incumbent, if any.
SolveResult solve_mip(const MipModel& model, const SolverConfig& config = {},
                      const std::vector<double>& warm = {});

}  // namespace rml::solver

#endif  // RML_SOLVER_MIP_HPP_
