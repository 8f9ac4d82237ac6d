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

#ifndef RML_SOLVER_LP_FORMAT_HPP_
#define RML_SOLVER_LP_FORMAT_HPP_

#include <string>

#include "rml/solver/model.hpp"

namespace rml::solver {

// CPLEX LP text. Bounds are written only where they differ from the format's
// default [0, +inf); integer variables on [0, 1] go to Binaries, other integer
// variables to Generals. Quadratic row terms are written in brackets.
std::string write_lp_format(const LpModel& model);

// Writes the model to a fresh file in the system temp directory and returns
// its path.
std::string dump_model(const LpModel& model, const std::string& stem);

}  // namespace rml::solver

#endif  // RML_SOLVER_LP_FORMAT_HPP_
