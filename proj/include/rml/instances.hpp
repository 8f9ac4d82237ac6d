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


#ifndef RML_INSTANCES_HPP_
#define RML_INSTANCES_HPP_

#include <cstdint>
#include <optional>
#include <string>

#include "rml/mlp.hpp"

namespace rml {

// m distinct monomials of exactly `degree` variables out of n, integer
// coefficients uniform on [-100, 100] without 0.
MlpInstance gen_mult(int n, int m, int degree, std::uint64_t seed);

// Image restoration polynomial over a g x g grid, cells numbered row-major.
// Each 2x2 block a b / c d contributes the diagonals ad and bc, the four
// right angles (3-subsets of the block) and the square abcd. An affine part
// sum_j c_j x_j follows; `affine_seed` redraws only those coefficients.
MlpInstance gen_vision(int g, std::uint64_t seed,
                       std::optional<std::uint64_t> affine_seed = std::nullopt);

// Binary-domain expansion of sum_{k=1}^{max_lag} (sum_i x_i x_{i+k})^2 with
// x^2 = x.
MlpInstance gen_autocorr(int length, int max_lag);

enum class Family { kMult3, kMult4, kVision, kAutocorr };

Family parse_family(const std::string& name);
const char* family_name(Family family);

struct GenSpec {
  Family family = Family::kMult3;
  int n = 0;        // mult: variables; vision: grid side; autocorr: length
  int m = 0;        // mult: monomials; autocorr: max lag
  std::uint64_t seed = 0;
};

MlpInstance generate(const GenSpec& spec);
// e.g. "mult3_n20_m50_s7", "vision_g3_s1", "autocorr_L5_k2".
std::string instance_id(const GenSpec& spec);

}  // namespace rml

#endif  // RML_INSTANCES_HPP_
