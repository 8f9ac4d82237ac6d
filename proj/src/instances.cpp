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


#include "rml/instances.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include "rml/error.hpp"
#include "rml/rng.hpp"

namespace rml {

namespace {

double draw_coefficient(Rng& rng) {
  std::int64_t c = rng.uniform_int(-100, 99);
  return static_cast<double>(c >= 0 ? c + 1 : c);
}

double binomial(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

MlpInstance gen_mult(int n, int m, int degree, std::uint64_t seed) {
  if (n <= 0 || m < 0 || degree <= 0 || degree > n)
    throw Error(ErrorCode::kInvalidArgument,
                "gen_mult needs 1 <= degree <= n and m >= 0");
  if (m > binomial(n, degree) + 0.5)
    throw Error(ErrorCode::kInvalidArgument,
                "cannot draw " + std::to_string(m) + " distinct monomials of "
                    "degree " + std::to_string(degree) + " over " +
                    std::to_string(n) + " variables");
  Rng rng(seed);
  std::set<IndexSet> seen;
  std::vector<Monomial> monomials;
  const long long retry_limit = 1000LL * (m + 1);
  long long draws = 0;
  while (static_cast<int>(monomials.size()) < m) {
    if (++draws > retry_limit)
      throw Error(ErrorCode::kInvalidArgument,
                  "gen_mult gave up resampling duplicate monomials");
    IndexSet vars =
        IndexSet::from_unsorted(rng.sample_without_replacement(n, degree));
    double coeff = draw_coefficient(rng);
    if (!seen.insert(vars).second) continue;
    monomials.push_back({coeff, std::move(vars)});
  }
  return MlpInstance(n, Domain::kUnitBox, std::move(monomials));
}

MlpInstance gen_vision(int g, std::uint64_t seed,
                       std::optional<std::uint64_t> affine_seed) {
  if (g < 2) throw Error(ErrorCode::kInvalidArgument, "vision grid needs g >= 2");
  Rng rng(seed);
  std::vector<Monomial> monomials;
  auto cell = [g](int r, int c) { return r * g + c; };
  for (int r = 0; r + 1 < g; ++r) {
    for (int c = 0; c + 1 < g; ++c) {
      const int a = cell(r, c), b = cell(r, c + 1);
      const int d = cell(r + 1, c), e = cell(r + 1, c + 1);
      monomials.push_back({draw_coefficient(rng), IndexSet::from_unsorted({a, e})});
      monomials.push_back({draw_coefficient(rng), IndexSet::from_unsorted({b, d})});
      for (auto three : {std::vector<int>{a, b, d}, {a, b, e}, {a, d, e}, {b, d, e}})
        monomials.push_back({draw_coefficient(rng), IndexSet::from_unsorted(three)});
      monomials.push_back({draw_coefficient(rng), IndexSet({a, b, d, e})});
    }
  }
  Rng affine(affine_seed.value_or(seed) ^ 0x9e3779b97f4a7c15ULL);
  for (int j = 0; j < g * g; ++j)
    monomials.push_back({draw_coefficient(affine), IndexSet::singleton(j)});
  return MlpInstance(g * g, Domain::kUnitBox, std::move(monomials));
}

MlpInstance gen_autocorr(int length, int max_lag) {
  if (max_lag < 1 || max_lag >= length)
    throw Error(ErrorCode::kInvalidArgument,
                "autocorr needs 1 <= max_lag < length");
  std::vector<Monomial> monomials;
  for (int k = 1; k <= max_lag; ++k) {
    for (int i = 0; i + k < length; ++i) {
      for (int j = 0; j + k < length; ++j) {
        std::vector<int> vars{i, i + k, j, j + k};
        std::sort(vars.begin(), vars.end());
        vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
        monomials.push_back({1.0, IndexSet(std::move(vars))});
      }
    }
  }
  return MlpInstance(length, Domain::kBinary, std::move(monomials));
}

Family parse_family(const std::string& name) {
  if (name == "mult3") return Family::kMult3;
  if (name == "mult4") return Family::kMult4;
  if (name == "vision") return Family::kVision;
  if (name == "autocorr") return Family::kAutocorr;
  throw Error(ErrorCode::kInvalidArgument, "unknown family '" + name + "'");
}

const char* family_name(Family family) {
  switch (family) {
    case Family::kMult3: return "mult3";
    case Family::kMult4: return "mult4";
    case Family::kVision: return "vision";
    case Family::kAutocorr: return "autocorr";
  }
  return "?";
}

MlpInstance generate(const GenSpec& spec) {
  switch (spec.family) {
    case Family::kMult3: return gen_mult(spec.n, spec.m, 3, spec.seed);
    case Family::kMult4: return gen_mult(spec.n, spec.m, 4, spec.seed);
    case Family::kVision: return gen_vision(spec.n, spec.seed);
    case Family::kAutocorr: return gen_autocorr(spec.n, spec.m);
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown family");
}

std::string instance_id(const GenSpec& spec) {
  const std::string s = "_s" + std::to_string(spec.seed);
  switch (spec.family) {
    case Family::kMult3:
    case Family::kMult4:
      return std::string(family_name(spec.family)) + "_n" +
             std::to_string(spec.n) + "_m" + std::to_string(spec.m) + s;
    case Family::kVision:
      return "vision_g" + std::to_string(spec.n) + s;
    case Family::kAutocorr:
      return "autocorr_L" + std::to_string(spec.n) + "_k" +
             std::to_string(spec.m);
  }
  return "?";
}

}  // namespace rml
