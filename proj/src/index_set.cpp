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

#include "rml/index_set.hpp"

#include <algorithm>
#include <iterator>
#include <utility>

#include "rml/error.hpp"

namespace rml {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kDegreeCap: return "degree_cap";
    case ErrorCode::kTimeLimit: return "time_limit";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kImproper: return "improper";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kSolver: return "solver";
    case ErrorCode::kSizeGuard: return "size_guard";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

IndexSet::IndexSet(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "index set must be non-empty");
  }
  if (indices_.front() < 0) {
    throw Error(ErrorCode::kInvalidArgument, "negative variable index");
  }
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i] <= indices_[i - 1]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "index set must be strictly increasing");
    }
  }
}

IndexSet IndexSet::from_unsorted(std::vector<int> indices) {
  std::sort(indices.begin(), indices.end());
  return IndexSet(std::move(indices));
}

bool IndexSet::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

bool IndexSet::is_subset_of(const IndexSet& other) const {
  return std::includes(other.indices_.begin(), other.indices_.end(),
                       indices_.begin(), indices_.end());
}

bool IndexSet::is_disjoint(const IndexSet& other) const {
  auto a = indices_.begin();
  auto b = other.indices_.begin();
  while (a != indices_.end() && b != other.indices_.end()) {
    if (*a == *b) return false;
    if (*a < *b) {
      ++a;
    } else {
      ++b;
    }
  }
  return true;
}

std::string IndexSet::to_string() const { return "{" + to_csv() + "}"; }

std::string IndexSet::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(indices_[i] + 1);
  }
  return out;
}

std::strong_ordering operator<=>(const IndexSet& a, const IndexSet& b) {
  if (auto c = a.size() <=> b.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(
      a.indices_.begin(), a.indices_.end(), b.indices_.begin(),
      b.indices_.end());
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return IndexSet(std::move(out));
}

IndexSet set_difference(const IndexSet& a, const IndexSet& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return IndexSet(std::move(out));
}

}  // namespace rml
