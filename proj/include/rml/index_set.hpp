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

#ifndef RML_INDEX_SET_HPP_
#define RML_INDEX_SET_HPP_

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace rml {

// A non-empty, strictly increasing set of 0-based variable indices.
//
// IndexSets are totally ordered by cardinality first and lexicographically
// within equal cardinality. Every tie-break in the library goes through this
// order, so results are reproducible across runs and platforms.
class IndexSet {
 public:
  IndexSet() = default;
  // Throws Error(kInvalidArgument) unless `indices` is non-empty, non-negative
  // and strictly increasing.
  explicit IndexSet(std::vector<int> indices);
  IndexSet(std::initializer_list<int> indices)
      : IndexSet(std::vector<int>(indices)) {}

  // Sorts first; still rejects duplicates.
  static IndexSet from_unsorted(std::vector<int> indices);
  static IndexSet singleton(int index) { return IndexSet({index}); }

  std::size_t size() const { return indices_.size(); }
  bool empty() const { return indices_.empty(); }
  int operator[](std::size_t i) const { return indices_[i]; }
  int front() const { return indices_.front(); }
  int back() const { return indices_.back(); }
  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }
  std::span<const int> indices() const { return indices_; }

  bool contains(int index) const;
  bool is_subset_of(const IndexSet& other) const;
  bool is_disjoint(const IndexSet& other) const;

  // 1-based, e.g. "{1,2,3}".
  std::string to_string() const;
  // 1-based, comma separated without braces, e.g. "1,2,3".
  std::string to_csv() const;

  friend bool operator==(const IndexSet& a, const IndexSet& b) = default;
  friend std::strong_ordering operator<=>(const IndexSet& a,
                                          const IndexSet& b);

 private:
  std::vector<int> indices_;
};

IndexSet set_union(const IndexSet& a, const IndexSet& b);
// Elements of `a` not in `b`. Throws if the result would be empty.
IndexSet set_difference(const IndexSet& a, const IndexSet& b);

}  // namespace rml

#endif  // RML_INDEX_SET_HPP_
