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

#ifndef RML_MLP_HPP_
#define RML_MLP_HPP_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rml/index_set.hpp"

namespace rml {

enum class Domain { kUnitBox, kBinary };

const char* domain_name(Domain domain);

struct Monomial {
  double coeff = 0.0;
  IndexSet vars;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// An unconstrained multilinear program min sum_i coeff_i * prod_{j in J_i} x_j
// over the unit box or the binary cube.
//
// Construction normalizes the monomial list: monomials with the same index
// set are merged (coefficients summed, first occurrence keeps its position)
// and monomials whose coefficient ends up zero are dropped.
class MlpInstance {
 public:
  MlpInstance() = default;
  MlpInstance(int n, Domain domain, std::vector<Monomial> monomials);

  int n() const { return n_; }
  Domain domain() const { return domain_; }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::size_t size() const { return monomials_.size(); }
  const Monomial& monomial(std::size_t i) const { return monomials_[i]; }

  // Objective coefficient carried by the variable y_J; 0 if no monomial has
  // index set J.
  double beta(const IndexSet& vars) const;
  // Position of the monomial with index set `vars`, or -1.
  int find(const IndexSet& vars) const;

  int max_degree() const;
  // Sorted variables that appear in at least one monomial.
  std::vector<int> used_variables() const;

  // f(x) for x of length n.
  double evaluate(const std::vector<double>& x) const;

  friend bool operator==(const MlpInstance& a, const MlpInstance& b) {
    return a.n_ == b.n_ && a.domain_ == b.domain_ &&
           a.monomials_ == b.monomials_;
  }

 private:
  int n_ = 0;
  Domain domain_ = Domain::kUnitBox;
  std::vector<Monomial> monomials_;
  std::map<IndexSet, int> position_;
};

// -sum_i min(0, coeff_i); f is bounded below by -eta on the unit box.
double eta(const MlpInstance& mlp);

// Reads the native line-oriented format:
//   <n> <m> <unitbox|binary>
//   <coeff> <j1> ... <jd>      (m lines, 1-based indices)
// '#' starts a comment; blank lines are ignored. Throws ParseError.
MlpInstance parse_instance(std::string_view text);
// Emits the native format. parse_instance(write_instance(x)) == x.
std::string write_instance(const MlpInstance& mlp);

MlpInstance read_instance_file(const std::string& path);
void write_instance_file(const std::string& path, const MlpInstance& mlp);

// Shortest decimal string that parses back to exactly `value`.
std::string format_double(double value);

// The instance x1x2x3 - x2x3x4 - x1x3x4 used throughout the tests and docs.
MlpInstance example_instance();

}  // namespace rml

#endif  // RML_MLP_HPP_
