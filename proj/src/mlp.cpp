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

#include "rml/mlp.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>
#include <utility>

#include "rml/error.hpp"

namespace rml {

const char* domain_name(Domain domain) {
  return domain == Domain::kBinary ? "binary" : "unitbox";
}

MlpInstance::MlpInstance(int n, Domain domain, std::vector<Monomial> monomials)
    : n_(n), domain_(domain) {
  if (n < 0) throw Error(ErrorCode::kInvalidArgument, "negative n");
  std::vector<Monomial> merged;
  std::map<IndexSet, int> where;
  for (auto& mono : monomials) {
    if (mono.vars.empty()) {
      throw Error(ErrorCode::kInvalidArgument, "monomial without variables");
    }
    if (mono.vars.back() >= n) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable index out of range in " + mono.vars.to_string());
    }
    auto [it, inserted] = where.emplace(mono.vars, merged.size());
    if (inserted) {
      merged.push_back(std::move(mono));
    } else {
      merged[it->second].coeff += mono.coeff;
    }
  }
  for (auto& mono : merged) {
    if (mono.coeff == 0.0) continue;
    position_.emplace(mono.vars, monomials_.size());
    monomials_.push_back(std::move(mono));
  }
}

double MlpInstance::beta(const IndexSet& vars) const {
  int i = find(vars);
  return i < 0 ? 0.0 : monomials_[i].coeff;
}

int MlpInstance::find(const IndexSet& vars) const {
  auto it = position_.find(vars);
  return it == position_.end() ? -1 : it->second;
}

int MlpInstance::max_degree() const {
  int d = 0;
  for (const auto& mono : monomials_) {
    d = std::max(d, static_cast<int>(mono.vars.size()));
  }
  return d;
}

std::vector<int> MlpInstance::used_variables() const {
  std::vector<bool> used(n_, false);
  for (const auto& mono : monomials_) {
    for (int j : mono.vars) used[j] = true;
  }
  std::vector<int> out;
  for (int j = 0; j < n_; ++j) {
    if (used[j]) out.push_back(j);
  }
  return out;
}

double MlpInstance::evaluate(const std::vector<double>& x) const {
  double total = 0.0;
  for (const auto& mono : monomials_) {
    double term = mono.coeff;
    for (int j : mono.vars) term *= x.at(j);
    total += term;
  }
  return total;
}

double eta(const MlpInstance& mlp) {
  double total = 0.0;
  for (const auto& mono : mlp.monomials()) total -= std::min(0.0, mono.coeff);
  return total;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                               line[i] == '\r')) {
      ++i;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' &&
           line[i] != '\r') {
      ++i;
    }
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last;
}

}  // namespace

MlpInstance parse_instance(std::string_view text) {
  int n = -1;
  int m = -1;
  Domain domain = Domain::kUnitBox;
  std::vector<Monomial> monomials;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (n < 0) {
      if (tokens.size() != 3) {
        throw ParseError(line_no, "header must be '<n> <m> <domain>'");
      }
      if (!parse_number(tokens[0], n) || n < 0) {
        throw ParseError(line_no, "invalid variable count");
      }
      if (!parse_number(tokens[1], m) || m < 0) {
        throw ParseError(line_no, "invalid monomial count");
      }
      if (tokens[2] == "unitbox") {
        domain = Domain::kUnitBox;
      } else if (tokens[2] == "binary") {
        domain = Domain::kBinary;
      } else {
        throw ParseError(line_no, "domain must be 'unitbox' or 'binary'");
      }
      continue;
    }
    if (static_cast<int>(monomials.size()) == m) {
      throw ParseError(line_no, "more monomial lines than declared");
    }
    if (tokens.size() < 2) {
      throw ParseError(line_no, "monomial needs a coefficient and variables");
    }
    Monomial mono;
    if (!parse_number(tokens[0], mono.coeff) || !std::isfinite(mono.coeff)) {
      throw ParseError(line_no, "invalid coefficient '" +
                                    std::string(tokens[0]) + "'");
    }
    std::vector<int> vars;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      int j = 0;
      if (!parse_number(tokens[t], j)) {
        throw ParseError(line_no,
                         "invalid index '" + std::string(tokens[t]) + "'");
      }
      if (j < 1 || j > n) {
        throw ParseError(line_no, "index " + std::to_string(j) +
                                      " out of range [1, " +
                                      std::to_string(n) + "]");
      }
      vars.push_back(j - 1);
    }
    std::sort(vars.begin(), vars.end());
    if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
      throw ParseError(line_no, "repeated index within a monomial");
    }
    mono.vars = IndexSet(std::move(vars));
    monomials.push_back(std::move(mono));
  }
  if (n < 0) throw ParseError(0, "missing header");
  if (static_cast<int>(monomials.size()) != m) {
    throw ParseError(0, "expected " + std::to_string(m) + " monomials, got " +
                            std::to_string(monomials.size()));
  }
  return MlpInstance(n, domain, std::move(monomials));
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string write_instance(const MlpInstance& mlp) {
  std::string out = std::to_string(mlp.n()) + " " +
                    std::to_string(mlp.size()) + " " +
                    domain_name(mlp.domain()) + "\n";
  for (const auto& mono : mlp.monomials()) {
    out += format_double(mono.coeff);
    for (int j : mono.vars) out += " " + std::to_string(j + 1);
    out += '\n';
  }
  return out;
}

MlpInstance read_instance_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::string& path, const MlpInstance& mlp) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << write_instance(mlp);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

MlpInstance example_instance() {
  return MlpInstance(4, Domain::kUnitBox,
                     {{1.0, IndexSet{0, 1, 2}},
                      {-1.0, IndexSet{1, 2, 3}},
                      {-1.0, IndexSet{0, 2, 3}}});
}

}  // namespace rml
