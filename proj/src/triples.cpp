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

#include "rml/triples.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <utility>

#include "rml/error.hpp"

namespace rml {

std::string Triple::to_string() const {
  return tail1.to_string() + "x" + tail2.to_string() + "->" +
         head.to_string();
}

Triple canonical_triple(const IndexSet& a, const IndexSet& b) {
  if (a.empty() || b.empty() || !a.is_disjoint(b)) {
    throw Error(ErrorCode::kInvalidArgument,
                "tails " + a.to_string() + " and " + b.to_string() +
                    " do not form a partition");
  }
  if (b < a) return Triple{b, a, set_union(a, b)};
  return Triple{a, b, set_union(a, b)};
}

namespace {

IndexSet subset_of(const IndexSet& vars, unsigned mask) {
  std::vector<int> out;
  for (std::size_t b = 0; b < vars.size(); ++b) {
    if (mask & (1u << b)) out.push_back(vars[b]);
  }
  return IndexSet(std::move(out));
}

void check_cap(const IndexSet& vars, int degree_cap) {
  if (static_cast<int>(vars.size()) > degree_cap) {
    throw Error(ErrorCode::kDegreeCap,
                "monomial " + vars.to_string() + " has degree " +
                    std::to_string(vars.size()) + " above the cap of " +
                    std::to_string(degree_cap));
  }
}

}  // namespace

std::vector<Triple> enumerate_monomial_triples(const IndexSet& vars,
                                               int degree_cap) {
  check_cap(vars, degree_cap);
  std::vector<Triple> out;
  const unsigned full = (1u << vars.size()) - 1;
  for (unsigned s = 1; s <= full; ++s) {
    if ((s & (s - 1)) == 0) continue;
    const unsigned low = s & (~s + 1);
    // Submasks containing the lowest bit enumerate each partition once.
    for (unsigned a = (s - 1) & s; a > 0; a = (a - 1) & s) {
      if (!(a & low)) continue;
      out.push_back(canonical_triple(subset_of(vars, a), subset_of(vars, s ^ a)));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

TripleUniverse::TripleUniverse(const MlpInstance& mlp, int degree_cap) {
  std::set<IndexSet> sets;
  std::set<Triple> all;
  std::vector<std::vector<Triple>> local(mlp.size());
  for (std::size_t i = 0; i < mlp.size(); ++i) {
    const IndexSet& vars = mlp.monomial(i).vars;
    check_cap(vars, degree_cap);
    const unsigned full = (1u << vars.size()) - 1;
    for (unsigned s = 1; s <= full; ++s) sets.insert(subset_of(vars, s));
    if (vars.size() >= 2) {
      local[i] = enumerate_monomial_triples(vars, degree_cap);
      all.insert(local[i].begin(), local[i].end());
    }
  }
  sets_.assign(sets.begin(), sets.end());
  for (std::size_t s = 0; s < sets_.size(); ++s) set_ids_.emplace(sets_[s], s);
  triples_.assign(all.begin(), all.end());
  by_head_.resize(sets_.size());
  for (std::size_t t = 0; t < triples_.size(); ++t) {
    triple_ids_.emplace(triples_[t], t);
    tail1_.push_back(set_id(triples_[t].tail1));
    tail2_.push_back(set_id(triples_[t].tail2));
    head_.push_back(set_id(triples_[t].head));
    by_head_[head_.back()].push_back(t);
  }
  per_monomial_.resize(mlp.size());
  for (std::size_t i = 0; i < mlp.size(); ++i) {
    for (const Triple& t : local[i]) per_monomial_[i].push_back(id(t));
    std::sort(per_monomial_[i].begin(), per_monomial_[i].end());
  }
}

int TripleUniverse::id(const Triple& t) const {
  auto it = triple_ids_.find(t);
  return it == triple_ids_.end() ? -1 : it->second;
}

int TripleUniverse::set_id(const IndexSet& s) const {
  auto it = set_ids_.find(s);
  return it == set_ids_.end() ? -1 : it->second;
}

std::vector<char> TripleUniverse::indicator(const TripleSet& T) const {
  std::vector<char> out(triples_.size(), 0);
  for (const Triple& t : T) {
    int i = id(t);
    if (i < 0) {
      throw Error(ErrorCode::kInvalidArgument,
                  "triple " + t.to_string() + " is not in the universe");
    }
    out[i] = 1;
  }
  return out;
}

TripleSet TripleUniverse::to_set(const std::vector<char>& indicator) const {
  TripleSet out;
  for (std::size_t t = 0; t < triples_.size(); ++t) {
    if (indicator.at(t)) out.insert(triples_[t]);
  }
  return out;
}

TripleSet TripleUniverse::all() const {
  return TripleSet(triples_.begin(), triples_.end());
}

namespace {

// Index sets derivable from singletons through T. Triples are sorted by head
// and every tail is smaller than its head, so one ordered pass suffices.
std::set<IndexSet> derivable_sets(const TripleSet& T) {
  std::set<IndexSet> derived;
  auto ok = [&derived](const IndexSet& s) {
    return s.size() == 1 || derived.count(s) > 0;
  };
  for (const Triple& t : T) {
    if (ok(t.tail1) && ok(t.tail2)) derived.insert(t.head);
  }
  return derived;
}

bool derivable(const std::set<IndexSet>& derived, const IndexSet& s) {
  return s.size() == 1 || derived.count(s) > 0;
}

}  // namespace

ProperCheck check_proper(const TripleSet& T, const MlpInstance& mlp) {
  ProperCheck out;
  const auto derived = derivable_sets(T);
  for (const Triple& t : T) {
    if (derivable(derived, t.tail1) && derivable(derived, t.tail2)) {
      out.witness.insert(t);
    }
  }
  for (const auto& mono : mlp.monomials()) {
    if (!derivable(derived, mono.vars)) out.missing.push_back(mono.vars);
  }
  out.proper = out.missing.empty();
  if (!out.proper) out.witness.clear();
  return out;
}

bool is_proper(const TripleSet& T, const MlpInstance& mlp) {
  return check_proper(T, mlp).proper;
}

TripleSet minimal_support(const TripleSet& T, const MlpInstance& mlp) {
  const auto check = check_proper(T, mlp);
  if (!check.proper) {
    throw Error(ErrorCode::kImproper,
                "triple set does not derive " + check.missing.front().to_string());
  }
  std::map<IndexSet, std::vector<Triple>> by_head;
  for (const Triple& t : check.witness) by_head[t.head].push_back(t);

  // Heads still to be derived, processed largest first so that every tail
  // request lands on a set that has not been handled yet.
  std::set<IndexSet, std::greater<>> pending;
  std::set<IndexSet> required;
  for (const auto& mono : mlp.monomials()) {
    if (mono.vars.size() > 1) {
      pending.insert(mono.vars);
      required.insert(mono.vars);
    }
  }
  auto score = [&](const IndexSet& tail) {
    if (tail.size() == 1) return 0;
    if (required.count(tail)) return 1 << 20;
    int uses = 0;
    for (const IndexSet& p : pending) {
      if (tail.is_subset_of(p)) ++uses;
    }
    return uses;
  };
  TripleSet out;
  while (!pending.empty()) {
    IndexSet head = *pending.begin();
    pending.erase(pending.begin());
    const Triple* best = nullptr;
    int best_score = -1;
    for (const Triple& t : by_head[head]) {
      int s = score(t.tail1) + score(t.tail2);
      if (s > best_score) {
        best = &t;
        best_score = s;
      }
    }
    out.insert(*best);
    for (const IndexSet* tail : {&best->tail1, &best->tail2}) {
      if (tail->size() > 1 && required.insert(*tail).second) {
        pending.insert(*tail);
      }
    }
  }
  return out;
}

int count_variables(const TripleSet& T, const MlpInstance& mlp) {
  std::set<IndexSet> heads;
  for (const Triple& t : T) heads.insert(t.head);
  return static_cast<int>(mlp.used_variables().size() + heads.size());
}

std::string write_triple_set(const TripleSet& T) {
  std::string out;
  for (const Triple& t : T) {
    out += t.tail1.to_csv() + "|" + t.tail2.to_csv() + "|" + t.head.to_csv() +
           "\n";
  }
  return out;
}

namespace {

IndexSet parse_group(std::string_view group, int line_no) {
  std::vector<int> vars;
  std::size_t pos = 0;
  while (pos <= group.size()) {
    std::size_t end = group.find(',', pos);
    if (end == std::string_view::npos) end = group.size();
    std::string_view token = group.substr(pos, end - pos);
    while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) {
      token.remove_prefix(1);
    }
    while (!token.empty() && (token.back() == ' ' || token.back() == '\t' ||
                              token.back() == '\r')) {
      token.remove_suffix(1);
    }
    int j = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), j);
    if (token.empty() || ec != std::errc() ||
        ptr != token.data() + token.size() || j < 1) {
      throw ParseError(line_no, "invalid index '" + std::string(token) + "'");
    }
    vars.push_back(j - 1);
    pos = end + 1;
  }
  std::sort(vars.begin(), vars.end());
  if (std::adjacent_find(vars.begin(), vars.end()) != vars.end()) {
    throw ParseError(line_no, "repeated index");
  }
  return IndexSet(std::move(vars));
}

}  // namespace

TripleSet parse_triple_set(std::string_view text) {
  TripleSet out;
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
    if (line.find_first_not_of(" \t\r") == std::string_view::npos) continue;
    auto bar1 = line.find('|');
    auto bar2 = bar1 == std::string_view::npos ? bar1 : line.find('|', bar1 + 1);
    if (bar2 == std::string_view::npos ||
        line.find('|', bar2 + 1) != std::string_view::npos) {
      throw ParseError(line_no, "expected '<tail1>|<tail2>|<head>'");
    }
    IndexSet a = parse_group(line.substr(0, bar1), line_no);
    IndexSet b = parse_group(line.substr(bar1 + 1, bar2 - bar1 - 1), line_no);
    IndexSet h = parse_group(line.substr(bar2 + 1), line_no);
    if (!a.is_disjoint(b)) throw ParseError(line_no, "tails overlap");
    Triple t = canonical_triple(a, b);
    if (t.head != h) {
      throw ParseError(line_no, "head is not the union of the tails");
    }
    out.insert(std::move(t));
  }
  return out;
}

TripleSet read_triple_set_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_triple_set(buf.str());
}

void write_triple_set_file(const std::string& path, const TripleSet& T) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kIo, "cannot write " + path);
  out << write_triple_set(T);
  if (!out) throw Error(ErrorCode::kIo, "write failed for " + path);
}

}  // namespace rml
