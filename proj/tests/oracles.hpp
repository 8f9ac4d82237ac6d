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


// Reference implementations used to check the library. They are written
// directly from the definitions and share no code with the code under test
// beyond the plain data types.

#ifndef RML_TESTS_ORACLES_HPP_
#define RML_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "rml/mlp.hpp"
#include "rml/relax.hpp"
#include "rml/solver/model.hpp"
#include "rml/triples.hpp"

namespace oracle {

// LP optima computed offline with scipy.optimize.linprog (HiGHS) on the
// reference instance x1x2x3 - x2x3x4 - x1x3x4.
inline constexpr double kIdentitySeqBound = -4.0 / 3.0;
// Triples {1,3}, {2}x{1,3}, {3,4}, {2}x{3,4}, {1}x{3,4}.
inline constexpr double kReorderedSeqBound = -4.0 / 3.0;
inline constexpr double kFullBound = -1.0;

using Mask = std::uint32_t;

inline Mask to_mask(const rml::IndexSet& s) {
  Mask m = 0;
  for (int j : s) m |= Mask{1} << j;
  return m;
}

inline rml::IndexSet from_mask(Mask m) {
  std::vector<int> v;
  for (int j = 0; j < 32; ++j)
    if (m >> j & 1) v.push_back(j);
  return rml::IndexSet(v);
}

inline int popcount(Mask m) { return __builtin_popcount(m); }

// Every (A, B, A | B) with A, B disjoint, non-empty and inside some monomial.
inline std::vector<rml::Triple> universe(const rml::MlpInstance& mlp) {
  std::set<std::pair<Mask, Mask>> seen;  // (smaller tail, larger tail)
  auto smaller = [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return from_mask(a) < from_mask(b);
  };
  for (const auto& mono : mlp.monomials()) {
    const Mask J = to_mask(mono.vars);
    for (Mask S = J; S; S = (S - 1) & J) {
      if (popcount(S) < 2) continue;
      for (Mask A = (S - 1) & S; A; A = (A - 1) & S) {
        Mask B = S ^ A;
        if (smaller(A, B)) seen.insert({A, B});
      }
    }
  }
  std::vector<rml::Triple> out;
  for (auto [a, b] : seen)
    out.push_back({from_mask(a), from_mask(b), from_mask(a | b)});
  std::sort(out.begin(), out.end());
  return out;
}

// Proper iff the closure of the singletons under the triples reaches every
// monomial support.
inline bool is_proper(const std::vector<rml::Triple>& T,
                      const rml::MlpInstance& mlp) {
  std::set<Mask> have;
  for (int j = 0; j < mlp.n(); ++j) have.insert(Mask{1} << j);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& t : T) {
      if (have.count(to_mask(t.tail1)) && have.count(to_mask(t.tail2)) &&
          have.insert(to_mask(t.head)).second)
        grew = true;
    }
  }
  for (const auto& mono : mlp.monomials())
    if (!have.count(to_mask(mono.vars))) return false;
  return true;
}

inline rml::TripleSet subset(const std::vector<rml::Triple>& all, std::uint64_t bits) {
  rml::TripleSet T;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (bits >> i & 1) T.insert(all[i]);
  return T;
}

// Calls fn(T) for every subset of `all` with at most `max_size` elements.
inline void for_each_subset(const std::vector<rml::Triple>& all, int max_size,
                            const std::function<void(const std::vector<rml::Triple>&)>& fn) {
  std::vector<rml::Triple> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == all.size()) {
      fn(cur);
      return;
    }
    rec(i + 1);
    if (static_cast<int>(cur.size()) < max_size) {
      cur.push_back(all[i]);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
}

inline int min_proper_size(const rml::MlpInstance& mlp) {
  const auto all = universe(mlp);
  int best = std::numeric_limits<int>::max();
  for_each_subset(all, static_cast<int>(all.size()), [&](const auto& T) {
    if (static_cast<int>(T.size()) < best && is_proper(T, mlp))
      best = static_cast<int>(T.size());
  });
  return best;
}

// Largest LP bound over proper sets of at most k triples.
inline double best_bound(const rml::MlpInstance& mlp, int k) {
  const auto all = universe(mlp);
  double best = -std::numeric_limits<double>::infinity();
  for_each_subset(all, k, [&](const auto& T) {
    if (!is_proper(T, mlp)) return;
    best = std::max(best, rml::lp_bound_value(
                              mlp, rml::TripleSet(T.begin(), T.end())));
  });
  return best;
}

inline double binary_minimum(const rml::MlpInstance& mlp) {
  double best = std::numeric_limits<double>::infinity();
  const int n = mlp.n();
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    double f = 0;
    for (const auto& mono : mlp.monomials()) {
      bool on = true;
      for (int j : mono.vars) on = on && (bits >> j & 1);
      if (on) f += mono.coeff;
    }
    best = std::min(best, f);
  }
  return best;
}

// Fewest pairs such that every degree-3 support contains a chosen pair or a
// degree-2 support. The degree-2 supports are free.
inline int min_pair_cover(const rml::MlpInstance& mlp) {
  std::vector<Mask> cubes, free_pairs;
  for (const auto& mono : mlp.monomials()) {
    if (mono.vars.size() == 3) cubes.push_back(to_mask(mono.vars));
    if (mono.vars.size() == 2) free_pairs.push_back(to_mask(mono.vars));
  }
  std::vector<Mask> open;
  for (Mask c : cubes) {
    bool done = false;
    for (Mask p : free_pairs) done = done || (p & c) == p;
    if (!done) open.push_back(c);
  }
  std::set<Mask> cand;
  for (Mask c : open)
    for (Mask p = c; p; p = (p - 1) & c)
      if (popcount(p) == 2) cand.insert(p);
  std::vector<Mask> pairs(cand.begin(), cand.end());
  const int np = static_cast<int>(pairs.size());
  int best = np;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << np); ++bits) {
    int size = __builtin_popcountll(bits);
    if (size >= best) continue;
    bool ok = true;
    for (Mask c : open) {
      bool hit = false;
      for (int i = 0; i < np && !hit; ++i)
        hit = (bits >> i & 1) && (pairs[i] & c) == pairs[i];
      ok = ok && hit;
    }
    if (ok) best = size;
  }
  return best;
}

// Minimum vertex cover of a bipartite graph via maximum matching.
inline int bipartite_vertex_cover(int left, int right,
                                  const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::vector<int>> adj(left);
  for (auto [a, b] : edges) adj[a].push_back(b);
  std::vector<int> match(right, -1);
  int size = 0;
  for (int a = 0; a < left; ++a) {
    std::vector<char> seen(right, 0);
    std::function<bool(int)> augment = [&](int x) {
      for (int y : adj[x]) {
        if (seen[y]) continue;
        seen[y] = 1;
        if (match[y] < 0 || augment(match[y])) {
          match[y] = x;
          return true;
        }
      }
      return false;
    };
    if (augment(a)) ++size;
  }
  return size;
}

// Minimum vertex cover of a general graph by enumeration.
inline int vertex_cover(int n, const std::vector<std::pair<int, int>>& edges) {
  int best = n;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    bool ok = true;
    for (auto [a, b] : edges) ok = ok && ((bits >> a & 1) || (bits >> b & 1));
    if (ok) best = std::min(best, __builtin_popcountll(bits));
  }
  return best;
}

// Optimum of min c'x s.t. rows, lower <= x <= upper by enumerating basic
// solutions; tiny dense models only. Returns +inf when infeasible.
inline double lp_by_vertices(const rml::solver::LpModel& model) {
  using rml::solver::RowSense;
  const int n = model.num_vars();
  // Every constraint as a . x (<=, >=, ==) rhs.
  struct Con {
    std::vector<double> a;
    double rhs;
  };
  std::vector<Con> tight;
  for (const auto& r : model.rows()) {
    Con c{std::vector<double>(n, 0.0), r.rhs};
    for (std::size_t k = 0; k < r.index.size(); ++k) c.a[r.index[k]] = r.value[k];
    tight.push_back(c);
  }
  for (int j = 0; j < n; ++j) {
    Con c{std::vector<double>(n, 0.0), 0.0};
    c.a[j] = 1;
    c.rhs = model.var(j).lower;
    tight.push_back(c);
    c.rhs = model.var(j).upper;
    tight.push_back(c);
  }
  auto feasible = [&](const std::vector<double>& x) {
    for (int j = 0; j < n; ++j)
      if (x[j] < model.var(j).lower - 1e-7 || x[j] > model.var(j).upper + 1e-7) return false;
    for (const auto& r : model.rows()) {
      double s = 0;
      for (std::size_t k = 0; k < r.index.size(); ++k) s += r.value[k] * x[r.index[k]];
      if (r.sense == RowSense::kLe && s > r.rhs + 1e-7) return false;
      if (r.sense == RowSense::kGe && s < r.rhs - 1e-7) return false;
      if (r.sense == RowSense::kEq && std::abs(s - r.rhs) > 1e-7) return false;
    }
    return true;
  };
  const int q = static_cast<int>(tight.size());
  double best = std::numeric_limits<double>::infinity();
  std::vector<int> pick(n);
  std::function<void(int, int)> rec = [&](int pos, int from) {
    if (pos == n) {
      std::vector<std::vector<double>> A(n, std::vector<double>(n + 1));
      for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) A[r][c] = tight[pick[r]].a[c];
        A[r][n] = tight[pick[r]].rhs;
      }
      for (int c = 0; c < n; ++c) {
        int piv = c;
        for (int r = c + 1; r < n; ++r)
          if (std::abs(A[r][c]) > std::abs(A[piv][c])) piv = r;
        if (std::abs(A[piv][c]) < 1e-10) return;
        std::swap(A[c], A[piv]);
        for (int r = 0; r < n; ++r) {
          if (r == c) continue;
          double f = A[r][c] / A[c][c];
          for (int k = c; k <= n; ++k) A[r][k] -= f * A[c][k];
        }
      }
      std::vector<double> x(n);
      for (int c = 0; c < n; ++c) x[c] = A[c][n] / A[c][c];
      if (!std::all_of(x.begin(), x.end(), [](double v) { return std::isfinite(v); })) return;
      if (!feasible(x)) return;
      double obj = 0;
      for (int j = 0; j < n; ++j) obj += model.var(j).obj * x[j];
      if (model.sense == rml::solver::ObjSense::kMaximize) obj = -obj;
      best = std::min(best, obj);
      return;
    }
    for (int i = from; i < q; ++i) {
      pick[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
  if (model.sense == rml::solver::ObjSense::kMaximize) return -best;
  return best;
}

// Random MLP with distinct supports of degree in [lo, hi] over n variables.
inline rml::MlpInstance random_mlp(int n, int m, int lo, int hi, std::uint64_t seed,
                                   rml::Domain domain = rml::Domain::kUnitBox) {
  std::mt19937_64 gen(seed);
  std::set<Mask> seen;
  std::vector<rml::Monomial> monos;
  int guard = 0;
  while (static_cast<int>(monos.size()) < m && ++guard < 10000) {
    int d = lo + static_cast<int>(gen() % (hi - lo + 1));
    Mask mask = 0;
    while (popcount(mask) < d) mask |= Mask{1} << (gen() % n);
    if (!seen.insert(mask).second) continue;
    double coeff = static_cast<double>(static_cast<int>(gen() % 21) - 10);
    if (coeff == 0) coeff = 1;
    monos.push_back({coeff, from_mask(mask)});
  }
  return rml::MlpInstance(n, domain, monos);
}

}  // namespace oracle

#endif  // RML_TESTS_ORACLES_HPP_
