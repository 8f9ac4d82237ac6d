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

#include "rml/solver/mip.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <queue>
#include <tuple>

#include "rml/error.hpp"
#include "rml/solver/lp_format.hpp"
#include "simplex_engine.hpp"

namespace rml::solver {

namespace {

using internal::Clock;
using internal::SimplexEngine;
using internal::VarStatus;

struct BoundChange {
  int var;
  double lo;
  double hi;
};

struct Node {
  std::vector<BoundChange> changes;
  std::shared_ptr<const std::vector<VarStatus>> basis;
  double bound = -kInf;  // internal minimization sense
  int depth = 0;
  std::int64_t id = 0;
};

struct NodeOrder {
  // std::priority_queue pops the largest element, so "less" means "worse".
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    if (a.depth != b.depth) return a.depth < b.depth;
    return a.id < b.id;
  }
};

bool integral_objective(const MipModel& model) {
  for (const Variable& v : model.vars()) {
    if (v.obj == 0.0) continue;
    if (!v.integer || v.obj != std::round(v.obj)) return false;
  }
  return true;
}

}  // namespace

SolveResult solve_mip(const MipModel& model, const SolverConfig& config,
                      const std::vector<double>& warm) {
  const auto start = Clock::now();
  const int n = model.num_vars();
  const double sign = model.sense == ObjSense::kMaximize ? -1.0 : 1.0;
  const bool integral_obj = integral_objective(model);

  SimplexEngine engine(model, config);
  if (std::isfinite(config.time_limit)) {
    engine.set_deadline(start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(config.time_limit)));
  }

  SolveResult result;
  double incumbent = kInf;  // internal sense
  std::vector<double> best_x;
  auto accept = [&](const std::vector<double>& x) {
    const double value = sign * model.objective_value(x);
    if (value < incumbent) {
      incumbent = value;
      best_x = x;
    }
  };
  if (static_cast<int>(warm.size()) == n) {
    bool ok = model.max_violation(warm) <= 1e-6;
    for (int j = 0; j < n && ok; ++j) {
      if (model.var(j).integer &&
          std::abs(warm[j] - std::round(warm[j])) > config.int_tol) {
        ok = false;
      }
    }
    if (ok) accept(warm);
  }
  auto prune_level = [&]() {
    if (!std::isfinite(incumbent)) return kInf;
    if (integral_obj) return incumbent - 1.0 + 1e-6;
    return incumbent - config.gap_tol * std::max(1.0, std::abs(incumbent));
  };

  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;
  {
    Node root;
    root.basis = std::make_shared<const std::vector<VarStatus>>(engine.basis());
    open.push(std::move(root));
  }
  std::int64_t next_id = 1;
  std::int64_t nodes = 0;
  bool stopped = false;
  bool unbounded = false;
  std::vector<int> touched;

  while (!open.empty()) {
    if (open.top().bound >= prune_level()) {
      // Best-first: every remaining node is at least as bad.
      while (!open.empty()) open.pop();
      break;
    }
    if (config.node_limit >= 0 && nodes >= config.node_limit) {
      result.node_limit_hit = true;
      stopped = true;
      break;
    }
    if (std::isfinite(config.time_limit) &&
        std::chrono::duration<double>(Clock::now() - start).count() >
            config.time_limit) {
      stopped = true;
      break;
    }
    Node node = open.top();
    open.pop();
    ++nodes;

    for (int j : touched) {
      engine.set_structural_bounds(j, model.var(j).lower, model.var(j).upper);
    }
    touched.clear();
    for (const BoundChange& c : node.changes) {
      engine.set_structural_bounds(c.var, c.lo, c.hi);
      touched.push_back(c.var);
    }
    engine.load_basis(*node.basis);
    const double cutoff = prune_level();
    const auto outcome = engine.solve(cutoff);
    if (outcome == SimplexEngine::Outcome::kTimeLimit) {
      open.push(std::move(node));
      stopped = true;
      break;
    }
    if (outcome == SimplexEngine::Outcome::kIterationLimit ||
        outcome == SimplexEngine::Outcome::kFallback) {
      const std::string path = dump_model(model, "rml-mip-failure");
      throw Error(ErrorCode::kSolver,
                  "simplex iteration limit reached in branch and bound; model "
                  "written to " + path);
    }
    if (outcome == SimplexEngine::Outcome::kUnbounded) {
      unbounded = true;
      break;
    }
    if (outcome != SimplexEngine::Outcome::kOptimal) continue;
    const double value = engine.objective();
    if (value >= cutoff) continue;

    std::vector<double> x = engine.structural_values();
    int branch = -1;
    double most = config.int_tol;
    for (int j = 0; j < n; ++j) {
      if (!model.var(j).integer) continue;
      const double frac = x[j] - std::floor(x[j]);
      const double score = std::min(frac, 1.0 - frac);
      if (score > most) {
        most = score;
        branch = j;
      }
    }
    if (branch < 0) {
      for (int j = 0; j < n; ++j) {
        x[j] = std::clamp(model.var(j).integer ? std::round(x[j]) : x[j],
                          model.var(j).lower, model.var(j).upper);
      }
      accept(x);
      continue;
    }
    auto basis = std::make_shared<const std::vector<VarStatus>>(engine.basis());
    const double lo = engine.lower(branch);
    const double hi = engine.upper(branch);
    const double down = std::floor(x[branch]);
    for (int side = 0; side < 2; ++side) {
      Node child;
      child.changes = node.changes;
      child.changes.push_back(side == 0 ? BoundChange{branch, lo, down}
                                        : BoundChange{branch, down + 1.0, hi});
      child.basis = basis;
      child.bound = value;
      child.depth = node.depth + 1;
      child.id = next_id++;
      open.push(std::move(child));
    }
  }

  result.nodes = nodes;
  result.iterations = engine.iterations();
  result.runtime_ms =
      std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  if (unbounded) {
    result.status = Status::kUnbounded;
    return result;
  }
  double bound = std::isfinite(incumbent) ? incumbent : kInf;
  if (stopped) {
    for (; !open.empty(); open.pop()) bound = std::min(bound, open.top().bound);
  }
  result.has_solution = std::isfinite(incumbent);
  if (result.has_solution) {
    result.x = best_x;
    result.objective = sign * incumbent;
  }
  result.bound = sign * bound;
  if (stopped) {
    result.status = Status::kTimeLimit;
  } else {
    result.status = result.has_solution ? Status::kOptimal : Status::kInfeasible;
    if (result.has_solution) result.bound = result.objective;
  }
  return result;
}

}  // namespace rml::solver
