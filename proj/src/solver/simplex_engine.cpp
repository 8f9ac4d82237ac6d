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

#include "simplex_engine.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "rml/error.hpp"

namespace rml::solver::internal {

namespace {

constexpr double kPivotTol = 1e-9;
constexpr double kSingularTol = 1e-10;
constexpr double kThresholdPivot = 0.1;
constexpr double kDropTol = 1e-14;
constexpr double kDualCheckTol = 1e-7;
constexpr int kDegenerateLimit = 50;
constexpr double kPerturbation = 1e-7;
constexpr double kShiftTol = 1e-5;
constexpr double kMinWeight = 1e-6;

}  // namespace

SimplexEngine::SimplexEngine(const LpModel& model, const SolverConfig& config)
    : n_(model.num_vars()), m_(model.num_rows()), config_(config) {
  for (const Row& row : model.rows()) {
    if (!row.quad.empty()) {
      throw Error(ErrorCode::kSolver, "quadratic rows cannot be solved");
    }
  }
  const int total = n_ + m_;
  lo_.resize(total);
  up_.resize(total);
  cost_.assign(total, 0.0);
  const double sign = model.sense == ObjSense::kMaximize ? -1.0 : 1.0;
  for (int j = 0; j < n_; ++j) {
    lo_[j] = model.var(j).lower;
    up_[j] = model.var(j).upper;
    cost_[j] = sign * model.var(j).obj;
  }
  std::vector<int> count(n_, 0);
  for (int i = 0; i < m_; ++i) {
    const Row& row = model.row(i);
    lo_[n_ + i] = row.sense == RowSense::kLe ? -kInf : row.rhs;
    up_[n_ + i] = row.sense == RowSense::kGe ? kInf : row.rhs;
    for (int j : row.index) ++count[j];
  }
  cstart_.assign(n_ + 1, 0);
  for (int j = 0; j < n_; ++j) cstart_[j + 1] = cstart_[j] + count[j];
  cind_.resize(cstart_[n_]);
  cval_.resize(cstart_[n_]);
  rstart_.assign(m_ + 1, 0);
  std::vector<int> fill(cstart_.begin(), cstart_.end() - 1);
  for (int i = 0; i < m_; ++i) {
    const Row& row = model.row(i);
    rstart_[i + 1] = rstart_[i] + static_cast<int>(row.index.size());
    for (std::size_t k = 0; k < row.index.size(); ++k) {
      int j = row.index[k];
      cind_[fill[j]] = i;
      cval_[fill[j]] = row.value[k];
      ++fill[j];
      rcol_.push_back(j);
      rval_.push_back(row.value[k]);
    }
  }
  iteration_limit_ = config.iteration_limit > 0
                         ? config.iteration_limit
                         : std::max<std::int64_t>(20000, 50LL * total);

  // Slack basis: B = -I.
  status_.resize(total);
  x_.assign(total, 0.0);
  dse_weight_.assign(total, 1.0);
  pos_.assign(total, -1);
  head_.resize(m_);
  for (int j = 0; j < n_; ++j) {
    status_[j] = default_status(j);
    x_[j] = value_at(j, status_[j]);
  }
  for (int i = 0; i < m_; ++i) {
    status_[n_ + i] = VarStatus::kBasic;
    head_[i] = n_ + i;
    pos_[n_ + i] = i;
  }
  compute_primal();
}

VarStatus SimplexEngine::default_status(int j) const {
  if (std::isfinite(lo_[j])) return VarStatus::kAtLower;
  if (std::isfinite(up_[j])) return VarStatus::kAtUpper;
  return VarStatus::kFree;
}

double SimplexEngine::value_at(int j, VarStatus s) const {
  switch (s) {
    case VarStatus::kAtLower: return lo_[j];
    case VarStatus::kAtUpper: return up_[j];
    case VarStatus::kFree: return 0.0;
    case VarStatus::kBasic: break;
  }
  return x_[j];
}

void SimplexEngine::set_structural_bounds(int j, double lo, double hi) {
  lo_[j] = lo;
  up_[j] = hi;
  if (status_[j] == VarStatus::kBasic) return;
  if (status_[j] == VarStatus::kAtLower && !std::isfinite(lo)) {
    status_[j] = default_status(j);
  } else if (status_[j] == VarStatus::kAtUpper && !std::isfinite(hi)) {
    status_[j] = default_status(j);
  } else if (status_[j] == VarStatus::kFree &&
             (std::isfinite(lo) || std::isfinite(hi))) {
    status_[j] = default_status(j);
  }
  x_[j] = value_at(j, status_[j]);
}

double SimplexEngine::column_dot(const std::vector<double>& v, int j) const {
  if (j >= n_) return -v[j - n_];
  double s = 0.0;
  for (int k = cstart_[j]; k < cstart_[j + 1]; ++k) s += v[cind_[k]] * cval_[k];
  return s;
}

void SimplexEngine::apply_inverse(std::vector<double>& v) const {
  for (double& e : v) e = -e;
  const int k = static_cast<int>(eta_pos_.size());
  for (int e = 0; e < k; ++e) {
    const int r = eta_pos_[e];
    if (v[r] == 0.0) continue;
    const double vr = v[r] / eta_pivot_[e];
    v[r] = vr;
    for (int t = eta_start_[e]; t < eta_start_[e + 1]; ++t) {
      v[eta_ind_[t]] -= eta_val_[t] * vr;
    }
  }
}

void SimplexEngine::apply_inverse_transpose(std::vector<double>& v) const {
  for (int e = static_cast<int>(eta_pos_.size()) - 1; e >= 0; --e) {
    const int r = eta_pos_[e];
    double s = v[r];
    for (int t = eta_start_[e]; t < eta_start_[e + 1]; ++t) {
      s -= eta_val_[t] * v[eta_ind_[t]];
    }
    v[r] = s / eta_pivot_[e];
  }
  for (double& e : v) e = -e;
}

void SimplexEngine::append_eta(int r, const std::vector<double>& alpha) {
  eta_pos_.push_back(r);
  eta_pivot_.push_back(alpha[r]);
  for (int p = 0; p < m_; ++p) {
    if (p != r && std::abs(alpha[p]) > kDropTol) {
      eta_ind_.push_back(p);
      eta_val_.push_back(alpha[p]);
    }
  }
  eta_start_.push_back(static_cast<int>(eta_ind_.size()));
}

void SimplexEngine::ftran(int j, std::vector<double>& alpha) const {
  alpha.assign(m_, 0.0);
  if (j >= n_) {
    alpha[j - n_] = -1.0;
  } else {
    for (int k = cstart_[j]; k < cstart_[j + 1]; ++k) alpha[cind_[k]] = cval_[k];
  }
  apply_inverse(alpha);
}

void SimplexEngine::btran(const std::vector<double>& cb,
                          std::vector<double>& y) const {
  y = cb;
  apply_inverse_transpose(y);
}

void SimplexEngine::reduced_costs(const std::vector<double>& y,
                                  std::vector<double>& d) const {
  d.assign(n_ + m_, 0.0);
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[j] == VarStatus::kBasic) continue;
    d[j] = cost_[j] - column_dot(y, j);
  }
}

void SimplexEngine::refactor() {
  eta_pos_.clear();
  eta_pivot_.clear();
  eta_start_.assign(1, 0);
  eta_ind_.clear();
  eta_val_.clear();

  // Start from the slack basis and pivot the basic structurals into rows
  // whose logical is nonbasic, choosing columns with the fewest entries in
  // the remaining rows first.
  std::vector<char> open(m_, 0);
  std::vector<int> structural;
  int open_rows = 0;
  for (int i = 0; i < m_; ++i) {
    if (status_[n_ + i] != VarStatus::kBasic) {
      open[i] = 1;
      ++open_rows;
    }
  }
  for (int j = 0; j < n_; ++j) {
    if (status_[j] == VarStatus::kBasic) structural.push_back(j);
  }
  if (static_cast<int>(structural.size()) != open_rows) {
    throw Error(ErrorCode::kSolver, "basis has the wrong size");
  }
  head_.resize(m_);
  for (int i = 0; i < m_; ++i) head_[i] = n_ + i;

  const int s = static_cast<int>(structural.size());
  std::vector<int> col_count(s, 0);
  std::vector<int> row_count(m_, 0);
  std::vector<int> slot_of(n_, -1);
  for (int k = 0; k < s; ++k) {
    const int j = structural[k];
    slot_of[j] = k;
    for (int t = cstart_[j]; t < cstart_[j + 1]; ++t) {
      if (open[cind_[t]]) {
        ++col_count[k];
        ++row_count[cind_[t]];
      }
    }
  }
  std::vector<char> done(s, 0);
  std::vector<int> dependent;
  std::vector<double> alpha;
  for (int step = 0; step < s; ++step) {
    int pick = -1;
    for (int k = 0; k < s; ++k) {
      if (!done[k] && (pick < 0 || col_count[k] < col_count[pick])) pick = k;
    }
    done[pick] = 1;
    const int j = structural[pick];
    for (int t = cstart_[j]; t < cstart_[j + 1]; ++t) --row_count[cind_[t]];
    ftran(j, alpha);
    double largest = 0.0;
    for (int p = 0; p < m_; ++p) {
      if (open[p]) largest = std::max(largest, std::abs(alpha[p]));
    }
    if (largest < kSingularTol) {
      dependent.push_back(j);
      continue;
    }
    int r = -1;
    for (int p = 0; p < m_; ++p) {
      if (!open[p] || std::abs(alpha[p]) < kThresholdPivot * largest) continue;
      if (r < 0 || row_count[p] < row_count[r] ||
          (row_count[p] == row_count[r] && std::abs(alpha[p]) > std::abs(alpha[r]))) {
        r = p;
      }
    }
    append_eta(r, alpha);
    head_[r] = j;
    open[r] = 0;
    for (int t = rstart_[r]; t < rstart_[r + 1]; ++t) {
      const int k = slot_of[rcol_[t]];
      if (k >= 0 && !done[k]) --col_count[k];
    }
  }
  // Dependent structurals leave for the logicals of the rows left open.
  for (int j : dependent) {
    VarStatus st = default_status(j);
    if (st != VarStatus::kFree && std::isfinite(lo_[j]) && std::isfinite(up_[j])) {
      st = std::abs(x_[j] - lo_[j]) <= std::abs(x_[j] - up_[j]) ? VarStatus::kAtLower
                                                                 : VarStatus::kAtUpper;
    }
    status_[j] = st;
    x_[j] = value_at(j, st);
  }
  for (int i = 0; i < m_; ++i) {
    if (open[i]) status_[n_ + i] = VarStatus::kBasic;
  }
  std::fill(pos_.begin(), pos_.end(), -1);
  for (int p = 0; p < m_; ++p) pos_[head_[p]] = p;
  since_refactor_ = 0;
  compute_primal();
}

void SimplexEngine::compute_primal() {
  std::vector<double> r(m_, 0.0);
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[j] == VarStatus::kBasic) continue;
    x_[j] = value_at(j, status_[j]);
    if (x_[j] == 0.0) continue;
    if (j >= n_) {
      r[j - n_] -= x_[j];
    } else {
      for (int k = cstart_[j]; k < cstart_[j + 1]; ++k) {
        r[cind_[k]] += cval_[k] * x_[j];
      }
    }
  }
  apply_inverse(r);
  for (int p = 0; p < m_; ++p) x_[head_[p]] = -r[p];
}

void SimplexEngine::pivot(int r, int q, const std::vector<double>& alpha) {
  append_eta(r, alpha);
  const int leaving = head_[r];
  pos_[leaving] = -1;
  head_[r] = q;
  pos_[q] = r;
  status_[q] = VarStatus::kBasic;
  ++since_refactor_;
  ++iterations_;
  ++call_iterations_;
}

bool SimplexEngine::out_of_time() {
  return (call_iterations_ & 31) == 0 && Clock::now() > deadline_;
}

bool SimplexEngine::dual_feasible(const std::vector<double>& d) const {
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[j] == VarStatus::kBasic || lo_[j] == up_[j]) continue;
    // The dual simplex repairs boxed variables by moving them to the other bound.
    if (std::isfinite(lo_[j]) && std::isfinite(up_[j])) continue;
    switch (status_[j]) {
      case VarStatus::kAtLower:
        if (d[j] < -kDualCheckTol) return false;
        break;
      case VarStatus::kAtUpper:
        if (d[j] > kDualCheckTol) return false;
        break;
      case VarStatus::kFree:
        if (std::abs(d[j]) > kDualCheckTol) return false;
        break;
      case VarStatus::kBasic:
        break;
    }
  }
  return true;
}

SimplexEngine::Outcome SimplexEngine::solve(double cutoff) {
  call_iterations_ = 0;
  compute_primal();
  bool primal_feasible = true;
  for (int p = 0; p < m_ && primal_feasible; ++p) {
    const int j = head_[p];
    if (x_[j] < lo_[j] - config_.feas_tol || x_[j] > up_[j] + config_.feas_tol) {
      primal_feasible = false;
    }
  }
  if (!primal_feasible) {
    std::vector<double> cb(m_), y, d;
    for (int p = 0; p < m_; ++p) cb[p] = cost_[head_[p]];
    btran(cb, y);
    reduced_costs(y, d);
    if (dual_feasible(d)) {
      Outcome out = dual(cutoff);
      if (out != Outcome::kOptimal && out != Outcome::kFallback) return out;
    }
  }
  return primal();
}

SimplexEngine::Outcome SimplexEngine::primal() {
  const double tol = config_.feas_tol;
  const double dtol = config_.opt_tol;
  int degenerate = 0;
  bool verified = false;
  std::vector<double> cb(m_), y, alpha;
  while (true) {
    if (call_iterations_ > iteration_limit_) return Outcome::kIterationLimit;
    if (out_of_time()) return Outcome::kTimeLimit;
    if (since_refactor_ >= config_.refactor_interval) refactor();

    bool phase1 = false;
    for (int p = 0; p < m_; ++p) {
      const int j = head_[p];
      if (x_[j] < lo_[j] - tol) {
        cb[p] = -1.0;
        phase1 = true;
      } else if (x_[j] > up_[j] + tol) {
        cb[p] = 1.0;
        phase1 = true;
      } else {
        cb[p] = 0.0;
      }
    }
    if (!phase1) {
      for (int p = 0; p < m_; ++p) cb[p] = cost_[head_[p]];
    }
    btran(cb, y);

    const bool bland = degenerate > kDegenerateLimit;
    int q = -1;
    double dq = 0.0;
    double best = 0.0;
    for (int j = 0; j < n_ + m_; ++j) {
      const VarStatus st = status_[j];
      if (st == VarStatus::kBasic || lo_[j] == up_[j]) continue;
      const double dj = (phase1 ? 0.0 : cost_[j]) - column_dot(y, j);
      const bool up_ok = (st == VarStatus::kAtLower || st == VarStatus::kFree) &&
                         dj < -dtol;
      const bool down_ok =
          (st == VarStatus::kAtUpper || st == VarStatus::kFree) && dj > dtol;
      if (!up_ok && !down_ok) continue;
      if (bland) {
        q = j;
        dq = dj;
        break;
      }
      if (std::abs(dj) > best) {
        best = std::abs(dj);
        q = j;
        dq = dj;
      }
    }
    if (q < 0) {
      if (!verified && since_refactor_ > 0) {
        refactor();
        verified = true;
        continue;
      }
      return phase1 ? Outcome::kInfeasible : Outcome::kOptimal;
    }
    verified = false;

    const double dir = dq < 0 ? 1.0 : -1.0;
    ftran(q, alpha);

    // Harris two-pass ratio test; in phase 1 infeasible basics stop at the
    // first bound they reach.
    auto limit_of = [&](int p, double delta, double& bound) {
      const int j = head_[p];
      if (delta > 0) {
        if (phase1 && x_[j] < lo_[j] - tol) {
          bound = lo_[j];
          return true;
        }
        if (x_[j] > up_[j] + tol || !std::isfinite(up_[j])) return false;
        bound = up_[j];
        return true;
      }
      if (phase1 && x_[j] > up_[j] + tol) {
        bound = up_[j];
        return true;
      }
      if (x_[j] < lo_[j] - tol || !std::isfinite(lo_[j])) return false;
      bound = lo_[j];
      return true;
    };
    double theta_max = kInf;
    for (int p = 0; p < m_; ++p) {
      const double delta = -dir * alpha[p];
      if (std::abs(delta) < kPivotTol) continue;
      double bound;
      if (!limit_of(p, delta, bound)) continue;
      const double relaxed =
          ((bound - x_[head_[p]]) + (delta > 0 ? tol : -tol)) / delta;
      theta_max = std::min(theta_max, bland ? (bound - x_[head_[p]]) / delta
                                            : relaxed);
    }
    const double range = up_[q] - lo_[q];
    int r = -1;
    double r_bound = 0.0;
    double r_ratio = kInf;
    if (std::isfinite(theta_max)) {
      double best_delta = 0.0;
      for (int p = 0; p < m_; ++p) {
        const double delta = -dir * alpha[p];
        if (std::abs(delta) < kPivotTol) continue;
        double bound;
        if (!limit_of(p, delta, bound)) continue;
        const double ratio = (bound - x_[head_[p]]) / delta;
        if (ratio > theta_max + (bland ? 1e-12 : 0.0)) continue;
        const bool better =
            bland ? (r < 0 || head_[p] < head_[r])
                  : std::abs(delta) > best_delta;
        if (better) {
          best_delta = std::abs(delta);
          r = p;
          r_bound = bound;
          r_ratio = ratio;
        }
      }
    }
    if (r < 0 && !std::isfinite(range)) {
      if (phase1) {
        if (!verified) {
          refactor();
          verified = true;
          continue;
        }
        return Outcome::kIterationLimit;
      }
      return Outcome::kUnbounded;
    }
    const bool flip = r < 0 || range <= std::max(0.0, r_ratio);
    const double theta = flip ? range : std::max(0.0, r_ratio);
    degenerate = theta <= 1e-12 ? degenerate + 1 : 0;

    if (theta != 0.0) {
      for (int p = 0; p < m_; ++p) x_[head_[p]] -= dir * theta * alpha[p];
      x_[q] += dir * theta;
    }
    if (flip) {
      status_[q] = status_[q] == VarStatus::kAtLower ? VarStatus::kAtUpper
                                                     : VarStatus::kAtLower;
      x_[q] = value_at(q, status_[q]);
      ++iterations_;
      ++call_iterations_;
      continue;
    }
    const int leaving = head_[r];
    const double xq = x_[q];
    pivot(r, q, alpha);
    x_[q] = xq;
    status_[leaving] = r_bound == lo_[leaving] ? VarStatus::kAtLower
                                               : VarStatus::kAtUpper;
    x_[leaving] = r_bound;
  }
}

SimplexEngine::Outcome SimplexEngine::dual(double cutoff) {
  const std::vector<double> saved = cost_;
  bool perturbed = false;
  const Outcome out = dual_loop(cutoff, true, perturbed);
  if (!perturbed) return out;
  cost_ = saved;
  if (out != Outcome::kOptimal) return out;
  // Clean up against the true costs.
  bool unused = false;
  return dual_loop(cutoff, false, unused);
}

void SimplexEngine::perturb_costs() {
  std::mt19937 gen(12345);
  std::uniform_real_distribution<double> unit(0.5, 1.0);
  for (int j = 0; j < n_ + m_; ++j) {
    const double delta = kPerturbation * (1.0 + std::abs(cost_[j])) * unit(gen);
    if (status_[j] == VarStatus::kAtLower && lo_[j] != up_[j]) {
      cost_[j] += delta;
    } else if (status_[j] == VarStatus::kAtUpper && lo_[j] != up_[j]) {
      cost_[j] -= delta;
    }
  }
}

SimplexEngine::Outcome SimplexEngine::dual_loop(double cutoff, bool allow_perturb,
                                                bool& perturbed) {
  const double tol = config_.feas_tol;
  const double dtol = config_.opt_tol;
  bool verified = false;
  // Reduced costs are updated from the pivot row and recomputed after each
  // refactor.
  bool fresh = false;
  int degenerate = 0;
  std::vector<double> cb(m_), y, d, alpha, rho(m_), tau, flip(m_);
  std::vector<double> arow(n_ + m_, 0.0);
  struct Breakpoint {
    int j;
    double ratio;
  };
  std::vector<Breakpoint> breaks;
  auto boxed = [&](int j) { return std::isfinite(lo_[j]) && std::isfinite(up_[j]); };
  while (true) {
    if (call_iterations_ > iteration_limit_) return Outcome::kIterationLimit;
    if (out_of_time()) return Outcome::kTimeLimit;
    if (since_refactor_ >= config_.refactor_interval) {
      refactor();
      fresh = false;
    }
    if (allow_perturb && !perturbed && degenerate > kDegenerateLimit) {
      perturb_costs();
      perturbed = true;
      fresh = false;
    }
    if (!fresh) {
      for (int p = 0; p < m_; ++p) cb[p] = cost_[head_[p]];
      btran(cb, y);
      reduced_costs(y, d);
      fresh = true;
    }

    // Boxed variables with the wrong reduced-cost sign move to their other
    // bound. Others absorb small errors by a cost shift or hand over to the
    // primal simplex.
    bool moved = false;
    for (int j = 0; j < n_ + m_; ++j) {
      const VarStatus st = status_[j];
      if (st == VarStatus::kBasic || lo_[j] == up_[j]) continue;
      const bool wrong = (st == VarStatus::kAtLower && d[j] < -dtol) ||
                         (st == VarStatus::kAtUpper && d[j] > dtol) ||
                         (st == VarStatus::kFree && std::abs(d[j]) > dtol);
      if (!wrong) continue;
      if (boxed(j)) {
        status_[j] = d[j] < 0 ? VarStatus::kAtUpper : VarStatus::kAtLower;
        x_[j] = value_at(j, status_[j]);
        moved = true;
      } else if (allow_perturb && std::abs(d[j]) <= kShiftTol) {
        cost_[j] -= d[j];
        d[j] = 0.0;
        perturbed = true;
      } else {
        return Outcome::kFallback;
      }
    }
    if (moved) compute_primal();

    // Perturbed costs do not give a valid bound for the cutoff test.
    if (!perturbed && std::isfinite(cutoff) && objective() > cutoff) {
      return Outcome::kCutoff;
    }

    // Dual steepest edge: largest squared infeasibility per unit weight.
    int r = -1;
    double best = 0.0;
    double target = 0.0;
    bool increase = false;
    for (int p = 0; p < m_; ++p) {
      const int j = head_[p];
      double infeas = 0.0;
      if (x_[j] < lo_[j] - tol) {
        infeas = lo_[j] - x_[j];
      } else if (x_[j] > up_[j] + tol) {
        infeas = x_[j] - up_[j];
      } else {
        continue;
      }
      const double score = infeas * infeas / dse_weight_[j];
      if (score > best) {
        best = score;
        r = p;
        increase = x_[j] < lo_[j];
        target = increase ? lo_[j] : up_[j];
      }
    }
    if (r < 0) {
      if (!verified && since_refactor_ > 0) {
        refactor();
        fresh = false;
        verified = true;
        continue;
      }
      return Outcome::kOptimal;
    }

    std::fill(rho.begin(), rho.end(), 0.0);
    rho[r] = 1.0;
    apply_inverse_transpose(rho);
    auto eligible = [&](int j, double a) {
      if (std::abs(a) < kPivotTol) return false;
      const VarStatus st = status_[j];
      if (st == VarStatus::kBasic || lo_[j] == up_[j]) return false;
      if (st == VarStatus::kFree) return true;
      const bool at_lower = st == VarStatus::kAtLower;
      // x_r moves by -a * dz; dz >= 0 at lower, <= 0 at upper.
      return increase ? (at_lower ? a < 0 : a > 0) : (at_lower ? a > 0 : a < 0);
    };
    auto slack = [&](int j) {
      const VarStatus st = status_[j];
      if (st == VarStatus::kAtLower) return std::max(0.0, d[j]);
      if (st == VarStatus::kAtUpper) return std::max(0.0, -d[j]);
      return 0.0;
    };
    breaks.clear();
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] == VarStatus::kBasic) continue;
      arow[j] = column_dot(rho, j);
      if (eligible(j, arow[j])) breaks.push_back({j, slack(j) / std::abs(arow[j])});
    }
    std::sort(breaks.begin(), breaks.end(), [](const Breakpoint& a, const Breakpoint& b) {
      return a.ratio < b.ratio || (a.ratio == b.ratio && a.j < b.j);
    });

    // Long step: pass breakpoints of boxed variables, flipping them, while
    // the leaving row stays infeasible.
    double slope = increase ? target - x_[head_[r]] : x_[head_[r]] - target;
    std::size_t k = 0;
    while (k < breaks.size()) {
      const int j = breaks[k].j;
      if (!boxed(j)) break;
      const double next = slope - std::abs(arow[j]) * (up_[j] - lo_[j]);
      if (next <= tol) break;
      slope = next;
      ++k;
    }
    if (k == breaks.size()) {
      if (!verified && since_refactor_ > 0) {
        refactor();
        fresh = false;
        verified = true;
        continue;
      }
      return Outcome::kInfeasible;
    }
    // Harris pass among the remaining breakpoints.
    double bound = kInf;
    for (std::size_t t = k; t < breaks.size(); ++t) {
      const int j = breaks[t].j;
      bound = std::min(bound, (slack(j) + dtol) / std::abs(arow[j]));
    }
    int q = -1;
    double q_abs = 0.0;
    for (std::size_t t = k; t < breaks.size() && breaks[t].ratio <= bound; ++t) {
      const int j = breaks[t].j;
      if (std::abs(arow[j]) > q_abs) {
        q_abs = std::abs(arow[j]);
        q = j;
      }
    }
    verified = false;
    ftran(q, alpha);
    if (std::abs(alpha[r]) < kPivotTol ||
        std::abs(alpha[r] - arow[q]) > 1e-6 * (1.0 + std::abs(arow[q]))) {
      if (since_refactor_ == 0) return Outcome::kFallback;
      refactor();
      fresh = false;
      continue;
    }

    if (k > 0) {
      std::fill(flip.begin(), flip.end(), 0.0);
      for (std::size_t t = 0; t < k; ++t) {
        const int j = breaks[t].j;
        const VarStatus to = status_[j] == VarStatus::kAtLower ? VarStatus::kAtUpper
                                                               : VarStatus::kAtLower;
        const double dx = value_at(j, to) - x_[j];
        status_[j] = to;
        x_[j] = value_at(j, to);
        if (j >= n_) {
          flip[j - n_] -= dx;
        } else {
          for (int e = cstart_[j]; e < cstart_[j + 1]; ++e) flip[cind_[e]] += cval_[e] * dx;
        }
      }
      apply_inverse(flip);
      for (int p = 0; p < m_; ++p) x_[head_[p]] -= flip[p];
    }

    const int leaving = head_[r];
    double rho_norm = 0.0;
    for (double v : rho) rho_norm += v * v;
    tau = rho;
    apply_inverse(tau);
    for (int p = 0; p < m_; ++p) {
      if (p == r || alpha[p] == 0.0) continue;
      const double ratio = alpha[p] / alpha[r];
      double& w = dse_weight_[head_[p]];
      w = std::max(w - 2.0 * ratio * tau[p] + ratio * ratio * rho_norm, kMinWeight);
    }
    dse_weight_[q] = std::max(rho_norm / (alpha[r] * alpha[r]), kMinWeight);

    const double step = d[q] / arow[q];
    degenerate = std::abs(step) < 1e-12 ? degenerate + 1 : 0;
    for (int j = 0; j < n_ + m_; ++j) {
      if (status_[j] != VarStatus::kBasic) d[j] -= step * arow[j];
    }
    d[q] = 0.0;
    d[leaving] = -step;
    const double dz = (target - x_[leaving]) / (-alpha[r]);
    for (int p = 0; p < m_; ++p) x_[head_[p]] -= alpha[p] * dz;
    const double xq = x_[q] + dz;
    pivot(r, q, alpha);
    x_[q] = xq;
    status_[leaving] = increase ? VarStatus::kAtLower : VarStatus::kAtUpper;
    x_[leaving] = target;
  }
}

void SimplexEngine::load_basis(const std::vector<VarStatus>& status) {
  if (status == status_) return;
  int basic = 0;
  for (VarStatus s : status) basic += s == VarStatus::kBasic;
  if (basic != m_ || static_cast<int>(status.size()) != n_ + m_) {
    throw Error(ErrorCode::kSolver, "invalid basis");
  }
  status_ = status;
  for (int j = 0; j < n_ + m_; ++j) {
    if (status_[j] == VarStatus::kBasic) continue;
    if ((status_[j] == VarStatus::kAtLower && !std::isfinite(lo_[j])) ||
        (status_[j] == VarStatus::kAtUpper && !std::isfinite(up_[j]))) {
      status_[j] = default_status(j);
    }
    x_[j] = value_at(j, status_[j]);
  }
  refactor();
}

double SimplexEngine::objective() const {
  double total = 0.0;
  for (int j = 0; j < n_; ++j) total += cost_[j] * x_[j];
  return total;
}

std::vector<double> SimplexEngine::structural_values() const {
  return std::vector<double>(x_.begin(), x_.begin() + n_);
}

std::vector<double> SimplexEngine::row_duals() const {
  std::vector<double> cb(m_), y;
  for (int p = 0; p < m_; ++p) cb[p] = cost_[head_[p]];
  btran(cb, y);
  return y;
}

std::vector<double> SimplexEngine::structural_reduced_costs() const {
  const auto y = row_duals();
  std::vector<double> d(n_);
  for (int j = 0; j < n_; ++j) d[j] = cost_[j] - column_dot(y, j);
  return d;
}

}  // namespace rml::solver::internal
