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


#include "rml/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <sstream>
#include <thread>

#include "rml/error.hpp"
#include "rml/models.hpp"
#include "rml/relax.hpp"

namespace rml {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since)
      .count();
}

StageReport error_stage(Strategy s, const std::string& reason) {
  StageReport r;
  r.strategy = s;
  r.status = "error";
  r.reason = reason;
  return r;
}

// Lazily computed stages shared between strategies of one instance.
class StageRunner {
 public:
  StageRunner(const MlpInstance& mlp, const RunOptions& options)
      : mlp_(mlp), options_(options) {
    config_.time_limit = kStageSeconds * options.budget;
    config_.node_limit = options.node_limit;
  }

  const StageReport& get(Strategy s) {
    auto& slot = cache_[static_cast<int>(s)];
    if (!slot) slot = run(s);
    return *slot;
  }

  std::optional<double> full_bound;
  std::string full_reason;

  void compute_full_bound() {
    try {
      full_bound = lp_bound(mlp_, full_linearize(mlp_, options_.degree_cap))
                       .bound;
    } catch (const Error& e) {
      full_reason = error_code_name(e.code());
    }
  }

 private:
  StageReport run(Strategy s) {
    const auto start = Clock::now();
    StageReport r;
    try {
      r = compute(s);
    } catch (const Error& e) {
      r = error_stage(s, error_code_name(e.code()));
    }
    r.strategy = s;
    r.runtime_ms = elapsed_ms(start);
    return r;
  }

  void fill_bound(StageReport& r) {
    r.triples = static_cast<int>(r.T.size());
    r.variables = count_variables(r.T, mlp_);
    r.bound = lp_bound(mlp_, r.T).bound;
    if (full_bound) {
      r.root_gap = root_node_gap(*full_bound, *r.bound);
    } else {
      r.reason = full_reason;
    }
  }

  StageReport from_exact(const ExactResult& ex) {
    StageReport r;
    r.nodes = ex.nodes;
    if (!ex.has_solution) {
      r.status = "error";
      r.reason = ex.status == solver::Status::kTimeLimit ? "time_limit"
                                                         : "infeasible";
      return r;
    }
    r.status = ex.status == solver::Status::kOptimal ? "ok" : "time_limit";
    r.T = ex.triples;
    fill_bound(r);
    return r;
  }

  StageReport compute(Strategy s) {
    StageReport r;
    switch (s) {
      case Strategy::kSeq:
        r.T = seq_linearize(mlp_, options_.seq);
        fill_bound(r);
        return r;
      case Strategy::kGreedy:
        r.T = greedy_linearize(mlp_, options_.greedy);
        fill_bound(r);
        return r;
      case Strategy::kFull:
        r.T = full_linearize(mlp_, options_.degree_cap);
        fill_bound(r);
        return r;
      case Strategy::kMinlin: {
        const StageReport& warm = get(Strategy::kGreedy);
        std::optional<TripleSet> seed;
        if (warm.status != "error") seed = warm.T;
        return from_exact(
            solve_minlin(mlp_, config_, seed, options_.degree_cap));
      }
      case Strategy::kBestBound: {
        const StageReport& warm = get(Strategy::kMinlin);
        if (warm.status == "error") return error_stage(s, warm.reason);
        BestBoundResult bb =
            solve_bestbound(mlp_, static_cast<int>(warm.T.size()), config_,
                            warm.T, options_.degree_cap);
        return from_exact(bb.exact);
      }
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown strategy");
  }

  const MlpInstance& mlp_;
  const RunOptions& options_;
  solver::SolverConfig config_;
  std::optional<StageReport> cache_[5];
};

std::string cell(const std::optional<double>& v) {
  return v ? format_double(*v) : std::string();
}

std::string cell(const std::optional<int>& v) {
  return v ? std::to_string(*v) : std::string();
}

}  // namespace

Strategy parse_strategy(const std::string& name) {
  if (name == "seq") return Strategy::kSeq;
  if (name == "greedy") return Strategy::kGreedy;
  if (name == "minlin") return Strategy::kMinlin;
  if (name == "bb" || name == "bestbound") return Strategy::kBestBound;
  if (name == "full") return Strategy::kFull;
  throw Error(ErrorCode::kInvalidArgument, "unknown strategy '" + name + "'");
}

const char* strategy_name(Strategy strategy) {
  switch (strategy) {
    case Strategy::kSeq: return "seq";
    case Strategy::kGreedy: return "greedy";
    case Strategy::kMinlin: return "minlin";
    case Strategy::kBestBound: return "bb";
    case Strategy::kFull: return "full";
  }
  return "?";
}

std::vector<Strategy> parse_strategies(const std::string& list) {
  std::vector<Strategy> out;
  std::stringstream in(list);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(parse_strategy(item));
  if (out.empty())
    throw Error(ErrorCode::kInvalidArgument, "no strategies given");
  return out;
}

bool RunReport::all_terminal() const {
  for (const StageReport& s : stages)
    if (s.status != "ok") return false;
  return true;
}

RunReport run_strategies(const MlpInstance& mlp, const std::string& instance,
                         const std::vector<Strategy>& strategies,
                         const RunOptions& options) {
  RunReport report;
  report.instance = instance;
  report.n = mlp.n();
  report.m = static_cast<int>(mlp.size());
  report.eta = eta(mlp);
  report.seed = options.seed;
  StageRunner runner(mlp, options);
  runner.compute_full_bound();
  report.full_bound = runner.full_bound;
  report.full_reason = runner.full_reason;
  for (Strategy s : strategies) report.stages.push_back(runner.get(s));
  return report;
}

RunReport run_pipeline(const MlpInstance& mlp, const std::string& instance,
                       const RunOptions& options) {
  return run_strategies(
      mlp, instance,
      {Strategy::kGreedy, Strategy::kMinlin, Strategy::kBestBound}, options);
}

std::string bench_header(bool timings) {
  std::string h =
      "schema,instance,strategy,status,reason,n,m,eta,triples,variables,"
      "bound,full_bound,root_gap,nodes";
  if (timings) h += ",runtime_ms";
  return h + "\n";
}

std::string bench_rows(const RunReport& report, bool timings) {
  std::string out;
  for (const StageReport& s : report.stages) {
    out += std::to_string(kBenchSchemaVersion) + "," + report.instance + "," +
           strategy_name(s.strategy) + "," + s.status + "," + s.reason + ",";
    if (report.m > 0 || report.n > 0) {
      out += std::to_string(report.n) + "," + std::to_string(report.m) + "," +
             format_double(report.eta);
    } else {
      out += ",,";
    }
    out += "," + cell(s.triples) + "," + cell(s.variables) + "," +
           cell(s.bound) + "," + cell(report.full_bound) + "," +
           cell(s.root_gap) + "," + std::to_string(s.nodes);
    if (timings) out += "," + format_double(s.runtime_ms);
    out += "\n";
  }
  return out;
}

std::string run_bench(const std::string& dir,
                      const std::vector<Strategy>& strategies,
                      const RunOptions& options, int jobs, bool timings) {
  namespace fs = std::filesystem;
  std::error_code ec;
  if (!fs::is_directory(dir, ec))
    throw Error(ErrorCode::kIo, "not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".mlp")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());

  std::vector<std::string> rows(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      const std::string id = files[i].stem().string();
      RunReport report;
      try {
        report = run_strategies(read_instance_file(files[i].string()), id,
                                strategies, options);
      } catch (const Error& e) {
        report.instance = id;
        for (Strategy s : strategies)
          report.stages.push_back(error_stage(s, error_code_name(e.code())));
      }
      rows[i] = bench_rows(report, timings);
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, files.size()));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  std::string out = bench_header(timings);
  for (const std::string& r : rows) out += r;
  return out;
}

}  // namespace rml
