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


#ifndef RML_PIPELINE_HPP_
#define RML_PIPELINE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rml/linearize.hpp"
#include "rml/mlp.hpp"
#include "rml/triples.hpp"

namespace rml {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kBenchSchemaVersion = 1;
// Per exact stage, before the budget multiplier.
inline constexpr double kStageSeconds = 30.0;

enum class Strategy { kSeq, kGreedy, kMinlin, kBestBound, kFull };

Strategy parse_strategy(const std::string& name);
const char* strategy_name(Strategy strategy);
// Comma separated list, e.g. "seq,greedy,minlin,bb,full".
std::vector<Strategy> parse_strategies(const std::string& list);

struct RunOptions {
  double budget = 1.0;
  std::int64_t node_limit = -1;
  int degree_cap = kDefaultDegreeCap;
  SeqPolicy seq;
  GreedyTieBreak greedy;
  std::uint64_t seed = 0;
};

// A missing value comes with a non-empty `reason` (an error code name).
struct StageReport {
  Strategy strategy = Strategy::kSeq;
  // "ok" for heuristics and optimal exact stages, "time_limit" when an exact
  // stage stopped early with an incumbent, "error" otherwise.
  std::string status = "ok";
  std::string reason;
  std::optional<int> triples;
  std::optional<int> variables;
  std::optional<double> bound;
  std::optional<double> root_gap;
  std::int64_t nodes = 0;
  double runtime_ms = 0.0;
  TripleSet T;
};

struct RunReport {
  std::string instance;
  int n = 0;
  int m = 0;
  double eta = 0.0;
  std::optional<double> full_bound;
  std::string full_reason;
  std::vector<StageReport> stages;
  std::uint64_t seed = 0;
  std::string version = kVersion;

  // True when every stage ended with "ok".
  bool all_terminal() const;
};

// Runs the strategies in the given order. minlin is warm-started from greedy,
// and bb uses k = |minlin| warm-started from minlin; prerequisites are
// computed once and shared.
RunReport run_strategies(const MlpInstance& mlp, const std::string& instance,
                         const std::vector<Strategy>& strategies,
                         const RunOptions& options = {});

// greedy -> minlin -> bb.
RunReport run_pipeline(const MlpInstance& mlp, const std::string& instance,
                       const RunOptions& options = {});

std::string bench_header(bool timings);
std::string bench_rows(const RunReport& report, bool timings);

// One row per (instance, strategy) for every *.mlp file in `dir`, sorted by
// file name. Unreadable instances produce error rows and the run continues.
std::string run_bench(const std::string& dir,
                      const std::vector<Strategy>& strategies,
                      const RunOptions& options = {}, int jobs = 1,
                      bool timings = false);

}  // namespace rml

#endif  // RML_PIPELINE_HPP_
