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


// Command-line front end. Every command prints a JSON report on stdout; the
// exit code is 0 on success, 2 for parse errors, 3 when a monomial exceeds
// the degree cap, 4 when an exact stage hit its limits and 5 on infeasible
// input. Other failures exit with 1.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "rml/error.hpp"
#include "rml/instances.hpp"
#include "rml/kernel3.hpp"
#include "rml/linearize.hpp"
#include "rml/models.hpp"
#include "rml/pipeline.hpp"
#include "rml/relax.hpp"
#include "rml/solver/lp_format.hpp"

namespace {

using json = nlohmann::ordered_json;
using rml::ErrorCode;

constexpr int kExitTimeLimit = 4;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("RML_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw rml::Error(ErrorCode::kInvalidArgument,
                       std::string("RML_SEED is not a number: ") + env);
    }
  }
  return 0;
}

ErrorCode reason_code(const std::string& reason) {
  for (ErrorCode c : {ErrorCode::kDegreeCap, ErrorCode::kTimeLimit, ErrorCode::kInfeasible}) {
    if (reason == rml::error_code_name(c)) return c;
  }
  return ErrorCode::kSolver;
}

int exit_code(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse:
    case ErrorCode::kDegreeCap:
    case ErrorCode::kTimeLimit:
    case ErrorCode::kInfeasible:
      return static_cast<int>(code);
    default:
      return 1;
  }
}

json optional_json(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

json optional_json(const std::optional<int>& v) {
  return v ? json(*v) : json(nullptr);
}

json triples_json(const rml::TripleSet& T) {
  json out = json::array();
  for (const rml::Triple& t : T) out.push_back(t.to_string());
  return out;
}

json stage_json(const rml::StageReport& s) {
  json j;
  j["strategy"] = rml::strategy_name(s.strategy);
  j["status"] = s.status;
  j["reason"] = s.reason.empty() ? json(nullptr) : json(s.reason);
  j["triples"] = optional_json(s.triples);
  j["variables"] = optional_json(s.variables);
  j["lp_bound"] = optional_json(s.bound);
  j["root_gap"] = optional_json(s.root_gap);
  j["nodes"] = s.nodes;
  j["runtime_ms"] = s.runtime_ms;
  return j;
}

json report_json(const rml::RunReport& r) {
  json j;
  j["instance"] = r.instance;
  j["n"] = r.n;
  j["m"] = r.m;
  j["eta"] = r.eta;
  j["full_bound"] = optional_json(r.full_bound);
  if (!r.full_reason.empty()) j["full_reason"] = r.full_reason;
  j["stages"] = json::array();
  for (const auto& s : r.stages) j["stages"].push_back(stage_json(s));
  j["seed"] = r.seed;
  j["version"] = r.version;
  return j;
}

std::vector<int> parse_order(const std::string& text) {
  std::vector<int> order;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      order.push_back(std::stoi(item) - 1);
    } catch (const std::exception&) {
      throw rml::Error(ErrorCode::kInvalidArgument, "bad --order entry '" + item + "'");
    }
  }
  return order;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw rml::Error(ErrorCode::kIo, "cannot write " + path);
  out << text;
}

std::string stem_of(const std::string& path) {
  return std::filesystem::path(path).stem().string();
}

struct Common {
  double budget = 1.0;
  std::int64_t node_limit = -1;
  int degree_cap = rml::kDefaultDegreeCap;
  std::uint64_t seed = 0;
  std::string order;
  bool random_ties = false;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--budget", budget,
                    "Multiplier on the 30 s time limit per exact stage")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--node-limit", node_limit,
                    "Branch-and-bound node limit per exact stage (-1: none)");
    cmd->add_option("--degree-cap", degree_cap, "Largest monomial degree accepted")
        ->check(CLI::Range(2, 20));
    cmd->add_option("--seed", seed, "Seed (default: $RML_SEED or 0)");
    cmd->add_option("--order", order,
                    "Variable order for seq, 1-based, comma separated");
    cmd->add_flag("--random-ties", random_ties,
                  "Break greedy ties with the seed instead of canonical order");
  }

  rml::RunOptions options() const {
    rml::RunOptions o;
    o.budget = budget;
    o.node_limit = node_limit;
    o.degree_cap = degree_cap;
    o.seed = seed;
    if (!order.empty()) o.seq = rml::SeqPolicy::variable_order(parse_order(order));
    if (random_ties) o.greedy = rml::GreedyTieBreak::seeded(seed);
    return o;
  }

  rml::solver::SolverConfig config() const {
    rml::solver::SolverConfig c;
    c.time_limit = rml::kStageSeconds * budget;
    c.node_limit = node_limit;
    return c;
  }
};

int finish(const json& report, bool terminal) {
  std::cout << report.dump(2) << "\n";
  return terminal ? 0 : kExitTimeLimit;
}

// Triples from --triples FILE if given, otherwise from the named strategy.
rml::TripleSet resolve_triples(const rml::MlpInstance& mlp,
                               const std::string& triples_file,
                               const std::string& strategy,
                               const Common& common, bool& terminal) {
  if (!triples_file.empty()) return rml::read_triple_set_file(triples_file);
  rml::RunReport r = rml::run_strategies(
      mlp, "", {rml::parse_strategy(strategy)}, common.options());
  const rml::StageReport& s = r.stages.front();
  if (s.status == "error") {
    throw rml::Error(reason_code(s.reason), "strategy " + strategy + " failed: " + s.reason);
  }
  terminal = s.status == "ok";
  return s.T;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Recursive McCormick linearizations of multilinear programs"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(rml::kVersion));

  Common common;
  try {
    common.seed = default_seed();
  } catch (const rml::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  // gen
  auto* gen = app.add_subcommand("gen", "Generate benchmark instances");
  std::string family, out, out_dir;
  int gen_n = 20, gen_m = 50, grid = 3, length = 5, lag = 2, count = 1;
  gen->add_option("--family", family, "mult3, mult4, vision or autocorr")->required();
  gen->add_option("--n", gen_n, "Variables (mult)");
  gen->add_option("--m", gen_m, "Monomials (mult)");
  gen->add_option("--g", grid, "Grid side (vision)");
  gen->add_option("--L", length, "Sequence length (autocorr)");
  gen->add_option("--lag", lag, "Largest lag (autocorr)");
  gen->add_option("--count", count, "Instances with seeds seed, seed+1, ...")
      ->check(CLI::PositiveNumber);
  gen->add_option("--out", out, "Output file (single instance)");
  gen->add_option("--out-dir", out_dir, "Output directory, files named by id");
  gen->add_option("--seed", common.seed, "Seed (default: $RML_SEED or 0)");

  // linearize
  auto* lin = app.add_subcommand("linearize", "Build a proper triple set");
  std::string input, strategy = "greedy", triples_file;
  lin->add_option("input", input, "Instance file (.mlp)")->required()->check(CLI::ExistingFile);
  lin->add_option("--strategy", strategy, "seq, greedy, minlin, bb or full");
  lin->add_option("--out", out, "Write the triple set here");
  common.add_to(lin);

  // bound
  auto* bound = app.add_subcommand("bound", "LP bound of a linearization");
  bound->add_option("input", input, "Instance file (.mlp)")->required()->check(CLI::ExistingFile);
  bound->add_option("--triples", triples_file, "Triple set file")->check(CLI::ExistingFile);
  bound->add_option("--strategy", strategy, "Strategy when no --triples is given");
  common.add_to(bound);

  // minlin
  auto* minlin = app.add_subcommand("minlin", "Minimum-size linearization");
  minlin->add_option("input", input, "Instance file (.mlp)")->required()->check(CLI::ExistingFile);
  minlin->add_option("--out", out, "Write the triple set here");
  common.add_to(minlin);

  // bestbound
  auto* bestbound = app.add_subcommand("bestbound", "Best LP bound with at most k triples");
  int k = -1;
  bestbound->add_option("input", input, "Instance file (.mlp)")->required()->check(CLI::ExistingFile);
  bestbound->add_option("--k", k, "Triple budget (default: minimum size)");
  bestbound->add_option("--out", out, "Write the triple set here");
  common.add_to(bestbound);

  // kernel
  auto* kernel = app.add_subcommand("kernel", "Kernelize and decide a degree-3 instance");
  kernel->add_option("input", input, "Instance file (.mlp)")->required()->check(CLI::ExistingFile);
  kernel->add_option("--k", k, "Pair budget")->required()->check(CLI::NonNegativeNumber);

  // solve-binary
  auto* binary = app.add_subcommand("solve-binary", "Exact minimum of a binary instance");
  binary->add_option("input", input, "Instance file (.mlp)")->required()->check(CLI::ExistingFile);
  binary->add_option("--triples", triples_file, "Triple set file")->check(CLI::ExistingFile);
  binary->add_option("--strategy", strategy, "Strategy when no --triples is given");
  common.add_to(binary);

  // export
  auto* exp = app.add_subcommand("export", "Write the linearization LP or the QCP");
  std::string format = "lp";
  exp->add_option("input", input, "Instance file (.mlp)")->required()->check(CLI::ExistingFile);
  exp->add_option("--triples", triples_file, "Triple set file")->check(CLI::ExistingFile);
  exp->add_option("--strategy", strategy, "Strategy when no --triples is given");
  exp->add_option("--format", format, "lp or qcp")->check(CLI::IsMember({"lp", "qcp"}));
  exp->add_option("--out", out, "Output file")->required();
  common.add_to(exp);

  // bench
  auto* bench = app.add_subcommand("bench", "Run strategies over a directory of instances");
  std::string dir, strategies = "seq,greedy,minlin,bb,full";
  int jobs = 1;
  bool timings = false;
  bench->add_option("dir", dir, "Directory of .mlp files")->required()->check(CLI::ExistingDirectory);
  bench->add_option("--strategies", strategies, "Comma separated strategies");
  bench->add_option("--jobs", jobs, "Instances run concurrently")->check(CLI::PositiveNumber);
  bench->add_flag("--timings", timings, "Add a runtime column (breaks byte-identical output)");
  bench->add_option("--out", out, "CSV file (default: stdout)");
  common.add_to(bench);

  // pipeline
  auto* pipe = app.add_subcommand("pipeline", "greedy, then minlin, then bestbound");
  pipe->add_option("input", input, "Instance file (.mlp)")->required()->check(CLI::ExistingFile);
  common.add_to(pipe);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // Usage errors share the exit code of malformed input.
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      rml::GenSpec spec;
      spec.family = rml::parse_family(family);
      spec.n = spec.family == rml::Family::kVision     ? grid
               : spec.family == rml::Family::kAutocorr ? length
                                                       : gen_n;
      spec.m = spec.family == rml::Family::kAutocorr ? lag : gen_m;
      if (out.empty() == out_dir.empty())
        throw rml::Error(ErrorCode::kInvalidArgument, "give exactly one of --out and --out-dir");
      if (!out.empty() && count != 1)
        throw rml::Error(ErrorCode::kInvalidArgument, "--count needs --out-dir");
      json files = json::array();
      for (int c = 0; c < count; ++c) {
        spec.seed = common.seed + static_cast<std::uint64_t>(c);
        std::string path = out;
        if (path.empty()) {
          std::filesystem::create_directories(out_dir);
          path = (std::filesystem::path(out_dir) / (rml::instance_id(spec) + ".mlp")).string();
        }
        rml::write_instance_file(path, rml::generate(spec));
        files.push_back(path);
      }
      return finish(json{{"family", family}, {"files", files}}, true);
    }

    const rml::MlpInstance mlp =
        input.empty() ? rml::MlpInstance() : rml::read_instance_file(input);
    const std::string id = input.empty() ? "" : stem_of(input);

    if (lin->parsed()) {
      rml::RunReport r = rml::run_strategies(mlp, id, {rml::parse_strategy(strategy)},
                                             common.options());
      const rml::StageReport& s = r.stages.front();
      if (s.status == "error")
        throw rml::Error(reason_code(s.reason), "strategy " + strategy + " failed: " + s.reason);
      if (!out.empty()) rml::write_triple_set_file(out, s.T);
      json j = report_json(r);
      j["triple_set"] = triples_json(s.T);
      return finish(j, s.status == "ok");
    }

    if (bound->parsed()) {
      bool terminal = true;
      rml::TripleSet T = resolve_triples(mlp, triples_file, strategy, common, terminal);
      rml::BoundResult b = rml::lp_bound(mlp, T);
      json j{{"instance", id},
             {"triples", T.size()},
             {"variables", rml::count_variables(T, mlp)},
             {"lp_bound", b.bound},
             {"eta", b.eta},
             {"lp_vars", b.n_vars},
             {"lp_rows", b.n_rows},
             {"status", rml::solver::status_name(b.status)},
             {"runtime_ms", b.runtime_ms}};
      return finish(j, terminal);
    }

    if (minlin->parsed()) {
      rml::TripleSet warm = rml::greedy_linearize(mlp, common.options().greedy);
      rml::ExactResult r = rml::solve_minlin(mlp, common.config(), warm, common.degree_cap);
      if (!r.has_solution) throw rml::Error(ErrorCode::kTimeLimit, "no linearization found");
      if (!out.empty()) rml::write_triple_set_file(out, r.triples);
      json j{{"instance", id},
             {"status", rml::solver::status_name(r.status)},
             {"triples", r.triples.size()},
             {"variables", rml::count_variables(r.triples, mlp)},
             {"mip_bound", r.mip_bound},
             {"nodes", r.nodes},
             {"runtime_ms", r.runtime_ms},
             {"triple_set", triples_json(r.triples)}};
      return finish(j, r.status == rml::solver::Status::kOptimal);
    }

    if (bestbound->parsed()) {
      std::optional<rml::TripleSet> warm;
      bool terminal = true;
      if (k < 0) {
        rml::ExactResult m = rml::solve_minlin(mlp, common.config(),
                                               rml::greedy_linearize(mlp), common.degree_cap);
        if (!m.has_solution) throw rml::Error(ErrorCode::kTimeLimit, "no linearization found");
        terminal = m.status == rml::solver::Status::kOptimal;
        k = static_cast<int>(m.triples.size());
        warm = m.triples;
      }
      rml::BestBoundResult r = rml::solve_bestbound(mlp, k, common.config(), warm, common.degree_cap);
      if (!r.exact.has_solution)
        throw rml::Error(r.exact.status == rml::solver::Status::kTimeLimit ? ErrorCode::kTimeLimit
                                                                           : ErrorCode::kInfeasible,
                         "no proper set with at most " + std::to_string(k) + " triples found");
      if (!out.empty()) rml::write_triple_set_file(out, r.exact.triples);
      json j{{"instance", id},
             {"k", k},
             {"status", rml::solver::status_name(r.exact.status)},
             {"lp_bound", r.bound},
             {"mip_objective", r.exact.objective},
             {"mip_bound", r.exact.mip_bound},
             {"triples", r.exact.triples.size()},
             {"nodes", r.exact.nodes},
             {"runtime_ms", r.exact.runtime_ms},
             {"triple_set", triples_json(r.exact.triples)}};
      return finish(j, terminal && r.exact.status == rml::solver::Status::kOptimal);
    }

    if (kernel->parsed()) {
      rml::CoverGraph g = rml::build_cover_graph(mlp);
      rml::Kernel ker = rml::kernelize(g, k);
      rml::FptResult fpt = rml::fpt_decide(g, k);
      json sel = json::array();
      for (const auto& p : fpt.selection) sel.push_back(p.to_string());
      json forced = json::array();
      for (const auto& p : g.forced) forced.push_back(p.to_string());
      json j{{"instance", id},
             {"k", k},
             {"verdict", fpt.yes ? "yes" : "no"},
             {"kernel_sizes",
              {{"u", ker.graph.alive_u()},
               {"v", ker.graph.alive_v()},
               {"edges", ker.graph.edges()},
               {"k", ker.k},
               {"rejected", ker.no}}},
             {"selections", sel},
             {"forced", forced},
             {"trace_length", ker.trace.steps.size()},
             {"branch_nodes", fpt.branch_nodes}};
      return finish(j, true);
    }

    if (binary->parsed()) {
      bool terminal = true;
      rml::TripleSet T = resolve_triples(mlp, triples_file, strategy, common, terminal);
      rml::BinaryExactResult r = rml::solve_binary_exact(mlp, T, common.config());
      std::string x;
      for (int v : r.x) x += static_cast<char>('0' + v);
      json j{{"instance", id},
             {"status", rml::solver::status_name(r.status)},
             {"objective", r.objective},
             {"x", x},
             {"nodes", r.nodes},
             {"runtime_ms", r.runtime_ms}};
      return finish(j, terminal && r.status == rml::solver::Status::kOptimal);
    }

    if (exp->parsed()) {
      bool terminal = true;
      rml::TripleSet T = resolve_triples(mlp, triples_file, strategy, common, terminal);
      std::string text = format == "qcp"
                             ? rml::export_qcp(mlp, T)
                             : rml::solver::write_lp_format(
                                   rml::build_rml_lp(mlp, T, rml::RowMode::kGated,
                                                     common.degree_cap).model);
      write_text(out, text);
      return finish(json{{"instance", id}, {"format", format}, {"out", out},
                         {"triples", T.size()}},
                    terminal);
    }

    if (bench->parsed()) {
      std::string csv = rml::run_bench(dir, rml::parse_strategies(strategies),
                                       common.options(), jobs, timings);
      if (out.empty()) {
        std::cout << csv;
      } else {
        write_text(out, csv);
      }
      return 0;
    }

    if (pipe->parsed()) {
      rml::RunReport r = rml::run_pipeline(mlp, id, common.options());
      return finish(report_json(r), r.all_terminal());
    }
  } catch (const rml::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
