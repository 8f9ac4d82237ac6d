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


#include <optional>
#include <string>
#include <vector>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rml/error.hpp"
#include "rml/instances.hpp"
#include "rml/kernel3.hpp"
#include "rml/linearize.hpp"
#include "rml/models.hpp"
#include "rml/pipeline.hpp"
#include "rml/relax.hpp"

namespace py = pybind11;

namespace {

rml::solver::SolverConfig make_config(double time_limit, std::int64_t node_limit) {
  rml::solver::SolverConfig c;
  if (time_limit > 0) c.time_limit = time_limit;
  c.node_limit = node_limit;
  return c;
}

py::dict exact_dict(const rml::ExactResult& r) {
  py::dict d;
  d["triples"] = r.triples;
  d["status"] = rml::solver::status_name(r.status);
  d["has_solution"] = r.has_solution;
  d["objective"] = r.objective;
  d["mip_bound"] = r.mip_bound;
  d["nodes"] = r.nodes;
  d["runtime_ms"] = r.runtime_ms;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Recursive McCormick linearizations of multilinear programs";
  m.attr("__version__") = rml::kVersion;

  static py::exception<rml::Error> error(m, "RmlError", PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const rml::Error& e) {
      py::set_error(error, (std::string(rml::error_code_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<rml::IndexSet>(m, "IndexSet")
      .def(py::init([](std::vector<int> v) { return rml::IndexSet::from_unsorted(std::move(v)); }))
      .def("__len__", &rml::IndexSet::size)
      .def("__iter__", [](const rml::IndexSet& s) { return py::make_iterator(s.begin(), s.end()); },
           py::keep_alive<0, 1>())
      .def("to_list", [](const rml::IndexSet& s) { return std::vector<int>(s.begin(), s.end()); })
      .def("__str__", &rml::IndexSet::to_string)
      .def("__repr__", [](const rml::IndexSet& s) { return "IndexSet(" + s.to_string() + ")"; })
      .def("__hash__", [](const rml::IndexSet& s) { return py::hash(py::str(s.to_string())); })
      .def(py::self == py::self)
      .def(py::self < py::self);
  py::implicitly_convertible<py::list, rml::IndexSet>();
  py::implicitly_convertible<py::tuple, rml::IndexSet>();

  py::class_<rml::Triple>(m, "Triple")
      .def(py::init(&rml::canonical_triple), py::arg("a"), py::arg("b"))
      .def_readonly("tail1", &rml::Triple::tail1)
      .def_readonly("tail2", &rml::Triple::tail2)
      .def_readonly("head", &rml::Triple::head)
      .def("__str__", &rml::Triple::to_string)
      .def("__repr__", [](const rml::Triple& t) { return "Triple(" + t.to_string() + ")"; })
      .def("__hash__", [](const rml::Triple& t) { return py::hash(py::str(t.to_string())); })
      .def(py::self == py::self)
      .def(py::self < py::self);

  py::enum_<rml::Domain>(m, "Domain")
      .value("UNIT_BOX", rml::Domain::kUnitBox)
      .value("BINARY", rml::Domain::kBinary);

  py::class_<rml::MlpInstance>(m, "MlpInstance")
      .def(py::init([](int n, rml::Domain domain,
                       const std::vector<std::pair<double, rml::IndexSet>>& terms) {
             std::vector<rml::Monomial> monomials;
             for (const auto& [c, s] : terms) monomials.push_back({c, s});
             return rml::MlpInstance(n, domain, std::move(monomials));
           }),
           py::arg("n"), py::arg("domain"), py::arg("monomials"))
      .def_property_readonly("n", &rml::MlpInstance::n)
      .def_property_readonly("domain", &rml::MlpInstance::domain)
      .def_property_readonly("monomials",
                             [](const rml::MlpInstance& mlp) {
                               std::vector<std::pair<double, rml::IndexSet>> out;
                               for (const auto& mono : mlp.monomials())
                                 out.emplace_back(mono.coeff, mono.vars);
                               return out;
                             })
      .def("__len__", &rml::MlpInstance::size)
      .def("evaluate", &rml::MlpInstance::evaluate)
      .def("eta", [](const rml::MlpInstance& mlp) { return rml::eta(mlp); })
      .def("to_text", [](const rml::MlpInstance& mlp) { return rml::write_instance(mlp); })
      .def(py::self == py::self);

  m.def("parse_instance", [](const std::string& text) { return rml::parse_instance(text); });
  m.def("read_instance", &rml::read_instance_file);
  m.def("example_instance", &rml::example_instance);

  m.def("gen_mult", &rml::gen_mult, py::arg("n"), py::arg("m"), py::arg("degree"), py::arg("seed"));
  m.def("gen_vision", &rml::gen_vision, py::arg("g"), py::arg("seed"),
        py::arg("affine_seed") = std::nullopt);
  m.def("gen_autocorr", &rml::gen_autocorr, py::arg("length"), py::arg("max_lag"));

  m.def("is_proper", &rml::is_proper);
  m.def("count_variables", &rml::count_variables);
  m.def("universe_size", [](const rml::MlpInstance& mlp, int cap) {
    return rml::TripleUniverse(mlp, cap).size();
  }, py::arg("mlp"), py::arg("degree_cap") = rml::kDefaultDegreeCap);

  m.def("seq_linearize",
        [](const rml::MlpInstance& mlp, const std::vector<int>& order) {
          return rml::seq_linearize(mlp, rml::SeqPolicy::variable_order(order));
        },
        py::arg("mlp"), py::arg("order") = std::vector<int>{},
        "Sequential linearization; `order` is a 0-based permutation");
  m.def("greedy_linearize",
        [](const rml::MlpInstance& mlp, std::optional<std::uint64_t> seed) {
          return rml::greedy_linearize(
              mlp, seed ? rml::GreedyTieBreak::seeded(*seed) : rml::GreedyTieBreak::canonical());
        },
        py::arg("mlp"), py::arg("seed") = std::nullopt);
  m.def("full_linearize", &rml::full_linearize, py::arg("mlp"),
        py::arg("degree_cap") = rml::kDefaultDegreeCap);

  m.def("lp_bound", &rml::lp_bound_value, py::arg("mlp"), py::arg("triples"));

  m.def("solve_minlin",
        [](const rml::MlpInstance& mlp, double time_limit, std::int64_t node_limit,
           std::optional<rml::TripleSet> warm) {
          return exact_dict(rml::solve_minlin(mlp, make_config(time_limit, node_limit), warm));
        },
        py::arg("mlp"), py::arg("time_limit") = 0.0, py::arg("node_limit") = -1,
        py::arg("warm") = std::nullopt);
  m.def("solve_bestbound",
        [](const rml::MlpInstance& mlp, int k, double time_limit, std::int64_t node_limit,
           std::optional<rml::TripleSet> warm) {
          rml::BestBoundResult r =
              rml::solve_bestbound(mlp, k, make_config(time_limit, node_limit), warm);
          py::dict d = exact_dict(r.exact);
          d["bound"] = r.bound;
          return d;
        },
        py::arg("mlp"), py::arg("k"), py::arg("time_limit") = 0.0, py::arg("node_limit") = -1,
        py::arg("warm") = std::nullopt);
  m.def("solve_binary",
        [](const rml::MlpInstance& mlp, const rml::TripleSet& T) {
          rml::BinaryExactResult r = rml::solve_binary_exact(mlp, T);
          py::dict d;
          d["status"] = rml::solver::status_name(r.status);
          d["objective"] = r.objective;
          d["x"] = r.x;
          return d;
        },
        py::arg("mlp"), py::arg("triples"));

  m.def("min_cover",
        [](const rml::MlpInstance& mlp) {
          rml::CoverGraph g = rml::build_cover_graph(mlp);
          std::vector<rml::IndexSet> out;
          for (int id : rml::min_cover_bruteforce(g)) out.push_back(g.u[id]);
          return out;
        },
        "Minimum pair selection of a degree-3 instance, by enumeration");
  m.def("fpt_decide",
        [](const rml::MlpInstance& mlp, int k) -> std::optional<std::vector<rml::IndexSet>> {
          rml::FptResult r = rml::fpt_decide(rml::build_cover_graph(mlp), k);
          if (!r.yes) return std::nullopt;
          return r.selection;
        },
        py::arg("mlp"), py::arg("k"),
        "Pair selection of size <= k covering every degree-3 monomial, or None");
  m.def("selection_to_triples", &rml::selection_to_triples);
  m.def("gen_vertex_cover_instance", &rml::gen_vertex_cover_instance);
  m.def("gen_greedy_adversarial", &rml::gen_greedy_adversarial, py::arg("k"));

  m.def("run_pipeline",
        [](const rml::MlpInstance& mlp, double budget, std::int64_t node_limit) {
          rml::RunOptions o;
          o.budget = budget;
          o.node_limit = node_limit;
          rml::RunReport r = rml::run_pipeline(mlp, "", o);
          py::list stages;
          for (const auto& s : r.stages) {
            py::dict d;
            d["strategy"] = rml::strategy_name(s.strategy);
            d["status"] = s.status;
            d["triples"] = s.triples;
            d["bound"] = s.bound;
            stages.append(d);
          }
          return stages;
        },
        py::arg("mlp"), py::arg("budget") = 1.0, py::arg("node_limit") = -1);
}
