// Copyright 2026 The Authors.
//
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

// Python surface. Elements cross the boundary as label strings and sets as
// sorted label lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <optional>
#include <sstream>
#include <tuple>

#include "exmat/base_exchange.h"
#include "exmat/brute_force.h"
#include "exmat/cli.h"
#include "exmat/counterexample.h"
#include "exmat/errors.h"
#include "exmat/io.h"
#include "exmat/models.h"
#include "exmat/subset_bijection.h"

namespace py = pybind11;
using namespace exmat;

namespace {

using Labels = std::vector<std::string>;

struct PyMatroid {
  MatroidView view;
  // Present for matroids built from a description, so they can be saved.
  std::optional<MatroidDescription> desc;

  ElementSet Set(const Labels& l) const { return view.labels().Set(l); }
  Labels Out(const ElementSet& s) const { return view.labels().Labels(s); }
};

PyMatroid FromDescription(MatroidDescription d) {
  MatroidView v = BuildMatroid(d);
  return {std::move(v), std::move(d)};
}

Basis Certified(const PyMatroid& m, const Labels& l, const char* name) {
  return Basis::Certify(m.view, m.Set(l), name);
}

py::dict ReportDict(const ForcedPrefixReport& r) {
  py::dict d;
  d["n"] = r.vertex_count;
  d["k"] = r.k;
  d["candidate_count"] = r.candidate_count;
  d["checks"] = r.checks;
  d["forced_s0"] = r.forced_s0;
  d["forced_s1"] = r.forced_s1;
  d["expected_s0"] = r.expected_s0;
  d["expected_s1"] = r.expected_s1;
  d["cut_sets"] = r.cut_sets;
  d["vacuous"] = r.vacuous;
  d["passed"] = r.passed;
  return d;
}

}  // namespace

PYBIND11_MODULE(_exmat, mod) {
  mod.doc() = "Exchange properties of matroid bases";

  auto base = py::register_exception<Error>(mod, "Error", PyExc_RuntimeError);
  py::register_exception<DomainError>(mod, "DomainError", base.ptr());
  py::register_exception<PreconditionError>(mod, "PreconditionError", base.ptr());
  py::register_exception<InvariantViolation>(mod, "InvariantViolation", base.ptr());
  py::register_exception<ParseError>(mod, "ParseError", base.ptr());

  py::class_<PyMatroid>(mod, "Matroid")
      .def_static("uniform",
                  [](std::size_t rank, Labels ground) {
                    return FromDescription(UniformDescription{rank, std::move(ground)});
                  },
                  py::arg("rank"), py::arg("ground"))
      .def_static(
          "graphic",
          [](std::size_t vertices,
             const std::vector<std::tuple<std::size_t, std::size_t, std::string>>& edges) {
            MultiGraph g{vertices, {}};
            for (const auto& [u, v, label] : edges) g.edges.push_back({label, u, v});
            return FromDescription(std::move(g));
          },
          py::arg("vertices"), py::arg("edges"))
      .def_static(
          "gf2",
          [](const std::map<std::string, std::vector<std::uint8_t>>& columns) {
            Gf2Matrix m;
            m.row_count = columns.empty() ? 0 : columns.begin()->second.size();
            m.columns = columns;
            return FromDescription(std::move(m));
          },
          py::arg("columns"))
      .def_static("complete_graph",
                  [](std::size_t n) { return FromDescription(CompleteGraph(n)); })
      .def_static("from_json",
                  [](const std::string& text) { return FromDescription(io::ParseMatroid(text)); })
      .def_static("random",
                  [](const std::string& kind, std::size_t size, std::uint64_t seed) {
                    return FromDescription(RandomInstance(ParseInstanceKind(kind), size, seed));
                  },
                  py::arg("kind"), py::arg("size"), py::arg("seed"))
      .def("to_json",
           [](const PyMatroid& m) {
             if (!m.desc) throw DomainError("minors have no file representation");
             return io::SerializeMatroid(*m.desc);
           })
      .def_property_readonly("ground", [](const PyMatroid& m) { return m.Out(m.view.ground()); })
      .def("rank", [](const PyMatroid& m) { return m.view.Rank(); })
      .def("is_independent",
           [](const PyMatroid& m, const Labels& s) { return m.view.IsIndependent(m.Set(s)); })
      .def("is_basis",
           [](const PyMatroid& m, const Labels& s) { return m.view.IsBasis(m.Set(s)); })
      .def("fundamental_circuit",
           [](const PyMatroid& m, const std::string& e, const Labels& i) {
             return m.Out(m.view.FundamentalCircuit(m.view.labels().Id(e), m.Set(i)));
           })
      .def("extend_to_basis",
           [](const PyMatroid& m, const Labels& i, const Labels& pool) {
             return m.Out(m.view.ExtendToBasis(m.Set(i), m.Set(pool)));
           })
      .def("spans",
           [](const PyMatroid& m, const Labels& x, const std::string& e) {
             return m.view.Spans(m.Set(x), m.view.labels().Id(e));
           })
      .def("contract",
           [](const PyMatroid& m, const Labels& x) {
             return PyMatroid{m.view.Contract(m.Set(x)), std::nullopt};
           })
      .def("restrict",
           [](const PyMatroid& m, const Labels& x) {
             return PyMatroid{m.view.Restrict(m.Set(x)), std::nullopt};
           })
      .def("delete",
           [](const PyMatroid& m, const Labels& x) {
             return PyMatroid{m.view.Delete(m.Set(x)), std::nullopt};
           })
      .def("__repr__", [](const PyMatroid& m) { return "<Matroid " + m.view.Describe() + ">"; });

  mod.def(
      "symmetric_exchange",
      [](const PyMatroid& m, const Labels& b0, const Labels& b1, const Labels& x) {
        auto c = SymmetricExchange(m.view, Certified(m, b0, "b0"), Certified(m, b1, "b1"),
                                   m.Set(x));
        py::dict d;
        d["x"] = m.Out(c.x);
        d["y"] = m.Out(c.y);
        d["base_a"] = m.Out(c.base_a);
        d["base_b"] = m.Out(c.base_b);
        return d;
      },
      py::arg("m"), py::arg("b0"), py::arg("b1"), py::arg("x"));

  mod.def(
      "partition_exchange",
      [](const PyMatroid& m, const Labels& b0, const Labels& b1,
         const std::vector<Labels>& classes) {
        std::vector<ElementSet> parts;
        for (const auto& c : classes) parts.push_back(m.Set(c));
        auto plan = PartitionExchange(m.view, Certified(m, b0, "b0"), Certified(m, b1, "b1"),
                                      parts);
        std::vector<std::pair<Labels, Labels>> out;
        for (const auto& c : plan.classes) out.emplace_back(m.Out(c.x), m.Out(c.y));
        return out;
      },
      py::arg("m"), py::arg("b0"), py::arg("b1"), py::arg("classes"));

  mod.def(
      "serial_order",
      [](const PyMatroid& m, const Labels& b0, const Labels& b1) {
        auto order = SerialExchangeOrder(m.view, Certified(m, b0, "b0"), Certified(m, b1, "b1"));
        Labels e;
        Labels f;
        for (ElementId id : order.e_seq) e.push_back(m.view.labels().Label(id));
        for (ElementId id : order.f_seq) f.push_back(m.view.labels().Label(id));
        return std::make_pair(e, f);
      },
      py::arg("m"), py::arg("b0"), py::arg("b1"));

  mod.def(
      "subset_bijection",
      [](const PyMatroid& m, const Labels& b0, const Labels& b1,
         std::optional<std::size_t> max_size) {
        SubsetBijection bij = BuildBijection(m.view, Certified(m, b0, "b0"),
                                             Certified(m, b1, "b1"));
        std::vector<std::pair<Labels, Labels>> out;
        for (const auto& [i, j] : EnumerateGraph(bij, max_size.value_or(b0.size()))) {
          out.emplace_back(m.Out(i), m.Out(j));
        }
        return out;
      },
      py::arg("m"), py::arg("b0"), py::arg("b1"), py::arg("max_size") = py::none());

  mod.def("all_bases", [](const PyMatroid& m) {
    std::vector<Labels> out;
    for (const auto& b : AllBases(m.view)) out.push_back(m.Out(b));
    return out;
  });

  mod.def("exchange_search",
          [](const PyMatroid& m, const Labels& b0, const Labels& b1, const Labels& x) {
            std::vector<Labels> out;
            for (const auto& y : ExchangeSearch(m.view, m.Set(b0), m.Set(b1), m.Set(x))) {
              out.push_back(m.Out(y));
            }
            return out;
          });

  mod.def("bijection_search",
          [](const PyMatroid& m, const Labels& b0, const Labels& b1, std::size_t k) {
            return BijectionSearch(m.view, m.Set(b0), m.Set(b1), k).exists;
          });

  mod.def("check_axioms", [](const PyMatroid& m) {
    OracleReport r = CheckAxioms(m.view);
    py::list witnesses;
    for (const auto& w : r.witnesses) {
      py::list sets;
      for (const auto& s : w.sets) sets.append(m.Out(s));
      witnesses.append(py::make_tuple(w.axiom, sets));
    }
    py::dict d;
    d["holds"] = r.holds();
    d["checked"] = r.checked;
    d["witnesses"] = witnesses;
    return d;
  });

  mod.def(
      "verify_forced_prefix",
      [](std::size_t n, std::optional<std::size_t> k) {
        return ReportDict(VerifyForcedPrefix(n, k.value_or(MaxAdmissibleK(n))));
      },
      py::arg("n"), py::arg("k") = py::none());
  mod.def("max_admissible_k", &MaxAdmissibleK);
  mod.def("limit_witness", &LimitWitness);

  mod.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::Run(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  });
}
