#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "factorkit/all_factors.hpp"
#include "factorkit/conditions.hpp"
#include "factorkit/error.hpp"
#include "factorkit/extremal.hpp"
#include "factorkit/flow.hpp"
#include "factorkit/fractional.hpp"
#include "factorkit/graph.hpp"
#include "factorkit/graph_io.hpp"

namespace py = pybind11;
namespace fk = factorkit;

namespace {

using Values = std::vector<std::int64_t>;
using release = py::call_guard<py::gil_scoped_release>;

fk::DegreeFunc func(const Values& v) { return fk::DegreeFunc(v); }

fk::EnumerationOptions enumeration(std::optional<std::size_t> max_n, unsigned workers) {
  fk::EnumerationOptions o;
  if (max_n) o.max_n = *max_n;
  o.workers = workers;
  return o;
}

std::vector<fk::Vertex> members(const fk::VertexSet& s) { return s.members(); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "factorkit core";

  py::register_exception<fk::DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<fk::ResourceError>(m, "ResourceError", PyExc_RuntimeError);
  py::register_exception<fk::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<fk::ContractError>(m, "ContractError", PyExc_RuntimeError);
  py::register_exception<fk::VerificationError>(m, "VerificationError", PyExc_AssertionError);
  // Registered last so it runs first: attaches the failed clause.
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const fk::VerificationError& e) {
      py::object type = py::module_::import("factorkit._core").attr("VerificationError");
      py::object err = type(e.what());
      err.attr("clause") = e.clause();
      PyErr_SetObject(type.ptr(), err.ptr());
    }
  });

  py::class_<fk::Graph>(m, "Graph")
      .def(py::init([](std::size_t n, const std::vector<fk::Edge>& edges) { return fk::Graph(n, edges); }),
           py::arg("n"), py::arg("edges") = std::vector<fk::Edge>{})
      .def_property_readonly("order", &fk::Graph::order)
      .def_property_readonly("size", &fk::Graph::size)
      .def_property_readonly("edges", &fk::Graph::edges)
      .def("degree", &fk::Graph::degree)
      .def("neighbors", [](const fk::Graph& g, fk::Vertex v) {
        const auto span = g.neighbors(v);
        return std::vector<fk::Vertex>(span.begin(), span.end());
      })
      .def("adjacent", &fk::Graph::adjacent)
      .def("min_degree", &fk::Graph::min_degree)
      .def("with_edge", &fk::Graph::with_edge)
      .def("__len__", &fk::Graph::order)
      .def("__repr__", [](const fk::Graph& g) {
        return "Graph(n=" + std::to_string(g.order()) + ", m=" + std::to_string(g.size()) + ")";
      });

  m.def("complete_graph", &fk::complete_graph);
  m.def("edgeless_graph", &fk::edgeless_graph);
  m.def("join", &fk::join);
  m.def("disjoint_union", &fk::disjoint_union);
  m.def("components", [](const fk::Graph& g) {
    std::vector<std::vector<fk::Vertex>> out;
    for (const auto& c : fk::components(g)) out.push_back(c.members());
    return out;
  });
  m.def("parse_graph", [](const std::string& text) {
    std::istringstream in(text);
    return fk::read_graph(in).graph;
  });
  m.def("format_graph", [](const fk::Graph& g) {
    std::ostringstream out;
    fk::write_graph(out, g);
    return out.str();
  });

  m.def(
      "max_flow",
      [](std::size_t nodes, fk::NodeId source, fk::NodeId sink,
         const std::vector<std::tuple<fk::NodeId, fk::NodeId, std::int64_t>>& arcs) {
        fk::FlowNetwork net(nodes, source, sink);
        for (auto [u, v, c] : arcs) net.add_arc(u, v, c);
        const auto r = fk::max_flow(net);
        return std::make_pair(r.value, r.flow);
      },
      py::arg("nodes"), py::arg("source"), py::arg("sink"), py::arg("arcs"));

  py::class_<fk::DeficiencyCertificate>(m, "Certificate")
      .def_property_readonly("S", [](const fk::DeficiencyCertificate& c) { return members(c.S); })
      .def_property_readonly("T", [](const fk::DeficiencyCertificate& c) { return members(c.T); })
      .def_readonly("deficiency", &fk::DeficiencyCertificate::deficiency)
      .def("__repr__", [](const fk::DeficiencyCertificate& c) {
        return "Certificate(|S|=" + std::to_string(c.S.count()) + ", |T|=" + std::to_string(c.T.count()) +
               ", deficiency=" + std::to_string(c.deficiency) + ")";
      });

  py::class_<fk::FractionalResult>(m, "FractionalResult")
      .def_readonly("feasible", &fk::FractionalResult::feasible)
      .def_readonly("certificate", &fk::FractionalResult::certificate)
      .def_property_readonly("indicator",
                             [](const fk::FractionalResult& r) -> std::optional<std::vector<std::pair<fk::Edge, int>>> {
                               if (!r.indicator) return std::nullopt;
                               std::vector<std::pair<fk::Edge, int>> out;
                               const auto& h = *r.indicator;
                               for (std::size_t i = 0; i < h.edges().size(); ++i)
                                 out.emplace_back(h.edges()[i], h.numerators()[i]);
                               return out;
                             })
      .def("__bool__", [](const fk::FractionalResult& r) { return r.feasible; });

  m.def("fractional_q_feasible", [](const fk::Graph& g, const Values& q) { return fk::fractional_q_feasible(g, func(q)); },
        py::arg("graph"), py::arg("q"), release());
  m.def(
      "fractional_gf_feasible",
      [](const fk::Graph& g, const Values& lo, const Values& hi) { return fk::fractional_gf_feasible(g, func(lo), func(hi)); },
      py::arg("graph"), py::arg("g"), py::arg("f"), release());
  m.def(
      "anstee_deficiency",
      [](const fk::Graph& g, const Values& lo, const Values& hi, std::optional<std::size_t> max_n, unsigned workers) {
        return fk::anstee_deficiency(g, func(lo), func(hi), enumeration(max_n, workers));
      },
      py::arg("graph"), py::arg("g"), py::arg("f"), py::arg("max_n") = py::none(), py::arg("workers") = 1, release());

  py::class_<fk::AllFactorsVerdict>(m, "Verdict")
      .def_readonly("holds", &fk::AllFactorsVerdict::holds)
      .def_readonly("certificate", &fk::AllFactorsVerdict::certificate)
      .def_property_readonly("engine",
                             [](const fk::AllFactorsVerdict& v) { return std::string(fk::engine_name(v.checked_by)); })
      .def_property_readonly("failing_prescription",
                             [](const fk::AllFactorsVerdict& v) -> std::optional<Values> {
                               if (!v.failing_prescription) return std::nullopt;
                               const auto vals = v.failing_prescription->values();
                               return Values(vals.begin(), vals.end());
                             })
      .def_property_readonly("failing_corner",
                             [](const fk::AllFactorsVerdict& v) -> std::optional<std::vector<fk::Vertex>> {
                               if (!v.failing_corner) return std::nullopt;
                               return v.failing_corner->members();
                             })
      .def_readonly("flow_checks", &fk::AllFactorsVerdict::flow_checks)
      .def("__bool__", [](const fk::AllFactorsVerdict& v) { return v.holds; });

  m.def(
      "worst_set_deficiency",
      [](const fk::Graph& g, const Values& lo, const Values& hi, std::optional<std::size_t> max_n, unsigned workers) {
        return fk::worst_set_deficiency(g, func(lo), func(hi), enumeration(max_n, workers));
      },
      py::arg("graph"), py::arg("g"), py::arg("f"), py::arg("max_n") = py::none(), py::arg("workers") = 1, release());
  m.def(
      "has_all_fractional",
      [](const fk::Graph& g, const Values& lo, const Values& hi, bool fast_path, std::optional<std::size_t> max_n,
         unsigned workers) {
        return fk::has_all_fractional(g, func(lo), func(hi), {enumeration(max_n, workers), fast_path});
      },
      py::arg("graph"), py::arg("g"), py::arg("f"), py::arg("fast_path") = true, py::arg("max_n") = py::none(),
      py::arg("workers") = 1, release());
  m.def(
      "has_all_fractional_ab",
      [](const fk::Graph& g, std::int64_t a, std::int64_t b, bool fast_path, std::optional<std::size_t> max_n,
         unsigned workers) { return fk::has_all_fractional_ab(g, a, b, {enumeration(max_n, workers), fast_path}); },
      py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("fast_path") = true, py::arg("max_n") = py::none(),
      py::arg("workers") = 1, release());
  m.def(
      "box_oracle",
      [](const fk::Graph& g, const Values& lo, const Values& hi) { return fk::box_oracle(g, func(lo), func(hi)); },
      py::arg("graph"), py::arg("g"), py::arg("f"), release());
  m.def(
      "corner_oracle",
      [](const fk::Graph& g, const Values& lo, const Values& hi) { return fk::corner_oracle(g, func(lo), func(hi)); },
      py::arg("graph"), py::arg("g"), py::arg("f"), release());

  py::class_<fk::Hypothesis>(m, "Hypothesis")
      .def_readonly("name", &fk::Hypothesis::name)
      .def_readonly("description", &fk::Hypothesis::description)
      .def_readonly("lhs", &fk::Hypothesis::lhs)
      .def_readonly("relation", &fk::Hypothesis::relation)
      .def_readonly("rhs", &fk::Hypothesis::rhs)
      .def_readonly("vacuous", &fk::Hypothesis::vacuous)
      .def_readonly("holds", &fk::Hypothesis::holds);
  py::class_<fk::ConditionReport>(m, "ConditionReport")
      .def_readonly("condition", &fk::ConditionReport::condition)
      .def_readonly("hypotheses", &fk::ConditionReport::hypotheses)
      .def_property_readonly("holds", &fk::ConditionReport::holds)
      .def("__getitem__", &fk::ConditionReport::at, py::return_value_policy::reference_internal);

  m.def("lu3_hypotheses", &fk::lu3_hypotheses, py::arg("graph"), py::arg("a"), py::arg("b"));
  m.def(
      "kano_hypotheses",
      [](const fk::Graph& g, std::int64_t a, std::int64_t b, const Values& f) {
        return fk::kano_hypotheses(g, a, b, func(f));
      },
      py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("f"));

  py::class_<fk::NiessenResult>(m, "NiessenResult")
      .def_readonly("holds", &fk::NiessenResult::holds)
      .def_property_readonly("S", [](const fk::NiessenResult& r) { return members(r.S); })
      .def_property_readonly("T", [](const fk::NiessenResult& r) { return members(r.T); })
      .def_readonly("value", &fk::NiessenResult::value)
      .def_readonly("threshold", &fk::NiessenResult::threshold);
  m.def(
      "niessen_all_integral",
      [](const fk::Graph& g, const Values& lo, const Values& hi, std::size_t max_n) {
        return fk::niessen_all_integral(g, func(lo), func(hi), {max_n});
      },
      py::arg("graph"), py::arg("g"), py::arg("f"), py::arg("max_n") = fk::NiessenOptions{}.max_n, release());

  m.def("gen_neighborhood_sharp", &fk::gen_neighborhood_sharp, py::arg("a"), py::arg("b"), py::arg("m"));
  m.def("gen_mindegree_sharp", &fk::gen_mindegree_sharp, py::arg("a"), py::arg("b"), py::arg("r"));
  m.def("mindegree_sharp_m", &fk::mindegree_sharp_m, py::arg("a"), py::arg("b"));

  py::class_<fk::SharpnessReport>(m, "SharpnessReport")
      .def_readonly("n", &fk::SharpnessReport::n)
      .def_readonly("edges", &fk::SharpnessReport::edges)
      .def_readonly("min_degree", &fk::SharpnessReport::min_degree)
      .def_readonly("min_neighborhood_union", &fk::SharpnessReport::min_neighborhood_union)
      .def_readonly("m", &fk::SharpnessReport::m)
      .def_readonly("hypotheses", &fk::SharpnessReport::hypotheses)
      .def_readonly("witness", &fk::SharpnessReport::witness)
      .def_readonly("verdict", &fk::SharpnessReport::verdict)
      .def_property_readonly("inequalities", [](const fk::SharpnessReport& r) {
        std::vector<std::tuple<std::string, std::int64_t, std::string, std::int64_t, bool>> out;
        for (const auto& i : r.inequalities) out.emplace_back(i.clause, i.lhs, i.relation, i.rhs, i.holds);
        return out;
      });
  m.def(
      "verify_sharpness",
      [](const std::string& family, std::int64_t a, std::int64_t b, std::int64_t size,
         const std::optional<fk::Graph>& graph, std::optional<std::size_t> max_n, unsigned workers) {
        const fk::SharpnessInput input{fk::parse_family(family), a, b, size};
        py::gil_scoped_release unlocked;
        return graph ? fk::verify_sharpness_on(*graph, input, enumeration(max_n, workers))
                     : fk::verify_sharpness(input, enumeration(max_n, workers));
      },
      py::arg("family"), py::arg("a"), py::arg("b"), py::arg("size"), py::arg("graph") = py::none(),
      py::arg("max_n") = py::none(), py::arg("workers") = 1);
}
