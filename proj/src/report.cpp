#include "factorkit/report.hpp"

namespace factorkit {

Json report_skeleton(const std::string& command, const LabeledGraph& g) {
  Json r;
  r["command"] = command;
  r["n"] = g.graph.order();
  r["edges"] = g.graph.size();
  r["verdict"] = nullptr;
  r["certificate"] = nullptr;
  r["indicator"] = nullptr;
  r["hypotheses"] = Json::array();
  r["engine"] = nullptr;
  r["seed"] = nullptr;
  return r;
}

Json vertex_list_json(const VertexSet& set, const LabeledGraph& g) {
  Json out = Json::array();
  for (Vertex v : set.members()) out.push_back(g.labels[v]);
  return out;
}

Json certificate_json(const DeficiencyCertificate& cert, const LabeledGraph& g) {
  return Json{{"S", vertex_list_json(cert.S, g)},
              {"T", vertex_list_json(cert.T, g)},
              {"deficiency", cert.deficiency}};
}

Json indicator_json(const IndicatorAssignment& h, const LabeledGraph& g) {
  Json entries = Json::array();
  for (const auto& [e, num] : h.support())
    entries.push_back(Json{{"u", g.labels[e.first]}, {"v", g.labels[e.second]}, {"numerator", int{num}}});
  return Json{{"denominator", IndicatorAssignment::kDenominator}, {"entries", std::move(entries)}};
}

Json prescription_json(const DegreeFunc& func, const LabeledGraph& g) {
  Json out = Json::object();
  for (std::size_t v = 0; v < func.size(); ++v) out[g.labels[v]] = func.values()[v];
  return out;
}

Json hypotheses_json(const ConditionReport& report) {
  Json out = Json::array();
  for (const auto& h : report.hypotheses) {
    out.push_back(Json{{"name", h.name},
                       {"description", h.description},
                       {"lhs", h.lhs},
                       {"relation", h.relation},
                       {"rhs", h.rhs},
                       {"vacuous", h.vacuous},
                       {"holds", h.holds}});
  }
  return out;
}

void fill_verdict(Json& report, const AllFactorsVerdict& verdict, const LabeledGraph& g) {
  report["verdict"] = verdict.holds;
  report["engine"] = std::string(engine_name(verdict.checked_by));
  report["certificate"] = verdict.certificate ? certificate_json(*verdict.certificate, g) : Json(nullptr);
  report["flow_checks"] = verdict.flow_checks;
  report["failing_prescription"] =
      verdict.failing_prescription ? prescription_json(*verdict.failing_prescription, g) : Json(nullptr);
  report["failing_corner"] = verdict.failing_corner ? vertex_list_json(*verdict.failing_corner, g) : Json(nullptr);
}

void fill_fractional(Json& report, const FractionalResult& result, const LabeledGraph& g) {
  report["verdict"] = result.feasible;
  report["engine"] = "fractional-flow";
  report["indicator"] = result.indicator ? indicator_json(*result.indicator, g) : Json(nullptr);
  report["certificate"] = result.certificate ? certificate_json(*result.certificate, g) : Json(nullptr);
}

void fill_niessen(Json& report, const NiessenResult& result, const LabeledGraph& g) {
  report["verdict"] = result.holds;
  report["engine"] = "niessen-labelings";
  report["certificate"] = Json{{"S", vertex_list_json(result.S, g)},
                               {"T", vertex_list_json(result.T, g)},
                               {"deficiency", result.value}};
  report["threshold"] = result.threshold;
}

void fill_sharpness(Json& report, const SharpnessReport& s, const LabeledGraph& g) {
  fill_verdict(report, s.verdict, g);
  report["hypotheses"] = hypotheses_json(s.hypotheses);
  Json inequalities = Json::array();
  for (const auto& q : s.inequalities)
    inequalities.push_back(
        Json{{"clause", q.clause}, {"lhs", q.lhs}, {"relation", q.relation}, {"rhs", q.rhs}, {"holds", q.holds}});
  Json params{{"a", s.input.a}, {"b", s.input.b}};
  params[s.input.family == SharpnessFamily::Neighborhood ? "m" : "r"] = s.input.size;
  report["sharpness"] = Json{
      {"family", std::string(family_name(s.input.family))},
      {"parameters", std::move(params)},
      {"clique_m", s.m},
      {"min_degree", s.min_degree},
      {"min_neighborhood_union",
       s.min_neighborhood_union ? Json(*s.min_neighborhood_union) : Json(nullptr)},
      {"inequalities", std::move(inequalities)},
      {"witness", certificate_json(s.witness, g)},
  };
}

}  // namespace factorkit
