#pragma once

#include <string>

#include "json.hpp"

#include "factorkit/all_factors.hpp"
#include "factorkit/conditions.hpp"
#include "factorkit/extremal.hpp"
#include "factorkit/fractional.hpp"
#include "factorkit/graph_io.hpp"

namespace factorkit {

using Json = nlohmann::ordered_json;

/// Every report carries these keys; absent parts are null (or [] for
/// hypotheses), so the shape only depends on the command.
Json report_skeleton(const std::string& command, const LabeledGraph& g);

Json vertex_list_json(const VertexSet& set, const LabeledGraph& g);
Json certificate_json(const DeficiencyCertificate& cert, const LabeledGraph& g);
Json indicator_json(const IndicatorAssignment& h, const LabeledGraph& g);
Json prescription_json(const DegreeFunc& func, const LabeledGraph& g);
Json hypotheses_json(const ConditionReport& report);

/// Fills verdict, certificate, engine and the oracle extras of `report`.
void fill_verdict(Json& report, const AllFactorsVerdict& verdict, const LabeledGraph& g);
void fill_fractional(Json& report, const FractionalResult& result, const LabeledGraph& g);
void fill_niessen(Json& report, const NiessenResult& result, const LabeledGraph& g);
void fill_sharpness(Json& report, const SharpnessReport& sharpness, const LabeledGraph& g);

}  // namespace factorkit
