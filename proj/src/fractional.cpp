#include "factorkit/fractional.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "factorkit/error.hpp"
#include "subset_scan.hpp"

namespace factorkit {

// ---------------------------------------------------------------------------
// IndicatorAssignment

IndicatorAssignment::IndicatorAssignment(std::vector<Edge> edges, std::vector<std::uint8_t> numerators)
    : edges_(std::move(edges)), numerators_(std::move(numerators)) {
  if (edges_.size() != numerators_.size()) throw DomainError("IndicatorAssignment: size mismatch");
  for (auto x : numerators_)
    if (x > kDenominator) throw DomainError("IndicatorAssignment: numerator outside {0, 1, 2}");
}

std::int64_t IndicatorAssignment::doubled_degree(Vertex v) const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (edges_[i].first == v || edges_[i].second == v) total += numerators_[i];
  return total;
}

std::vector<std::pair<Edge, std::uint8_t>> IndicatorAssignment::support() const {
  std::vector<std::pair<Edge, std::uint8_t>> out;
  for (std::size_t i = 0; i < edges_.size(); ++i)
    if (numerators_[i] > 0) out.emplace_back(edges_[i], numerators_[i]);
  return out;
}

void write_indicator(std::ostream& out, const IndicatorAssignment& h) {
  out << "denominator " << IndicatorAssignment::kDenominator << '\n';
  for (const auto& [e, num] : h.support()) out << e.first << ' ' << e.second << ' ' << int{num} << '\n';
}

IndicatorAssignment read_indicator(std::istream& in, const Graph& g) {
  std::vector<std::uint8_t> numerators(g.size(), 0);
  std::vector<bool> seen(g.size(), false);
  const auto& edges = g.edges();
  std::string line;
  bool header = false;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    if (!header) {
      std::string word;
      int denominator = 0;
      if (!(fields >> word >> denominator) || word != "denominator" || denominator != IndicatorAssignment::kDenominator)
        throw ParseError("indicator line " + std::to_string(line_no) + ": expected 'denominator 2'");
      header = true;
      continue;
    }
    long long u = 0, v = 0, num = 0;
    std::string extra;
    if (!(fields >> u >> v >> num) || (fields >> extra))
      throw ParseError("indicator line " + std::to_string(line_no) + ": expected 'u v numerator'");
    if (num < 0 || num > IndicatorAssignment::kDenominator)
      throw ParseError("indicator line " + std::to_string(line_no) + ": numerator outside {0, 1, 2}");
    const Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e)
      throw ParseError("indicator line " + std::to_string(line_no) + ": not an edge of the graph");
    const auto idx = static_cast<std::size_t>(it - edges.begin());
    if (seen[idx]) throw ParseError("indicator line " + std::to_string(line_no) + ": duplicate edge");
    seen[idx] = true;
    numerators[idx] = static_cast<std::uint8_t>(num);
  }
  if (!header) throw ParseError("indicator: missing 'denominator 2' header");
  return IndicatorAssignment(edges, std::move(numerators));
}

// ---------------------------------------------------------------------------
// Networks

namespace {

IndicatorAssignment extract_indicator(const Graph& g, const std::vector<std::int64_t>& flow) {
  const auto n = g.order();
  std::vector<std::uint8_t> numerators;
  numerators.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    numerators.push_back(static_cast<std::uint8_t>(flow[n + 2 * i] + flow[n + 2 * i + 1]));
  return IndicatorAssignment(g.edges(), std::move(numerators));
}

FlowNetwork symmetric_network(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper) {
  const auto n = static_cast<NodeId>(g.order());
  const NodeId source = 2 * n;
  const NodeId sink = 2 * n + 1;
  FlowNetwork net(2 * g.order() + 2, source, sink);
  for (NodeId v = 0; v < n; ++v) net.add_arc(source, v, upper[v], lower[v]);
  for (auto [u, v] : g.edges()) {
    net.add_arc(u, n + v, 1);
    net.add_arc(v, n + u, 1);
  }
  for (NodeId v = 0; v < n; ++v) net.add_arc(n + v, sink, upper[v], lower[v]);
  return net;
}

// Certificates come from exhaustive minimization, so large graphs report the
// verdict alone.
std::optional<DeficiencyCertificate> failure_certificate(const Graph& g, const DegreeFunc& lower,
                                                         const DegreeFunc& upper, const EnumerationOptions& options) {
  if (g.order() > std::min(options.max_n, kHardEnumerationLimit)) return std::nullopt;
  return anstee_deficiency(g, lower, upper, options);
}

}  // namespace

FlowNetwork build_symmetric_network(const Graph& g, const DegreeFunc& demand) {
  require_matches(g, demand, "build_symmetric_network");
  demand.total();  // rejects overflowing aggregate demand
  return symmetric_network(g, DegreeFunc::constant(g.order(), 0), demand);
}

bool has_fractional_q_factor(const Graph& g, const DegreeFunc& q) {
  const auto net = build_symmetric_network(g, q);
  return max_flow(net).value == q.total();
}

FractionalResult fractional_q_feasible(const Graph& g, const DegreeFunc& q, const EnumerationOptions& options) {
  const auto net = build_symmetric_network(g, q);
  auto flow = max_flow(net);
  FractionalResult result;
  if (flow.value == q.total()) {
    result.feasible = true;
    result.indicator = extract_indicator(g, flow.flow);
  } else {
    result.certificate = failure_certificate(g, q, q, options);
  }
  return result;
}

FractionalResult fractional_gf_feasible(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                        const EnumerationOptions& options) {
  require_ordered(g, lower, upper);
  upper.total();
  const auto net = symmetric_network(g, lower, upper);
  auto flow = feasible_circulation(net);
  FractionalResult result;
  if (flow) {
    result.feasible = true;
    result.indicator = extract_indicator(g, flow->flow);
  } else {
    result.certificate = failure_certificate(g, lower, upper, options);
  }
  return result;
}

DeficiencyCertificate anstee_certificate_for(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                             const VertexSet& S) {
  require_ordered(g, lower, upper);
  return detail::certificate_for(g, upper, lower, S);
}

DeficiencyCertificate anstee_deficiency(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                        const EnumerationOptions& options) {
  require_ordered(g, lower, upper);
  detail::require_enumerable(g.order(), options, "anstee_deficiency");
  const auto best = detail::minimize_subset_deficiency(g, upper.values(), lower.values(), options.workers);
  auto cert = detail::certificate_for(g, upper, lower, VertexSet::from_mask(g.order(), best.mask));
  if (cert.deficiency != best.value) throw ContractError("anstee_deficiency: incremental scan disagrees with recount");
  return cert;
}

}  // namespace factorkit
