#include "factorkit/extremal.hpp"

#include <string>

#include "factorkit/error.hpp"

namespace factorkit {

namespace {

// Generated graphs stay small enough to enumerate or at least to build.
constexpr std::int64_t kMaxGeneratedOrder = 1 << 14;

void require_ab(std::int64_t a, std::int64_t b) {
  if (a < 1) throw DomainError("a must be a positive integer");
  if (a >= b) throw DomainError("construction requires a < b");
  if (b > kMaxParameter) throw DomainError("b exceeds the supported parameter range");
}

std::int64_t floor_div(std::int64_t num, std::int64_t den) {
  std::int64_t q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

Inequality relate(std::string clause, std::int64_t lhs, std::string relation, std::int64_t rhs) {
  bool holds = false;
  if (relation == "<")
    holds = lhs < rhs;
  else if (relation == "<=")
    holds = lhs <= rhs;
  else if (relation == "==")
    holds = lhs == rhs;
  else if (relation == ">=")
    holds = lhs >= rhs;
  else if (relation == ">")
    holds = lhs > rhs;
  else
    throw ContractError("unknown relation " + relation);
  return {std::move(clause), lhs, std::move(relation), rhs, holds};
}

void expect(SharpnessReport& report, Inequality inequality) {
  const bool holds = inequality.holds;
  std::string message = inequality.clause + ": " + std::to_string(inequality.lhs) + " " + inequality.relation +
                        " " + std::to_string(inequality.rhs) + " does not hold";
  std::string clause = inequality.clause;
  report.inequalities.push_back(std::move(inequality));
  if (!holds) throw VerificationError(std::move(clause), message);
}

VertexSet prefix_set(std::size_t n, std::int64_t count) {
  VertexSet s(n);
  for (Vertex v = 0; v < static_cast<Vertex>(count); ++v) s.insert(v);
  return s;
}

void settle_verdict(SharpnessReport& report, const Graph& g, const EnumerationOptions& options) {
  const auto& in = report.input;
  if (g.order() <= std::min(options.max_n, kHardEnumerationLimit)) {
    AllFactorsOptions exact{options, false};
    report.verdict = has_all_fractional_ab(g, in.a, in.b, exact);
  } else {
    report.verdict.holds = false;
    report.verdict.checked_by = Engine::Witness;
    report.verdict.certificate = report.witness;
  }
  expect(report, relate("all_factors_fails", report.verdict.holds ? 1 : 0, "==", 0));
}

}  // namespace

std::string_view family_name(SharpnessFamily family) {
  return family == SharpnessFamily::Neighborhood ? "neighborhood" : "mindegree";
}

SharpnessFamily parse_family(std::string_view name) {
  if (name == "neighborhood") return SharpnessFamily::Neighborhood;
  if (name == "mindegree") return SharpnessFamily::MinDegree;
  throw DomainError("unknown sharpness family '" + std::string(name) + "'");
}

Graph gen_neighborhood_sharp(std::int64_t a, std::int64_t b, std::int64_t m) {
  require_ab(a, b);
  if (m < 1) throw DomainError("gen_neighborhood_sharp: m must be positive");
  if ((a + b) > kMaxGeneratedOrder / m) throw DomainError("gen_neighborhood_sharp: graph too large");
  return join(complete_graph(static_cast<std::size_t>(b * m)), edgeless_graph(static_cast<std::size_t>(a * m + 1)));
}

std::int64_t mindegree_sharp_m(std::int64_t a, std::int64_t b) {
  require_ab(a, b);
  if ((a + b) % 2 == 0) throw DomainError("min-degree construction requires a + b odd");
  const std::int64_t s1 = a + b - 1;
  // bound = N / D with N = (a+b-1)^2 + 4b - 2a(a+b-1), D = 4a; m = ceil(N/D) - 1.
  const std::int64_t numerator = s1 * s1 + 4 * b - 2 * a * s1;
  return floor_div(numerator - 1, 4 * a);
}

Graph build_mindegree_sharp(std::int64_t a, std::int64_t b, std::int64_t r) {
  const std::int64_t m = mindegree_sharp_m(a, b);
  if (r < 1) throw DomainError("min-degree construction: r must be positive");
  const std::int64_t k = (a + b + 1) / 2;
  if (r > kMaxGeneratedOrder || m + k > kMaxGeneratedOrder) throw DomainError("min-degree construction: graph too large");
  return join(complete_graph(static_cast<std::size_t>(m)),
              disjoint_union(complete_graph(static_cast<std::size_t>(r)), complete_graph(static_cast<std::size_t>(k))));
}

Graph gen_mindegree_sharp(std::int64_t a, std::int64_t b, std::int64_t r) {
  Graph g = build_mindegree_sharp(a, b, r);
  const auto report = lu3_hypotheses(g, a, b);
  for (const char* name : {"order", "neighborhood_union"}) {
    const auto& h = report.at(name);
    if (!h.holds)
      throw DomainError("gen_mindegree_sharp: r=" + std::to_string(r) + " too small, hypothesis '" + name +
                        "' fails (" + std::to_string(h.lhs) + " " + h.relation + " " + std::to_string(h.rhs) + ")");
  }
  return g;
}

std::optional<std::int64_t> min_mindegree_sharp_r(std::int64_t a, std::int64_t b, std::int64_t limit) {
  mindegree_sharp_m(a, b);
  for (std::int64_t r = 1; r <= limit; ++r) {
    try {
      gen_mindegree_sharp(a, b, r);
      return r;
    } catch (const DomainError&) {
    }
  }
  return std::nullopt;
}

SharpnessReport verify_sharpness(const SharpnessInput& input, const EnumerationOptions& options) {
  const Graph g = input.family == SharpnessFamily::Neighborhood ? gen_neighborhood_sharp(input.a, input.b, input.size)
                                                               : gen_mindegree_sharp(input.a, input.b, input.size);
  return verify_sharpness_on(g, input, options);
}

SharpnessReport verify_sharpness_on(const Graph& g, const SharpnessInput& input, const EnumerationOptions& options) {
  require_ab(input.a, input.b);
  const std::int64_t a = input.a;
  const std::int64_t b = input.b;
  SharpnessReport report;
  report.input = input;
  report.n = g.order();
  report.edges = g.size();
  report.min_degree = g.min_degree();
  report.min_neighborhood_union = min_nonadjacent_neighborhood_union(g);
  report.hypotheses = lu3_hypotheses(g, a, b);
  const auto n = static_cast<std::int64_t>(g.order());
  const auto lower = DegreeFunc::constant(g.order(), a);
  const auto upper = DegreeFunc::constant(g.order(), b);

  if (input.family == SharpnessFamily::Neighborhood) {
    const std::int64_t m = input.size;
    if (m < 1) throw DomainError("neighborhood construction: m must be positive");
    report.m = m;
    const std::int64_t clique = b * m;
    expect(report, relate("order", n, "==", (a + b) * m + 1));
    // bn/(a+b) > bm > bn/(a+b) - 1, cross-multiplied.
    expect(report, relate("bn/(a+b) > bm", (a + b) * clique, "<", b * n));
    expect(report, relate("bm > bn/(a+b) - 1", b * n, "<", (a + b) * (clique + 1)));
    expect(report, relate("min |N(u) u N(v)| == bm",
                          report.min_neighborhood_union ? static_cast<std::int64_t>(*report.min_neighborhood_union) : -1,
                          "==", clique));
    report.witness = worst_set_certificate_for(g, lower, upper, prefix_set(g.order(), clique));
    expect(report, relate("witness deficiency == a*bm - b*(am+1)", report.witness.deficiency, "==",
                          a * clique - b * (a * m + 1)));
    settle_verdict(report, g, options);
    expect(report, relate("certificate deficiency <= -b", report.verdict.certificate->deficiency, "<=", -b));
  } else {
    const std::int64_t m = mindegree_sharp_m(a, b);
    report.m = m;
    const std::int64_t k = (a + b + 1) / 2;
    expect(report, relate("order", n, "==", m + input.size + k));
    const auto delta = static_cast<std::int64_t>(report.min_degree);
    expect(report, relate("4a*delta < (a+b-1)^2 + 4b", 4 * a * delta, "<", (a + b - 1) * (a + b - 1) + 4 * b));
    expect(report, relate("delta == m + (a+b-1)/2", delta, "==", m + (a + b - 1) / 2));
    const auto& nc = report.hypotheses.at("neighborhood_union");
    expect(report, relate("neighborhood union hypothesis", nc.lhs, nc.relation, nc.rhs));
    report.witness = worst_set_certificate_for(g, lower, upper, prefix_set(g.order(), m));
    expect(report, relate("witness deficiency < 0", report.witness.deficiency, "<", 0));
    settle_verdict(report, g, options);
    expect(report, relate("certificate deficiency < 0", report.verdict.certificate->deficiency, "<", 0));
  }
  return report;
}

}  // namespace factorkit
