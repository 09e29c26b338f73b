#include "factorkit/conditions.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <tuple>

#include "factorkit/error.hpp"

namespace factorkit {

bool ConditionReport::holds() const noexcept {
  return std::all_of(hypotheses.begin(), hypotheses.end(), [](const Hypothesis& h) { return h.holds; });
}

const Hypothesis& ConditionReport::at(const std::string& name) const {
  for (const auto& h : hypotheses)
    if (h.name == name) return h;
  throw DomainError("no hypothesis named '" + name + "' in " + condition);
}

namespace {

Hypothesis compare(std::string name, std::string description, std::int64_t lhs, std::string relation,
                   std::int64_t rhs) {
  bool holds = false;
  if (relation == ">=")
    holds = lhs >= rhs;
  else if (relation == ">")
    holds = lhs > rhs;
  else if (relation == "<=")
    holds = lhs <= rhs;
  else if (relation == "==")
    holds = lhs == rhs;
  else
    throw ContractError("unknown relation " + relation);
  return {std::move(name), std::move(description), lhs, std::move(relation), rhs, false, holds};
}

void require_parameters(std::int64_t a, std::int64_t b) {
  if (a < 1) throw DomainError("a must be a positive integer");
  if (b > kMaxParameter) throw DomainError("b exceeds the supported parameter range");
}

}  // namespace

ConditionReport lu3_hypotheses(const Graph& g, std::int64_t a, std::int64_t b) {
  require_parameters(a, b);
  if (a >= b) throw DomainError("lu3_hypotheses requires a < b");
  const auto n = static_cast<std::int64_t>(g.order());
  const auto delta = static_cast<std::int64_t>(g.min_degree());
  const std::int64_t s = a + b;

  ConditionReport report{"all fractional [a,b]-factors: minimum degree and neighborhood union", {}};
  report.hypotheses.push_back(compare("order", "a*n >= 2(a+b)(a+b-1)", a * n, ">=", 2 * s * (s - 1)));
  report.hypotheses.push_back(
      compare("min_degree", "4a*delta(G) >= (a+b-1)^2 + 4b", 4 * a * delta, ">=", (s - 1) * (s - 1) + 4 * b));
  if (auto nc = min_nonadjacent_neighborhood_union(g)) {
    report.hypotheses.push_back(compare("neighborhood_union", "(a+b)*min |N(u) u N(v)| >= b*n over nonadjacent u, v",
                                        s * static_cast<std::int64_t>(*nc), ">=", b * n));
  } else {
    Hypothesis h = compare("neighborhood_union", "no nonadjacent pair: holds vacuously", 0, ">=", 0);
    h.vacuous = true;
    report.hypotheses.push_back(std::move(h));
  }
  return report;
}

ConditionReport kano_hypotheses(const Graph& g, std::int64_t a, std::int64_t b, const DegreeFunc& f) {
  require_parameters(a, b);
  if (a > b) throw DomainError("kano_hypotheses requires a <= b");
  require_matches(g, f, "kano_hypotheses");
  for (auto x : f.values())
    if (x < a || x > b) throw DomainError("kano_hypotheses: f takes a value outside [a, b]");

  const auto n = static_cast<std::int64_t>(g.order());
  const auto delta = static_cast<std::int64_t>(g.min_degree());
  const std::int64_t s = a + b;

  ConditionReport report{"f-factor: minimum degree", {}};
  report.hypotheses.push_back(compare("connected", "number of components <= 1",
                                      static_cast<std::int64_t>(components(g).size()), "<=", 1));
  report.hypotheses.push_back(compare("order", "a*n >= (a+b)^2", a * n, ">=", s * s));
  report.hypotheses.push_back(compare("parity", "f(V) mod 2 == 0", f.total() % 2, "==", 0));
  report.hypotheses.push_back(compare("min_degree", "(a+b)*delta(G) > a*n - 2", s * delta, ">", a * n - 2));
  return report;
}

// ---------------------------------------------------------------------------
// Integral all-(g,f)-factors

namespace {

using Mask = std::uint32_t;

struct MaskGraph {
  std::vector<Mask> adj;
  Mask slack = 0;  // vertices with g < f
  std::vector<std::int64_t> lower;
  std::vector<std::int64_t> upper;
};

MaskGraph to_masks(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper) {
  MaskGraph m;
  const auto n = static_cast<Vertex>(g.order());
  m.adj.resize(g.order(), 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) m.adj[v] |= Mask{1} << u;
    if (lower[v] < upper[v]) m.slack |= Mask{1} << v;
  }
  m.lower.assign(lower.values().begin(), lower.values().end());
  m.upper.assign(upper.values().begin(), upper.values().end());
  return m;
}

std::int64_t odd_components(const MaskGraph& m, Mask rest, Mask T) {
  std::int64_t count = 0;
  while (rest != 0) {
    Mask comp = rest & (~rest + 1);
    Mask frontier = comp;
    while (frontier != 0) {
      Mask grow = 0;
      for (Mask f = frontier; f != 0; f &= f - 1) grow |= m.adj[std::countr_zero(f)];
      frontier = grow & rest & ~comp;
      comp |= frontier;
    }
    rest &= ~comp;
    if (comp & m.slack) {
      ++count;
      continue;
    }
    std::int64_t parity = 0;
    for (Mask c = comp; c != 0; c &= c - 1) {
      const int v = std::countr_zero(c);
      parity += std::popcount(m.adj[v] & T) + m.upper[v];
    }
    if (parity % 2 != 0) ++count;
  }
  return count;
}

std::int64_t evaluate(const MaskGraph& m, Mask all, Mask S, Mask T) {
  std::int64_t value = 0;
  for (Mask s = S; s != 0; s &= s - 1) value += m.lower[std::countr_zero(s)];
  for (Mask t = T; t != 0; t &= t - 1) {
    const int x = std::countr_zero(t);
    value += std::popcount(m.adj[x] & ~S) - m.upper[x];
  }
  return value - odd_components(m, all & ~(S | T), T);
}

}  // namespace

std::int64_t niessen_value(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper, const VertexSet& S,
                           const VertexSet& T) {
  require_ordered(g, lower, upper);
  if (g.order() > 32) throw ResourceError("niessen_value: graph order above 32");
  if (S.universe() != g.order() || T.universe() != g.order()) throw DomainError("niessen_value: universe mismatch");
  if (!S.disjoint(T)) throw DomainError("niessen_value: S and T must be disjoint");
  const auto m = to_masks(g, lower, upper);
  const Mask all = g.order() == 32 ? ~Mask{0} : (Mask{1} << g.order()) - 1;
  return evaluate(m, all, static_cast<Mask>(S.mask()), static_cast<Mask>(T.mask()));
}

NiessenResult niessen_all_integral(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                   const NiessenOptions& options) {
  require_ordered(g, lower, upper);
  const std::size_t limit = std::min<std::size_t>(options.max_n, 20);
  if (g.order() > limit)
    throw ResourceError("niessen_all_integral: graph order " + std::to_string(g.order()) +
                        " exceeds the labeling cutoff " + std::to_string(limit));
  const auto m = to_masks(g, lower, upper);
  const auto n = g.order();
  const Mask all = (Mask{1} << n) - 1;

  using Key = std::tuple<std::int64_t, int, int, Mask, Mask>;
  Key best{std::numeric_limits<std::int64_t>::max(), 0, 0, 0, 0};
  for (Mask S = 0;; ++S) {
    const Mask free = all & ~S;
    for (Mask T = free;; T = (T - 1) & free) {
      const std::int64_t value = evaluate(m, all, S, T);
      if (value <= std::get<0>(best)) {
        Key key{value, std::popcount(S), std::popcount(T), S, T};
        if (key < best) best = key;
      }
      if (T == 0) break;
    }
    if (S == all) break;
  }

  NiessenResult result;
  result.value = std::get<0>(best);
  result.S = VertexSet::from_mask(n, std::get<3>(best));
  result.T = VertexSet::from_mask(n, std::get<4>(best));
  result.threshold = m.slack != 0 ? -1 : 0;
  result.holds = result.value >= result.threshold;
  return result;
}

}  // namespace factorkit
