#include "factorkit/all_factors.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <vector>

#include "factorkit/conditions.hpp"
#include "factorkit/error.hpp"
#include "subset_scan.hpp"

namespace factorkit {

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::WorstSet:
      return "worst-set";
    case Engine::BoxOracle:
      return "box-oracle";
    case Engine::CornerOracle:
      return "corner-oracle";
    case Engine::SufficientCondition:
      return "sufficient-condition";
    case Engine::FractionalFlow:
      return "fractional-flow";
    case Engine::Witness:
      return "witness";
  }
  return "unknown";
}

DeficiencyCertificate worst_set_certificate_for(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                                const VertexSet& S) {
  require_ordered(g, lower, upper);
  return detail::certificate_for(g, lower, upper, S);
}

DeficiencyCertificate worst_set_deficiency(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                           const EnumerationOptions& options) {
  require_ordered(g, lower, upper);
  detail::require_enumerable(g.order(), options, "worst_set_deficiency");
  const auto best = detail::minimize_subset_deficiency(g, lower.values(), upper.values(), options.workers);
  auto cert = detail::certificate_for(g, lower, upper, VertexSet::from_mask(g.order(), best.mask));
  if (cert.deficiency != best.value)
    throw ContractError("worst_set_deficiency: incremental scan disagrees with recount");
  return cert;
}

namespace {

bool fast_path_applies(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper) {
  const auto a = lower.constant_value();
  const auto b = upper.constant_value();
  if (!a || !b || *a < 1 || *a >= *b || *b > kMaxParameter) return false;
  return lu3_hypotheses(g, *a, *b).holds();
}

}  // namespace

AllFactorsVerdict has_all_fractional(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                     const AllFactorsOptions& options) {
  require_ordered(g, lower, upper);
  AllFactorsVerdict verdict;
  if (options.fast_path && fast_path_applies(g, lower, upper)) {
    verdict.holds = true;
    verdict.checked_by = Engine::SufficientCondition;
    return verdict;
  }
  verdict.certificate = worst_set_deficiency(g, lower, upper, options.enumeration);
  verdict.holds = verdict.certificate->deficiency >= 0;
  verdict.checked_by = Engine::WorstSet;
  return verdict;
}

AllFactorsVerdict has_all_fractional_ab(const Graph& g, std::int64_t a, std::int64_t b,
                                        const AllFactorsOptions& options) {
  if (a <= 0) throw DomainError("has_all_fractional_ab: a must be positive");
  if (a > b) throw DomainError("has_all_fractional_ab: a must not exceed b");
  const auto lower = DegreeFunc::constant(g.order(), a);
  const auto upper = DegreeFunc::constant(g.order(), b);
  if (a < b) return has_all_fractional(g, lower, upper, options);

  auto result = fractional_q_feasible(g, lower, options.enumeration);
  AllFactorsVerdict verdict;
  verdict.holds = result.feasible;
  verdict.certificate = result.certificate;
  verdict.checked_by = Engine::FractionalFlow;
  verdict.flow_checks = 1;
  if (!result.feasible) verdict.failing_prescription = lower;
  return verdict;
}

AllFactorsVerdict box_oracle(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                             const OracleOptions& options) {
  require_ordered(g, lower, upper);
  const auto n = g.order();
  std::uint64_t count = 1;
  for (std::size_t v = 0; v < n; ++v) {
    const auto width = static_cast<std::uint64_t>(upper.values()[v] - lower.values()[v] + 1);
    if (__builtin_mul_overflow(count, width, &count) || count > options.max_prescriptions)
      throw ResourceError("box_oracle: more than " + std::to_string(options.max_prescriptions) + " prescriptions");
  }

  AllFactorsVerdict verdict;
  verdict.checked_by = Engine::BoxOracle;
  std::vector<std::int64_t> q(upper.values().begin(), upper.values().end());
  while (true) {
    DegreeFunc current(q);
    ++verdict.flow_checks;
    if (!has_fractional_q_factor(g, current)) {
      if (n <= std::min(options.enumeration.max_n, kHardEnumerationLimit))
        verdict.certificate = anstee_deficiency(g, current, current, options.enumeration);
      verdict.failing_prescription = std::move(current);
      return verdict;
    }
    // Count down, last vertex fastest.
    std::size_t v = n;
    while (v > 0 && q[v - 1] == lower.values()[v - 1]) {
      q[v - 1] = upper.values()[v - 1];
      --v;
    }
    if (v == 0) break;
    --q[v - 1];
  }
  verdict.holds = true;
  return verdict;
}

AllFactorsVerdict corner_oracle(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                const OracleOptions& options) {
  require_ordered(g, lower, upper);
  const auto n = g.order();
  std::vector<Vertex> free;
  for (Vertex v = 0; v < static_cast<Vertex>(n); ++v)
    if (lower[v] < upper[v]) free.push_back(v);
  detail::require_enumerable(free.size(), options.enumeration, "corner_oracle");

  auto corner = [&](std::uint64_t bits) {
    std::vector<std::int64_t> h(upper.values().begin(), upper.values().end());
    VertexSet S(n);
    for (std::size_t i = 0; i < free.size(); ++i) {
      if ((bits >> i) & 1U) {
        h[free[i]] = lower[free[i]];
        S.insert(free[i]);
      }
    }
    return std::pair{DegreeFunc(std::move(h)), std::move(S)};
  };

  AllFactorsVerdict verdict;
  verdict.checked_by = Engine::CornerOracle;
  std::vector<std::uint64_t> failing;
  const std::uint64_t corners = std::uint64_t{1} << free.size();
  for (std::uint64_t bits = 0; bits < corners; ++bits) {
    ++verdict.flow_checks;
    if (!has_fractional_q_factor(g, corner(bits).first)) failing.push_back(bits);
  }
  verdict.holds = failing.empty();
  if (verdict.holds) return verdict;

  const bool certify = n <= std::min(options.enumeration.max_n, kHardEnumerationLimit);
  std::optional<std::tuple<std::int64_t, std::size_t, std::uint64_t>> best_key;
  for (std::uint64_t bits : failing) {
    auto [h, S] = corner(bits);
    std::optional<DeficiencyCertificate> cert;
    if (certify) cert = anstee_deficiency(g, h, h, options.enumeration);
    const std::uint64_t set_mask = n <= 64 ? S.mask() : bits;
    std::tuple<std::int64_t, std::size_t, std::uint64_t> key{cert ? cert->deficiency : 0, S.count(), set_mask};
    if (!best_key || key < *best_key) {
      best_key = key;
      verdict.certificate = std::move(cert);
      verdict.failing_prescription = std::move(h);
      verdict.failing_corner = std::move(S);
    }
  }
  return verdict;
}

}  // namespace factorkit
