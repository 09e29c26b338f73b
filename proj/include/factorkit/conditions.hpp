#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "factorkit/degree_func.hpp"
#include "factorkit/graph.hpp"

namespace factorkit {

/// One hypothesis of a sufficient condition, decided by an exact integer
/// comparison `lhs relation rhs`.
struct Hypothesis {
  std::string name;
  std::string description;
  std::int64_t lhs = 0;
  std::string relation;  // ">=", ">", "<=", "=="
  std::int64_t rhs = 0;
  bool vacuous = false;  // universally quantified over an empty set
  bool holds = false;
};

struct ConditionReport {
  std::string condition;
  std::vector<Hypothesis> hypotheses;

  /// Conjunction of every hypothesis.
  bool holds() const noexcept;
  const Hypothesis& at(const std::string& name) const;
};

/// Largest a or b accepted by the predicates; keeps every cross-multiplied
/// comparison inside int64.
inline constexpr std::int64_t kMaxParameter = std::int64_t{1} << 20;

/// Minimum-degree and neighborhood-union condition for all fractional
/// [a,b]-factors. Hypotheses: "order" a*n >= 2(a+b)(a+b-1),
/// "min_degree" 4a*delta >= (a+b-1)^2 + 4b, "neighborhood_union"
/// (a+b)*NCmin >= b*n (vacuous on complete graphs). DomainError unless
/// 1 <= a < b.
ConditionReport lu3_hypotheses(const Graph& g, std::int64_t a, std::int64_t b);

/// Hypotheses of the minimum-degree f-factor condition: "connected",
/// "order" a*n >= (a+b)^2, "parity" f(V) even, "min_degree"
/// (a+b)*delta > a*n - 2. Requires 1 <= a <= b and f(v) in [a, b].
ConditionReport kano_hypotheses(const Graph& g, std::int64_t a, std::int64_t b, const DegreeFunc& f);

struct NiessenResult {
  bool holds = false;
  /// Minimizing pair (ties: value, |S|, |T|, mask of S, mask of T).
  VertexSet S;
  VertexSet T;
  std::int64_t value = 0;
  /// -1 when g differs from f somewhere, 0 when g = f.
  std::int64_t threshold = 0;
};

struct NiessenOptions {
  /// 3^n labelings are visited.
  std::size_t max_n = 16;
};

/// g(S) - f(T) + sum_{x in T} d_{G-S}(x) - q*(S, T) for disjoint S, T, where
/// q* counts components C of G - (S u T) holding a vertex with g < f or with
/// e(C, T) + f(C) odd.
std::int64_t niessen_value(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper, const VertexSet& S,
                           const VertexSet& T);

/// Exhaustive check of the integral all-(g,f)-factors criterion.
NiessenResult niessen_all_integral(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                   const NiessenOptions& options = {});

}  // namespace factorkit
