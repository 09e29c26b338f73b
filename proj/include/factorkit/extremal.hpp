#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "factorkit/all_factors.hpp"
#include "factorkit/conditions.hpp"
#include "factorkit/graph.hpp"

namespace factorkit {

enum class SharpnessFamily {
  /// K_{bm} + (am+1)K_1: neighborhood-union bound is tight.
  Neighborhood,
  /// K_m + (K_r u K_{(a+b+1)/2}): minimum-degree bound is tight.
  MinDegree,
};

std::string_view family_name(SharpnessFamily family);
SharpnessFamily parse_family(std::string_view name);

struct SharpnessInput {
  SharpnessFamily family = SharpnessFamily::Neighborhood;
  std::int64_t a = 1;
  std::int64_t b = 2;
  /// m for Neighborhood, r for MinDegree.
  std::int64_t size = 1;
};

/// Clique on vertices 0..bm-1 joined to am+1 independent vertices.
Graph gen_neighborhood_sharp(std::int64_t a, std::int64_t b, std::int64_t m);

/// Largest integer m with m < ((a+b-1)^2 + 4b)/(4a) - (a+b-1)/2.
/// DomainError unless 1 <= a < b with a+b odd.
std::int64_t mindegree_sharp_m(std::int64_t a, std::int64_t b);

/// K_m + (K_r u K_k), k = (a+b+1)/2, laid out as K_m on 0..m-1, K_r next,
/// K_k last. Validates that every hypothesis of the sufficient condition
/// other than the minimum degree holds; DomainError otherwise.
Graph gen_mindegree_sharp(std::int64_t a, std::int64_t b, std::int64_t r);

/// The generator's graph without the hypothesis validation.
Graph build_mindegree_sharp(std::int64_t a, std::int64_t b, std::int64_t r);

/// Smallest r accepted by gen_mindegree_sharp (searched up to `limit`).
std::optional<std::int64_t> min_mindegree_sharp_r(std::int64_t a, std::int64_t b, std::int64_t limit = 1 << 12);

/// Integer comparison recorded in a sharpness report.
struct Inequality {
  std::string clause;
  std::int64_t lhs = 0;
  std::string relation;
  std::int64_t rhs = 0;
  bool holds = false;
};

struct SharpnessReport {
  SharpnessInput input;
  std::size_t n = 0;
  std::size_t edges = 0;
  std::size_t min_degree = 0;
  std::optional<std::size_t> min_neighborhood_union;
  std::int64_t m = 0;  // MinDegree: the computed K_m size; Neighborhood: the input m
  std::vector<Inequality> inequalities;
  ConditionReport hypotheses;
  /// The set named by the construction (clique K_{bm}, or K_m) and its
  /// worst-set deficiency.
  DeficiencyCertificate witness;
  AllFactorsVerdict verdict;
};

/// Builds the construction and checks the claimed inequality chain plus the
/// failure of the all-factors property. When n is within the enumeration
/// cutoff the verdict is the exact minimizer; otherwise the witness set alone
/// certifies failure (engine Witness). VerificationError names the broken
/// clause.
SharpnessReport verify_sharpness(const SharpnessInput& input, const EnumerationOptions& options = {});

/// Same checks run against an already constructed graph (e.g. reloaded from
/// a file).
SharpnessReport verify_sharpness_on(const Graph& g, const SharpnessInput& input,
                                    const EnumerationOptions& options = {});

}  // namespace factorkit
