#pragma once

#include <cstdint>
#include <span>

#include "factorkit/fractional.hpp"
#include "factorkit/graph.hpp"

namespace factorkit::detail {

struct ScanBest {
  std::int64_t value;
  std::uint64_t mask;
};

/// Canonical order for minimizers: value, then |S|, then mask.
bool better(const ScanBest& a, const ScanBest& b);

/// Minimizes
///     sum_{v in S} in_weight(v) + sum_{x not in S} min(d_{G-S}(x) - threshold(x), 0)
/// over every S, scanning subsets in Gray-code order with incremental degree
/// updates. With workers > 1 the high-order vertices are fixed per slice.
ScanBest minimize_subset_deficiency(const Graph& g, std::span<const std::int64_t> in_weight,
                                    std::span<const std::int64_t> threshold, unsigned workers);

/// ResourceError when n exceeds the configured or hard cutoff.
void require_enumerable(std::size_t n, const EnumerationOptions& options, const char* what);

/// Builds S, T = {x not in S : d_{G-S}(x) < threshold(x)} and the deficiency
/// in_weight(S) - threshold(T) + sum_{x in T} d_{G-S}(x).
DeficiencyCertificate certificate_for(const Graph& g, const DegreeFunc& in_weight, const DegreeFunc& threshold,
                                      const VertexSet& S);

}  // namespace factorkit::detail
