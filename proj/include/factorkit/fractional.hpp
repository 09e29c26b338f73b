#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "factorkit/degree_func.hpp"
#include "factorkit/flow.hpp"
#include "factorkit/graph.hpp"

namespace factorkit {

/// Default subset-enumeration cutoff on n; FACTORKIT_MAX_N overrides it.
inline constexpr std::size_t kDefaultEnumerationCutoff = 24;
/// Masks are 64-bit, so no override may go past this.
inline constexpr std::size_t kHardEnumerationLimit = 62;

/// kDefaultEnumerationCutoff unless FACTORKIT_MAX_N holds a valid integer.
std::size_t default_enumeration_cutoff();

struct EnumerationOptions {
  std::size_t max_n = default_enumeration_cutoff();
  /// Threads used for subset scans; the result does not depend on it.
  unsigned workers = 1;
};

/// Failure witness: a set S, the set T it induces, and the deficiency value.
/// Which T is induced (and which function weights S) depends on the
/// condition that produced the certificate.
struct DeficiencyCertificate {
  VertexSet S;
  VertexSet T;
  std::int64_t deficiency = 0;

  friend bool operator==(const DeficiencyCertificate&, const DeficiencyCertificate&) = default;
};

/// Half-integral edge weights h(e) = numerator / 2 with numerator in {0, 1, 2}.
class IndicatorAssignment {
 public:
  static constexpr int kDenominator = 2;

  IndicatorAssignment() = default;
  IndicatorAssignment(std::vector<Edge> edges, std::vector<std::uint8_t> numerators);

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::vector<std::uint8_t>& numerators() const noexcept { return numerators_; }

  /// 2 * sum of h(e) over edges at v.
  std::int64_t doubled_degree(Vertex v) const;

  /// Edges with h(e) > 0 (E_h), paired with their numerators.
  std::vector<std::pair<Edge, std::uint8_t>> support() const;

  friend bool operator==(const IndicatorAssignment&, const IndicatorAssignment&) = default;

 private:
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> numerators_;
};

/// Writes `denominator 2` followed by `u v numerator` for every edge with a
/// positive numerator.
void write_indicator(std::ostream& out, const IndicatorAssignment& h);

/// Parses the format produced by write_indicator against `g`; edges absent
/// from the text get numerator 0.
IndicatorAssignment read_indicator(std::istream& in, const Graph& g);

/// Outcome of a fractional factor query. `certificate` is filled on failure
/// whenever n is within the enumeration cutoff.
struct FractionalResult {
  bool feasible = false;
  std::optional<IndicatorAssignment> indicator;
  std::optional<DeficiencyCertificate> certificate;

  explicit operator bool() const noexcept { return feasible; }
};

/// Bipartite doubled network. Node layout: v_L = v, v_R = n + v, source = 2n,
/// sink = 2n + 1. Arc layout: n arcs source->v_L, then for the i-th edge uv
/// of g.edges() the pair u_L->v_R, v_L->u_R (arcs n + 2i, n + 2i + 1), then
/// n arcs v_R->sink. Source and sink arcs carry capacity demand(v).
FlowNetwork build_symmetric_network(const Graph& g, const DegreeFunc& demand);

/// Flow-only test for a fractional q-factor.
bool has_fractional_q_factor(const Graph& g, const DegreeFunc& q);

/// Fractional q-factor (exact weighted degree q(v)) with a half-integral
/// witness, or the Anstee certificate for g = f = q.
FractionalResult fractional_q_feasible(const Graph& g, const DegreeFunc& q, const EnumerationOptions& options = {});

/// Fractional (g,f)-factor via a lower-bounded circulation on the doubled
/// network. DomainError when g > f somewhere.
FractionalResult fractional_gf_feasible(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                        const EnumerationOptions& options = {});

/// Evaluates f(S) - g(T) + sum_{x in T} d_{G-S}(x) with
/// T = {v not in S : d_{G-S}(v) < g(v)}.
DeficiencyCertificate anstee_certificate_for(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                             const VertexSet& S);

/// Exhaustive minimum of the Anstee deficiency over all S. Ties go to the
/// smaller |S|, then to the smaller bitmask of S. ResourceError beyond the
/// cutoff.
DeficiencyCertificate anstee_deficiency(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                        const EnumerationOptions& options = {});

}  // namespace factorkit
