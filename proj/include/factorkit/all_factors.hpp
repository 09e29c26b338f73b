#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "factorkit/degree_func.hpp"
#include "factorkit/fractional.hpp"
#include "factorkit/graph.hpp"

namespace factorkit {

/// Which procedure produced a verdict.
enum class Engine {
  WorstSet,             ///< exhaustive worst-set deficiency
  BoxOracle,            ///< one flow per integer prescription in [g, f]
  CornerOracle,         ///< one flow per corner prescription
  SufficientCondition,  ///< min-degree / neighborhood-union fast path
  FractionalFlow,       ///< g = f, a single flow decides it
  Witness,              ///< a known set S evaluated directly
};

std::string_view engine_name(Engine e);

/// Answer to "does G have a fractional q-factor for every g <= q <= f".
struct AllFactorsVerdict {
  bool holds = false;
  /// Worst set found. For WorstSet this is the exact minimizer (present even
  /// when holds); for the oracles it is the Anstee certificate of the
  /// reported failing prescription.
  std::optional<DeficiencyCertificate> certificate;
  Engine checked_by = Engine::WorstSet;
  /// Oracles only: the prescription that has no fractional factor.
  std::optional<DegreeFunc> failing_prescription;
  /// Corner oracle only: the set S whose corner (g on S, f elsewhere) failed.
  std::optional<VertexSet> failing_corner;
  /// Number of max-flow runs performed (oracles and flow engine).
  std::size_t flow_checks = 0;
};

struct AllFactorsOptions {
  EnumerationOptions enumeration{};
  /// Answer from the sufficient condition when g = a < b = f constant and
  /// its hypotheses hold.
  bool fast_path = true;
};

struct OracleOptions {
  EnumerationOptions enumeration{};
  /// Box oracle: cap on the number of prescriptions prod(f(v) - g(v) + 1).
  std::uint64_t max_prescriptions = 1'000'000;
};

/// Evaluates g(S) - f(T) + sum_{x in T} d_{G-S}(x) with
/// T = {v not in S : d_{G-S}(v) < f(v)}.
DeficiencyCertificate worst_set_certificate_for(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                                const VertexSet& S);

/// Exhaustive minimum of the worst-set deficiency over every S (ties: smaller
/// |S|, then smaller bitmask). DomainError when g > f, ResourceError beyond
/// the cutoff.
DeficiencyCertificate worst_set_deficiency(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                           const EnumerationOptions& options = {});

AllFactorsVerdict has_all_fractional(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                     const AllFactorsOptions& options = {});

/// Constant g = a, f = b. Requires 1 <= a <= b; a = b reduces to one flow.
AllFactorsVerdict has_all_fractional_ab(const Graph& g, std::int64_t a, std::int64_t b,
                                        const AllFactorsOptions& options = {});

/// Checks every integer q with g <= q <= f. Prescriptions are visited in
/// lexicographic order starting from f and counting down toward g (vertex
/// n-1 varies fastest); the first failure is reported.
AllFactorsVerdict box_oracle(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                             const OracleOptions& options = {});

/// Checks every corner h_S (g on S, f off S), S ranging over subsets of the
/// vertices with g(v) < f(v). Among failing corners the one whose Anstee
/// certificate is most negative is reported (ties: smaller |S|, then mask).
AllFactorsVerdict corner_oracle(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper,
                                const OracleOptions& options = {});

}  // namespace factorkit
