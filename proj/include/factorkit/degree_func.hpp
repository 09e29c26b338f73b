#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "factorkit/graph.hpp"

namespace factorkit {

/// Per-vertex nonnegative integer degree prescription (g, f, q, ...).
class DegreeFunc {
 public:
  DegreeFunc() = default;
  explicit DegreeFunc(std::vector<std::int64_t> values);
  DegreeFunc(std::initializer_list<std::int64_t> values);

  static DegreeFunc constant(std::size_t n, std::int64_t value);

  std::size_t size() const noexcept { return values_.size(); }
  std::int64_t operator[](Vertex v) const { return values_[static_cast<std::size_t>(v)]; }
  std::int64_t at(Vertex v) const;
  std::span<const std::int64_t> values() const noexcept { return values_; }

  /// f(U) = sum over U. Throws DomainError on overflow.
  std::int64_t sum(const VertexSet& subset) const;
  std::int64_t total() const;

  /// The common value when every entry agrees (and size > 0).
  std::optional<std::int64_t> constant_value() const;

  friend bool operator==(const DegreeFunc&, const DegreeFunc&) = default;

 private:
  std::vector<std::int64_t> values_;
};

/// DomainError unless both functions have the graph's order.
void require_matches(const Graph& g, const DegreeFunc& func, const char* what);

/// DomainError unless lower <= upper pointwise (and sizes match the graph).
void require_ordered(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper);

}  // namespace factorkit
