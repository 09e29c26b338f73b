#include "factorkit/degree_func.hpp"

#include <limits>
#include <string>

#include "factorkit/error.hpp"

namespace factorkit {

namespace {

// Keeps aggregate demand plus doubled edge counts comfortably inside int64.
constexpr std::int64_t kMaxValue = std::int64_t{1} << 40;

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("degree prescription sum overflows");
  return out;
}

}  // namespace

DegreeFunc::DegreeFunc(std::vector<std::int64_t> values) : values_(std::move(values)) {
  for (std::size_t v = 0; v < values_.size(); ++v) {
    if (values_[v] < 0)
      throw DomainError("degree prescription is negative at vertex " + std::to_string(v));
    if (values_[v] > kMaxValue)
      throw DomainError("degree prescription too large at vertex " + std::to_string(v));
  }
}

DegreeFunc::DegreeFunc(std::initializer_list<std::int64_t> values)
    : DegreeFunc(std::vector<std::int64_t>(values)) {}

DegreeFunc DegreeFunc::constant(std::size_t n, std::int64_t value) {
  return DegreeFunc(std::vector<std::int64_t>(n, value));
}

std::int64_t DegreeFunc::at(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= values_.size())
    throw DomainError("vertex " + std::to_string(v) + " outside degree prescription");
  return values_[static_cast<std::size_t>(v)];
}

std::int64_t DegreeFunc::sum(const VertexSet& subset) const {
  if (subset.universe() != values_.size()) throw DomainError("DegreeFunc::sum: universe mismatch");
  std::int64_t s = 0;
  for (Vertex v : subset.members()) s = checked_add(s, values_[static_cast<std::size_t>(v)]);
  return s;
}

std::int64_t DegreeFunc::total() const {
  std::int64_t s = 0;
  for (auto x : values_) s = checked_add(s, x);
  return s;
}

std::optional<std::int64_t> DegreeFunc::constant_value() const {
  if (values_.empty()) return std::nullopt;
  for (auto x : values_)
    if (x != values_.front()) return std::nullopt;
  return values_.front();
}

void require_matches(const Graph& g, const DegreeFunc& func, const char* what) {
  if (func.size() != g.order())
    throw DomainError(std::string(what) + ": prescription has " + std::to_string(func.size()) +
                      " entries for a graph of order " + std::to_string(g.order()));
}

void require_ordered(const Graph& g, const DegreeFunc& lower, const DegreeFunc& upper) {
  require_matches(g, lower, "lower prescription");
  require_matches(g, upper, "upper prescription");
  for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
    if (lower[v] > upper[v])
      throw DomainError("lower prescription exceeds upper at vertex " + std::to_string(v) + " (" +
                        std::to_string(lower[v]) + " > " + std::to_string(upper[v]) + ")");
  }
}

}  // namespace factorkit
