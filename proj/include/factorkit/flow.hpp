#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace factorkit {

using NodeId = std::int32_t;
using ArcId = std::size_t;

struct Arc {
  NodeId tail;
  NodeId head;
  std::int64_t capacity;
  std::int64_t lower_bound = 0;
};

/// Directed network with integral capacities and optional lower bounds.
class FlowNetwork {
 public:
  FlowNetwork(std::size_t node_count, NodeId source, NodeId sink);

  /// Appends an arc and returns its index. Arc order fixes the exploration
  /// order of the solvers, so results are reproducible.
  ArcId add_arc(NodeId tail, NodeId head, std::int64_t capacity, std::int64_t lower_bound = 0);

  std::size_t node_count() const noexcept { return node_count_; }
  NodeId source() const noexcept { return source_; }
  NodeId sink() const noexcept { return sink_; }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  bool has_lower_bounds() const noexcept;

 private:
  void check_node(NodeId v) const;

  std::size_t node_count_;
  NodeId source_;
  NodeId sink_;
  std::vector<Arc> arcs_;
};

struct FlowResult {
  /// Net outflow of the source.
  std::int64_t value = 0;
  /// Flow on each arc, indexed like FlowNetwork::arcs().
  std::vector<std::int64_t> flow;
};

/// Maximum source-sink flow by blocking flows on level graphs (Dinic).
/// All lower bounds must be zero; ContractError otherwise.
FlowResult max_flow(const FlowNetwork& net);

/// Flow respecting lower_bound <= flow <= capacity on every arc, conserved at
/// every node once an uncapacitated sink->source return arc is added. The
/// returned value is the flow carried by that return arc. nullopt if no such
/// flow exists.
std::optional<FlowResult> feasible_circulation(const FlowNetwork& net);

}  // namespace factorkit
