#include "factorkit/flow.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "factorkit/error.hpp"

namespace factorkit {

FlowNetwork::FlowNetwork(std::size_t node_count, NodeId source, NodeId sink)
    : node_count_(node_count), source_(source), sink_(sink) {
  if (node_count > static_cast<std::size_t>(std::numeric_limits<NodeId>::max()))
    throw DomainError("FlowNetwork: too many nodes");
  check_node(source);
  check_node(sink);
  if (source == sink) throw DomainError("FlowNetwork: source and sink coincide");
}

void FlowNetwork::check_node(NodeId v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= node_count_)
    throw DomainError("FlowNetwork: node " + std::to_string(v) + " out of range");
}

ArcId FlowNetwork::add_arc(NodeId tail, NodeId head, std::int64_t capacity, std::int64_t lower_bound) {
  check_node(tail);
  check_node(head);
  if (lower_bound < 0) throw DomainError("FlowNetwork: negative lower bound");
  if (capacity < lower_bound) throw DomainError("FlowNetwork: lower bound exceeds capacity");
  arcs_.push_back({tail, head, capacity, lower_bound});
  return arcs_.size() - 1;
}

bool FlowNetwork::has_lower_bounds() const noexcept {
  return std::any_of(arcs_.begin(), arcs_.end(), [](const Arc& a) { return a.lower_bound != 0; });
}

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw DomainError("flow network capacities overflow int64");
  return out;
}

// Residual graph with paired arcs: arc i and i^1 are mutual reverses.
class Dinic {
 public:
  explicit Dinic(std::size_t n) : out_(n), level_(n), next_(n) {}

  std::size_t add(NodeId tail, NodeId head, std::int64_t capacity) {
    const std::size_t id = head_.size();
    head_.push_back(head);
    residual_.push_back(capacity);
    out_[tail].push_back(id);
    head_.push_back(tail);
    residual_.push_back(0);
    out_[head].push_back(id + 1);
    return id;
  }

  std::int64_t run(NodeId s, NodeId t) {
    std::int64_t total = 0;
    while (build_levels(s, t)) {
      std::fill(next_.begin(), next_.end(), 0);
      while (std::int64_t pushed = augment(s, t, std::numeric_limits<std::int64_t>::max()))
        total += pushed;
    }
    return total;
  }

  std::int64_t residual(std::size_t id) const { return residual_[id]; }

 private:
  bool build_levels(NodeId s, NodeId t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<NodeId> queue{s};
    level_[s] = 0;
    for (std::size_t i = 0; i < queue.size(); ++i) {
      NodeId v = queue[i];
      for (std::size_t id : out_[v]) {
        NodeId w = head_[id];
        if (residual_[id] > 0 && level_[w] < 0) {
          level_[w] = level_[v] + 1;
          queue.push_back(w);
        }
      }
    }
    return level_[t] >= 0;
  }

  std::int64_t augment(NodeId v, NodeId t, std::int64_t limit) {
    if (v == t) return limit;
    for (auto& i = next_[v]; i < out_[v].size(); ++i) {
      std::size_t id = out_[v][i];
      NodeId w = head_[id];
      if (residual_[id] <= 0 || level_[w] != level_[v] + 1) continue;
      if (std::int64_t pushed = augment(w, t, std::min(limit, residual_[id]))) {
        residual_[id] -= pushed;
        residual_[id ^ 1] += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<std::size_t>> out_;
  std::vector<NodeId> head_;
  std::vector<std::int64_t> residual_;
  std::vector<int> level_;
  std::vector<std::size_t> next_;
};

}  // namespace

FlowResult max_flow(const FlowNetwork& net) {
  if (net.has_lower_bounds()) throw ContractError("max_flow: arcs with nonzero lower bounds");
  std::int64_t out_of_source = 0;
  for (const auto& a : net.arcs())
    if (a.tail == net.source()) out_of_source = checked_add(out_of_source, a.capacity);

  Dinic solver(net.node_count());
  std::vector<std::size_t> ids;
  ids.reserve(net.arcs().size());
  for (const auto& a : net.arcs()) ids.push_back(solver.add(a.tail, a.head, a.capacity));

  FlowResult result;
  solver.run(net.source(), net.sink());
  result.flow.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i)
    result.flow.push_back(net.arcs()[i].capacity - solver.residual(ids[i]));
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& a = net.arcs()[i];
    if (a.tail == net.source()) result.value += result.flow[i];
    if (a.head == net.source()) result.value -= result.flow[i];
  }
  return result;
}

std::optional<FlowResult> feasible_circulation(const FlowNetwork& net) {
  const auto n = net.node_count();
  const auto super_source = static_cast<NodeId>(n);
  const auto super_sink = static_cast<NodeId>(n + 1);

  std::vector<std::int64_t> excess(n, 0);
  std::int64_t capacity_total = 0;
  for (const auto& a : net.arcs()) {
    capacity_total = checked_add(capacity_total, a.capacity);
    excess[a.head] += a.lower_bound;
    excess[a.tail] -= a.lower_bound;
  }

  Dinic solver(n + 2);
  std::vector<std::size_t> ids;
  ids.reserve(net.arcs().size());
  for (const auto& a : net.arcs()) ids.push_back(solver.add(a.tail, a.head, a.capacity - a.lower_bound));
  const std::size_t back_arc = solver.add(net.sink(), net.source(), checked_add(capacity_total, 1));

  std::int64_t demand = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      solver.add(super_source, static_cast<NodeId>(v), excess[v]);
      demand += excess[v];
    } else if (excess[v] < 0) {
      solver.add(static_cast<NodeId>(v), super_sink, -excess[v]);
    }
  }
  if (solver.run(super_source, super_sink) != demand) return std::nullopt;

  FlowResult result;
  result.flow.reserve(ids.size());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    const auto& a = net.arcs()[i];
    result.flow.push_back(a.capacity - solver.residual(ids[i]));
  }
  result.value = checked_add(capacity_total, 1) - solver.residual(back_arc);
  return result;
}

}  // namespace factorkit
