#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace factorkit {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Membership bitset over the vertex range 0..n-1.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n);
  VertexSet(std::size_t n, std::initializer_list<Vertex> members);

  /// Bit i of `mask` is vertex i. Requires n <= 64.
  static VertexSet from_mask(std::size_t n, std::uint64_t mask);
  static VertexSet from_members(std::size_t n, std::span<const Vertex> members);

  std::size_t universe() const noexcept { return n_; }
  bool contains(Vertex v) const;
  void insert(Vertex v);
  void erase(Vertex v);
  std::size_t count() const noexcept;
  bool empty() const noexcept { return count() == 0; }

  /// Members in increasing order.
  std::vector<Vertex> members() const;
  std::uint64_t mask() const;

  VertexSet complement() const;
  bool disjoint(const VertexSet& other) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  void check(Vertex v) const;

  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Simple undirected graph on dense ids 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Edges may be given in either orientation. Self-loops, duplicates and
  /// out-of-range endpoints throw DomainError.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  /// Canonical edge list: each edge (u, v) with u < v, sorted.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const;
  std::size_t degree(Vertex v) const;
  bool adjacent(Vertex u, Vertex v) const;

  std::size_t min_degree() const noexcept;
  std::size_t max_degree() const noexcept;
  bool complete() const noexcept;

  /// Copy of this graph with edge uv added; DomainError if already present.
  Graph with_edge(Vertex u, Vertex v) const;

  void check_vertex(Vertex v) const;

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

/// d_{G-S}(v) = |N(v) \ S|. DomainError when v is in S or out of range.
std::size_t degree_minus(const Graph& g, const VertexSet& removed, Vertex v);

/// |N(u) ∪ N(v)| for distinct u, v.
std::size_t neighborhood_union(const Graph& g, Vertex u, Vertex v);

/// Minimum neighborhood union over nonadjacent distinct pairs; nullopt when
/// the graph is complete (no such pair exists).
std::optional<std::size_t> min_nonadjacent_neighborhood_union(const Graph& g);

Graph join(const Graph& left, const Graph& right);
Graph disjoint_union(const Graph& left, const Graph& right);
Graph complete_graph(std::size_t k);
Graph edgeless_graph(std::size_t k);

/// Connected components ordered by their smallest vertex.
std::vector<VertexSet> components(const Graph& g);
bool connected(const Graph& g);

}  // namespace factorkit
